#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lzdict/input_set.hpp"

namespace lzdict {

// Byte trie used while building: one node per phrase prefix, each node
// carrying a flag for "this path is a phrase". During the first parse every
// node is a phrase; when the trie is rebuilt from a pruned phrase set,
// interior nodes can be plain connectors.
class LzTrie {
public:
    static constexpr uint32_t npos = UINT32_MAX;
    static constexpr uint32_t root = 0;

    LzTrie() { nodes_.push_back({npos, 0, 0, false, npos}); }

    uint32_t child(uint32_t node, uint8_t label) const {
        auto it = edges_.find(edge_key(node, label));
        return it == edges_.end() ? npos : it->second;
    }

    uint32_t add_child(uint32_t node, uint8_t label, bool phrase) {
        uint32_t id = static_cast<uint32_t>(nodes_.size());
        nodes_.push_back({node, nodes_[node].depth + 1, label, phrase, npos});
        edges_.emplace(edge_key(node, label), id);
        return id;
    }

    struct Match {
        uint32_t node;  // npos when no phrase prefixes s[pos..)
        uint32_t len;
    };

    // Longest phrase-flagged prefix of s starting at pos.
    Match longest_phrase(std::string_view s, size_t pos) const {
        uint32_t v = root;
        Match best{npos, 0};
        for (size_t i = pos; i < s.size(); ++i) {
            uint32_t c = child(v, static_cast<uint8_t>(s[i]));
            if (c == npos) break;
            v = c;
            if (nodes_[v].phrase) best = {v, nodes_[v].depth};
        }
        return best;
    }

    bool is_phrase(uint32_t node) const { return nodes_[node].phrase; }
    void set_phrase(uint32_t node, bool phrase) { nodes_[node].phrase = phrase; }
    uint32_t parent(uint32_t node) const { return nodes_[node].parent; }
    uint32_t depth(uint32_t node) const { return nodes_[node].depth; }
    uint8_t label(uint32_t node) const { return nodes_[node].label; }

    // Auxiliary per-node value (e.g. the phrase rank); npos when unset.
    uint32_t value(uint32_t node) const { return nodes_[node].value; }
    void set_value(uint32_t node, uint32_t v) { nodes_[node].value = v; }

    uint64_t node_count() const { return nodes_.size() - 1; }  // root excluded

    // The phrase string spelled by the root-to-node path.
    std::string phrase_string(uint32_t node) const {
        std::string s(nodes_[node].depth, '\0');
        for (uint32_t v = node; v != root; v = nodes_[v].parent) s[nodes_[v].depth - 1] = static_cast<char>(nodes_[v].label);
        return s;
    }

private:
    static uint64_t edge_key(uint32_t node, uint8_t label) {
        return (static_cast<uint64_t>(node) << 8) | label;
    }

    struct Node {
        uint32_t parent;
        uint32_t depth;
        uint8_t label;
        bool phrase;
        uint32_t value;
    };

    std::vector<Node> nodes_;
    std::unordered_map<uint64_t, uint32_t> edges_;
};

// Result of the first LZ78 pass over the concatenated input. Phrase breaks are
// forced at string boundaries; a phrase cut short by a boundary is not
// re-inserted (it already exists, the trie being prefix-closed), so before the
// reparse every trie node is a phrase and every phrase was inserted exactly
// once.
struct InitialParse {
    LzTrie trie;
    std::vector<std::vector<uint32_t>> parse;  // trie node per emitted phrase
    uint64_t phrase_count = 0;                 // nodes (== distinct phrases)
};

InitialParse initial_parse(const InputSet& input);

// Ensures every byte occurring in the input is present as a single-letter
// phrase. Returns how many letters were added.
uint64_t seed_alphabet(LzTrie& trie, const InputSet& input);

// Greedy reparse of the input against the frozen trie, followed by pruning:
// only phrases actually used by some reparsed string are kept. Phrase IDs are
// the lexicographic ranks within the surviving set.
struct ReparseResult {
    std::vector<std::string> phrases;             // sorted, distinct
    std::vector<std::vector<uint32_t>> parsings;  // per input string, phrase IDs
    uint64_t nodes_after = 0;   // trie nodes needed for the surviving phrases
    uint64_t parsing_size = 0;  // total phrase occurrences over all strings
};

ReparseResult reparse(const LzTrie& trie, const InputSet& input);

// Before/after counts in the shape of the usual construction report. The
// three before values coincide by construction (see InitialParse).
struct BuildStats {
    uint64_t nodes_before = 0;
    uint64_t phrases_before = 0;
    uint64_t parsing_before = 0;
    uint64_t nodes_after = 0;
    uint64_t phrases_after = 0;
    uint64_t parsing_after = 0;
};

BuildStats build_stats(const InitialParse& first, const ReparseResult& second);

// Reusable greedy parser over an explicit phrase set.
class PhraseMatcher {
public:
    explicit PhraseMatcher(const std::vector<std::string>& phrases);

    // (phrase ID, length) of the longest phrase prefixing s[pos..).
    std::optional<std::pair<uint32_t, uint32_t>> longest_prefix(std::string_view s, size_t pos) const;

    // Greedy left-to-right parse; nullopt when some position cannot be covered.
    std::optional<std::vector<uint32_t>> parse(std::string_view s) const;

private:
    LzTrie trie_;
};

// One-shot convenience wrapper around PhraseMatcher.
std::optional<std::vector<uint32_t>> greedy_parse(std::string_view s,
                                                  const std::vector<std::string>& phrases);

}  // namespace lzdict
