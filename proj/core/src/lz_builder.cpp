#include "lzdict/lz_builder.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace lzdict {

InitialParse initial_parse(const InputSet& input) {
    if (input.size() == 0) throw std::invalid_argument("cannot build from an empty string set");

    InitialParse out;
    out.parse.resize(input.size());
    for (size_t idx = 0; idx < input.size(); ++idx) {
        const std::string& s = input.strings[idx];
        if (s.empty()) throw std::invalid_argument("empty strings cannot be stored");
        size_t pos = 0;
        while (pos < s.size()) {
            // Longest phrase already in the trie, then one extending letter.
            uint32_t v = LzTrie::root;
            while (pos < s.size()) {
                uint32_t c = out.trie.child(v, static_cast<uint8_t>(s[pos]));
                if (c == LzTrie::npos) break;
                v = c;
                ++pos;
            }
            if (pos < s.size()) {
                v = out.trie.add_child(v, static_cast<uint8_t>(s[pos]), true);
                ++pos;
            }
            // else: the string boundary cut the phrase short; the walked node
            // is already a phrase, nothing to insert.
            out.parse[idx].push_back(v);
        }
    }
    out.phrase_count = out.trie.node_count();
    return out;
}

uint64_t seed_alphabet(LzTrie& trie, const InputSet& input) {
    bool seen[256] = {};
    for (const auto& s : input.strings)
        for (char ch : s) seen[static_cast<uint8_t>(ch)] = true;
    uint64_t added = 0;
    for (int b = 0; b < 256; ++b) {
        if (!seen[b]) continue;
        if (trie.child(LzTrie::root, static_cast<uint8_t>(b)) == LzTrie::npos) {
            trie.add_child(LzTrie::root, static_cast<uint8_t>(b), true);
            ++added;
        }
    }
    return added;
}

ReparseResult reparse(const LzTrie& trie, const InputSet& input) {
    ReparseResult out;
    std::vector<std::vector<uint32_t>> node_parsings(input.size());
    std::vector<uint32_t> used;

    for (size_t idx = 0; idx < input.size(); ++idx) {
        const std::string& s = input.strings[idx];
        size_t pos = 0;
        while (pos < s.size()) {
            LzTrie::Match m = trie.longest_phrase(s, pos);
            if (m.node == LzTrie::npos)
                throw std::invalid_argument("trie cannot cover the input (alphabet not seeded?)");
            node_parsings[idx].push_back(m.node);
            used.push_back(m.node);
            pos += m.len;
            ++out.parsing_size;
        }
    }

    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    // Phrase IDs are lexicographic ranks of the surviving phrase strings.
    std::vector<std::string> strings(used.size());
    for (size_t i = 0; i < used.size(); ++i) strings[i] = trie.phrase_string(used[i]);
    std::vector<uint32_t> order(used.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](uint32_t a, uint32_t b) { return strings[a] < strings[b]; });

    std::unordered_map<uint32_t, uint32_t> rank;  // trie node -> phrase ID
    out.phrases.resize(used.size());
    for (size_t r = 0; r < order.size(); ++r) {
        out.phrases[r] = std::move(strings[order[r]]);
        rank.emplace(used[order[r]], static_cast<uint32_t>(r));
    }

    out.parsings.resize(input.size());
    for (size_t idx = 0; idx < input.size(); ++idx) {
        out.parsings[idx].reserve(node_parsings[idx].size());
        for (uint32_t node : node_parsings[idx]) out.parsings[idx].push_back(rank.at(node));
    }

    // Trie nodes still needed: every distinct prefix of a surviving phrase,
    // i.e. the used nodes and their ancestors.
    std::unordered_set<uint32_t> kept;
    for (uint32_t node : used)
        for (uint32_t v = node; v != LzTrie::root; v = trie.parent(v))
            if (!kept.insert(v).second) break;
    out.nodes_after = kept.size();
    return out;
}

BuildStats build_stats(const InitialParse& first, const ReparseResult& second) {
    BuildStats st;
    st.nodes_before = st.phrases_before = st.parsing_before = first.phrase_count;
    st.nodes_after = second.nodes_after;
    st.phrases_after = second.phrases.size();
    st.parsing_after = second.parsing_size;
    return st;
}

PhraseMatcher::PhraseMatcher(const std::vector<std::string>& phrases) {
    for (size_t i = 0; i < phrases.size(); ++i) {
        const std::string& p = phrases[i];
        assert(!p.empty());
        uint32_t v = LzTrie::root;
        for (char ch : p) {
            uint32_t c = trie_.child(v, static_cast<uint8_t>(ch));
            v = (c == LzTrie::npos) ? trie_.add_child(v, static_cast<uint8_t>(ch), false) : c;
        }
        trie_.set_phrase(v, true);
        trie_.set_value(v, static_cast<uint32_t>(i));
    }
}

std::optional<std::pair<uint32_t, uint32_t>> PhraseMatcher::longest_prefix(std::string_view s,
                                                                           size_t pos) const {
    LzTrie::Match m = trie_.longest_phrase(s, pos);
    if (m.node == LzTrie::npos) return std::nullopt;
    return std::make_pair(trie_.value(m.node), m.len);
}

std::optional<std::vector<uint32_t>> PhraseMatcher::parse(std::string_view s) const {
    std::vector<uint32_t> ids;
    size_t pos = 0;
    while (pos < s.size()) {
        auto hit = longest_prefix(s, pos);
        if (!hit) return std::nullopt;
        ids.push_back(hit->first);
        pos += hit->second;
    }
    return ids;
}

std::optional<std::vector<uint32_t>> greedy_parse(std::string_view s,
                                                  const std::vector<std::string>& phrases) {
    return PhraseMatcher(phrases).parse(s);
}

}  // namespace lzdict
