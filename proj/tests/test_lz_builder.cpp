#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lzdict/lz_builder.hpp"
#include "test_support.hpp"

using namespace lzdict;

namespace {

const std::vector<std::string> kGoldenStrings = {"aba", "ababa", "abc",     "abcb",
                                              "ba",  "bacbacb", "bacbacba", "bca"};

InputSet make_input(std::vector<std::string> strings) { return InputSet{std::move(strings)}; }

std::vector<std::vector<std::string>> emitted_phrases(const InitialParse& ip) {
    std::vector<std::vector<std::string>> out;
    for (const auto& nodes : ip.parse) {
        std::vector<std::string> phrases;
        for (uint32_t node : nodes) phrases.push_back(ip.trie.phrase_string(node));
        out.push_back(std::move(phrases));
    }
    return out;
}

}  // namespace

TEST_CASE("initial parse reproduces the worked example") {
    InitialParse ip = initial_parse(make_input(kGoldenStrings));
    CHECK(ip.phrase_count == 12);
    CHECK(ip.trie.node_count() == 12);

    std::vector<std::vector<std::string>> want = {
        {"a", "b", "a"},     {"ab", "aba"}, {"abc"}, {"abcb"},
        {"ba"},              {"bac", "bacb"},
        {"bacba", "c", "ba"}, {"bc", "a"}};
    CHECK(emitted_phrases(ip) == want);
}

TEST_CASE("single letter and run-length edge inputs") {
    InitialParse one = initial_parse(make_input({"a"}));
    CHECK(one.phrase_count == 1);
    CHECK(emitted_phrases(one) == std::vector<std::vector<std::string>>{{"a"}});

    InitialParse runs = initial_parse(make_input({"aaaa"}));
    CHECK(runs.phrase_count == 2);
    CHECK(emitted_phrases(runs) == std::vector<std::vector<std::string>>{{"a", "aa", "a"}});

    ReparseResult rr = reparse(runs.trie, make_input({"aaaa"}));
    CHECK(rr.phrases == std::vector<std::string>{"aa"});  // "a" is unused and pruned
    CHECK(rr.parsings == std::vector<std::vector<uint32_t>>{{0, 0}});
    CHECK(rr.nodes_after == 2);  // "aa" still needs its "a" ancestor
}

TEST_CASE("reparse reproduces the worked example") {
    InputSet input = make_input(kGoldenStrings);
    InitialParse ip = initial_parse(input);
    CHECK(seed_alphabet(ip.trie, input) == 0);  // a, b, c are already phrases

    ReparseResult rr = reparse(ip.trie, input);
    CHECK(rr.phrases == std::vector<std::string>{"a", "aba", "abc", "abcb", "b", "ba", "bacba",
                                                 "bc", "c"});
    CHECK(rr.parsings ==
          std::vector<std::vector<uint32_t>>{
              {1}, {1, 5}, {2}, {3}, {5}, {6, 8, 4}, {6, 8, 5}, {7, 0}});
    CHECK(rr.parsing_size == 14);
    CHECK(rr.nodes_after == 12);  // every original node is a surviving phrase or ancestor

    BuildStats st = build_stats(ip, rr);
    CHECK(st.nodes_before == 12);
    CHECK(st.phrases_before == 12);
    CHECK(st.parsing_before == 12);
    CHECK(st.nodes_after == 12);
    CHECK(st.phrases_after == 9);
    CHECK(st.parsing_after == 14);
}

TEST_CASE("greedy parse over an explicit phrase set") {
    std::vector<std::string> phrases = {"a", "aba", "abc", "abcb", "b", "ba", "bacba", "bc", "c"};
    CHECK(greedy_parse("bcbaa", phrases) == std::vector<uint32_t>{7, 5, 0});
    CHECK(greedy_parse("aba", phrases) == std::vector<uint32_t>{1});
    CHECK(greedy_parse("z", phrases) == std::nullopt);
    CHECK(greedy_parse("", phrases) == std::vector<uint32_t>{});
}

TEST_CASE("alphabet seeding is load-bearing") {
    // "w" only ever occurs inside the phrase "zw", and the later-built phrase
    // "xyaz" makes the greedy reparse of "xyazw" land exactly on that "w".
    InputSet input = make_input({"x", "xy", "z", "zw", "xyazw", "xyazb"});

    InitialParse unseeded = initial_parse(input);
    CHECK(unseeded.phrase_count == 7);  // x, xy, z, zw, xya, xyaz, b
    CHECK_THROWS_AS(reparse(unseeded.trie, input), std::invalid_argument);

    InitialParse ip = initial_parse(input);
    CHECK(seed_alphabet(ip.trie, input) == 3);  // y, w, a
    ReparseResult rr = reparse(ip.trie, input);
    CHECK(rr.phrases == std::vector<std::string>{"b", "w", "x", "xy", "xyaz", "z", "zw"});
    CHECK(rr.parsings ==
          std::vector<std::vector<uint32_t>>{{2}, {3}, {5}, {6}, {4, 1}, {4, 0}});
}

TEST_CASE("initial parse matches the textbook oracle on random inputs") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 300; ++round) {
        CAPTURE(round);
        auto strings = testsup::random_string_set(rng, 1 + testsup::below(rng, 64),
                                                  1 + testsup::below(rng, 4), 32);
        if (strings.empty()) continue;
        InputSet input = make_input(strings);
        InitialParse ip = initial_parse(input);
        testsup::Lz78Oracle oracle = testsup::lz78_boundary_cut(strings);

        REQUIRE(emitted_phrases(ip) == oracle.parses);
        CHECK(ip.phrase_count == oracle.phrases.size());
    }
}

TEST_CASE("reparse properties on random inputs") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 120; ++round) {
        CAPTURE(round);
        auto strings = testsup::random_string_set(rng, 1 + testsup::below(rng, 48),
                                                  1 + testsup::below(rng, 8), 24);
        if (strings.empty()) continue;
        InputSet input = make_input(strings);
        InitialParse ip = initial_parse(input);
        seed_alphabet(ip.trie, input);
        ReparseResult rr = reparse(ip.trie, input);

        CHECK(std::is_sorted(rr.phrases.begin(), rr.phrases.end()));
        CHECK(std::adjacent_find(rr.phrases.begin(), rr.phrases.end()) == rr.phrases.end());

        PhraseMatcher matcher(rr.phrases);
        uint64_t total = 0;
        for (size_t i = 0; i < strings.size(); ++i) {
            // Round trip: the parsing spells the string.
            std::string rebuilt;
            for (uint32_t id : rr.parsings[i]) rebuilt += rr.phrases[id];
            CHECK(rebuilt == strings[i]);
            // Parse-stability: a fresh greedy parse agrees with the stored one.
            CHECK(matcher.parse(strings[i]) == rr.parsings[i]);
            total += rr.parsings[i].size();
        }
        CHECK(rr.parsing_size == total);

        // Every phrase is used by some parsing (pruning is exact).
        std::vector<bool> used(rr.phrases.size());
        for (const auto& parsing : rr.parsings)
            for (uint32_t id : parsing) used[id] = true;
        CHECK(std::all_of(used.begin(), used.end(), [](bool b) { return b; }));

        // Prefix-consistency: while two strings' parsings cover the same
        // stretch inside their common prefix, the phrase IDs agree.
        for (size_t i = 0; i + 1 < strings.size(); ++i) {
            for (size_t j = i + 1; j < strings.size(); ++j) {
                size_t lcp = 0;
                while (lcp < strings[i].size() && lcp < strings[j].size() &&
                       strings[i][lcp] == strings[j][lcp])
                    ++lcp;
                size_t at = 0, x = 0;
                while (x < rr.parsings[i].size() && x < rr.parsings[j].size()) {
                    uint32_t a = rr.parsings[i][x], b = rr.parsings[j][x];
                    size_t next = at + rr.phrases[a].size();
                    if (next > lcp || at + rr.phrases[b].size() > lcp) break;
                    CHECK(a == b);
                    if (a != b) break;
                    at = next;
                    ++x;
                }
            }
        }
    }
}
