#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lzdict/fc_store.hpp"
#include "lzdict/io.hpp"
#include "test_support.hpp"

using namespace lzdict;

namespace {

const std::vector<std::string> kPhrases = {"a",  "aba",   "abc", "abcb", "b",
                                           "ba", "bacba", "bc",  "c"};

std::vector<std::string> sorted_set(std::mt19937_64& rng, size_t count, uint32_t sigma,
                                    size_t max_len) {
    auto v = testsup::random_string_set(rng, count, sigma, max_len);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("worked example: single bucket") {
    FcStore fc = FcStore::build(kPhrases, 16);
    CHECK(fc.size() == 9);
    CHECK(fc.bucket_size() == 16);
    for (size_t i = 0; i < kPhrases.size(); ++i) CHECK(fc.access(i) == kPhrases[i]);
    CHECK(fc.access(6) == "bacba");
    CHECK_THROWS_AS(fc.access(9), std::out_of_range);

    auto hit = fc.longest_prefix("bacbacba");
    REQUIRE(hit.has_value());
    CHECK(hit->rank == 6);
    CHECK(hit->len == 5);

    hit = fc.longest_prefix("abax");
    REQUIRE(hit.has_value());
    CHECK(hit->rank == 1);
    CHECK(hit->len == 3);

    CHECK_FALSE(fc.longest_prefix("zzz").has_value());
    CHECK_FALSE(fc.longest_prefix("").has_value());

    CHECK(fc.predecessor("ab") == 0);
    CHECK(fc.predecessor("a") == 0);
    CHECK(fc.predecessor("zzzz") == 8);
    CHECK_FALSE(fc.predecessor("A").has_value());  // sorts before "a"

    CHECK(fc.find("bacba") == 6);
    CHECK_FALSE(fc.find("ab").has_value());
    CHECK_FALSE(fc.find("").has_value());
}

TEST_CASE("member queries resolve in one search pass") {
    FcStore fc = FcStore::build(kPhrases, 2);  // several buckets
    for (size_t i = 0; i < kPhrases.size(); ++i) {
        uint32_t passes = 0;
        auto hit = fc.longest_prefix(kPhrases[i], &passes);
        REQUIRE(hit.has_value());
        CHECK(hit->rank == i);
        CHECK(hit->len == kPhrases[i].size());
        CHECK(passes == 1);
    }
}

TEST_CASE("greedy parsing of the worked example needs at most two passes") {
    FcStore fc = FcStore::build(kPhrases, 2);
    for (const char* s : {"aba", "ababa", "abc", "abcb", "ba", "bacbacb", "bacbacba", "bca",
                          "bcbaa"}) {
        std::string_view q(s);
        size_t pos = 0;
        while (pos < q.size()) {
            uint32_t passes = 0;
            auto hit = fc.longest_prefix(q.substr(pos), &passes);
            REQUIRE(hit.has_value());
            CHECK(passes <= 2);
            pos += hit->len;
        }
    }
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(FcStore::build({"b", "a"}, 4), std::invalid_argument);
    CHECK_THROWS_AS(FcStore::build({"a", "a"}, 4), std::invalid_argument);
    CHECK_THROWS_AS(FcStore::build({"", "a"}, 4), std::invalid_argument);
    CHECK_THROWS_AS(FcStore::build({"a"}, 0), std::invalid_argument);
}

TEST_CASE("empty and single-string stores") {
    FcStore empty = FcStore::build({}, 8);
    CHECK(empty.size() == 0);
    CHECK_FALSE(empty.longest_prefix("x").has_value());
    CHECK_FALSE(empty.predecessor("x").has_value());
    CHECK_THROWS_AS(empty.access(0), std::out_of_range);

    ByteWriter w;
    empty.save(w);
    auto bytes = w.take();
    ByteReader r(bytes);
    FcStore back = FcStore::load(r);
    CHECK(back.size() == 0);
    CHECK(r.remaining() == 0);

    FcStore one = FcStore::build({"solo"}, 8);
    CHECK(one.access(0) == "solo");
    CHECK(one.find("solo") == 0);
    CHECK(one.longest_prefix("solos")->len == 4);
}

TEST_CASE("bigger buckets never cost more bits") {
    std::mt19937_64 rng(41);
    auto strings = sorted_set(rng, 300, 6, 40);
    FcStore k1 = FcStore::build(strings, 1);
    FcStore k16 = FcStore::build(strings, 16);
    CHECK(k16.size_bits() <= k1.size_bits());
}

TEST_CASE("random stores match the brute-force oracles") {
    std::mt19937_64 rng(43);
    for (uint32_t k : {1u, 2u, 8u, 16u, 64u}) {
        CAPTURE(k);
        for (int round = 0; round < 12; ++round) {
            CAPTURE(round);
            auto strings = sorted_set(rng, 1 + testsup::below(rng, 200),
                                      1 + testsup::below(rng, 12), 24);
            if (strings.empty()) continue;
            FcStore fc = FcStore::build(strings, k);

            // Access in shuffled order equals the input (decode independence).
            std::vector<uint64_t> order(strings.size());
            for (size_t i = 0; i < order.size(); ++i) order[i] = i;
            for (size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[testsup::below(rng, i)]);
            for (uint64_t i : order) CHECK(fc.access(i) == strings[i]);

            // Query mix: members, members + suffix, prefixes, random bytes.
            for (int qi = 0; qi < 120; ++qi) {
                std::string q;
                switch (testsup::below(rng, 4)) {
                    case 0: q = strings[testsup::below(rng, strings.size())]; break;
                    case 1:
                        q = strings[testsup::below(rng, strings.size())] +
                            testsup::random_string(rng, 1 + testsup::below(rng, 4), 12);
                        break;
                    case 2: {
                        const std::string& s = strings[testsup::below(rng, strings.size())];
                        q = s.substr(0, testsup::below(rng, s.size() + 1));
                        break;
                    }
                    default: q = testsup::random_string(rng, testsup::below(rng, 8), 14); break;
                }
                CAPTURE(q);
                auto brute = testsup::brute_longest_prefix(strings, q);
                auto got = fc.longest_prefix(q);
                CHECK(got.has_value() == brute.has_value());
                if (got && brute) {
                    CHECK(got->rank == brute->first);
                    CHECK(got->len == brute->second);
                }
                auto bp = testsup::brute_predecessor(strings, q);
                auto gp = fc.predecessor(q);
                CHECK(gp == bp);
                auto it = std::lower_bound(strings.begin(), strings.end(), q);
                bool member = it != strings.end() && *it == q;
                CHECK(fc.find(q).has_value() == member);
                if (member) CHECK(*fc.find(q) == uint64_t(it - strings.begin()));
            }
        }
    }
}

TEST_CASE("serialization round trip") {
    std::mt19937_64 rng(47);
    auto strings = sorted_set(rng, 100, 8, 30);
    FcStore fc = FcStore::build(strings, 8);
    ByteWriter w;
    fc.save(w);
    CHECK(w.size() * 8 == fc.size_bits());
    std::vector<uint8_t> bytes = w.take();
    ByteReader r(bytes);
    FcStore loaded = FcStore::load(r);
    CHECK(r.remaining() == 0);
    REQUIRE(loaded.size() == strings.size());
    for (size_t i = 0; i < strings.size(); ++i) CHECK(loaded.access(i) == strings[i]);
}
