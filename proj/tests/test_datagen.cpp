#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "lzdict/datagen.hpp"
#include "test_support.hpp"

using namespace lzdict;

namespace {

// Small but non-trivial: C(8,3) = 56 combinations, 336 strings at scale 1.
SynthParams small_params() {
    SynthParams p;
    p.alpha_len = 5;
    p.beta_len = 3;
    p.alpha_reps = 4;
    p.beta_reps = 6;
    p.beta_alphabet_size = 8;
    return p;
}

}  // namespace

TEST_CASE("rng_below and fisher_yates basics") {
    std::mt19937_64 rng(1);
    for (uint64_t n : {1ull, 2ull, 3ull, 7ull, 64ull, 1000ull}) {
        std::set<uint64_t> hit;
        for (int i = 0; i < 3000; ++i) {
            uint64_t v = rng_below(rng, n);
            CHECK(v < n);
            hit.insert(v);
        }
        if (n <= 64) CHECK(hit.size() == n);  // 3000 draws cover small ranges
    }

    std::vector<int> v = {1, 2, 3, 4, 5, 6, 7, 8};
    auto orig = v;
    fisher_yates(v, rng);
    auto sorted = v;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == orig);  // a permutation

    std::vector<int> empty, one = {9};
    fisher_yates(empty, rng);
    fisher_yates(one, rng);
    CHECK(one == std::vector<int>{9});
}

TEST_CASE("generation is deterministic in the seed") {
    SynthParams p = small_params();
    auto a = gen_synth(p);
    auto b = gen_synth(p);
    CHECK(a.strings == b.strings);

    p.seed = 43;
    auto c = gen_synth(p);
    CHECK(a.strings != c.strings);
}

TEST_CASE("scaled corpus hits the pinned shape") {
    SynthParams p;  // defaults: 16+6+16, reps 32/6, full alphabet
    p.scale = 1.0 / 256.0;
    InputSet corpus = gen_synth(p);

    CHECK(corpus.size() == 21216);  // floor(5437152/256) rounded down to a multiple of 48
    for (const auto& s : corpus.strings) REQUIRE(s.size() == 38);

    std::unordered_set<std::string> alphas;
    for (const auto& s : corpus.strings) {
        alphas.insert(s.substr(0, 16));
        alphas.insert(s.substr(22));
    }
    CHECK(alphas.size() == 1326);  // 2 * 21216 / 32

    auto rep = verify_synth(corpus, p);
    for (const auto& v : rep.violations) CAPTURE(v);
    CHECK(rep.ok());
}

TEST_CASE("full small corpus satisfies every structural invariant") {
    SynthParams p = small_params();
    InputSet corpus = gen_synth(p);
    CHECK(corpus.size() == 336);  // 6 * C(8,3)
    auto rep = verify_synth(corpus, p);
    for (const auto& v : rep.violations) CAPTURE(v);
    CHECK(rep.ok());

    // Middle blocks walk the combinations in lexicographic order when sorted
    // output is requested... order aside, each must occur exactly beta_reps
    // times and use only the first 8 punctuation characters.
    std::set<std::string> betas;
    for (const auto& s : corpus.strings) betas.insert(s.substr(p.alpha_len, p.beta_len));
    CHECK(betas.size() == 56);
}

TEST_CASE("sorted flag orders the same multiset") {
    SynthParams p = small_params();
    auto shuffled = gen_synth(p);
    p.sorted = true;
    auto sorted = gen_synth(p);

    CHECK(std::is_sorted(sorted.strings.begin(), sorted.strings.end()));
    auto resorted = shuffled.strings;
    std::sort(resorted.begin(), resorted.end());
    CHECK(resorted == sorted.strings);
}

TEST_CASE("verifier flags corruption") {
    SynthParams p = small_params();
    InputSet corpus = gen_synth(p);

    SUBCASE("letter outside its zone") {
        corpus.strings[10][2] = '!';  // alpha zone
        auto rep = verify_synth(corpus, p);
        REQUIRE(rep.violations.size() == 1);
        CHECK(rep.violations[0].find("outside its alphabet") != std::string::npos);
    }
    SUBCASE("middle block out of order") {
        std::swap(corpus.strings[10][p.alpha_len], corpus.strings[10][p.alpha_len + 1]);
        auto rep = verify_synth(corpus, p);
        CHECK_FALSE(rep.ok());
        bool mentioned = false;
        for (const auto& v : rep.violations)
            mentioned |= v.find("increasing") != std::string::npos;
        CHECK(mentioned);
    }
    SUBCASE("duplicate string") {
        corpus.strings[1] = corpus.strings[0];
        auto rep = verify_synth(corpus, p);
        CHECK_FALSE(rep.ok());
    }
    SUBCASE("wrong length") {
        corpus.strings[3].pop_back();
        auto rep = verify_synth(corpus, p);
        CHECK_FALSE(rep.ok());
    }
}

TEST_CASE("empty input is trivially valid") {
    CHECK(verify_synth(InputSet{}, SynthParams{}).ok());
}

TEST_CASE("infeasible parameters are rejected") {
    auto expect_throw = [](SynthParams p) {
        CHECK_THROWS_AS(gen_synth(p), std::invalid_argument);
    };

    SynthParams p;
    p.scale = 0.0;
    expect_throw(p);
    p.scale = -0.5;
    expect_throw(p);
    p.scale = 1.5;
    expect_throw(p);
    p.scale = 1e-9;  // rounds to zero strings
    expect_throw(p);

    p = SynthParams{};
    p.beta_len = 9;
    p.beta_alphabet_size = 8;
    expect_throw(p);
    p = SynthParams{};
    p.beta_alphabet_size = 33;
    expect_throw(p);
    p = SynthParams{};
    p.beta_alphabet_size = 0;
    expect_throw(p);
    p = SynthParams{};
    p.alpha_len = 0;
    expect_throw(p);
    p = SynthParams{};
    p.beta_reps = 0;
    expect_throw(p);

    // One-letter alpha blocks cannot supply 108 distinct values.
    p = SynthParams{};
    p.alpha_len = 1;
    p.alpha_reps = 2;
    p.scale = 0.00002;
    expect_throw(p);
}
