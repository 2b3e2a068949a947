#include <benchmark/benchmark.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lzdict/bit_vector.hpp"
#include "lzdict/datagen.hpp"
#include "lzdict/dictionary.hpp"
#include "lzdict/fc_store.hpp"

using namespace lzdict;

namespace {

// Shared synthetic corpus (~21k strings of 38 bytes); built once, on demand.
const InputSet& corpus() {
    static const InputSet in = [] {
        SynthParams p;
        p.scale = 1.0 / 256.0;
        return gen_synth(p);
    }();
    return in;
}

const LzDictionary::BuildResult& lzt_dict(Variant v) {
    static std::vector<LzDictionary::BuildResult> cache = [] {
        std::vector<LzDictionary::BuildResult> out;
        for (int i = 0; i < 4; ++i) {
            BuildConfig cfg;
            cfg.variant = static_cast<Variant>(i);
            out.push_back(LzDictionary::build(corpus(), cfg));
        }
        return out;
    }();
    return cache[static_cast<int>(v)];
}

const LzDictionary& baseline_dict() {
    static const LzDictionary d = [] {
        BuildConfig cfg;
        cfg.mode = Mode::fc_baseline;
        return LzDictionary::build(corpus(), cfg).dict;
    }();
    return d;
}

const char* variant_label(int v) {
    static const char* names[] = {"base", "lensort", "omitfirst", "combined"};
    return names[v];
}

std::vector<uint64_t> random_ids(uint64_t n, uint64_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> ids(count);
    for (auto& id : ids) id = rng_below(rng, n);
    return ids;
}

}  // namespace

static void BitVectorRank1(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    std::mt19937_64 rng(n);
    BitVector v;
    v.reserve(n);
    for (uint64_t i = 0; i < n; ++i) v.push_back(rng() & 1);
    v.build();
    auto pos = random_ids(n, 4096, 7);

    uint64_t sum = 0, k = 0;
    for (auto _ : state) {
        sum += v.rank1(pos[k++ & 4095]);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BitVectorRank1)->RangeMultiplier(64)->Range(1 << 10, 1 << 22);

static void BitVectorSelect1(benchmark::State& state) {
    uint64_t n = uint64_t(state.range(0));
    std::mt19937_64 rng(n);
    BitVector v;
    v.reserve(n);
    for (uint64_t i = 0; i < n; ++i) v.push_back(rng() & 1);
    v.build();
    auto js = random_ids(v.ones(), 4096, 11);

    uint64_t sum = 0, k = 0;
    for (auto _ : state) {
        sum += v.select1(js[k++ & 4095]);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BitVectorSelect1)->RangeMultiplier(64)->Range(1 << 10, 1 << 22);

// Front-coded store over the raw corpus strings; bucket size is the argument.
static void FrontCodedAccess(benchmark::State& state) {
    auto strings = corpus().strings;
    std::sort(strings.begin(), strings.end());
    FcStore fc = FcStore::build(strings, uint32_t(state.range(0)));
    auto ids = random_ids(fc.size(), 4096, 13);

    uint64_t k = 0;
    for (auto _ : state) {
        std::string s = fc.access(ids[k++ & 4095]);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(FrontCodedAccess)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

static void FrontCodedLongestPrefix(benchmark::State& state) {
    auto strings = corpus().strings;
    std::sort(strings.begin(), strings.end());
    FcStore fc = FcStore::build(strings, uint32_t(state.range(0)));
    auto ids = random_ids(strings.size(), 4096, 17);

    uint64_t k = 0;
    for (auto _ : state) {
        auto hit = fc.longest_prefix(strings[ids[k++ & 4095]]);
        benchmark::DoNotOptimize(hit);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(FrontCodedLongestPrefix)->Arg(4)->Arg(8)->Arg(16)->Arg(64);

// Parsing reconstruction alone (phrase IDs, no phrase decoding).
static void IndexParsingAccess(benchmark::State& state) {
    const auto& d = lzt_dict(static_cast<Variant>(state.range(0))).dict;
    auto ids = random_ids(d.size(), 4096, 19);

    uint64_t k = 0;
    for (auto _ : state) {
        auto parsing = d.index().access(ids[k++ & 4095]);
        benchmark::DoNotOptimize(parsing);
    }
    state.SetLabel(variant_label(int(state.range(0))));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(IndexParsingAccess)->DenseRange(0, 3);

static void DictAccess(benchmark::State& state) {
    const auto& d = lzt_dict(static_cast<Variant>(state.range(0))).dict;
    auto ids = random_ids(d.size(), 4096, 23);

    uint64_t k = 0;
    for (auto _ : state) {
        std::string s = d.access(ids[k++ & 4095]);
        benchmark::DoNotOptimize(s);
    }
    state.SetLabel(variant_label(int(state.range(0))));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(DictAccess)->DenseRange(0, 3);

static void DictLookup(benchmark::State& state) {
    const auto& d = lzt_dict(static_cast<Variant>(state.range(0))).dict;
    const auto& strings = corpus().strings;
    auto ids = random_ids(strings.size(), 4096, 29);

    uint64_t k = 0;
    int64_t sum = 0;
    for (auto _ : state) {
        sum += d.lookup(strings[ids[k++ & 4095]]);
        benchmark::DoNotOptimize(sum);
    }
    state.SetLabel(variant_label(int(state.range(0))));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(DictLookup)->DenseRange(0, 3);

// '~' is outside both corpus alphabets, so every query misses.
static void DictLookupMiss(benchmark::State& state) {
    const auto& d = lzt_dict(Variant::combined).dict;
    auto strings = corpus().strings;
    for (auto& s : strings) s[s.size() / 2] = '~';
    auto ids = random_ids(strings.size(), 4096, 31);

    uint64_t k = 0;
    int64_t sum = 0;
    for (auto _ : state) {
        sum += d.lookup(strings[ids[k++ & 4095]]);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(DictLookupMiss);

static void BaselineAccess(benchmark::State& state) {
    const auto& d = baseline_dict();
    auto ids = random_ids(d.size(), 4096, 37);

    uint64_t k = 0;
    for (auto _ : state) {
        std::string s = d.access(ids[k++ & 4095]);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BaselineAccess);

static void BaselineLookup(benchmark::State& state) {
    const auto& d = baseline_dict();
    const auto& strings = corpus().strings;
    auto ids = random_ids(strings.size(), 4096, 41);

    uint64_t k = 0;
    int64_t sum = 0;
    for (auto _ : state) {
        sum += d.lookup(strings[ids[k++ & 4095]]);
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BaselineLookup);

static void DictBuild(benchmark::State& state) {
    InputSet in;
    in.strings.assign(corpus().strings.begin(),
                      corpus().strings.begin() + state.range(0));

    for (auto _ : state) {
        auto built = LzDictionary::build(in, {});
        benchmark::DoNotOptimize(built);
    }
    state.SetItemsProcessed(state.iterations() * uint64_t(state.range(0)));
}
BENCHMARK(DictBuild)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Unit(benchmark::kMillisecond);

static void DictDeserialize(benchmark::State& state) {
    static const std::vector<uint8_t> bytes = lzt_dict(Variant::combined).dict.serialize();

    for (auto _ : state) {
        LzDictionary d = LzDictionary::deserialize(bytes);
        benchmark::DoNotOptimize(d);
    }
    state.SetBytesProcessed(int64_t(state.iterations() * bytes.size()));
}
BENCHMARK(DictDeserialize)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
