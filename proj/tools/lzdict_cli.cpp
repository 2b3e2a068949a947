// Command-line front end: build dictionaries, answer queries, report sizes,
// benchmark, generate synthetic corpora, self-check.
//
// Exit codes: 0 success, 1 usage or parameter error, 2 I/O, 3 data/corruption.

#include <CLI11.hpp>

#include <cctype>
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lzdict/datagen.hpp"
#include "lzdict/dictionary.hpp"
#include "lzdict/input_set.hpp"
#include "lzdict/io.hpp"
#include "lzdict/lz_builder.hpp"

using namespace lzdict;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// LZDICT_SEED overrides whatever the flag said.
uint64_t resolve_seed(uint64_t flag_seed) {
    const char* env = std::getenv("LZDICT_SEED");
    if (!env || !*env) return flag_seed;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (!end || *end) throw std::invalid_argument("LZDICT_SEED is not a number: " + std::string(env));
    return v;
}

const char* mode_name(Mode m) { return m == Mode::lzt_fc ? "lzt-fc" : "fc"; }

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::base: return "base";
        case Variant::length_sorted: return "lensort";
        case Variant::first_omitted: return "omitfirst";
        case Variant::combined: return "combined";
    }
    return "?";
}

uint64_t bits_to_bytes(uint64_t bits) { return (bits + 7) / 8; }

// Query inputs come from trailing arguments or, when there are none, stdin.
std::vector<std::string> gather_lines(const std::vector<std::string>& args) {
    if (!args.empty()) return args;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line)) lines.push_back(line);
    return lines;
}

int run_guarded(const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const LoadError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}

// --- build -------------------------------------------------------------------

struct BuildArgs {
    std::string input;
    std::string output;
    std::string perm;
    BuildConfig config;
    InputFormat format = InputFormat::lines;
};

int cmd_build(const BuildArgs& a) {
    std::string out_path = a.output.empty() ? a.input + ".lzd" : a.output;
    std::string perm_path = a.perm.empty() ? out_path + ".perm" : a.perm;

    InputSet input;
    input.strings = read_strings_file(a.input, a.format);

    auto t0 = std::chrono::steady_clock::now();
    auto built = LzDictionary::build(input, a.config);
    double secs = seconds_since(t0);

    if (built.duplicates_removed)
        std::fprintf(stderr, "warning: dropped %" PRIu64 " duplicate strings\n",
                     built.duplicates_removed);

    built.dict.save_file(out_path);
    write_permutation_file(perm_path, built.permutation);

    const LzDictionary& d = built.dict;
    SpaceReport sr = d.space_report();
    std::printf("mode               %s\n", mode_name(d.mode()));
    std::printf("strings            %" PRIu64 "\n", d.size());
    if (d.mode() == Mode::lzt_fc) {
        const BuildStats& st = built.stats;
        std::printf("variant            %s\n", variant_name(d.index().variant()));
        std::printf("trie nodes         %" PRIu64 " -> %" PRIu64 "\n", st.nodes_before,
                    st.nodes_after);
        std::printf("phrases            %" PRIu64 " -> %" PRIu64 "\n", st.phrases_before,
                    st.phrases_after);
        std::printf("parsing symbols    %" PRIu64 " -> %" PRIu64 "\n", st.parsing_before,
                    st.parsing_after);
        std::printf("mean parse length  %.2f\n", double(st.parsing_after) / double(d.size()));
    }
    std::printf("original bytes     %" PRIu64 "\n", sr.original_bytes);
    std::printf("dictionary bytes   %" PRIu64 " (%.1f%% of original)\n",
                bits_to_bytes(sr.total_bits()), sr.percent_of_original());
    std::printf("  string store     %" PRIu64 " bytes\n", bits_to_bytes(sr.fc_bits));
    if (d.mode() == Mode::lzt_fc)
        std::printf("  phrase index     %" PRIu64 " bytes (%.1f%% of the dictionary)\n",
                    bits_to_bytes(sr.index_bits), 100.0 * double(sr.index_bits) / double(sr.total_bits()));
    std::printf("build time         %.3f s\n", secs);
    std::printf("wrote %s and %s\n", out_path.c_str(), perm_path.c_str());
    return 0;
}

// --- access / lookup -----------------------------------------------------------

int cmd_access(const std::string& dict_path, const std::vector<std::string>& args) {
    LzDictionary d = LzDictionary::load_file(dict_path);
    for (const std::string& line : gather_lines(args)) {
        char* end = nullptr;
        unsigned long long id = std::strtoull(line.c_str(), &end, 10);
        if (line.empty() || !std::isdigit(static_cast<unsigned char>(line[0])) || !end || *end) {
            std::printf("<bad-id>\n");
        } else if (id >= d.size()) {
            std::printf("<no-such-id>\n");
        } else {
            std::string s = d.access(id);
            std::fwrite(s.data(), 1, s.size(), stdout);
            std::fputc('\n', stdout);
        }
    }
    return 0;
}

int cmd_lookup(const std::string& dict_path, const std::vector<std::string>& args) {
    LzDictionary d = LzDictionary::load_file(dict_path);
    for (const std::string& line : gather_lines(args))
        std::printf("%" PRId64 "\n", d.lookup(line));
    return 0;
}

// --- stats ---------------------------------------------------------------------

int cmd_stats(const std::string& dict_path, bool csv) {
    LzDictionary d = LzDictionary::load_file(dict_path);
    SpaceReport sr = d.space_report();
    bool lzt = d.mode() == Mode::lzt_fc;

    if (csv) {
        std::printf(
            "mode,variant,strings,phrases,bucket_size,threshold,original_bytes,"
            "store_bits,index_bits,total_bytes,percent_of_original\n");
        std::printf("%s,%s,%" PRIu64 ",%" PRIu64 ",%u,%u,%" PRIu64 ",%" PRIu64 ",%" PRIu64
                    ",%" PRIu64 ",%.2f\n",
                    mode_name(d.mode()), lzt ? variant_name(d.index().variant()) : "",
                    d.size(), d.phrase_count(), d.fc().bucket_size(),
                    lzt ? d.index().threshold() : 0, sr.original_bytes, sr.fc_bits, sr.index_bits,
                    bits_to_bytes(sr.total_bits()), sr.percent_of_original());
        return 0;
    }

    std::printf("mode               %s\n", mode_name(d.mode()));
    std::printf("strings            %" PRIu64 "\n", d.size());
    std::printf("bucket size        %u\n", d.fc().bucket_size());
    if (lzt) {
        std::printf("variant            %s\n", variant_name(d.index().variant()));
        std::printf("phrases            %" PRIu64 "\n", d.phrase_count());
        std::printf("length threshold   %u\n", d.index().threshold());
    }
    std::printf("original bytes     %" PRIu64 "\n", sr.original_bytes);
    std::printf("dictionary bytes   %" PRIu64 " (%.1f%% of original)\n",
                bits_to_bytes(sr.total_bits()), sr.percent_of_original());
    std::printf("  string store     %" PRIu64 " bits\n", sr.fc_bits);
    if (lzt) {
        auto bd = d.index().payload_breakdown();
        std::printf("  phrase index     %" PRIu64 " bits\n", sr.index_bits);
        std::printf("    symbols        %" PRIu64 " bits\n", bd.symbol_bits);
        std::printf("    start marks    %" PRIu64 " bits\n", bd.start_bits);
        std::printf("    first phrases  %" PRIu64 " bits\n", bd.first_phrase_bits);
        std::printf("    range tables   %" PRIu64 " bits\n", bd.range_table_bits);
    }
    return 0;
}

// --- bench -----------------------------------------------------------------

int cmd_bench(const std::string& dict_path, uint64_t queries, uint64_t seed) {
    seed = resolve_seed(seed);
    LzDictionary d = LzDictionary::load_file(dict_path);
    SpaceReport sr = d.space_report();
    std::printf("strings            %" PRIu64 "\n", d.size());
    std::printf("dictionary bytes   %" PRIu64 " (%.1f%% of original)\n",
                bits_to_bytes(sr.total_bits()), sr.percent_of_original());
    if (queries == 0 || d.size() == 0) return 0;

    std::mt19937_64 rng(seed);
    std::vector<uint64_t> ids(queries);
    for (auto& id : ids) id = rng_below(rng, d.size());
    std::vector<std::string> members(queries);
    for (uint64_t i = 0; i < queries; ++i) members[i] = d.access(ids[i]);

    uint64_t checksum = 0;
    constexpr int kRuns = 3;

    double access_us = 0;
    for (int run = 0; run < kRuns; ++run) {
        auto t0 = std::chrono::steady_clock::now();
        for (uint64_t id : ids) checksum += d.access(id).size();
        access_us += seconds_since(t0) * 1e6 / double(queries);
    }

    double lookup_us = 0;
    for (int run = 0; run < kRuns; ++run) {
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& s : members) checksum += uint64_t(d.lookup(s));
        lookup_us += seconds_since(t0) * 1e6 / double(queries);
    }

    std::printf("access             %.3f us/op (%d runs of %" PRIu64 ")\n", access_us / kRuns,
                kRuns, queries);
    std::printf("lookup             %.3f us/op (%d runs of %" PRIu64 ")\n", lookup_us / kRuns,
                kRuns, queries);
    std::printf("checksum           %016" PRIx64 "\n", checksum);
    return 0;
}

// --- gen-synth -----------------------------------------------------------------

struct SynthArgs {
    std::string output;
    SynthParams params;
    InputFormat format = InputFormat::lines;
};

int cmd_gen_synth(const SynthArgs& a) {
    SynthParams p = a.params;
    p.seed = resolve_seed(p.seed);
    InputSet corpus = gen_synth(p);
    write_strings_file(a.output, corpus.strings, a.format);
    std::printf("wrote %" PRIu64 " strings (%" PRIu64 " bytes) to %s\n", corpus.size(),
                corpus.original_bytes(), a.output.c_str());
    return 0;
}

// --- selftest --------------------------------------------------------------

// Embedded golden example plus miniature oracle sweeps. Every invariant is
// named; LZDICT_SELFTEST_BREAK deliberately breaks one to prove failures are
// detected.
int cmd_selftest() {
    int failures = 0;
    auto check = [&](const char* name, bool ok) {
        std::printf("%s: %s\n", ok ? "ok" : "FAIL", name);
        if (!ok) ++failures;
    };
    bool sabotage = std::getenv("LZDICT_SELFTEST_BREAK") != nullptr;

    const std::vector<std::string> worked = {"aba",     "ababa",    "abc", "abcb",
                                          "ba",      "bacbacb",  "bacbacba", "bca"};
    InputSet input;
    input.strings = worked;

    InitialParse first = initial_parse(input);
    check("initial parse emits 12 phrases", first.phrase_count == 12);

    seed_alphabet(first.trie, input);
    ReparseResult second = reparse(first.trie, input);
    const std::vector<std::string> want_phrases = {"a",  "aba",   "abc", "abcb", "b",
                                                   "ba", "bacba", "bc",  "c"};
    check("reparse keeps the nine used phrases", second.phrases == want_phrases);
    check("reparse covers the example with 14 symbols", second.parsing_size == 14);

    BuildConfig cfg;
    cfg.variant = Variant::base;
    auto built = LzDictionary::build(input, cfg);
    std::string want_access = sabotage ? "bacbacb" : "bacbacba";
    check("access(6) decodes the longest string", built.dict.access(6) == want_access);
    check("lookup inverts access", built.dict.lookup("bacbacba") == 6);
    check("near-miss bcbaa is rejected", built.dict.lookup("bcbaa") == -1);

    // Serialization must round-trip to the same bytes and the same answers.
    std::vector<uint8_t> bytes = built.dict.serialize();
    bool round = false;
    try {
        LzDictionary loaded = LzDictionary::deserialize(bytes);
        round = loaded.serialize() == bytes && loaded.lookup("abcb") == built.dict.lookup("abcb");
    } catch (const std::exception&) {
    }
    check("serialized image round-trips", round);

    // Rank/select against a linear scan.
    std::mt19937_64 rng(7);
    bool rs_ok = true;
    for (int round_i = 0; round_i < 4 && rs_ok; ++round_i) {
        uint64_t n = 1 + rng_below(rng, 3000);
        std::vector<bool> bits(n);
        for (uint64_t i = 0; i < n; ++i) bits[i] = rng_below(rng, 100) < 30;
        BitVector v(bits);
        uint64_t ones = 0, j = 0;
        for (uint64_t i = 0; i < n; ++i) {
            ones += bits[i];
            if (v.rank1(i) != ones || v.rank0(i) != i + 1 - ones) rs_ok = false;
            if (bits[i] && v.select1(j++) != i) rs_ok = false;
        }
    }
    check("rank/select agree with a linear scan", rs_ok);

    // Longest prefix against brute force over the example phrases.
    FcStore fc = FcStore::build(want_phrases, 2);
    bool lp_ok = true;
    for (const auto& base : worked)
        for (size_t cut = 1; cut <= base.size(); ++cut) {
            std::string q = base.substr(0, cut) + "x";
            std::optional<FcStore::PrefixHit> got = fc.longest_prefix(q);
            uint64_t best_rank = 0;
            uint32_t best_len = 0;
            for (uint64_t i = 0; i < want_phrases.size(); ++i)
                if (q.compare(0, want_phrases[i].size(), want_phrases[i]) == 0 &&
                    want_phrases[i].size() > best_len) {
                    best_rank = i;
                    best_len = uint32_t(want_phrases[i].size());
                }
            bool want_hit = best_len > 0;
            if (got.has_value() != want_hit ||
                (got && (got->rank != best_rank || got->len != best_len)))
                lp_ok = false;
        }
    check("longest-prefix matches brute force", lp_ok);

    // All four arrangements answer identically modulo their permutations.
    bool variants_ok = true;
    for (Variant v : {Variant::base, Variant::length_sorted, Variant::first_omitted,
                      Variant::combined}) {
        BuildConfig c;
        c.variant = v;
        auto b = LzDictionary::build(input, c);
        for (size_t i = 0; i < worked.size(); ++i)
            if (b.dict.access(b.permutation[i]) != worked[i] ||
                b.dict.lookup(worked[i]) != int64_t(b.permutation[i]))
                variants_ok = false;
        if (b.dict.lookup("bacba") != -1) variants_ok = false;
    }
    check("all four index variants agree", variants_ok);

    if (failures) {
        std::printf("%d of 10 checks failed\n", failures);
        return 3;
    }
    std::printf("all checks passed\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lzdict: a compressed string dictionary over LZ78 phrases"};
    app.require_subcommand(1);

    std::map<std::string, Mode> mode_names{{"lzt-fc", Mode::lzt_fc}, {"fc", Mode::fc_baseline}};
    std::map<std::string, Variant> variant_names{{"base", Variant::base},
                                                 {"lensort", Variant::length_sorted},
                                                 {"omitfirst", Variant::first_omitted},
                                                 {"combined", Variant::combined}};
    std::map<std::string, InputFormat> format_names{{"lines", InputFormat::lines},
                                                    {"len-prefixed", InputFormat::len_prefixed}};

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "Build a dictionary from a string file");
    build->add_option("input", build_args.input, "Input string file")->required();
    build->add_option("-o,--output", build_args.output, "Dictionary path (default INPUT.lzd)");
    build->add_option("--perm", build_args.perm,
                      "Input-order -> ID sidecar path (default OUTPUT.perm)");
    build->add_option("--mode", build_args.config.mode, "Dictionary kind")
        ->transform(CLI::CheckedTransformer(mode_names))
        ->default_str("lzt-fc");
    build->add_option("--variant", build_args.config.variant, "Phrase index arrangement")
        ->transform(CLI::CheckedTransformer(variant_names))
        ->default_str("combined");
    build->add_option("--bucket-size", build_args.config.bucket_size,
                      "Front-coding bucket size (0 = per-mode default)");
    build->add_option("--threshold", build_args.config.length_threshold,
                      "Largest parse length with its own equal-length range");
    build->add_option("--format", build_args.format, "Input encoding")
        ->transform(CLI::CheckedTransformer(format_names))
        ->default_str("lines");

    std::string dict_path;
    std::vector<std::string> query_args;
    auto* access = app.add_subcommand("access", "Print the string for each ID");
    access->add_option("dict", dict_path, "Dictionary file")->required();
    access->add_option("ids", query_args, "IDs (stdin when omitted)");

    auto* lookup = app.add_subcommand("lookup", "Print the ID for each string, -1 when absent");
    lookup->add_option("dict", dict_path, "Dictionary file")->required();
    lookup->add_option("strings", query_args, "Strings (stdin when omitted)");

    bool csv = false;
    auto* stats = app.add_subcommand("stats", "Report sizes and structure");
    stats->add_option("dict", dict_path, "Dictionary file")->required();
    stats->add_flag("--csv", csv, "Machine-readable one-row CSV");

    uint64_t queries = 10000;
    uint64_t seed = 42;
    auto* bench = app.add_subcommand("bench", "Time access and lookup on random queries");
    bench->add_option("dict", dict_path, "Dictionary file")->required();
    bench->add_option("--queries", queries, "Queries per run (0 = sizes only)");
    bench->add_option("--seed", seed, "Query sampling seed");

    SynthArgs synth_args;
    auto* gen = app.add_subcommand("gen-synth", "Generate the synthetic block corpus");
    gen->add_option("output", synth_args.output, "Output string file")->required();
    gen->add_option("--scale", synth_args.params.scale, "Corpus size factor in (0, 1]");
    gen->add_option("--seed", synth_args.params.seed, "Generator seed");
    gen->add_flag("--sorted", synth_args.params.sorted, "Emit sorted instead of shuffled");
    gen->add_option("--alpha-len", synth_args.params.alpha_len, "Letter block length");
    gen->add_option("--beta-len", synth_args.params.beta_len, "Middle block length");
    gen->add_option("--alpha-reps", synth_args.params.alpha_reps, "Uses of each letter block");
    gen->add_option("--beta-reps", synth_args.params.beta_reps, "Uses of each middle block");
    gen->add_option("--beta-alphabet", synth_args.params.beta_alphabet_size,
                    "Middle block alphabet size (at most 32)");
    gen->add_option("--format", synth_args.format, "Output encoding")
        ->transform(CLI::CheckedTransformer(format_names))
        ->default_str("lines");

    auto* selftest = app.add_subcommand("selftest", "Run the embedded end-to-end checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (build->parsed()) return run_guarded([&] { return cmd_build(build_args); });
    if (access->parsed()) return run_guarded([&] { return cmd_access(dict_path, query_args); });
    if (lookup->parsed()) return run_guarded([&] { return cmd_lookup(dict_path, query_args); });
    if (stats->parsed()) return run_guarded([&] { return cmd_stats(dict_path, csv); });
    if (bench->parsed()) return run_guarded([&] { return cmd_bench(dict_path, queries, seed); });
    if (gen->parsed()) return run_guarded([&] { return cmd_gen_synth(synth_args); });
    if (selftest->parsed()) return run_guarded([&] { return cmd_selftest(); });
    return 1;
}
