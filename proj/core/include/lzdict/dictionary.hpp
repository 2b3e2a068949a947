#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lzdict/fc_store.hpp"
#include "lzdict/input_set.hpp"
#include "lzdict/io.hpp"
#include "lzdict/lz_builder.hpp"
#include "lzdict/phrase_index.hpp"

namespace lzdict {

enum class Mode : uint8_t {
    lzt_fc = 0,       // LZ78 phrases front-coded + linearized parsings
    fc_baseline = 1,  // the strings themselves, front-coded
};

struct BuildConfig {
    Mode mode = Mode::lzt_fc;
    Variant variant = Variant::combined;  // phrase index arrangement (lzt_fc)
    uint32_t bucket_size = 0;             // 0 picks the default: 16 (lzt_fc) / 8 (baseline)
    uint32_t length_threshold = 5;        // see LinearizedIndex
};

// Serialized footprint against the raw input (strings + one separator each).
struct SpaceReport {
    uint64_t original_bytes = 0;
    uint64_t fc_bits = 0;
    uint64_t index_bits = 0;

    uint64_t total_bits() const { return fc_bits + index_bits; }
    double percent_of_original() const {
        return original_bytes ? 100.0 * double(total_bits()) / (8.0 * double(original_bytes)) : 0.0;
    }
};

// A static string dictionary: maps each stored string to a stable numeric ID
// (its position in the chosen arrangement) and back.
//
// lzt_fc mode stores the LZ78 phrase set front-coded plus every string's
// parsing in a LinearizedIndex; string IDs are parsing positions. Baseline
// mode front-codes the sorted strings directly; IDs are lexicographic ranks.
class LzDictionary {
public:
    LzDictionary() = default;

    struct BuildResult;  // { dict, permutation, duplicates_removed, stats }; defined below

    // Deduplicates the input itself (first occurrence wins); throws
    // std::invalid_argument on empty strings or an empty set.
    static BuildResult build(const InputSet& input, const BuildConfig& config = {});

    Mode mode() const { return mode_; }
    uint64_t size() const { return mode_ == Mode::lzt_fc ? index_.size() : fc_.size(); }
    uint64_t phrase_count() const { return mode_ == Mode::lzt_fc ? fc_.size() : 0; }

    // The string with the given ID; throws std::out_of_range.
    std::string access(uint64_t id) const;

    // ID of the string, or -1 when absent.
    int64_t lookup(std::string_view s) const;

    SpaceReport space_report() const;

    const FcStore& fc() const { return fc_; }
    const LinearizedIndex& index() const { return index_; }  // lzt_fc only

    // File image with magic/version/mode framing, a section table and a
    // payload checksum; see docs/FORMAT.md. deserialize() throws LoadError.
    std::vector<uint8_t> serialize() const;
    static LzDictionary deserialize(const uint8_t* data, size_t size);
    static LzDictionary deserialize(const std::vector<uint8_t>& bytes) {
        return deserialize(bytes.data(), bytes.size());
    }

    void save_file(const std::string& path) const;        // IoError on failure
    static LzDictionary load_file(const std::string& path);  // IoError / LoadError

private:
    Mode mode_ = Mode::lzt_fc;
    FcStore fc_;             // phrases (lzt_fc) or the strings (baseline)
    LinearizedIndex index_;  // lzt_fc only
    uint64_t original_bytes_ = 0;
};

struct LzDictionary::BuildResult {
    LzDictionary dict;
    std::vector<uint64_t> permutation;  // deduplicated input order -> ID
    uint64_t duplicates_removed = 0;
    BuildStats stats;  // phrase accounting; all zero in baseline mode
};

// ID permutation sidecar (u64 count + u64 per entry, little-endian).
void write_permutation_file(const std::string& path, const std::vector<uint64_t>& perm);
std::vector<uint64_t> read_permutation_file(const std::string& path);

}  // namespace lzdict
