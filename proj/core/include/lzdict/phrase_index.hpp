#pragma once

#include <cstdint>
#include <vector>

#include "lzdict/bit_vector.hpp"
#include "lzdict/io.hpp"
#include "lzdict/packed_ints.hpp"

namespace lzdict {

// How the parsings are arranged and which parts are stored explicitly.
enum class Variant : uint8_t {
    base = 0,           // lex-sorted parsings, start positions in a bit vector
    length_sorted = 1,  // parsings of length <= t grouped by length (positions
                        // become arithmetic), longer ones in a lex-sorted tail
    first_omitted = 2,  // base order, first phrase of every parsing dropped and
                        // recovered from a phrase-bucketed bit vector C
    combined = 3,       // length_sorted + first-phrase omission per range where
                        // it strictly saves bits
};

// All parsings of the string set, flattened into one packed symbol sequence S
// (ceil(lg p) bits per phrase ID) plus the bit vectors needed to address and
// search them. IDs assigned to the strings are their positions in the chosen
// arrangement; build() reports the input-order -> ID permutation.
//
// Parsings compare as phrase-ID sequences, lexicographically, a proper prefix
// sorting before its extensions.
class LinearizedIndex {
public:
    LinearizedIndex() = default;

    struct BuildResult;  // { index, input-order -> ID permutation }; defined below

    // p is the phrase-set size; every symbol must be < p (construction error
    // otherwise, as are duplicate or empty parsings). threshold is the largest
    // parsing length that gets its own equal-length range in the
    // length-sorted arrangements.
    static BuildResult build(const std::vector<std::vector<uint32_t>>& parsings, uint64_t p,
                             Variant variant, uint32_t threshold = 5);

    uint64_t size() const { return m_; }
    uint64_t phrase_count() const { return p_; }
    Variant variant() const { return variant_; }
    uint32_t threshold() const { return t_; }

    // The parsing with the given ID; throws std::out_of_range.
    std::vector<uint32_t> access(uint64_t id) const;

    // ID of the parsing equal to seq, or -1.
    int64_t lookup(const std::vector<uint32_t>& seq) const;

    void save(ByteWriter& w) const;
    static LinearizedIndex load(ByteReader& r);

    // Serialized footprint in bits.
    uint64_t size_bits() const;

    // Raw payload sizes, before serialization framing; useful for size
    // comparisons between variants.
    struct Breakdown {
        uint64_t symbol_bits = 0;        // packed S
        uint64_t start_bits = 0;         // start-marking bit vector(s)
        uint64_t first_phrase_bits = 0;  // C bit vector(s)
        uint64_t range_table_bits = 0;   // per-length offsets and flags
    };
    Breakdown payload_breakdown() const;

    // First-phrase omission for a range of n_strings parsings pays off exactly
    // when the omitted symbols outweigh the p + n_strings bits of its C.
    static bool omission_pays(uint64_t n_strings, uint64_t p);

    // Per-length decision vector for the combined variant; hist[l-1] holds the
    // number of parsings of length l, for l = 1..t.
    static std::vector<bool> choose_combined_ranges(const std::vector<uint64_t>& hist, uint64_t p);

    // Structural introspection (stats reporting, tests).
    const BitVector& starts() const { return b_; }
    const BitVector& first_phrases() const { return c_; }
    bool range_omitted(uint32_t l) const { return l >= 1 && l <= t_ && c_enabled_[l - 1]; }

private:
    // Compare the stored entry occupying S[sym, sym+len) with seq
    // (shorter-is-smaller).
    int compare_entry(uint64_t sym, uint64_t len, const uint32_t* seq, uint64_t seq_len) const;

    std::vector<uint32_t> read_symbols(uint64_t sym, uint64_t len) const;

    // C vector of head range l (combined variant, range must be omitted).
    const BitVector& c_for_range(uint32_t l) const {
        size_t at = 0;
        for (uint32_t i = 1; i < l; ++i) at += c_enabled_[i - 1];
        return c_ranges_[at];
    }

    // Sub-range of [lo, hi) whose first phrase is q, derived from a C vector
    // covering n strings (select arithmetic).
    std::pair<uint64_t, uint64_t> c_block(const BitVector& c, uint64_t q, uint64_t n) const;

    Variant variant_ = Variant::base;
    uint32_t t_ = 5;
    uint64_t m_ = 0;
    uint64_t p_ = 0;
    PackedInts s_;  // stored symbols
    BitVector b_;   // base: start per stored symbol; first_omitted: start per
                    // virtual symbol (dropped firsts included); length_sorted/
                    // combined: start per tail symbol
    BitVector c_;   // first_omitted: the global first-phrase vector
    std::vector<uint64_t> range_str_;  // [l-1] = first string ID of range l; [t] = tail
    std::vector<uint64_t> range_sym_;  // [l-1] = first stored symbol of range l; [t] = tail
    std::vector<bool> c_enabled_;      // combined: per range l = 1..t
    std::vector<BitVector> c_ranges_;  // combined: C_l for enabled ranges, in order
};

struct LinearizedIndex::BuildResult {
    LinearizedIndex index;
    std::vector<uint64_t> permutation;  // input position -> assigned ID
};

}  // namespace lzdict
