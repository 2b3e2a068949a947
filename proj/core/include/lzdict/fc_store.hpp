#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lzdict/io.hpp"
#include "lzdict/packed_ints.hpp"

namespace lzdict {

// Front-coded store over a strictly sorted string set. Every bucket_size-th
// string is kept verbatim as a bucket header; the others are stored as
// (shared-prefix length, suffix) against their predecessor, both lengths
// varint-coded. Ranks are positions in the sorted order.
//
// longest_prefix() walks buckets located by binary search over the headers.
// One search pass (header binary search plus one bucket scan) resolves the
// query whenever the predecessor of q is itself a prefix of q, and the greedy
// parses produced by this codebase's builder stay within two passes; each
// additional pass is only reached when the remaining candidates are confined
// to a strictly shorter prefix of q, so the loop always terminates and always
// returns exactly what a linear scan over the whole set would.
class FcStore {
public:
    FcStore() = default;

    // Input must be strictly sorted (throws std::invalid_argument otherwise,
    // also on empty strings or bucket_size == 0). An empty vector is allowed.
    static FcStore build(const std::vector<std::string>& sorted, uint32_t bucket_size);

    uint64_t size() const { return n_; }
    uint32_t bucket_size() const { return k_; }

    // Decodes the string with the given rank; throws std::out_of_range.
    std::string access(uint64_t rank) const;

    struct PrefixHit {
        uint64_t rank;
        uint32_t len;
    };

    // Longest stored string that is a prefix of q (nullopt if none). The
    // optional out-parameter reports how many bucket-level search passes ran.
    std::optional<PrefixHit> longest_prefix(std::string_view q, uint32_t* passes = nullptr) const;

    // Rank of the largest stored string <= q (nullopt if q sorts before all).
    std::optional<uint64_t> predecessor(std::string_view q) const;

    // Rank of q if stored, nullopt otherwise.
    std::optional<uint64_t> find(std::string_view q) const;

    void save(ByteWriter& w) const;
    static FcStore load(ByteReader& r);

    // Serialized footprint in bits.
    uint64_t size_bits() const;

private:
    uint64_t bucket_count() const { return header_off_.size() ? header_off_.size() - 1 : 0; }
    std::string_view header(uint64_t b) const;

    // Iterates the strings of one bucket in rank order.
    struct Cursor {
        const FcStore* fc;
        uint64_t bucket;
        uint64_t index;  // rank of the current string
        std::string cur;
        size_t tail_pos;
        uint64_t last_lcp;  // shared-prefix length consumed by the last advance
        bool advance();     // false once the bucket (or the store) is exhausted
    };
    Cursor cursor(uint64_t bucket) const;

    // Bucket of the largest header <= q, or nullopt if q < header(0).
    std::optional<uint64_t> header_bucket(std::string_view q) const;

    // One bucket walk: the longest prefix of tq found, the predecessor of tq,
    // and the exact match, all restricted to this bucket's strings.
    struct Scan {
        std::optional<PrefixHit> best;
        std::optional<uint64_t> pred;
        std::optional<uint64_t> exact;
    };
    Scan scan_bucket(uint64_t b, std::string_view tq) const;

    uint32_t k_ = 0;
    uint64_t n_ = 0;
    PackedInts header_off_;  // bucket -> byte offset into headers_ (plus end sentinel)
    PackedInts tail_off_;    // bucket -> byte offset into tails_ (plus end sentinel)
    std::string headers_;
    std::string tails_;
};

}  // namespace lzdict
