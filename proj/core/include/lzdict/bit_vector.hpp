#pragma once

#include <cstdint>
#include <vector>

#include "lzdict/io.hpp"

namespace lzdict {

// Bit vector with constant-time rank and select.
//
// Conventions (part of the public contract):
//   * rank1(i) / rank0(i) count matching bits in positions [0, i] -- INCLUSIVE
//     of position i. Hence rank1(i) + rank0(i) == i + 1.
//   * select1(j) / select0(j) are 0-based: select1(0) is the position of the
//     first set bit, and rank1(select1(j)) == j + 1.
//   * Out-of-range arguments throw std::out_of_range.
//
// Directory overhead stays under 25% of the raw bits: one 64-bit counter per
// 2048-bit superblock (3.125%), one 16-bit counter per 256-bit block (6.25%),
// and one 64-bit position sample per 512 occurrences of each bit value
// (<= 12.5% combined). Directories are not serialized; load() rebuilds them.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(const std::vector<bool>& bits) {
        reserve(bits.size());
        for (bool b : bits) push_back(b);
        build();
    }

    void reserve(uint64_t n) { words_.reserve((n + 63) / 64); }

    void push_back(bool bit) {
        if ((size_ & 63) == 0) words_.push_back(0);
        if (bit) words_.back() |= uint64_t(1) << (size_ & 63);
        ++size_;
    }

    // Finalizes the directories. Must be called after the last push_back and
    // before any query.
    void build();

    uint64_t size() const { return size_; }
    uint64_t ones() const { return ones_; }
    uint64_t zeros() const { return size_ - ones_; }

    bool operator[](uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    // Number of set bits in [0, i]; requires i < size().
    uint64_t rank1(uint64_t i) const;
    // Number of clear bits in [0, i]; requires i < size().
    uint64_t rank0(uint64_t i) const;
    // Position of the (j+1)-th set bit; requires j < ones().
    uint64_t select1(uint64_t j) const;
    // Position of the (j+1)-th clear bit; requires j < zeros().
    uint64_t select0(uint64_t j) const;

    // Layout: u64 bit length, then ceil(length/64) raw words, little-endian.
    void save(ByteWriter& w) const;
    static BitVector load(ByteReader& r);

    // Serialized footprint in bits (length field + raw words).
    uint64_t serialized_bits() const { return 64 + 64 * words_.size(); }

private:
    uint64_t rank1_excl(uint64_t pos) const;  // set bits in [0, pos)

    template <bool Ones>
    uint64_t select_impl(uint64_t j) const;

    std::vector<uint64_t> words_;
    uint64_t size_ = 0;
    uint64_t ones_ = 0;
    bool built_ = false;

    // sb_rank_[s] = set bits before superblock s; one sentinel entry at the end.
    std::vector<uint64_t> sb_rank_;
    // blk_rank_[b] = set bits between the superblock start and block b.
    std::vector<uint16_t> blk_rank_;
    // Bit position of every 512th set/clear bit, as search hints for select.
    std::vector<uint64_t> sel1_samples_;
    std::vector<uint64_t> sel0_samples_;

    static constexpr uint64_t kSuperBits = 2048;
    static constexpr uint64_t kBlockBits = 256;
    static constexpr uint64_t kSampleEvery = 512;
};

}  // namespace lzdict
