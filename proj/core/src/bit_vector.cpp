#include "lzdict/bit_vector.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#if defined(__BMI2__)
#include <x86intrin.h>
#endif

namespace lzdict {

namespace {

inline unsigned select_in_word(uint64_t w, unsigned j) {
    // Position of the (j+1)-th set bit of w; caller guarantees j < popcount(w).
#if defined(__BMI2__)
    return static_cast<unsigned>(std::countr_zero(_pdep_u64(uint64_t(1) << j, w)));
#else
    for (unsigned base = 0;; base += 8) {
        unsigned c = static_cast<unsigned>(std::popcount(static_cast<uint8_t>(w >> base)));
        if (j < c) {
            uint64_t byte = (w >> base) & 0xFF;
            for (unsigned b = 0;; ++b) {
                if ((byte >> b) & 1) {
                    if (j == 0) return base + b;
                    --j;
                }
            }
        }
        j -= c;
    }
#endif
}

}  // namespace

void BitVector::build() {
    // Clear any stale tail bits so popcounts over whole words are exact.
    if (size_ & 63) words_.back() &= (uint64_t(1) << (size_ & 63)) - 1;

    uint64_t n_blocks = (size_ + kBlockBits - 1) / kBlockBits;
    uint64_t n_supers = (size_ + kSuperBits - 1) / kSuperBits;
    sb_rank_.assign(n_supers + 1, 0);
    blk_rank_.assign(n_blocks, 0);
    sel1_samples_.clear();
    sel0_samples_.clear();

    uint64_t ones = 0;
    uint64_t sb_base = 0;
    for (uint64_t blk = 0; blk < n_blocks; ++blk) {
        if (blk % (kSuperBits / kBlockBits) == 0) {
            sb_rank_[blk / (kSuperBits / kBlockBits)] = ones;
            sb_base = ones;
        }
        blk_rank_[blk] = static_cast<uint16_t>(ones - sb_base);
        uint64_t w_lo = blk * (kBlockBits / 64);
        uint64_t w_hi = std::min<uint64_t>(w_lo + kBlockBits / 64, words_.size());
        for (uint64_t w = w_lo; w < w_hi; ++w) {
            uint64_t word = words_[w];
            uint64_t bit_base = w * 64;
            if (word != 0) {
                uint64_t tmp = word;
                while (tmp) {
                    unsigned b = static_cast<unsigned>(std::countr_zero(tmp));
                    if (ones % kSampleEvery == 0) sel1_samples_.push_back(bit_base + b);
                    ++ones;
                    tmp &= tmp - 1;
                }
            }
            // Clear-bit samples, bounded by the vector length in the last word.
            uint64_t limit = std::min<uint64_t>(64, size_ - bit_base);
            uint64_t zeros_before = bit_base - (ones - static_cast<uint64_t>(std::popcount(word)));
            uint64_t inv = ~word;
            while (inv) {
                unsigned b = static_cast<unsigned>(std::countr_zero(inv));
                if (b >= limit) break;
                if ((zeros_before) % kSampleEvery == 0) sel0_samples_.push_back(bit_base + b);
                ++zeros_before;
                inv &= inv - 1;
            }
        }
    }
    sb_rank_[n_supers] = ones;
    ones_ = ones;
    built_ = true;
}

uint64_t BitVector::rank1_excl(uint64_t pos) const {
    if (pos >= size_) return ones_;
    uint64_t sb = pos / kSuperBits;
    uint64_t blk = pos / kBlockBits;
    uint64_t r = sb_rank_[sb] + blk_rank_[blk];
    uint64_t w = blk * (kBlockBits / 64);
    for (uint64_t end = pos / 64; w < end; ++w) r += std::popcount(words_[w]);
    if (pos & 63) r += std::popcount(words_[pos / 64] & ((uint64_t(1) << (pos & 63)) - 1));
    return r;
}

uint64_t BitVector::rank1(uint64_t i) const {
    assert(built_);
    if (i >= size_) throw std::out_of_range("BitVector::rank1: position " + std::to_string(i));
    return rank1_excl(i + 1);
}

uint64_t BitVector::rank0(uint64_t i) const {
    assert(built_);
    if (i >= size_) throw std::out_of_range("BitVector::rank0: position " + std::to_string(i));
    return (i + 1) - rank1_excl(i + 1);
}

template <bool Ones>
uint64_t BitVector::select_impl(uint64_t j) const {
    // Cumulative count of the target bit value before superblock s.
    auto sb_count = [&](uint64_t s) {
        return Ones ? sb_rank_[s] : s * kSuperBits - sb_rank_[s];
    };
    const auto& samples = Ones ? sel1_samples_ : sel0_samples_;

    uint64_t n_supers = sb_rank_.size() - 1;
    uint64_t lo = samples[j / kSampleEvery] / kSuperBits;
    uint64_t hi = (j / kSampleEvery + 1 < samples.size())
                      ? samples[j / kSampleEvery + 1] / kSuperBits + 1
                      : n_supers;
    // Largest superblock s in [lo, hi) with sb_count(s) <= j contains the target.
    while (lo + 1 < hi) {
        uint64_t mid = (lo + hi) / 2;
        if (sb_count(mid) <= j) lo = mid;
        else hi = mid;
    }
    uint64_t sb = lo;
    uint64_t rem = j - sb_count(sb);

    uint64_t blk0 = sb * (kSuperBits / kBlockBits);
    uint64_t n_blocks = blk_rank_.size();
    uint64_t blk = blk0;
    for (uint64_t b = blk0 + 1; b < std::min(blk0 + kSuperBits / kBlockBits, n_blocks); ++b) {
        uint64_t cnt = Ones ? blk_rank_[b] : (b - blk0) * kBlockBits - blk_rank_[b];
        if (cnt <= rem) blk = b;
        else break;
    }
    rem -= Ones ? blk_rank_[blk] : (blk - blk0) * kBlockBits - blk_rank_[blk];

    for (uint64_t w = blk * (kBlockBits / 64);; ++w) {
        uint64_t word = Ones ? words_[w] : ~words_[w];
        unsigned c = static_cast<unsigned>(std::popcount(word));
        if (rem < c) return w * 64 + select_in_word(word, static_cast<unsigned>(rem));
        rem -= c;
    }
}

uint64_t BitVector::select1(uint64_t j) const {
    assert(built_);
    if (j >= ones_) throw std::out_of_range("BitVector::select1: rank " + std::to_string(j));
    return select_impl<true>(j);
}

uint64_t BitVector::select0(uint64_t j) const {
    assert(built_);
    if (j >= zeros()) throw std::out_of_range("BitVector::select0: rank " + std::to_string(j));
    return select_impl<false>(j);
}

void BitVector::save(ByteWriter& w) const {
    w.put_u64(size_);
    for (uint64_t word : words_) w.put_u64(word);
}

BitVector BitVector::load(ByteReader& r) {
    BitVector bv;
    bv.size_ = r.get_u64();
    uint64_t n_words = (bv.size_ + 63) / 64;
    bv.words_.resize(n_words);
    for (uint64_t i = 0; i < n_words; ++i) bv.words_[i] = r.get_u64();
    if ((bv.size_ & 63) && (bv.words_.back() >> (bv.size_ & 63)) != 0)
        throw LoadError(LoadError::Kind::malformed, "bit vector has non-zero padding bits");
    bv.build();
    return bv;
}

}  // namespace lzdict
