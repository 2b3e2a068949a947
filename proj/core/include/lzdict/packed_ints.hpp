#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

#include "lzdict/io.hpp"

namespace lzdict {

// Fixed-width bit-packed integer array. Width 0 is legal and stores nothing
// (every element reads back as 0); it occurs when all packed values are 0,
// e.g. phrase symbols of a single-phrase dictionary.
class PackedInts {
public:
    PackedInts() = default;

    PackedInts(uint8_t width, uint64_t n) : width_(width), size_(n) {
        assert(width <= 64);
        words_.assign(word_count(width, n), 0);
    }

    // Minimal width that can hold every value in [0, max_value].
    static uint8_t bits_for(uint64_t max_value) {
        return max_value == 0 ? 0 : static_cast<uint8_t>(64 - std::countl_zero(max_value));
    }

    void set(uint64_t i, uint64_t v) {
        assert(i < size_);
        assert(width_ == 64 || v < (uint64_t(1) << width_));
        if (width_ == 0) return;
        uint64_t bit = i * width_;
        uint64_t w = bit >> 6;
        unsigned off = static_cast<unsigned>(bit & 63);
        uint64_t mask = width_ == 64 ? UINT64_MAX : (uint64_t(1) << width_) - 1;
        words_[w] = (words_[w] & ~(mask << off)) | (v << off);
        if (off + width_ > 64) {
            unsigned done = 64 - off;
            words_[w + 1] = (words_[w + 1] & ~(mask >> done)) | (v >> done);
        }
    }

    uint64_t get(uint64_t i) const {
        assert(i < size_);
        if (width_ == 0) return 0;
        uint64_t bit = i * width_;
        uint64_t w = bit >> 6;
        unsigned off = static_cast<unsigned>(bit & 63);
        uint64_t v = words_[w] >> off;
        if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
        return width_ == 64 ? v : v & ((uint64_t(1) << width_) - 1);
    }

    uint64_t size() const { return size_; }
    uint8_t width() const { return width_; }
    uint64_t bit_count() const { return size_ * width_; }

    void save(ByteWriter& w) const {
        w.put_u8(width_);
        w.put_u64(size_);
        for (uint64_t word : words_) w.put_u64(word);
    }

    static PackedInts load(ByteReader& r) {
        uint8_t width = r.get_u8();
        if (width > 64) throw LoadError(LoadError::Kind::malformed, "packed array width > 64");
        uint64_t n = r.get_u64();
        PackedInts p(width, n);
        for (uint64_t i = 0; i < p.words_.size(); ++i) p.words_[i] = r.get_u64();
        return p;
    }

private:
    static uint64_t word_count(uint8_t width, uint64_t n) {
        return width == 0 ? 0 : (n * width + 63) / 64;
    }

    uint8_t width_ = 0;
    uint64_t size_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace lzdict
