#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

// Byte-oriented serialization helpers shared by every persistent structure.
// All multi-byte integers are little-endian; variable-length integers use the
// usual 7-bit groups with a continuation bit (LEB128, unsigned).

namespace lzdict {

// Failure while opening/reading/writing a file (maps to CLI exit code 2).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Failure while decoding serialized data (maps to CLI exit code 3).
// The kind distinguishes the documented failure classes (see docs/FORMAT.md).
class LoadError : public std::runtime_error {
public:
    enum class Kind {
        bad_magic,
        bad_version,
        truncated,
        bad_checksum,
        malformed,
    };

    LoadError(Kind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class ByteWriter {
public:
    void put_u8(uint8_t v) { buf_.push_back(v); }

    void put_u16(uint16_t v) {
        put_u8(static_cast<uint8_t>(v));
        put_u8(static_cast<uint8_t>(v >> 8));
    }

    void put_u32(uint32_t v) {
        put_u16(static_cast<uint16_t>(v));
        put_u16(static_cast<uint16_t>(v >> 16));
    }

    void put_u64(uint64_t v) {
        put_u32(static_cast<uint32_t>(v));
        put_u32(static_cast<uint32_t>(v >> 32));
    }

    void put_bytes(const void* p, size_t n) {
        const uint8_t* b = static_cast<const uint8_t*>(p);
        buf_.insert(buf_.end(), b, b + n);
    }

    void put_uvarint(uint64_t v) {
        while (v >= 0x80) {
            put_u8(static_cast<uint8_t>(v) | 0x80);
            v >>= 7;
        }
        put_u8(static_cast<uint8_t>(v));
    }

    // Patches a previously written u64 in place (used for section tables).
    void patch_u64(size_t pos, uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_[pos + i] = static_cast<uint8_t>(v >> (8 * i));
    }

    size_t size() const { return buf_.size(); }
    const uint8_t* data() const { return buf_.data(); }
    std::vector<uint8_t> take() { return std::move(buf_); }

private:
    std::vector<uint8_t> buf_;
};

class ByteReader {
public:
    ByteReader(const uint8_t* data, size_t size) : data_(data), size_(size) {}

    explicit ByteReader(const std::vector<uint8_t>& v) : ByteReader(v.data(), v.size()) {}

    uint8_t get_u8() {
        require(1);
        return data_[pos_++];
    }

    uint16_t get_u16() {
        require(2);
        uint16_t v = static_cast<uint16_t>(data_[pos_]) | static_cast<uint16_t>(data_[pos_ + 1]) << 8;
        pos_ += 2;
        return v;
    }

    uint32_t get_u32() {
        require(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }

    uint64_t get_u64() {
        require(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(data_[pos_ + i]) << (8 * i);
        pos_ += 8;
        return v;
    }

    uint64_t get_uvarint() {
        uint64_t v = 0;
        for (int shift = 0; shift < 64; shift += 7) {
            uint8_t b = get_u8();
            v |= static_cast<uint64_t>(b & 0x7F) << shift;
            if (!(b & 0x80)) return v;
        }
        throw LoadError(LoadError::Kind::malformed, "varint does not terminate");
    }

    const uint8_t* get_bytes(size_t n) {
        require(n);
        const uint8_t* p = data_ + pos_;
        pos_ += n;
        return p;
    }

    void require(size_t n) const {
        if (n > size_ - pos_)
            throw LoadError(LoadError::Kind::truncated,
                            "unexpected end of data at offset " + std::to_string(pos_));
    }

    size_t pos() const { return pos_; }
    size_t remaining() const { return size_ - pos_; }

private:
    const uint8_t* data_;
    size_t size_;
    size_t pos_ = 0;
};

std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const void* data, size_t size);

inline void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
    write_file(path, bytes.data(), bytes.size());
}

}  // namespace lzdict
