#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lzdict {

enum class InputFormat : uint8_t {
    lines,         // newline-delimited text, one string per line
    len_prefixed,  // u32 little-endian byte length followed by the raw bytes
};

// The string set a dictionary is built from: non-empty, duplicate-free,
// original order preserved.
struct InputSet {
    std::vector<std::string> strings;

    uint64_t size() const { return strings.size(); }

    uint64_t total_bytes() const {
        uint64_t n = 0;
        for (const auto& s : strings) n += s.size();
        return n;
    }

    // Raw footprint the compression ratios are measured against: the string
    // bytes plus one separator byte per string (i.e. the size of the
    // newline-delimited input file).
    uint64_t original_bytes() const { return total_bytes() + size(); }
};

// Drops exact duplicates (keeping the first occurrence) and returns how many
// were removed. Throws std::invalid_argument if any string is empty.
struct SanitizedInput {
    InputSet set;
    uint64_t duplicates_removed = 0;
};
SanitizedInput sanitize_input(std::vector<std::string> strings);

// Decodes a whole input file. Lines mode splits on '\n' (a trailing newline
// does not produce an empty final record). Len-prefixed mode throws
// LoadError(truncated) when a length field overruns the data.
std::vector<std::string> decode_strings(const std::vector<uint8_t>& data, InputFormat format);
std::vector<std::string> read_strings_file(const std::string& path, InputFormat format);

// Encodes strings in the given format. Lines mode cannot represent a string
// that contains the newline byte; such input raises std::invalid_argument
// pointing at len-prefixed mode.
std::vector<uint8_t> encode_strings(const std::vector<std::string>& strings, InputFormat format);
void write_strings_file(const std::string& path, const std::vector<std::string>& strings,
                        InputFormat format);

}  // namespace lzdict
