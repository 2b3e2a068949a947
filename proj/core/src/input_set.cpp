#include "lzdict/input_set.hpp"

#include <stdexcept>
#include <unordered_set>

#include "lzdict/io.hpp"

namespace lzdict {

SanitizedInput sanitize_input(std::vector<std::string> strings) {
    SanitizedInput out;
    std::unordered_set<std::string_view> seen;
    out.set.strings.reserve(strings.size());
    for (auto& s : strings) {
        if (s.empty()) throw std::invalid_argument("empty strings cannot be stored");
        if (seen.count(s)) {
            ++out.duplicates_removed;
            continue;
        }
        out.set.strings.push_back(std::move(s));
        seen.insert(out.set.strings.back());
    }
    return out;
}

std::vector<std::string> decode_strings(const std::vector<uint8_t>& data, InputFormat format) {
    std::vector<std::string> out;
    if (format == InputFormat::lines) {
        size_t start = 0;
        for (size_t i = 0; i < data.size(); ++i) {
            if (data[i] == '\n') {
                out.emplace_back(reinterpret_cast<const char*>(data.data()) + start, i - start);
                start = i + 1;
            }
        }
        if (start < data.size())
            out.emplace_back(reinterpret_cast<const char*>(data.data()) + start, data.size() - start);
    } else {
        ByteReader r(data);
        while (r.remaining() > 0) {
            uint32_t len = r.get_u32();
            const uint8_t* p = r.get_bytes(len);
            out.emplace_back(reinterpret_cast<const char*>(p), len);
        }
    }
    return out;
}

std::vector<std::string> read_strings_file(const std::string& path, InputFormat format) {
    return decode_strings(read_file(path), format);
}

std::vector<uint8_t> encode_strings(const std::vector<std::string>& strings, InputFormat format) {
    ByteWriter w;
    for (const auto& s : strings) {
        if (format == InputFormat::lines) {
            if (s.find('\n') != std::string::npos)
                throw std::invalid_argument(
                    "string contains a newline byte and cannot be written in lines format; "
                    "use the len-prefixed format instead");
            w.put_bytes(s.data(), s.size());
            w.put_u8('\n');
        } else {
            w.put_u32(static_cast<uint32_t>(s.size()));
            w.put_bytes(s.data(), s.size());
        }
    }
    return w.take();
}

void write_strings_file(const std::string& path, const std::vector<std::string>& strings,
                        InputFormat format) {
    auto data = encode_strings(strings, format);
    write_file(path, data.data(), data.size());
}

}  // namespace lzdict
