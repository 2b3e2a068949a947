#include "lzdict/io.hpp"

#include <cstdio>

namespace lzdict {

std::vector<uint8_t> read_file(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw IoError("cannot open '" + path + "' for reading");
    std::fseek(f, 0, SEEK_END);
    long size = std::ftell(f);
    if (size < 0) {
        std::fclose(f);
        throw IoError("cannot stat '" + path + "'");
    }
    std::fseek(f, 0, SEEK_SET);
    std::vector<uint8_t> buf(static_cast<size_t>(size));
    size_t got = buf.empty() ? 0 : std::fread(buf.data(), 1, buf.size(), f);
    std::fclose(f);
    if (got != buf.size()) throw IoError("short read from '" + path + "'");
    return buf;
}

void write_file(const std::string& path, const void* data, size_t size) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    size_t put = size == 0 ? 0 : std::fwrite(data, 1, size, f);
    bool ok = (put == size) && (std::fclose(f) == 0);
    if (!ok) throw IoError("short write to '" + path + "'");
}

}  // namespace lzdict
