#include <doctest.h>

#include <stdexcept>

#include "lzdict/input_set.hpp"
#include "lzdict/io.hpp"

using namespace lzdict;

TEST_CASE("sanitize dedupes keeping first occurrence") {
    SanitizedInput si = sanitize_input({"b", "a", "b", "c", "a"});
    CHECK(si.duplicates_removed == 2);
    CHECK(si.set.strings == std::vector<std::string>{"b", "a", "c"});
    CHECK(si.set.size() == 3);
    CHECK(si.set.total_bytes() == 3);
    CHECK(si.set.original_bytes() == 6);
}

TEST_CASE("sanitize rejects empty strings") {
    CHECK_THROWS_AS(sanitize_input({"a", ""}), std::invalid_argument);
}

TEST_CASE("lines decoding") {
    auto bytes = [](const char* s) {
        return std::vector<uint8_t>(s, s + std::string(s).size());
    };
    CHECK(decode_strings(bytes("a\nbb\n"), InputFormat::lines) ==
          std::vector<std::string>{"a", "bb"});
    CHECK(decode_strings(bytes("a\nbb"), InputFormat::lines) ==
          std::vector<std::string>{"a", "bb"});
    CHECK(decode_strings(bytes("a\n\nb"), InputFormat::lines) ==
          std::vector<std::string>{"a", "", "b"});
    CHECK(decode_strings({}, InputFormat::lines).empty());
}

TEST_CASE("lines encoding rejects embedded newlines") {
    CHECK_THROWS_AS(encode_strings({"a\nb"}, InputFormat::lines), std::invalid_argument);
    try {
        encode_strings({"a\nb"}, InputFormat::lines);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("len-prefixed") != std::string::npos);
    }
}

TEST_CASE("len-prefixed codec handles arbitrary bytes") {
    std::vector<std::string> strings = {"plain", std::string("\x00\xff\n", 3), ""};
    std::vector<uint8_t> enc = encode_strings(strings, InputFormat::len_prefixed);
    CHECK(decode_strings(enc, InputFormat::len_prefixed) == strings);

    enc.resize(enc.size() - 2);
    try {
        decode_strings(enc, InputFormat::len_prefixed);
        FAIL("expected a load error");
    } catch (const LoadError& e) {
        CHECK(e.kind() == LoadError::Kind::truncated);
    }
}

TEST_CASE("format round trip through a file") {
    std::vector<std::string> strings = {"alpha", "beta", "gamma"};
    for (InputFormat f : {InputFormat::lines, InputFormat::len_prefixed}) {
        std::string path = "input_set_tmp.bin";
        write_strings_file(path, strings, f);
        CHECK(read_strings_file(path, f) == strings);
        std::remove(path.c_str());
    }
}
