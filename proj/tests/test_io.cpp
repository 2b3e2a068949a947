#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "lzdict/io.hpp"

using namespace lzdict;

TEST_CASE("writer/reader round trip") {
    ByteWriter w;
    w.put_u8(0xAB);
    w.put_u16(0xBEEF);
    w.put_u32(0xDEADBEEF);
    w.put_u64(0x0123456789ABCDEFull);
    w.put_uvarint(0);
    w.put_uvarint(127);
    w.put_uvarint(128);
    w.put_uvarint(300);
    w.put_uvarint(UINT64_MAX);
    w.put_bytes("xyz", 3);

    std::vector<uint8_t> bytes = w.take();
    ByteReader r(bytes);
    CHECK(r.get_u8() == 0xAB);
    CHECK(r.get_u16() == 0xBEEF);
    CHECK(r.get_u32() == 0xDEADBEEF);
    CHECK(r.get_u64() == 0x0123456789ABCDEFull);
    CHECK(r.get_uvarint() == 0);
    CHECK(r.get_uvarint() == 127);
    CHECK(r.get_uvarint() == 128);
    CHECK(r.get_uvarint() == 300);
    CHECK(r.get_uvarint() == UINT64_MAX);
    const uint8_t* p = r.get_bytes(3);
    CHECK(std::string(reinterpret_cast<const char*>(p), 3) == "xyz");
    CHECK(r.remaining() == 0);
}

TEST_CASE("varint encodings are minimal") {
    auto encoded = [](uint64_t v) {
        ByteWriter w;
        w.put_uvarint(v);
        return w.take();
    };
    CHECK(encoded(0) == std::vector<uint8_t>{0x00});
    CHECK(encoded(127) == std::vector<uint8_t>{0x7F});
    CHECK(encoded(128) == std::vector<uint8_t>{0x80, 0x01});
    CHECK(encoded(300) == std::vector<uint8_t>{0xAC, 0x02});
    CHECK(encoded(UINT64_MAX).size() == 10);
}

TEST_CASE("reader reports truncation with its kind") {
    std::vector<uint8_t> bytes = {0x01, 0x02};
    ByteReader r(bytes);
    r.get_u8();
    try {
        r.get_u32();
        FAIL("expected a load error");
    } catch (const LoadError& e) {
        CHECK(e.kind() == LoadError::Kind::truncated);
    }
}

TEST_CASE("non-terminating varint is malformed") {
    std::vector<uint8_t> bytes(10, 0xFF);
    ByteReader r(bytes);
    try {
        r.get_uvarint();
        FAIL("expected a load error");
    } catch (const LoadError& e) {
        CHECK(e.kind() == LoadError::Kind::malformed);
    }
}

TEST_CASE("patch_u64 rewrites in place") {
    ByteWriter w;
    w.put_u64(0);
    w.put_u8(0x77);
    w.patch_u64(0, 0x1122334455667788ull);
    std::vector<uint8_t> bytes = w.take();
    ByteReader r(bytes);
    CHECK(r.get_u64() == 0x1122334455667788ull);
    CHECK(r.get_u8() == 0x77);
}

TEST_CASE("file round trip and missing-file error") {
    std::string path = "io_test_tmp.bin";
    std::vector<uint8_t> payload = {1, 2, 3, 250, 251, 252};
    write_file(path, payload);
    CHECK(read_file(path) == payload);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file(path), IoError);
    CHECK_THROWS_AS(write_file("no_such_dir/x.bin", payload), IoError);
}
