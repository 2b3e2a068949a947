#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "lzdict/bit_vector.hpp"
#include "lzdict/io.hpp"
#include "test_support.hpp"

using lzdict::BitVector;
using lzdict::ByteReader;
using lzdict::ByteWriter;

namespace {

BitVector make(const std::vector<bool>& bits) { return BitVector(bits); }

void check_against_oracle(const BitVector& bv, const std::vector<bool>& bits) {
    REQUIRE(bv.size() == bits.size());
    uint64_t ones = 0;
    for (bool b : bits) ones += b;
    REQUIRE(bv.ones() == ones);

    // Sample positions densely for small inputs, sparsely for big ones.
    uint64_t stride = bits.size() > 4096 ? 37 : 1;
    for (uint64_t i = 0; i < bits.size(); i += stride) {
        CAPTURE(i);
        CHECK(bv[i] == bits[i]);
        CHECK(bv.rank1(i) == testsup::naive_rank1(bits, i));
        CHECK(bv.rank0(i) == testsup::naive_rank0(bits, i));
    }
    if (!bits.empty()) {
        CHECK(bv.rank1(bits.size() - 1) == ones);
        CHECK(bv.rank0(bits.size() - 1) == bits.size() - ones);
    }
    for (uint64_t j = 0; j < ones; j += stride) {
        CAPTURE(j);
        CHECK(bv.select1(j) == *testsup::naive_select(bits, j, true));
    }
    uint64_t zeros = bits.size() - ones;
    for (uint64_t j = 0; j < zeros; j += stride) {
        CAPTURE(j);
        CHECK(bv.select0(j) == *testsup::naive_select(bits, j, false));
    }
    CHECK_THROWS_AS(bv.select1(ones), std::out_of_range);
    CHECK_THROWS_AS(bv.select0(zeros), std::out_of_range);
}

}  // namespace

TEST_CASE("bit vector matches the linear-scan oracle") {
    std::mt19937_64 rng(7);
    std::vector<uint64_t> sizes = {0,   1,   2,    63,   64,   65,   255,  256,
                                   257, 511, 512,  513,  2047, 2048, 2049, 100000};
    for (uint64_t n : sizes) {
        for (int density : {0, 1, 50, 99, 100}) {
            CAPTURE(n);
            CAPTURE(density);
            std::vector<bool> bits(n);
            for (uint64_t i = 0; i < n; ++i)
                bits[i] = density == 100 || (density > 0 && testsup::below(rng, 100) < uint64_t(density));
            check_against_oracle(make(bits), bits);
        }
    }
}

TEST_CASE("bit vector push_back matches the vector<bool> constructor") {
    std::mt19937_64 rng(11);
    std::vector<bool> bits(777);
    for (auto&& b : bits) b = testsup::below(rng, 2);
    BitVector incremental;
    for (bool b : bits) incremental.push_back(b);
    incremental.build();
    check_against_oracle(incremental, bits);
}

TEST_CASE("bit vector serialization round trip") {
    std::mt19937_64 rng(13);
    for (uint64_t n : {0ull, 1ull, 64ull, 65ull, 300ull, 4096ull}) {
        std::vector<bool> bits(n);
        for (uint64_t i = 0; i < n; ++i) bits[i] = testsup::below(rng, 2);
        BitVector bv = make(bits);

        ByteWriter w;
        bv.save(w);
        CHECK(w.size() * 8 == bv.serialized_bits());
        std::vector<uint8_t> bytes = w.take();
        ByteReader r(bytes);
        BitVector loaded = BitVector::load(r);
        CHECK(r.remaining() == 0);
        check_against_oracle(loaded, bits);
    }
}

TEST_CASE("bit vector load rejects garbage in the padding") {
    BitVector bv = make({true, false, true});
    ByteWriter w;
    bv.save(w);
    std::vector<uint8_t> bytes = w.take();
    bytes.back() = 0xFF;  // bits beyond size_ must be zero
    ByteReader r(bytes);
    CHECK_THROWS_AS(BitVector::load(r), lzdict::LoadError);
}

TEST_CASE("bit vector load rejects truncation") {
    BitVector bv = make(std::vector<bool>(200, true));
    ByteWriter w;
    bv.save(w);
    std::vector<uint8_t> bytes = w.take();
    bytes.resize(bytes.size() - 1);
    ByteReader r(bytes);
    try {
        BitVector::load(r);
        FAIL("expected a load error");
    } catch (const lzdict::LoadError& e) {
        CHECK(e.kind() == lzdict::LoadError::Kind::truncated);
    }
}
