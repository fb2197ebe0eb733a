#include "ccseq/error.hpp"
#include "ccseq/hadamard.hpp"

#include <doctest.h>

#include <vector>

using namespace ccseq;

TEST_CASE("order 2 base case") {
    const auto h = sylvester_hadamard(2);
    REQUIRE(h.size() == 2);
    CHECK(h[0] == std::vector<std::int8_t>{+1, +1});
    CHECK(h[1] == std::vector<std::int8_t>{+1, -1});
}

TEST_CASE("order 4 doubling") {
    const auto h = sylvester_hadamard(4);
    REQUIRE(h.size() == 4);
    CHECK(h[3] == std::vector<std::int8_t>{+1, -1, -1, +1});
}

TEST_CASE("H times H transpose is order times identity") {
    for (const int order : {2, 4, 8, 16}) {
        const auto h = sylvester_hadamard(order);
        REQUIRE(h.size() == static_cast<std::size_t>(order));
        for (int r = 0; r < order; ++r) {
            REQUIRE(h[r].size() == static_cast<std::size_t>(order));
            for (int s = 0; s < order; ++s) {
                long long dot = 0;
                for (int c = 0; c < order; ++c) {
                    dot += h[r][c] * h[s][c];
                }
                CHECK(dot == (r == s ? order : 0));
            }
        }
    }
}

TEST_CASE("non powers of two are rejected") {
    CHECK_THROWS_AS(sylvester_hadamard(3), NotPowerOfTwo);
    CHECK_THROWS_AS(sylvester_hadamard(1), NotPowerOfTwo);
    CHECK_THROWS_AS(sylvester_hadamard(0), NotPowerOfTwo);
    CHECK_THROWS_AS(sylvester_hadamard(12), NotPowerOfTwo);
}
