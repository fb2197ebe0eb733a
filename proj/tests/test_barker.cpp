#include "ccseq/barker.hpp"
#include "ccseq/error.hpp"

#include <doctest.h>

#include <cstdlib>
#include <vector>

using namespace ccseq;

namespace {

// Local autocorrelation, independent of the analysis module.
long long auto_at(const BinarySequence& s, long long k) {
    long long sum = 0;
    for (long long i = 0; i + k < static_cast<long long>(s.size()); ++i) {
        sum += s[static_cast<std::size_t>(i)] *
               s[static_cast<std::size_t>(i + k)];
    }
    return sum;
}

} // namespace

TEST_CASE("barker table entries") {
    CHECK(barker(13).signs == BinarySequence::parse("+++++--++-+-+"));
    CHECK(barker(2, 0).signs == BinarySequence::parse("++"));
    CHECK(barker(2, 1).signs == BinarySequence::parse("+-"));
    CHECK(barker(3).signs == BinarySequence::parse("++-"));
    CHECK(barker(4, 0).signs == BinarySequence::parse("+++-"));
    CHECK(barker(4, 1).signs == BinarySequence::parse("++-+"));
    CHECK(barker(5).signs == BinarySequence::parse("+++-+"));
    CHECK(barker(7).signs == BinarySequence::parse("+++--+-"));
    CHECK(barker(11).signs == BinarySequence::parse("+++---+--+-"));
}

TEST_CASE("barker rejects absent lengths and variants") {
    CHECK_THROWS_AS(barker(6, 0), UnsupportedLength);
    CHECK_THROWS_AS(barker(14, 0), UnsupportedLength);
    CHECK_THROWS_AS(barker(1, 0), UnsupportedLength);
    CHECK_THROWS_AS(barker(3, 1), UnsupportedVariant);
    CHECK_THROWS_AS(barker(13, 1), UnsupportedVariant);
    CHECK_THROWS_AS(barker(2, -1), UnsupportedVariant);
    CHECK_THROWS_AS(barker(2, 2), UnsupportedVariant);
}

TEST_CASE("variant bookkeeping") {
    CHECK(barker_variant_count(2) == 2);
    CHECK(barker_variant_count(4) == 2);
    CHECK(barker_variant_count(3) == 1);
    CHECK(barker_variant_count(13) == 1);
    CHECK(barker_variant_count(6) == 0);
    CHECK(barker_admissible(5));
    CHECK_FALSE(barker_admissible(8));
}

TEST_CASE("all nine table entries have unit peak sidelobes") {
    for (const int length : kBarkerLengths) {
        for (int variant = 0; variant < barker_variant_count(length);
             ++variant) {
            const BarkerCode code = barker(length, variant);
            CHECK(code.signs.size() == static_cast<std::size_t>(length));
            CHECK(auto_at(code.signs, 0) == length);
            for (long long k = 1; k < length; ++k) {
                CHECK(std::abs(auto_at(code.signs, k)) <= 1);
            }
        }
    }
}
