#pragma once

#include "ccseq/ccc.hpp"
#include "ccseq/extend.hpp"
#include "ccseq/sequence.hpp"

#include <optional>
#include <span>

namespace ccseq {

/// First offending lag of a failed property check.
struct Witness {
    long long lag = 0;
    long long value = 0;
};

struct VerifyResult {
    bool ok = false;
    std::optional<Witness> witness;

    explicit operator bool() const { return ok; }
};

// Independent brute-force oracles. These restate the defining double
// summations literally and share no code with the correlation engine.

/// True iff the summed autocorrelations form a single impulse of amplitude
/// (mate count) * (length) at lag 0.
VerifyResult is_complementary(std::span<const BinarySequence> set);
VerifyResult is_complementary(const ComplementarySet& set);
VerifyResult is_complementary(const ExtendedSet& set);

/// True iff the summed cross-correlations vanish at every lag.
/// Throws MateCountMismatch when the sets differ in mate count.
VerifyResult are_uncorrelated(std::span<const BinarySequence> a,
                              std::span<const BinarySequence> b);
VerifyResult are_uncorrelated(const ComplementarySet& a,
                              const ComplementarySet& b);
VerifyResult are_uncorrelated(const ExtendedSet& a, const ExtendedSet& b);
VerifyResult are_uncorrelated(const ExtendedSet& a, const ComplementarySet& b);
VerifyResult are_uncorrelated(const ComplementarySet& a, const ExtendedSet& b);

/// True iff trial division by {2,3,5,7,11,13} reduces n to 1.
bool smoothness_oracle(long long n);

} // namespace ccseq
