#pragma once

#include "ccseq/ccc.hpp"
#include "ccseq/extend.hpp"
#include "ccseq/ratio.hpp"
#include "ccseq/sequence.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ccseq {

enum class ProfileKind { SinglePair, Sac, Scc };

/// Lag-indexed exact-integer correlation values. For inputs of lengths La
/// and Lb the lag range is [-(Lb-1), +(La-1)], La+Lb-1 values total.
///
/// Project-wide lag convention: C[k] = sum_i a[i+k] * b[i], i.e. positive k
/// slides a forward against b.
class CorrelationProfile {
public:
    CorrelationProfile(long long min_lag, std::vector<long long> values,
                       ProfileKind kind);

    long long min_lag() const { return min_lag_; }
    long long max_lag() const {
        return min_lag_ + static_cast<long long>(values_.size()) - 1;
    }
    std::size_t size() const { return values_.size(); }
    ProfileKind kind() const { return kind_; }
    const std::vector<long long>& values() const { return values_; }

    /// Value at a lag; zero outside the stored range.
    long long at(long long lag) const;

    /// Lag-0 value.
    long long mainlobe() const { return at(0); }

    bool operator==(const CorrelationProfile&) const = default;

private:
    long long min_lag_;
    std::vector<long long> values_;
    ProfileKind kind_;
};

/// Exact sidelobe quality ratios of a SAC profile. Sums run over BOTH
/// negative and positive lags.
struct SidelobeMetrics {
    Ratio smr;               // max |sidelobe| / mainlobe
    Ratio signed_sum_ratio;  // sum of sidelobes / mainlobe
    Ratio abs_sum_ratio;     // sum of |sidelobes| / mainlobe
};

/// Direct aperiodic cross-correlation, C[k] = sum_i a[i+k] * b[i].
CorrelationProfile xcorr(const BinarySequence& a, const BinarySequence& b);

/// FFT-backed correlation, bit-identical to xcorr. Every pre-rounding
/// residue is checked against 0.25; NumericalResidueTooLarge otherwise.
CorrelationProfile fast_xcorr(const BinarySequence& a, const BinarySequence& b);

/// Sum of the per-sequence autocorrelations of a set. For a base
/// complementary set this is M*L at lag 0 and zero elsewhere.
CorrelationProfile sac(std::span<const BinarySequence> set);
CorrelationProfile sac(const ComplementarySet& set);
CorrelationProfile sac(const ExtendedSet& set);

/// Sum of the sequence-wise cross-correlations of two sets with equal mate
/// count (lengths may differ). Identically zero for distinct mates of one
/// family, extended or not. Throws MateCountMismatch.
CorrelationProfile scc(std::span<const BinarySequence> a,
                       std::span<const BinarySequence> b);
CorrelationProfile scc(const ComplementarySet& a, const ComplementarySet& b);
CorrelationProfile scc(const ExtendedSet& a, const ExtendedSet& b);
CorrelationProfile scc(const ExtendedSet& a, const ComplementarySet& b);
CorrelationProfile scc(const ComplementarySet& a, const ExtendedSet& b);

/// Exact sidelobe ratios of a profile. Throws ZeroMainlobe unless the lag-0
/// value is positive.
SidelobeMetrics metrics(const CorrelationProfile& profile);

/// Predicted SAC of an envelope extension without building it: the base
/// impulse M*L replicated as M*L*R_envelope(q) at lags q*L, zero elsewhere.
CorrelationProfile envelope_sac_oracle(const BinarySequence& envelope, int m,
                                       long long base_length);

namespace detail {
/// Rounds a transform output to the nearest integer, enforcing the 0.25
/// residue bound of the fast path.
long long round_checked(double value);
} // namespace detail

} // namespace ccseq
