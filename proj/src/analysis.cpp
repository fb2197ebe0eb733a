#include "ccseq/analysis.hpp"

#include "ccseq/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>

namespace ccseq {

CorrelationProfile::CorrelationProfile(long long min_lag,
                                       std::vector<long long> values,
                                       ProfileKind kind)
    : min_lag_(min_lag), values_(std::move(values)), kind_(kind) {
    if (values_.empty()) {
        throw Error("a correlation profile needs at least one lag");
    }
}

long long CorrelationProfile::at(long long lag) const {
    if (lag < min_lag_ || lag > max_lag()) {
        return 0;
    }
    return values_[static_cast<std::size_t>(lag - min_lag_)];
}

CorrelationProfile xcorr(const BinarySequence& a, const BinarySequence& b) {
    const long long la = static_cast<long long>(a.size());
    const long long lb = static_cast<long long>(b.size());
    std::vector<long long> values(static_cast<std::size_t>(la + lb - 1), 0);
    for (long long k = -(lb - 1); k <= la - 1; ++k) {
        const long long i_lo = std::max(0LL, -k);
        const long long i_hi = std::min(lb - 1, la - 1 - k);
        long long sum = 0;
        for (long long i = i_lo; i <= i_hi; ++i) {
            sum += a[static_cast<std::size_t>(i + k)] *
                   b[static_cast<std::size_t>(i)];
        }
        values[static_cast<std::size_t>(k + lb - 1)] = sum;
    }
    return CorrelationProfile(-(lb - 1), std::move(values),
                              ProfileKind::SinglePair);
}

namespace {

void check_uniform_length(std::span<const BinarySequence> set,
                          const char* which) {
    if (set.empty()) {
        throw Error(std::string(which) + " set has no sequences");
    }
    for (const BinarySequence& s : set) {
        if (s.size() != set.front().size()) {
            throw Error(std::string(which) +
                        " set mixes sequences of different lengths");
        }
    }
}

CorrelationProfile summed_correlation(std::span<const BinarySequence> a,
                                      std::span<const BinarySequence> b,
                                      ProfileKind kind) {
    const long long la = static_cast<long long>(a.front().size());
    const long long lb = static_cast<long long>(b.front().size());
    std::vector<long long> total(static_cast<std::size_t>(la + lb - 1), 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
        const CorrelationProfile term = xcorr(a[j], b[j]);
        for (std::size_t i = 0; i < total.size(); ++i) {
            total[i] += term.values()[i];
        }
    }
    return CorrelationProfile(-(lb - 1), std::move(total), kind);
}

} // namespace

CorrelationProfile sac(std::span<const BinarySequence> set) {
    check_uniform_length(set, "SAC input");
    return summed_correlation(set, set, ProfileKind::Sac);
}

CorrelationProfile sac(const ComplementarySet& set) {
    return sac(std::span<const BinarySequence>(set.sequences));
}

CorrelationProfile sac(const ExtendedSet& set) {
    return sac(std::span<const BinarySequence>(set.sequences));
}

CorrelationProfile scc(std::span<const BinarySequence> a,
                       std::span<const BinarySequence> b) {
    check_uniform_length(a, "SCC first");
    check_uniform_length(b, "SCC second");
    if (a.size() != b.size()) {
        throw MateCountMismatch("SCC needs equal mate counts, got " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    return summed_correlation(a, b, ProfileKind::Scc);
}

CorrelationProfile scc(const ComplementarySet& a, const ComplementarySet& b) {
    return scc(std::span<const BinarySequence>(a.sequences),
               std::span<const BinarySequence>(b.sequences));
}

CorrelationProfile scc(const ExtendedSet& a, const ExtendedSet& b) {
    return scc(std::span<const BinarySequence>(a.sequences),
               std::span<const BinarySequence>(b.sequences));
}

CorrelationProfile scc(const ExtendedSet& a, const ComplementarySet& b) {
    return scc(std::span<const BinarySequence>(a.sequences),
               std::span<const BinarySequence>(b.sequences));
}

CorrelationProfile scc(const ComplementarySet& a, const ExtendedSet& b) {
    return scc(std::span<const BinarySequence>(a.sequences),
               std::span<const BinarySequence>(b.sequences));
}

SidelobeMetrics metrics(const CorrelationProfile& profile) {
    const long long main = profile.mainlobe();
    if (main <= 0) {
        throw ZeroMainlobe("profile has no positive lag-0 mainlobe");
    }
    long long peak = 0;
    long long signed_sum = 0;
    long long abs_sum = 0;
    for (long long lag = profile.min_lag(); lag <= profile.max_lag(); ++lag) {
        if (lag == 0) {
            continue;
        }
        const long long v = profile.at(lag);
        peak = std::max(peak, std::llabs(v));
        signed_sum += v;
        abs_sum += std::llabs(v);
    }
    return SidelobeMetrics{Ratio(peak, main), Ratio(signed_sum, main),
                           Ratio(abs_sum, main)};
}

CorrelationProfile envelope_sac_oracle(const BinarySequence& envelope, int m,
                                       long long base_length) {
    if (m < 1) {
        throw Error("mate count is 2^m and needs m >= 1");
    }
    const int M = 1 << m;
    long long check = base_length;
    while (check > 1 && check % M == 0) {
        check /= M;
    }
    if (check != 1) {
        throw Error("base length " + std::to_string(base_length) +
                    " is not a power of the mate count " + std::to_string(M));
    }

    // Envelope autocorrelation by its own direct loop; this oracle must not
    // ride on the engine it predicts.
    const long long n = static_cast<long long>(envelope.size());
    std::vector<long long> env_acorr(static_cast<std::size_t>(n), 0);
    for (long long q = 0; q < n; ++q) {
        long long sum = 0;
        for (long long i = 0; i + q < n; ++i) {
            sum += envelope[static_cast<std::size_t>(i + q)] *
                   envelope[static_cast<std::size_t>(i)];
        }
        env_acorr[static_cast<std::size_t>(q)] = sum;
    }

    const long long extended = n * base_length;
    std::vector<long long> values(static_cast<std::size_t>(2 * extended - 1),
                                  0);
    const long long scale = static_cast<long long>(M) * base_length;
    for (long long q = -(n - 1); q <= n - 1; ++q) {
        const long long lag = q * base_length;
        values[static_cast<std::size_t>(lag + extended - 1)] =
            scale * env_acorr[static_cast<std::size_t>(std::llabs(q))];
    }
    return CorrelationProfile(-(extended - 1), std::move(values),
                              ProfileKind::Sac);
}

} // namespace ccseq
