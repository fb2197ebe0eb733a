#include "ccseq/verify.hpp"

#include "ccseq/error.hpp"

#include <string>

namespace ccseq {

// The checks below spell out the defining double summations directly and on
// purpose share nothing with the correlation engine: a bug must not be able
// to hide in both paths at once.

VerifyResult is_complementary(std::span<const BinarySequence> set) {
    if (set.empty()) {
        throw Error("empty set");
    }
    const long long M = static_cast<long long>(set.size());
    const long long L = static_cast<long long>(set.front().size());
    for (const BinarySequence& s : set) {
        if (static_cast<long long>(s.size()) != L) {
            throw Error("set mixes sequence lengths");
        }
    }

    for (long long k = -(L - 1); k <= L - 1; ++k) {
        long long total = 0;
        for (long long j = 0; j < M; ++j) {
            const BinarySequence& s = set[static_cast<std::size_t>(j)];
            for (long long i = 0; i < L; ++i) {
                if (i + k >= 0 && i + k < L) {
                    total += s[static_cast<std::size_t>(i + k)] *
                             s[static_cast<std::size_t>(i)];
                }
            }
        }
        const long long expected = (k == 0) ? M * L : 0;
        if (total != expected) {
            return VerifyResult{false, Witness{k, total}};
        }
    }
    return VerifyResult{true, std::nullopt};
}

VerifyResult is_complementary(const ComplementarySet& set) {
    return is_complementary(std::span<const BinarySequence>(set.sequences));
}

VerifyResult is_complementary(const ExtendedSet& set) {
    return is_complementary(std::span<const BinarySequence>(set.sequences));
}

VerifyResult are_uncorrelated(std::span<const BinarySequence> a,
                              std::span<const BinarySequence> b) {
    if (a.empty() || b.empty()) {
        throw Error("empty set");
    }
    if (a.size() != b.size()) {
        throw MateCountMismatch("uncorrelation check needs equal mate counts, "
                                "got " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    const long long M = static_cast<long long>(a.size());
    const long long la = static_cast<long long>(a.front().size());
    const long long lb = static_cast<long long>(b.front().size());

    for (long long k = -(lb - 1); k <= la - 1; ++k) {
        long long total = 0;
        for (long long j = 0; j < M; ++j) {
            const BinarySequence& sa = a[static_cast<std::size_t>(j)];
            const BinarySequence& sb = b[static_cast<std::size_t>(j)];
            for (long long i = 0; i < lb; ++i) {
                if (i + k >= 0 && i + k < la) {
                    total += sa[static_cast<std::size_t>(i + k)] *
                             sb[static_cast<std::size_t>(i)];
                }
            }
        }
        if (total != 0) {
            return VerifyResult{false, Witness{k, total}};
        }
    }
    return VerifyResult{true, std::nullopt};
}

VerifyResult are_uncorrelated(const ComplementarySet& a,
                              const ComplementarySet& b) {
    return are_uncorrelated(std::span<const BinarySequence>(a.sequences),
                            std::span<const BinarySequence>(b.sequences));
}

VerifyResult are_uncorrelated(const ExtendedSet& a, const ExtendedSet& b) {
    return are_uncorrelated(std::span<const BinarySequence>(a.sequences),
                            std::span<const BinarySequence>(b.sequences));
}

VerifyResult are_uncorrelated(const ExtendedSet& a, const ComplementarySet& b) {
    return are_uncorrelated(std::span<const BinarySequence>(a.sequences),
                            std::span<const BinarySequence>(b.sequences));
}

VerifyResult are_uncorrelated(const ComplementarySet& a, const ExtendedSet& b) {
    return are_uncorrelated(std::span<const BinarySequence>(a.sequences),
                            std::span<const BinarySequence>(b.sequences));
}

bool smoothness_oracle(long long n) {
    if (n < 1) {
        throw Error("smoothness is defined for n >= 1");
    }
    for (const long long p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
        while (n % p == 0) {
            n /= p;
        }
    }
    return n == 1;
}

} // namespace ccseq
