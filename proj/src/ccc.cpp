#include "ccseq/ccc.hpp"

#include "ccseq/error.hpp"
#include "ccseq/hadamard.hpp"

#include <string>
#include <utility>

namespace ccseq {

long long ConstructionDescriptor::length() const {
    long long len = 1;
    for (int n = 0; n < n_stages; ++n) {
        len *= mate_count();
    }
    return len;
}

CompleteComplementaryCode generate_ccc(int m, int n_stages, std::size_t cap) {
    if (m < 1) {
        throw NotPowerOfTwo("mate count is 2^m and needs m >= 1, got m = " +
                            std::to_string(m));
    }
    if (n_stages < 0) {
        throw Error("stage count must be non-negative");
    }
    const int M = 1 << m;

    long long length = 1;
    for (int n = 0; n < n_stages; ++n) {
        if (length > static_cast<long long>(cap) / M) {
            throw LengthCapExceeded("sequence length " + std::to_string(M) +
                                    "^" + std::to_string(n_stages) +
                                    " exceeds the cap of " +
                                    std::to_string(cap) + " chips");
        }
        length *= M;
    }

    const auto h = sylvester_hadamard(M);

    // Coefficient sequences of G(z) = H * prod_n (D_n(z) * H). Stage n shifts
    // the k-th column by k * M^(n-1), so each output position receives exactly
    // one +/-1 term and the expansion never cancels.
    std::vector<std::vector<std::vector<std::int8_t>>> g(M);
    for (int s = 0; s < M; ++s) {
        g[s].resize(M);
        for (int j = 0; j < M; ++j) {
            g[s][j] = {h[s][j]};
        }
    }

    long long block = 1; // M^(n-1)
    for (int stage = 1; stage <= n_stages; ++stage) {
        std::vector<std::vector<std::vector<std::int8_t>>> next(M);
        for (int s = 0; s < M; ++s) {
            next[s].resize(M);
            for (int j = 0; j < M; ++j) {
                std::vector<std::int8_t> out(block * M);
                for (int k = 0; k < M; ++k) {
                    const std::int8_t sign = h[k][j];
                    const auto& prev = g[s][k];
                    for (long long t = 0; t < block; ++t) {
                        out[k * block + t] =
                            static_cast<std::int8_t>(prev[t] * sign);
                    }
                }
                next[s][j] = std::move(out);
            }
        }
        g = std::move(next);
        block *= M;
    }

    CompleteComplementaryCode code;
    code.descriptor = ConstructionDescriptor{m, n_stages, "natural"};
    code.sets.reserve(M);
    for (int s = 0; s < M; ++s) {
        ComplementarySet set;
        set.descriptor = code.descriptor;
        set.set_index = s;
        set.sequences.reserve(M);
        for (int j = 0; j < M; ++j) {
            set.sequences.emplace_back(std::move(g[s][j]));
        }
        code.sets.push_back(std::move(set));
    }
    return code;
}

CompleteComplementaryCode regenerate(const ConstructionDescriptor& descriptor,
                                     std::size_t cap) {
    if (descriptor.delay_order != "natural") {
        throw Error("unsupported delay order scheme: " + descriptor.delay_order);
    }
    return generate_ccc(descriptor.m, descriptor.n_stages, cap);
}

} // namespace ccseq
