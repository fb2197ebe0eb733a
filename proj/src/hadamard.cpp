#include "ccseq/hadamard.hpp"

#include "ccseq/error.hpp"

#include <string>

namespace ccseq {

std::vector<std::vector<std::int8_t>> sylvester_hadamard(int order) {
    if (order < 2 || (order & (order - 1)) != 0) {
        throw NotPowerOfTwo("Hadamard order must be 2^m with m >= 1, got " +
                            std::to_string(order));
    }
    std::vector<std::vector<std::int8_t>> h = {{1, 1}, {1, -1}};
    for (int n = 2; n < order; n *= 2) {
        std::vector<std::vector<std::int8_t>> next(2 * n,
                                                   std::vector<std::int8_t>(2 * n));
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                const std::int8_t v = h[r][c];
                next[r][c] = v;
                next[r][c + n] = v;
                next[r + n][c] = v;
                next[r + n][c + n] = static_cast<std::int8_t>(-v);
            }
        }
        h = std::move(next);
    }
    return h;
}

} // namespace ccseq
