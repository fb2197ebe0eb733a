#pragma once

#include <cstdint>
#include <vector>

namespace ccseq {

/// Sylvester doubling-construction Hadamard matrix of the given order.
/// Order must be 2^m with m >= 1; throws NotPowerOfTwo otherwise.
/// Satisfies H * H^T = order * I.
std::vector<std::vector<std::int8_t>> sylvester_hadamard(int order);

} // namespace ccseq
