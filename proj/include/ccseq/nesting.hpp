#pragma once

#include "ccseq/barker.hpp"
#include "ccseq/config.hpp"
#include "ccseq/sequence.hpp"

#include <vector>

namespace ccseq {

/// Kronecker-style expansion of Barker codes, first factor outermost: each
/// element b of factor 1 is replaced by b times the nesting of the remaining
/// factors. Result length is the product of the factor lengths; a single
/// factor returns its own signs.
BinarySequence nest_signs(const std::vector<BarkerCode>& factors,
                          std::size_t cap = length_cap());

} // namespace ccseq
