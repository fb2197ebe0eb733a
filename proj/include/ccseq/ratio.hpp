#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace ccseq {

/// Exact rational number. All sidelobe metrics are reported as exact
/// fractions; floating point only appears in display helpers.
using Ratio = boost::rational<std::int64_t>;

/// "1/2", "-3/8"; whole numbers render without the denominator ("0", "2").
std::string format_ratio(const Ratio& r);

double ratio_to_double(const Ratio& r);

/// Decimal rendering with no trailing zeros ("0.5", "37.5", "25").
std::string format_ratio_decimal(const Ratio& r);

} // namespace ccseq
