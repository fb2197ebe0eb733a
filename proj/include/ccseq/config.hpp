#pragma once

#include <cstddef>

namespace ccseq {

inline constexpr const char* kVersion = "ccseq 1.0.0";

/// Environment variable overriding the global length cap (chips per sequence).
inline constexpr const char* kLengthCapEnvVar = "CCSEQ_LENGTH_CAP";

/// Default cap on the chip count of any single sequence. Keeps exact integer
/// correlation values well inside 64-bit headroom.
inline constexpr std::size_t kDefaultLengthCap = std::size_t{1} << 20;

/// Global cap: kDefaultLengthCap unless CCSEQ_LENGTH_CAP is set.
/// Read once on first use.
std::size_t length_cap();

} // namespace ccseq
