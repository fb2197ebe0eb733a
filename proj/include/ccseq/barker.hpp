#pragma once

#include "ccseq/sequence.hpp"

#include <array>

namespace ccseq {

/// One of the nine known binary Barker codes. Lengths 2 and 4 each exist in
/// two variants; all other lengths have a single variant (index 0).
struct BarkerCode {
    int length = 0;
    int variant = 0;
    BinarySequence signs;
};

inline constexpr std::array<int, 7> kBarkerLengths = {2, 3, 4, 5, 7, 11, 13};

bool barker_admissible(int length);

/// 2 for lengths 2 and 4, 1 for the other admissible lengths.
int barker_variant_count(int length);

/// Table lookup. Throws UnsupportedLength for lengths without a binary Barker
/// code (none exist above 13), UnsupportedVariant for a bad variant index.
BarkerCode barker(int length, int variant = 0);

} // namespace ccseq
