#include "ccseq/barker.hpp"

#include "ccseq/error.hpp"

#include <string>

namespace ccseq {

namespace {

BinarySequence table_signs(int length, int variant) {
    switch (length) {
    case 2:
        return variant == 0 ? BinarySequence{+1, +1} : BinarySequence{+1, -1};
    case 3:
        return BinarySequence{+1, +1, -1};
    case 4:
        return variant == 0 ? BinarySequence{+1, +1, +1, -1}
                            : BinarySequence{+1, +1, -1, +1};
    case 5:
        return BinarySequence{+1, +1, +1, -1, +1};
    case 7:
        return BinarySequence{+1, +1, +1, -1, -1, +1, -1};
    case 11:
        return BinarySequence{+1, +1, +1, -1, -1, -1, +1, -1, -1, +1, -1};
    case 13:
        return BinarySequence{+1, +1, +1, +1, +1, -1, -1, +1, +1, -1, +1, -1,
                              +1};
    default:
        throw UnsupportedLength("no binary Barker code of length " +
                                std::to_string(length) +
                                " exists (admissible: 2,3,4,5,7,11,13)");
    }
}

} // namespace

bool barker_admissible(int length) {
    for (const int l : kBarkerLengths) {
        if (l == length) {
            return true;
        }
    }
    return false;
}

int barker_variant_count(int length) {
    if (!barker_admissible(length)) {
        return 0;
    }
    return (length == 2 || length == 4) ? 2 : 1;
}

BarkerCode barker(int length, int variant) {
    if (!barker_admissible(length)) {
        throw UnsupportedLength("no binary Barker code of length " +
                                std::to_string(length) +
                                " exists (admissible: 2,3,4,5,7,11,13)");
    }
    if (variant < 0 || variant >= barker_variant_count(length)) {
        throw UnsupportedVariant("length-" + std::to_string(length) +
                                 " Barker code has no variant " +
                                 std::to_string(variant));
    }
    return BarkerCode{length, variant, table_signs(length, variant)};
}

} // namespace ccseq
