#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace ccseq {

/// An ordered run of ±1 chips. The only legal element values are +1 and -1;
/// the constructor rejects anything else, so a constructed sequence can be
/// trusted downstream.
class BinarySequence {
public:
    /// Takes ownership of a chip vector. Throws Error on empty input or any
    /// element that is not exactly +1 or -1.
    explicit BinarySequence(std::vector<std::int8_t> chips);

    BinarySequence(std::initializer_list<int> chips);

    /// Parses the '+'/'-' text form, e.g. "+++-+".
    static BinarySequence parse(std::string_view text);

    std::size_t size() const { return chips_.size(); }

    /// Chip value at position i, always +1 or -1.
    int operator[](std::size_t i) const { return chips_[i]; }

    const std::vector<std::int8_t>& chips() const { return chips_; }

    /// '+'/'-' text form.
    std::string to_string() const;

    BinarySequence negated() const;

    bool operator==(const BinarySequence&) const = default;

private:
    std::vector<std::int8_t> chips_;
};

} // namespace ccseq
