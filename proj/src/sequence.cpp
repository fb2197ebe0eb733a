#include "ccseq/sequence.hpp"

#include "ccseq/error.hpp"

#include <utility>

namespace ccseq {

BinarySequence::BinarySequence(std::vector<std::int8_t> chips)
    : chips_(std::move(chips)) {
    if (chips_.empty()) {
        throw Error("a sequence needs at least one chip");
    }
    for (const std::int8_t c : chips_) {
        if (c != 1 && c != -1) {
            throw Error("sequence chips must be +1 or -1, got " +
                        std::to_string(static_cast<int>(c)));
        }
    }
}

BinarySequence::BinarySequence(std::initializer_list<int> chips)
    : BinarySequence([&] {
          std::vector<std::int8_t> v;
          v.reserve(chips.size());
          for (const int c : chips) {
              if (c != 1 && c != -1) {
                  throw Error("sequence chips must be +1 or -1, got " +
                              std::to_string(c));
              }
              v.push_back(static_cast<std::int8_t>(c));
          }
          return v;
      }()) {}

BinarySequence BinarySequence::parse(std::string_view text) {
    std::vector<std::int8_t> chips;
    chips.reserve(text.size());
    for (const char c : text) {
        if (c == '+') {
            chips.push_back(1);
        } else if (c == '-') {
            chips.push_back(-1);
        } else {
            throw ParseError(std::string("invalid sequence character '") + c +
                             "' (only '+' and '-' are allowed)");
        }
    }
    if (chips.empty()) {
        throw ParseError("empty sequence line");
    }
    return BinarySequence(std::move(chips));
}

std::string BinarySequence::to_string() const {
    std::string out;
    out.reserve(chips_.size());
    for (const std::int8_t c : chips_) {
        out.push_back(c > 0 ? '+' : '-');
    }
    return out;
}

BinarySequence BinarySequence::negated() const {
    std::vector<std::int8_t> flipped(chips_);
    for (std::int8_t& c : flipped) {
        c = static_cast<std::int8_t>(-c);
    }
    return BinarySequence(std::move(flipped));
}

} // namespace ccseq
