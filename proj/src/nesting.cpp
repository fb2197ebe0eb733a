#include "ccseq/nesting.hpp"

#include "ccseq/error.hpp"

#include <string>
#include <utility>

namespace ccseq {

BinarySequence nest_signs(const std::vector<BarkerCode>& factors,
                          std::size_t cap) {
    if (factors.empty()) {
        throw EmptyFactorList("nesting needs at least one Barker factor");
    }

    std::size_t total = 1;
    for (const BarkerCode& f : factors) {
        if (total > cap / f.signs.size()) {
            throw LengthCapExceeded(
                "nested envelope exceeds the cap of " + std::to_string(cap) +
                " chips");
        }
        total *= f.signs.size();
    }

    // Expand innermost-first; the first factor ends up outermost.
    std::vector<std::int8_t> out = {1};
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const auto& signs = it->signs;
        std::vector<std::int8_t> next;
        next.reserve(signs.size() * out.size());
        for (std::size_t i = 0; i < signs.size(); ++i) {
            for (const std::int8_t c : out) {
                next.push_back(static_cast<std::int8_t>(signs[i] * c));
            }
        }
        out = std::move(next);
    }
    return BinarySequence(std::move(out));
}

} // namespace ccseq
