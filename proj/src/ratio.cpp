#include "ccseq/ratio.hpp"

#include <sstream>

namespace ccseq {

std::string format_ratio(const Ratio& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) {
        out << '/' << r.denominator();
    }
    return out.str();
}

double ratio_to_double(const Ratio& r) {
    return boost::rational_cast<double>(r);
}

std::string format_ratio_decimal(const Ratio& r) {
    std::ostringstream out;
    out.precision(12);
    out << ratio_to_double(r);
    return out.str();
}

} // namespace ccseq
