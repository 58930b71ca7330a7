#include "partprod/precision.hpp"

#include <iomanip>
#include <sstream>

namespace partprod {

std::string_view to_string(Precision p) {
    return p == Precision::Double ? "double" : "extended";
}

std::string_view to_string(Certainty c) {
    switch (c) {
        case Certainty::Holds: return "PASS";
        case Certainty::Fails: return "FAIL";
        case Certainty::Marginal: return "MARGINAL";
    }
    return "?";
}

std::string to_decimal(double x) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
    return os.str();
}

std::string to_decimal(const Extended& x) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<Extended>::max_digits10) << x;
    return os.str();
}

}  // namespace partprod
