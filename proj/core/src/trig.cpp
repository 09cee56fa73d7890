#include "curvedkit/trig.hpp"

#include <cmath>

namespace curvedkit::trig {

bool chord_exists(double r, double c, double l) {
    if (r <= 0) throw DomainError("chord_exists: radius must be positive");
    return std::abs(c - l) <= r;
}

double half_central_angle(double r, double c, double l) {
    if (!chord_exists(r, c, l))
        throw NoIntersectionError("half_central_angle: |c - l| > r, arc is empty");
    double cosw = (std::cosh(r) * std::sinh(c) - std::sinh(l)) / (std::sinh(r) * std::cosh(c));
    if (cosw > 1.0) {
        if (cosw > 1.0 + 1e-12) throw DomainError("half_central_angle: cos omega > 1");
        cosw = 1.0;
    } else if (cosw < -1.0) {
        if (cosw < -1.0 - 1e-12) throw DomainError("half_central_angle: cos omega < -1");
        cosw = -1.0;
    }
    return std::acos(cosw);
}

double law_of_cosines_d(double r, double c, double omega) {
    if (r < 0 || c < 0) throw DomainError("law_of_cosines_d: sides must be non-negative");
    const double rhs =
        std::cosh(r) * std::cosh(c) - std::sinh(r) * std::sinh(c) * std::cos(omega);
    if (rhs < 1.0 - 1e-12) throw DomainError("law_of_cosines_d: inconsistent triangle");
    return std::acosh(std::max(1.0, rhs));
}

}  // namespace curvedkit::trig
