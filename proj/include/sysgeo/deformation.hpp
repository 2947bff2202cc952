#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "square.hpp"

// Behaviour of the square family along the deformation parameter: lengths,
// their derivatives in closed form, the systole 2*min(side, diagonal), and
// the critical parameter where side and marked diagonal cross over.

namespace sysgeo {

struct DeformationSample {
    double epsilon = 0.0;
    double side = 0.0;              // l
    double marked_diagonal = 0.0;   // x
    double width = 0.0;             // y
    double systole = 0.0;           // 2 * min(side, marked_diagonal)
    double dcosh_side = 0.0;        // d/d eps of cosh(side)
    double dcosh_diagonal = 0.0;
    double dside = 0.0;             // d/d eps of side
    double ddiagonal = 0.0;
};

// d/d eps [cot(pi/8 - eps/2) cot(pi/8 + eps/2)]
//   = sqrt(2) sin(eps) / (4 sin^2(pi/8 - eps/2) sin^2(pi/8 + eps/2)).
inline double dcosh_side_formula(double eps) {
    detail::require_square_eps(eps, "dcosh_side_formula");
    const double sm = std::sin(kPi / 8.0 - eps / 2.0);
    const double sp = std::sin(kPi / 8.0 + eps / 2.0);
    return std::sqrt(2.0) * std::sin(eps) / (4.0 * sm * sm * sp * sp);
}

// d/d eps of the marked-diagonal cosh:
//   -sqrt(2) cos(pi/8 - eps/2) / sin^3(pi/8 + eps/2).
inline double dcosh_diagonal_formula(double eps) {
    detail::require_square_eps(eps, "dcosh_diagonal_formula");
    const double sp = std::sin(kPi / 8.0 + eps / 2.0);
    return -std::sqrt(2.0) * std::cos(kPi / 8.0 - eps / 2.0) / (sp * sp * sp);
}

// Sample without restricting to the certified band [0, pi/12]; valid on the
// full family domain [0, pi/4). Certification claims only cover the band.
inline DeformationSample deformation_sample_any(double eps) {
    detail::require_square_eps(eps, "deformation_sample_any");
    DeformationSample s;
    s.epsilon = eps;
    s.side = side_length_formula(eps).value;
    s.marked_diagonal = diagonal_length_formula(eps).value;
    s.width = perpendicular_width_formula(eps).value;
    s.systole = 2.0 * std::min(s.side, s.marked_diagonal);
    s.dcosh_side = dcosh_side_formula(eps);
    s.dcosh_diagonal = dcosh_diagonal_formula(eps);
    s.dside = s.dcosh_side / std::sinh(s.side);
    s.ddiagonal = s.dcosh_diagonal / std::sinh(s.marked_diagonal);
    return s;
}

inline DeformationSample deformation_sample(double eps) {
    if (!(eps >= 0.0) || eps > kCriticalEps + 1e-12)
        throw std::domain_error(
            "deformation_sample: parameter outside [0, pi/12]; "
            "use deformation_sample_any for the uncertified range");
    return deformation_sample_any(eps);
}

inline std::vector<DeformationSample> systole_profile(const std::vector<double>& grid) {
    std::vector<DeformationSample> out;
    out.reserve(grid.size());
    for (double e : grid) out.push_back(deformation_sample(e));
    return out;
}

// The unique parameter where side and marked diagonal agree, found by
// bisection on cosh(side) - cosh(diagonal), which is strictly increasing.
inline double find_critical_epsilon(double tol = 1e-15, int max_iter = 200) {
    double lo = 0.0;
    double hi = kMaxSquareEps - 1e-9;
    auto f = [](double e) { return detail::side_cosh(e) - detail::marked_diagonal_cosh(e); };
    if (!(f(lo) < 0.0) || !(f(hi) > 0.0))
        throw std::runtime_error("find_critical_epsilon: bracket lost");
    for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace sysgeo
