#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

#include "triangle.hpp"

// The one-parameter family of hyperbolic squares: angles pi/4 + eps at two
// opposite corners (A, C) and pi/4 - eps at the other two (B, D), built by
// doubling the (pi/4 + eps, pi/8 - eps/2, pi/8 - eps/2) triangle across the
// side opposite the apex. The A-C diagonal is the marked (short) one. The
// parameter eps ranges over [0, pi/4); the certified deformation band used by
// the surface constructions is [0, pi/12].

namespace sysgeo {

inline constexpr double kMaxSquareEps = kPi / 4.0;
inline constexpr double kCriticalEps = kPi / 12.0;

namespace detail {

inline void require_square_eps(double eps, const char* what) {
    if (!(eps >= 0.0) || !(eps < kMaxSquareEps - 1e-12))
        throw std::domain_error(std::string(what) +
                                ": deformation parameter must lie in [0, pi/4)");
}

inline double side_cosh(double eps) {
    return 1.0 / (std::tan(kPi / 8.0 - eps / 2.0) * std::tan(kPi / 8.0 + eps / 2.0));
}

inline double marked_diagonal_cosh(double eps) {
    const double s = std::sin(kPi / 8.0 + eps / 2.0);
    const double c = std::cos(kPi / 8.0 + eps / 2.0);
    return (std::cos(kPi / 4.0 - eps) + c * c) / (s * s);
}

} // namespace detail

// Side length: cosh l = cot(pi/8 - eps/2) cot(pi/8 + eps/2).
inline HypLength side_length_formula(double eps) {
    detail::require_square_eps(eps, "side_length_formula");
    return HypLength{acosh_stable(detail::side_cosh(eps))};
}

// Marked diagonal (joins the two pi/4 + eps corners):
// cosh x = (cos(pi/4 - eps) + cos^2(pi/8 + eps/2)) / sin^2(pi/8 + eps/2).
inline HypLength diagonal_length_formula(double eps) {
    detail::require_square_eps(eps, "diagonal_length_formula");
    return HypLength{acosh_stable(detail::marked_diagonal_cosh(eps))};
}

// Unmarked diagonal; the two diagonals swap roles under eps -> -eps.
inline HypLength long_diagonal_formula(double eps) {
    detail::require_square_eps(eps, "long_diagonal_formula");
    return HypLength{acosh_stable(detail::marked_diagonal_cosh(-eps))};
}

// Distance between opposite sides: cosh y = sqrt(2) cos(eps) + 1.
inline HypLength perpendicular_width_formula(double eps) {
    detail::require_square_eps(eps, "perpendicular_width_formula");
    return HypLength{acosh1p(std::sqrt(2.0) * std::cos(eps))};
}

struct SquareLayout {
    double epsilon = 0.0;
    // Cyclic counterclockwise order; angle pi/4 + eps at A and C.
    DiskPoint A, B, C, D;
    DiskPoint center;             // common midpoint of the two diagonals
    DiskPoint foot_ab, foot_cd;   // feet of the width segment on sides AB, CD
    HypLength side_length;
    HypLength marked_diagonal;    // A-C
    HypLength long_diagonal;      // B-D
    HypLength width;              // distance between sides AB and CD

    std::array<DiskPoint, 4> corners() const { return {A, B, C, D}; }
};

// Canonical placement: center at the origin, marked diagonal on the x-axis
// with A on the positive side, B in the upper half-disk. Construction is by
// doubling; every measured quantity is cross-checked against its closed form.
inline SquareLayout build_square(double eps, double tol = 1e-9) {
    detail::require_square_eps(eps, "build_square");

    const TriangleSpec tri = realize_triangle(Angle::from_radians(kPi / 4.0 + eps),
                                              Angle::from_radians(kPi / 8.0 - eps / 2.0),
                                              Angle::from_radians(kPi / 8.0 - eps / 2.0));
    const DiskPoint apex2 = reflect_across_geodesic(tri.B, tri.C)(tri.A);
    const DiskPoint o = midpoint(tri.B, tri.C);

    const Isometry place = align_segment(o, tri.A);
    SquareLayout sq;
    sq.epsilon = eps;
    sq.A = place(tri.A);
    sq.B = place(tri.B);
    sq.C = place(apex2);
    sq.D = place(tri.C);
    if (sq.B.y < 0.0) std::swap(sq.B, sq.D);
    sq.center = place(o);

    sq.side_length = HypLength{distance(sq.A, sq.B)};
    sq.marked_diagonal = HypLength{distance(sq.A, sq.C)};
    sq.long_diagonal = HypLength{distance(sq.B, sq.D)};
    sq.foot_ab = foot_of_perpendicular(sq.center, sq.A, sq.B);
    sq.foot_cd = foot_of_perpendicular(sq.center, sq.C, sq.D);
    sq.width = HypLength{distance(sq.foot_ab, sq.foot_cd)};

    const double side_err = std::fabs(sq.side_length.value - side_length_formula(eps).value);
    const double diag_err = std::fabs(sq.marked_diagonal.value - diagonal_length_formula(eps).value);
    const double width_err = std::fabs(sq.width.value - perpendicular_width_formula(eps).value);
    if (side_err > tol || diag_err > tol || width_err > tol)
        throw std::runtime_error("build_square: measured lengths disagree with closed forms");

    return sq;
}

} // namespace sysgeo
