#pragma once

#include <cmath>
#include <stdexcept>

#include "core.hpp"

// Closed-form hyperbolic trigonometry on abstract triangles: the two laws of
// cosines and the three right-triangle relations used throughout. All angles
// in radians, all lengths positive reals.

namespace sysgeo {

namespace detail {

inline void require_side(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::domain_error(std::string(what) + ": side length must be positive");
}

inline void require_angle_open(double v, const char* what) {
    if (!(v > 0.0) || !(v < kPi))
        throw std::domain_error(std::string(what) + ": angle must lie in (0, pi)");
}

} // namespace detail

// Side c of a triangle with sides a, b enclosing angle gamma.
inline HypLength law_of_cosines_side(HypLength a, HypLength b, Angle gamma) {
    detail::require_side(a.value, "law_of_cosines_side");
    detail::require_side(b.value, "law_of_cosines_side");
    detail::require_angle_open(gamma.radians, "law_of_cosines_side");
    const double c = std::cosh(a.value) * std::cosh(b.value)
                   - std::sinh(a.value) * std::sinh(b.value) * std::cos(gamma.radians);
    return HypLength{acosh_stable(c)};
}

// Side c opposite gamma in a triangle with angles alpha, beta, gamma.
// Requires alpha + beta + gamma < pi; the angle sum deficit is the area.
inline HypLength side_from_angles(Angle alpha, Angle beta, Angle gamma) {
    detail::require_angle_open(alpha.radians, "side_from_angles");
    detail::require_angle_open(beta.radians, "side_from_angles");
    detail::require_angle_open(gamma.radians, "side_from_angles");
    if (!(alpha.radians + beta.radians + gamma.radians < kPi))
        throw std::domain_error("side_from_angles: angle sum must be below pi");
    const double c = (std::cos(gamma.radians)
                      + std::cos(alpha.radians) * std::cos(beta.radians))
                   / (std::sin(alpha.radians) * std::sin(beta.radians));
    return HypLength{acosh_stable(c)};
}

// Right triangle (right angle at C): hypotenuse from the two legs.
inline HypLength right_hypotenuse(HypLength a, HypLength b) {
    detail::require_side(a.value, "right_hypotenuse");
    detail::require_side(b.value, "right_hypotenuse");
    return HypLength{acosh_stable(std::cosh(a.value) * std::cosh(b.value))};
}

// Leg opposite the acute angle alpha, given the hypotenuse c.
inline HypLength right_opposite(Angle alpha, HypLength c) {
    detail::require_side(c.value, "right_opposite");
    if (!(alpha.radians > 0.0) || !(alpha.radians < kPi / 2.0))
        throw std::domain_error("right_opposite: angle must lie in (0, pi/2)");
    return HypLength{std::asinh(std::sin(alpha.radians) * std::sinh(c.value))};
}

// Leg adjacent to alpha, given the opposite leg b.
// From tan(alpha) = tanh(opposite) / sinh(adjacent).
inline HypLength right_adjacent(Angle alpha, HypLength b) {
    detail::require_side(b.value, "right_adjacent");
    if (!(alpha.radians > 0.0) || !(alpha.radians < kPi / 2.0))
        throw std::domain_error("right_adjacent: angle must lie in (0, pi/2)");
    return HypLength{std::asinh(std::tanh(b.value) / std::tan(alpha.radians))};
}

// Angle gamma of a triangle from its three sides.
inline Angle angle_from_sides(HypLength a, HypLength b, HypLength c) {
    detail::require_side(a.value, "angle_from_sides");
    detail::require_side(b.value, "angle_from_sides");
    detail::require_side(c.value, "angle_from_sides");
    double num = std::cosh(a.value) * std::cosh(b.value) - std::cosh(c.value);
    double den = std::sinh(a.value) * std::sinh(b.value);
    double q = num / den;
    if (q > 1.0 + 1e-12 || q < -1.0 - 1e-12)
        throw std::domain_error("angle_from_sides: sides violate the triangle inequality");
    if (q > 1.0) q = 1.0;
    if (q < -1.0) q = -1.0;
    return Angle::from_radians(std::acos(q));
}

} // namespace sysgeo
