#pragma once

#include <array>
#include <cmath>

#include "disk.hpp"
#include "trig.hpp"

namespace sysgeo {

// A hyperbolic triangle realized in the disk: angle alpha at vertex A, beta
// at B, gamma at C; side a opposite A, etc. Canonical placement puts A at the
// origin and B on the positive x-axis.
struct TriangleSpec {
    Angle alpha, beta, gamma;
    HypLength side_a, side_b, side_c;
    DiskPoint A, B, C;

    double area() const {
        return kPi - (alpha.radians + beta.radians + gamma.radians);
    }
};

inline TriangleSpec realize_triangle(Angle alpha, Angle beta, Angle gamma) {
    TriangleSpec t;
    t.alpha = alpha;
    t.beta = beta;
    t.gamma = gamma;
    t.side_c = side_from_angles(alpha, beta, gamma);
    t.side_a = side_from_angles(beta, gamma, alpha);
    t.side_b = side_from_angles(gamma, alpha, beta);
    t.A = DiskPoint{0.0, 0.0};
    t.B = DiskPoint{std::tanh(t.side_c.value / 2.0), 0.0};
    const double rb = std::tanh(t.side_b.value / 2.0);
    t.C = DiskPoint{rb * std::cos(alpha.radians), rb * std::sin(alpha.radians)};
    return t;
}

inline std::array<Angle, 3> measure_angles(const TriangleSpec& t) {
    return {angle_between(t.A, t.B, t.C),
            angle_between(t.B, t.C, t.A),
            angle_between(t.C, t.A, t.B)};
}

} // namespace sysgeo
