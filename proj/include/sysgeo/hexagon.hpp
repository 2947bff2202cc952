#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "surface.hpp"

// Right-angled hexagons with alternating side lengths a, t, a, t, a, t and
// the bounded surfaces obtained, at the critical deformation parameter, by
// replacing every equilateral triangle of the cover with such a hexagon:
// the t-sides are glued along the old triangle edges and the a-sides become
// geodesic boundary. Each old vertex (12 triangle corners around it) turns
// into a closed boundary geodesic of length 12a.

namespace sysgeo {

// cosh t = cosh a / (cosh a - 1), evaluated as acosh(1 + 1/(2 sinh^2(a/2)))
// to stay accurate at both ends of the range.
inline HypLength hexagon_seam_formula(double boundary_side) {
    if (!(boundary_side > 0.0) || !std::isfinite(boundary_side))
        throw std::domain_error("hexagon_seam_formula: side must be positive");
    const double sh = std::sinh(boundary_side / 2.0);
    return HypLength{acosh1p(1.0 / (2.0 * sh * sh))};
}

struct HexagonSpec {
    double boundary_side = 0.0;         // a
    double seam_side = 0.0;             // t
    std::array<DiskPoint, 6> vertex;    // sides a, t, a, t, a, t in ccw order
    double identity_residual = 0.0;     // right-angled-hexagon identity, relative
};

// Build by turtle walk: alternate sides with right-angle left turns; the walk
// closing up is itself a check that the seam length satisfies the hexagon
// relation. Canonical placement centers the hexagon at the origin.
inline HexagonSpec solve_hexagon(double boundary_side, double tol = 1e-9) {
    HexagonSpec h;
    h.boundary_side = boundary_side;
    h.seam_side = hexagon_seam_formula(boundary_side).value;

    std::array<DiskPoint, 6> verts;
    Isometry frame = identity_isometry();
    for (int i = 0; i < 6; ++i) {
        verts[i] = frame(DiskPoint{0.0, 0.0});
        const double side = (i % 2 == 0) ? h.boundary_side : h.seam_side;
        frame = frame * translation_x(side) * rotation(kPi / 2.0);
    }
    const DiskPoint closure = frame(DiskPoint{0.0, 0.0});
    if (distance(closure, verts[0]) > tol)
        throw std::runtime_error("solve_hexagon: walk failed to close");

    mink::Vec3 sum{0.0, 0.0, 0.0};
    for (const auto& v : verts) sum = sum + mink::lift(v);
    const Isometry center = point_to_origin(mink::drop(mink::normalize_point(sum)));
    for (int i = 0; i < 6; ++i) h.vertex[i] = center(verts[i]);

    const double ca = std::cosh(boundary_side);
    const double sa = std::sinh(boundary_side);
    const double rhs = ca * ca + ca;
    h.identity_residual = std::fabs(sa * sa * std::cosh(h.seam_side) - rhs) / rhs;
    return h;
}

struct BoundedSurfaceDescriptor {
    int genus = 0;
    int m = 0, n = 0;
    double boundary_side = 0.0;          // a
    double seam_side = 0.0;              // t
    int boundary_count = 0;              // one per branch point: 2g - 2
    int boundary_sides_each = 0;         // triangle corners around a vertex: 12
    double boundary_length_each = 0.0;   // 12 a
    long long hexagon_count = 0;         // one per cover triangle: 4mn
    double total_area = 0.0;             // hexagon area is pi: 4 pi mn = 8 pi (g-1)
    HexagonSpec hexagon;
};

// Replace every triangle of a critical-parameter cover by a right-angled
// hexagon with boundary sides a.
inline BoundedSurfaceDescriptor build_hexagon_surface(const SurfaceDescriptor& base,
                                                      double boundary_side) {
    if (!base.epsilon_critical)
        throw std::domain_error(
            "build_hexagon_surface: base surface must be at the critical parameter "
            "(equilateral triangle decomposition)");

    BoundedSurfaceDescriptor s;
    s.genus = base.genus;
    s.m = base.m;
    s.n = base.n;
    s.boundary_side = boundary_side;
    s.hexagon = solve_hexagon(boundary_side);
    s.seam_side = s.hexagon.seam_side;

    // Triangle corner angle measured from the realized tiling, not assumed.
    const double side = side_length_formula(base.epsilon).value;
    const double corner =
        angle_from_sides(HypLength{side}, HypLength{side}, HypLength{side}).radians;
    // Cone angle pi at a torus vertex over the triangle corner angle.
    const int around = static_cast<int>(std::lround(kPi / corner));
    if (std::fabs(kPi / corner - around) > 1e-9)
        throw std::runtime_error("build_hexagon_surface: tiling valence is not integral");

    s.boundary_count = base.branch_points;
    s.boundary_sides_each = 2 * around;   // branched double cover doubles the link
    s.boundary_length_each = s.boundary_sides_each * boundary_side;
    s.hexagon_count = base.cover_faces;
    s.total_area = static_cast<double>(s.hexagon_count) * kPi;
    return s;
}

struct CuspLimitReport {
    std::vector<double> boundary_side;     // decreasing sample of a
    std::vector<double> seam_side;         // t(a)
    std::vector<double> boundary_length;   // 12 a
    bool seam_increasing = false;          // t grows without bound as a -> 0
    bool boundary_shrinking = false;       // boundary length -> 0
    double area = 0.0;                     // constant along the family
};

inline CuspLimitReport cusp_limit_check(const SurfaceDescriptor& base,
                                        const std::vector<double>& a_values) {
    if (a_values.size() < 2)
        throw std::invalid_argument("cusp_limit_check: need at least two samples");
    for (std::size_t i = 0; i + 1 < a_values.size(); ++i)
        if (!(a_values[i] > a_values[i + 1]))
            throw std::invalid_argument("cusp_limit_check: samples must decrease");

    CuspLimitReport r;
    r.seam_increasing = true;
    r.boundary_shrinking = true;
    for (double a : a_values) {
        const BoundedSurfaceDescriptor s = build_hexagon_surface(base, a);
        r.boundary_side.push_back(a);
        r.seam_side.push_back(s.seam_side);
        r.boundary_length.push_back(s.boundary_length_each);
        r.area = s.total_area;
    }
    for (std::size_t i = 0; i + 1 < r.seam_side.size(); ++i) {
        if (!(r.seam_side[i + 1] > r.seam_side[i])) r.seam_increasing = false;
        if (!(r.boundary_length[i + 1] < r.boundary_length[i])) r.boundary_shrinking = false;
    }
    return r;
}

} // namespace sysgeo
