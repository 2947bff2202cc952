#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "sysgeo/sysgeo.hpp"

// Independent oracles used only by tests. Each one reaches a quantity by a
// different route than the library code it checks: coordinate construction
// instead of closed-form trigonometry, quadrature instead of angle defect,
// step-scanning instead of exact rational counting, and a three-geodesic
// construction instead of the hexagon side relation.

namespace oracle {

using namespace sysgeo;

// ---- right triangles built from coordinates -------------------------------

struct RightTriangle {
    DiskPoint right_vertex, leg_a_end, leg_b_end;
    double leg_a, leg_b;
    double hypotenuse;       // measured, not computed from a relation
    double angle_at_a_end;   // measured angle at the end of leg a
    double angle_at_b_end;
};

// Right angle at the origin, legs along the coordinate axes.
inline RightTriangle build_right_triangle(double leg_a, double leg_b) {
    RightTriangle t;
    t.right_vertex = {0.0, 0.0};
    t.leg_a_end = {std::tanh(leg_a / 2.0), 0.0};
    t.leg_b_end = {0.0, std::tanh(leg_b / 2.0)};
    t.leg_a = leg_a;
    t.leg_b = leg_b;
    t.hypotenuse = distance(t.leg_a_end, t.leg_b_end);
    t.angle_at_a_end = angle_between(t.leg_a_end, t.right_vertex, t.leg_b_end).radians;
    t.angle_at_b_end = angle_between(t.leg_b_end, t.right_vertex, t.leg_a_end).radians;
    return t;
}

// General triangle from two sides and the angle between them, placed at the
// origin; the third side and remaining angles are measured.
struct MeasuredTriangle {
    DiskPoint A, B, C;
    double side_ab, side_ac;
    double angle_a;          // as constructed
    double side_bc;          // measured
    double angle_b, angle_c; // measured
};

inline MeasuredTriangle build_sas_triangle(double side_ab, double side_ac, double angle_a) {
    MeasuredTriangle t;
    t.A = {0.0, 0.0};
    t.B = {std::tanh(side_ab / 2.0), 0.0};
    t.C = {std::tanh(side_ac / 2.0) * std::cos(angle_a),
           std::tanh(side_ac / 2.0) * std::sin(angle_a)};
    t.side_ab = side_ab;
    t.side_ac = side_ac;
    t.angle_a = angle_a;
    t.side_bc = distance(t.B, t.C);
    t.angle_b = angle_between(t.B, t.A, t.C).radians;
    t.angle_c = angle_between(t.C, t.A, t.B).radians;
    return t;
}

// ---- area by geodesic polar quadrature ------------------------------------

// Area of the triangle (origin, B, C) as the integral of (cosh r(theta) - 1)
// over the angle at the origin, r(theta) being the distance to the far side.
// Simpson's rule; the far side is intersected exactly in the hyperboloid.
inline double polar_triangle_area(const DiskPoint& B, const DiskPoint& C,
                                  int panels = 4000) {
    using namespace mink;
    const double theta_b = std::atan2(B.y, B.x);
    double alpha = std::atan2(C.y, C.x) - theta_b;
    while (alpha <= -kPi) alpha += 2.0 * kPi;
    while (alpha > kPi) alpha -= 2.0 * kPi;
    const double sign = alpha >= 0.0 ? 1.0 : -1.0;
    alpha = std::fabs(alpha);

    const Geodesic far = through(lift(B), lift(C));
    auto cosh_r = [&](double theta) {
        const double dir = theta_b + sign * theta;
        const Geodesic ray{{-std::sin(dir), std::cos(dir), 0.0}};
        const auto hit = meet(ray, far);
        if (!hit) throw std::runtime_error("polar_triangle_area: ray misses the far side");
        return hit->t;
    };

    double sum = cosh_r(0.0) - 1.0;
    for (int i = 1; i < panels; ++i)
        sum += (i % 2 == 1 ? 4.0 : 2.0) * (cosh_r(alpha * i / panels) - 1.0);
    sum += cosh_r(alpha) - 1.0;
    return sum * alpha / panels / 3.0;
}

// ---- derivatives by central differences ------------------------------------

inline double central_difference(const std::function<double(double)>& f, double x,
                                 double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// ---- hexagon via three geodesics -------------------------------------------

// A right-angled hexagon with a threefold symmetry: three geodesics, each
// perpendicular to a ray from the origin at distance rho, carry one set of
// alternating sides; the pairwise common perpendiculars carry the other set.
// Solving rho so the on-geodesic side has a given length yields the other
// side length without ever using the side relation.
struct SymmetricHexagon {
    double on_geodesic_side = 0.0;
    double perpendicular_side = 0.0;
};

inline SymmetricHexagon measure_symmetric_hexagon(double rho) {
    using namespace mink;
    std::vector<Geodesic> gs;
    for (int i = 0; i < 3; ++i) {
        const double phi = 2.0 * kPi * i / 3.0;
        const Vec3 n{std::cosh(rho) * std::cos(phi), std::cosh(rho) * std::sin(phi),
                     std::sinh(rho)};
        gs.push_back(Geodesic{n});
    }
    if (!(std::fabs(dot(gs[0].n, gs[1].n)) > 1.0))
        throw std::domain_error("measure_symmetric_hexagon: geodesics not disjoint");
    const CommonPerpendicular p01 = common_perpendicular(gs[0], gs[1]);
    const CommonPerpendicular p02 = common_perpendicular(gs[0], gs[2]);
    SymmetricHexagon h;
    h.perpendicular_side = p01.length;
    h.on_geodesic_side = distance(p01.foot_a, p02.foot_a);
    return h;
}

// Seam length of the right-angled hexagon with boundary side a, via bisection
// on rho. Independent of the closed-form side relation. The three geodesics
// are pairwise disjoint for cosh(rho) > 2/sqrt(3); past that threshold the
// on-geodesic side decreases from infinity as rho grows.
inline double hexagon_seam_by_construction(double a) {
    auto side_at = [](double rho) { return measure_symmetric_hexagon(rho).on_geodesic_side; };
    double lo = 0.56, hi = 8.0;
    if (!(side_at(lo) > a))
        throw std::runtime_error("hexagon oracle: side target too large");
    while (side_at(hi) > a) {
        hi += 4.0;
        if (hi > 60.0) throw std::runtime_error("hexagon oracle: bracket not found");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
        const double mid = 0.5 * (lo + hi);
        (side_at(mid) > a ? lo : hi) = mid;
    }
    return measure_symmetric_hexagon(0.5 * (lo + hi)).perpendicular_side;
}

// ---- parity by step scanning ------------------------------------------------

// Crossing count of a polygonal torus path with the three line families,
// detected by floor changes along a fine sampling. Valid when every crossing
// is simple and crossings are farther apart than the step resolution.
inline long long scan_crossings(const std::vector<std::pair<double, double>>& pts,
                                int steps_per_segment = 200000) {
    long long count = 0;
    for (std::size_t s = 0; s + 1 < pts.size(); ++s) {
        const auto [x0, y0] = pts[s];
        const auto [x1, y1] = pts[s + 1];
        double px = x0, py = y0;
        for (int i = 1; i <= steps_per_segment; ++i) {
            const double t = static_cast<double>(i) / steps_per_segment;
            const double cx = x0 + (x1 - x0) * t;
            const double cy = y0 + (y1 - y0) * t;
            count += std::llabs(static_cast<long long>(std::floor(cx)) -
                                static_cast<long long>(std::floor(px)));
            count += std::llabs(static_cast<long long>(std::floor(cy)) -
                                static_cast<long long>(std::floor(py)));
            count += std::llabs(static_cast<long long>(std::floor(cx + cy)) -
                                static_cast<long long>(std::floor(px + py)));
            px = cx;
            py = cy;
        }
    }
    return count;
}

// ---- deterministic generators ----------------------------------------------

// ---- minimal XML well-formedness check -------------------------------------
//
// Enough structure checking for generated SVG: one root element, every open
// tag closed in order, attributes quoted, no stray '<' inside text. Not a
// validating parser.
inline bool xml_well_formed(const std::string& text, std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why != nullptr) *why = msg;
        return false;
    };
    std::vector<std::string> stack;
    std::size_t i = 0;
    bool seen_root = false;
    const std::size_t n = text.size();
    while (i < n) {
        if (text[i] != '<') {
            if (text[i] == '>') return fail("stray '>' in text");
            ++i;
            continue;
        }
        std::size_t close = text.find('>', i);
        if (close == std::string::npos) return fail("unterminated tag");
        std::string tag = text.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) return fail("empty tag");
        if (tag.front() == '?' || tag.front() == '!') continue;  // declaration/comment
        const bool closing = tag.front() == '/';
        const bool self_closing = tag.back() == '/';
        if (closing) {
            const std::string name = tag.substr(1);
            if (stack.empty()) return fail("close tag with empty stack: " + name);
            if (stack.back() != name)
                return fail("mismatched close tag: " + name + " vs " + stack.back());
            stack.pop_back();
            continue;
        }
        std::string body = self_closing ? tag.substr(0, tag.size() - 1) : tag;
        const std::size_t name_end = body.find_first_of(" \t\n");
        const std::string name = body.substr(0, name_end);
        if (name.empty()) return fail("tag without a name");
        // Attribute values must be double-quoted and paired.
        long quotes = 0;
        for (char c : body) quotes += (c == '"') ? 1 : 0;
        if (quotes % 2 != 0) return fail("unbalanced attribute quotes in <" + name + ">");
        if (stack.empty() && seen_root) return fail("content after root element");
        if (stack.empty()) seen_root = true;
        if (!self_closing) stack.push_back(name);
    }
    if (!stack.empty()) return fail("unclosed tag: " + stack.back());
    if (!seen_root) return fail("no root element");
    return true;
}

// ---- deterministic generators ----------------------------------------------

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen);
    }
    DiskPoint disk_point(double max_euclid_radius = 0.9) {
        const double r = max_euclid_radius * std::sqrt(uniform(0.0, 1.0));
        const double phi = uniform(0.0, 2.0 * kPi);
        return {r * std::cos(phi), r * std::sin(phi)};
    }
    Isometry random_isometry() {
        Isometry g = rotation(uniform(0.0, 2.0 * kPi)) * translation_x(uniform(-2.0, 2.0)) *
                     rotation(uniform(0.0, 2.0 * kPi));
        if (uniform(0.0, 1.0) < 0.5) g = g * disk_conjugation();
        return g;
    }
};

} // namespace oracle
