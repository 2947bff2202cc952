#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>

#include "core.hpp"

// Poincare unit-disk model. Points are Euclidean coordinates strictly inside
// the unit circle. Distance, angle, and incidence computations go through the
// hyperboloid model (Minkowski signature +,+,-), which avoids the conformal
// factor blowup near the boundary; isometries are SL(2,R) matrices acting on
// the upper half-plane, conjugated to the disk by the Cayley map, plus an
// orientation flag for reflections.

namespace sysgeo {

struct DiskPoint {
    double x = 0.0;
    double y = 0.0;
};

inline double euclid_norm(const DiskPoint& p) { return std::hypot(p.x, p.y); }

inline void require_in_disk(const DiskPoint& p, const char* what) {
    if (!(euclid_norm(p) < 1.0))
        throw std::domain_error(std::string(what) + ": point outside the open unit disk");
}

namespace mink {

struct Vec3 {
    double x = 0.0, y = 0.0, t = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, t + o.t}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, t - o.t}; }
    Vec3 operator*(double s) const { return {x * s, y * s, t * s}; }
};

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y - a.t * b.t; }

// Minkowski cross product: dot(cross(u,v), u) = dot(cross(u,v), v) = 0.
inline Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u.y * v.t - u.t * v.y,
            u.t * v.x - u.x * v.t,
            -(u.x * v.y - u.y * v.x)};
}

// Scale a timelike vector onto the upper hyperboloid sheet (dot = -1, t > 0).
inline Vec3 normalize_point(Vec3 v) {
    double q = -dot(v, v);
    if (!(q > 0.0)) throw std::domain_error("normalize_point: vector is not timelike");
    double s = 1.0 / std::sqrt(q);
    if (v.t < 0.0) s = -s;
    return v * s;
}

// Scale a spacelike vector to unit norm (dot = +1).
inline Vec3 normalize_normal(Vec3 v) {
    double q = dot(v, v);
    if (!(q > 0.0)) throw std::domain_error("normalize_normal: vector is not spacelike");
    return v * (1.0 / std::sqrt(q));
}

inline Vec3 lift(const DiskPoint& p) {
    const double n2 = p.x * p.x + p.y * p.y;
    const double s = 1.0 / (1.0 - n2);
    return {2.0 * p.x * s, 2.0 * p.y * s, (1.0 + n2) * s};
}

inline DiskPoint drop(const Vec3& v) {
    return {v.x / (1.0 + v.t), v.y / (1.0 + v.t)};
}

inline double distance(const Vec3& p, const Vec3& q) {
    return acosh_stable(-dot(p, q));
}

// Oriented geodesic as a unit spacelike normal.
struct Geodesic {
    Vec3 n;
};

inline Geodesic through(const Vec3& p, const Vec3& q) {
    return {normalize_normal(cross(p, q))};
}

// Signed sinh of the distance from a point to a geodesic.
inline double sinh_signed_dist(const Vec3& p, const Geodesic& g) { return dot(p, g.n); }

inline Vec3 foot_on(const Vec3& p, const Geodesic& g) {
    return normalize_point(p - g.n * dot(p, g.n));
}

// Nullopt when the geodesics are disjoint, asymptotic, or (nearly)
// coincident; the crossing point exists iff the cross product is timelike.
inline std::optional<Vec3> meet(const Geodesic& a, const Geodesic& b) {
    const Vec3 x = cross(a.n, b.n);
    const double q = -dot(x, x);
    if (!(q > 1e-24)) return std::nullopt;
    double s = 1.0 / std::sqrt(q);
    if (x.t < 0.0) s = -s;
    return x * s;
}

struct CommonPerpendicular {
    double length = 0.0;
    Vec3 foot_a, foot_b;
};

// For disjoint geodesics (|dot of normals| > 1).
inline CommonPerpendicular common_perpendicular(const Geodesic& a, const Geodesic& b) {
    const double c = dot(a.n, b.n);
    if (!(std::fabs(c) > 1.0))
        throw std::domain_error("common_perpendicular: geodesics are not disjoint");
    Geodesic perp{normalize_normal(cross(a.n, b.n))};
    Vec3 fa = normalize_point(cross(perp.n, a.n));
    Vec3 fb = normalize_point(cross(perp.n, b.n));
    return {acosh_stable(std::fabs(-dot(fa, fb))), fa, fb};
}

// Interior angle at v between the geodesic rays toward p and q.
inline double angle_at(const Vec3& v, const Vec3& p, const Vec3& q) {
    Vec3 tp = p + v * dot(p, v);
    Vec3 tq = q + v * dot(q, v);
    double c = dot(tp, tq) / std::sqrt(dot(tp, tp) * dot(tq, tq));
    if (c > 1.0) c = 1.0;
    if (c < -1.0) c = -1.0;
    return std::acos(c);
}

} // namespace mink

inline double distance(const DiskPoint& p, const DiskPoint& q) {
    const std::complex<double> z(p.x, p.y), w(q.x, q.y);
    const double num = std::abs(z - w);
    const double den = std::abs(1.0 - std::conj(z) * w);
    return 2.0 * std::atanh(num / den);
}

inline Angle angle_between(const DiskPoint& vertex, const DiskPoint& p, const DiskPoint& q) {
    return Angle::from_radians(mink::angle_at(mink::lift(vertex), mink::lift(p), mink::lift(q)));
}

inline DiskPoint midpoint(const DiskPoint& p, const DiskPoint& q) {
    return mink::drop(mink::normalize_point(mink::lift(p) + mink::lift(q)));
}

inline DiskPoint foot_of_perpendicular(const DiskPoint& p,
                                       const DiskPoint& a, const DiskPoint& b) {
    return mink::drop(mink::foot_on(mink::lift(p), mink::through(mink::lift(a), mink::lift(b))));
}

// Orientation-preserving part is an SL(2,R) matrix acting on the upper
// half-plane; `reversing` prepends w -> -conj(w) (disk z -> conj(z)).
struct Isometry {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    bool reversing = false;

    DiskPoint operator()(const DiskPoint& p) const {
        const std::complex<double> i(0.0, 1.0);
        std::complex<double> z(p.x, p.y);
        std::complex<double> w = i * (1.0 + z) / (1.0 - z);
        if (reversing) w = -std::conj(w);
        std::complex<double> w2 = (a * w + b) / (c * w + d);
        std::complex<double> z2 = (w2 - i) / (w2 + i);
        return {z2.real(), z2.imag()};
    }

    double det() const { return a * d - b * c; }

    Isometry normalized() const {
        const double s = 1.0 / std::sqrt(det());
        return {a * s, b * s, c * s, d * s, reversing};
    }
};

// Conjugation of the matrix part by w -> -conj(w).
inline Isometry flip_conjugate(const Isometry& m) {
    return {m.a, -m.b, -m.c, m.d, m.reversing};
}

// (f * g)(p) = f(g(p)).
inline Isometry operator*(const Isometry& f, const Isometry& g) {
    const Isometry gg = f.reversing ? flip_conjugate(g) : g;
    Isometry out{f.a * gg.a + f.b * gg.c,
                 f.a * gg.b + f.b * gg.d,
                 f.c * gg.a + f.d * gg.c,
                 f.c * gg.b + f.d * gg.d,
                 f.reversing != g.reversing};
    return out.normalized();
}

inline Isometry inverse(const Isometry& f) {
    Isometry inv{f.d, -f.b, -f.c, f.a, f.reversing};
    if (f.reversing) inv = flip_conjugate(inv);
    return inv.normalized();
}

inline Isometry identity_isometry() { return {}; }

inline Isometry disk_conjugation() { return {1.0, 0.0, 0.0, 1.0, true}; }

// Rotation by theta about the disk origin (counterclockwise).
inline Isometry rotation(double theta) {
    const double h = theta / 2.0;
    return {std::cos(h), std::sin(h), -std::sin(h), std::cos(h), false};
}

// Translation by hyperbolic distance s along the x-axis diameter.
inline Isometry translation_x(double s) {
    const double h = std::exp(s / 2.0);
    return {h, 0.0, 0.0, 1.0 / h, false};
}

inline Isometry point_to_origin(const DiskPoint& p) {
    require_in_disk(p, "point_to_origin");
    const double r = euclid_norm(p);
    if (r == 0.0) return identity_isometry();
    const double phi = std::atan2(p.y, p.x);
    return rotation(phi) * translation_x(-2.0 * std::atanh(r)) * rotation(-phi);
}

// Maps p to the origin and q onto the positive x-axis.
inline Isometry align_segment(const DiskPoint& p, const DiskPoint& q) {
    const Isometry to0 = point_to_origin(p);
    const DiskPoint q1 = to0(q);
    return rotation(-std::atan2(q1.y, q1.x)) * to0;
}

// Orientation-preserving isometry sending p1 -> q1, p2 -> q2; requires
// d(p1,p2) = d(q1,q2) up to tol.
inline Isometry map_segment(const DiskPoint& p1, const DiskPoint& p2,
                            const DiskPoint& q1, const DiskPoint& q2,
                            double tol = 1e-9) {
    if (std::fabs(distance(p1, p2) - distance(q1, q2)) > tol)
        throw std::invalid_argument("map_segment: segment lengths differ");
    return inverse(align_segment(q1, q2)) * align_segment(p1, p2);
}

inline Isometry reflect_across_geodesic(const DiskPoint& p, const DiskPoint& q) {
    const Isometry g = align_segment(p, q);
    return inverse(g) * disk_conjugation() * g;
}

struct SegmentHit {
    DiskPoint point;
    double t_first = 0.0;  // arc-length fraction along the first segment
    double t_second = 0.0;
};

// Intersection of the closed geodesic segments [a1,a2] and [b1,b2], if any.
inline std::optional<SegmentHit> segment_intersection(const DiskPoint& a1, const DiskPoint& a2,
                                                      const DiskPoint& b1, const DiskPoint& b2,
                                                      double tol = 1e-12) {
    using namespace mink;
    const Vec3 A1 = lift(a1), A2 = lift(a2), B1 = lift(b1), B2 = lift(b2);
    const auto x = meet(through(A1, A2), through(B1, B2));
    if (!x) return std::nullopt;
    const double la = distance(A1, A2), lb = distance(B1, B2);
    const double da1 = distance(A1, *x), da2 = distance(A2, *x);
    const double db1 = distance(B1, *x), db2 = distance(B2, *x);
    if (da1 + da2 > la + tol || db1 + db2 > lb + tol) return std::nullopt;
    return SegmentHit{drop(*x), da1 / la, db1 / lb};
}

} // namespace sysgeo
