#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Intersection parity on the flat model: the torus R^2 / (nZ x mZ) carries
// three curve families descending from the integer verticals, horizontals,
// and slope -1 diagonals (the marked diagonals of the unit cells). Closed
// curves in general position cross the union an even number of times.
// Counting is exact over the rationals; any incidence with a line or a line
// intersection is reported as an error rather than resolved arbitrarily.

namespace sysgeo {

struct Rat {
    long long num = 0;
    long long den = 1;   // > 0, reduced

    Rat() = default;
    Rat(long long n) : num(n) {}
    Rat(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    Rat operator+(const Rat& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rat operator-(const Rat& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rat operator*(const Rat& o) const { return {num * o.num, den * o.den}; }
    Rat operator/(const Rat& o) const {
        if (o.num == 0) throw std::invalid_argument("Rat: division by zero");
        return {num * o.den, den * o.num};
    }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rat& o) const { return num * o.den < o.num * den; }

    bool is_integer() const { return den == 1; }
    long long floor() const {
        return num >= 0 ? num / den : -((-num + den - 1) / den);
    }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct RatPoint {
    Rat x, y;
};

// Piecewise-linear closed curve on the torus, given by vertices in the plane
// plus the winding; the closing segment runs from the last vertex to the
// first translated by (wind_x * n, wind_y * m).
struct TorusPath {
    std::vector<RatPoint> points;
    int wind_x = 0;
    int wind_y = 0;
};

struct CurveClass {
    int p = 0;   // horizontal winding
    int q = 0;   // vertical winding
};

inline void require_primitive(const CurveClass& c) {
    const int g = std::gcd(c.p < 0 ? -c.p : c.p, c.q < 0 ? -c.q : c.q);
    if (g != 1)
        throw std::invalid_argument("curve class must be primitive (coprime windings)");
}

// Generic-position offsets: prime denominators keep every crossing away from
// lattice points and line intersections for all windings in range.
inline RatPoint default_offsets() { return {Rat{97, 251}, Rat{83, 257}}; }

namespace detail {

[[noreturn]] inline void degenerate(const char* what) {
    throw std::invalid_argument(std::string("degenerate position (") + what +
                                "); perturb the offsets");
}

// Crossings of one open segment with the three line families, validating that
// every crossing is simple: not through a lattice point and not through an
// intersection of two families.
inline long long segment_crossings(const RatPoint& s, const RatPoint& e) {
    if (s.x == e.x && s.y == e.y)
        throw std::invalid_argument("path has a repeated vertex");
    for (const RatPoint* pt : {&s, &e}) {
        if (pt->x.is_integer() || pt->y.is_integer() || (pt->x + pt->y).is_integer())
            degenerate("path vertex on a line");
    }

    long long count = 0;
    const Rat dx = e.x - s.x, dy = e.y - s.y;

    auto check_point = [](const Rat& x, const Rat& y) {
        const bool on_v = x.is_integer();
        const bool on_h = y.is_integer();
        const bool on_d = (x + y).is_integer();
        if ((on_v ? 1 : 0) + (on_h ? 1 : 0) + (on_d ? 1 : 0) > 1)
            degenerate("crossing at a line intersection");
    };

    if (!(dx == Rat{0})) {
        const Rat lo = s.x < e.x ? s.x : e.x, hi = s.x < e.x ? e.x : s.x;
        for (long long k = lo.floor() + 1; Rat{k} < hi; ++k) {
            const Rat y_at = s.y + dy * (Rat{k} - s.x) / dx;
            if (y_at.is_integer() || (Rat{k} + y_at).is_integer())
                check_point(Rat{k}, y_at);
            ++count;
        }
    }
    if (!(dy == Rat{0})) {
        const Rat lo = s.y < e.y ? s.y : e.y, hi = s.y < e.y ? e.y : s.y;
        for (long long k = lo.floor() + 1; Rat{k} < hi; ++k) {
            const Rat x_at = s.x + dx * (Rat{k} - s.y) / dy;
            if (x_at.is_integer() || (x_at + Rat{k}).is_integer())
                check_point(x_at, Rat{k});
            ++count;
        }
    }
    const Rat su = s.x + s.y, eu = e.x + e.y;
    const Rat du = eu - su;
    if (!(du == Rat{0})) {
        const Rat lo = su < eu ? su : eu, hi = su < eu ? eu : su;
        for (long long k = lo.floor() + 1; Rat{k} < hi; ++k) {
            const Rat x_at = s.x + dx * (Rat{k} - su) / du;
            if (x_at.is_integer() || (Rat{k} - x_at).is_integer())
                check_point(x_at, Rat{k} - x_at);
            ++count;
        }
    }
    return count;
}

} // namespace detail

inline long long path_crossing_count(const TorusPath& path, int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("path_crossing_count: bad grid");
    if (path.points.size() < 1)
        throw std::invalid_argument("path_crossing_count: empty path");
    long long total = 0;
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
        total += detail::segment_crossings(path.points[i], path.points[i + 1]);
    const RatPoint target{
        path.points.front().x + Rat{static_cast<long long>(path.wind_x) * n},
        path.points.front().y + Rat{static_cast<long long>(path.wind_y) * m}};
    total += detail::segment_crossings(path.points.back(), target);
    return total;
}

// Straight-line representative of a primitive class (p, q): one segment from
// the offset point to its translate by (p*n, q*m).
inline long long straight_line_count(const CurveClass& c, int m, int n,
                                     const RatPoint& offset) {
    require_primitive(c);
    if (m < 1 || n < 1) throw std::invalid_argument("straight_line_count: bad grid");
    TorusPath path;
    path.points = {offset};
    path.wind_x = c.p;
    path.wind_y = c.q;
    return path_crossing_count(path, m, n);
}

inline long long straight_line_count(const CurveClass& c, int m, int n) {
    return straight_line_count(c, m, n, default_offsets());
}

// L-shaped representative for positive windings: east p*n, then north q*m.
inline long long l_shaped_path_count(const CurveClass& c, int m, int n,
                                     const RatPoint& offset) {
    require_primitive(c);
    if (c.p <= 0 || c.q <= 0)
        throw std::invalid_argument(
            "l_shaped_path_count: windings must be positive; "
            "use straight_line_count for other classes");
    TorusPath path;
    path.points = {offset, {offset.x + Rat{static_cast<long long>(c.p) * n}, offset.y}};
    path.wind_x = c.p;
    path.wind_y = c.q;
    return path_crossing_count(path, m, n);
}

inline long long l_shaped_path_count(const CurveClass& c, int m, int n) {
    return l_shaped_path_count(c, m, n, default_offsets());
}

struct ParityEntry {
    int p = 0, q = 0;
    long long count = 0;
    bool even = false;
};

struct ParityReport {
    int m = 0, n = 0;
    int pmax = 0, qmax = 0;
    std::vector<ParityEntry> entries;   // primitive classes, one per +-(p,q) pair
    long long violations = 0;           // odd counts
};

inline ParityReport parity_theorem_sweep(int m, int n, int pmax, int qmax,
                                         const RatPoint& offset) {
    if (pmax < 0 || qmax < 0)
        throw std::invalid_argument("parity_theorem_sweep: negative sweep range");
    ParityReport rep;
    rep.m = m;
    rep.n = n;
    rep.pmax = pmax;
    rep.qmax = qmax;
    for (int p = 0; p <= pmax; ++p) {
        for (int q = (p == 0 ? 1 : -qmax); q <= qmax; ++q) {
            if (p == 0 && q != 1) continue;
            if (q == 0 && p != 1) continue;
            if (p == 0 && q == 0) continue;
            if (std::gcd(p, q < 0 ? -q : q) != 1) continue;
            ParityEntry e;
            e.p = p;
            e.q = q;
            e.count = straight_line_count({p, q}, m, n, offset);
            e.even = (e.count % 2 == 0);
            if (!e.even) ++rep.violations;
            rep.entries.push_back(e);
        }
    }
    return rep;
}

inline ParityReport parity_theorem_sweep(int m, int n, int pmax, int qmax) {
    return parity_theorem_sweep(m, n, pmax, qmax, default_offsets());
}

} // namespace sysgeo
