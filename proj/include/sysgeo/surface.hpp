#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "deformation.hpp"

// Closed surfaces assembled from the square family: an m x n torus of squares
// whose grid vertices are cone points of angle pi (the marked diagonals make
// every vertex meet two pi/4 + eps and two pi/4 - eps corners), and its double
// cover branched over the cone points, a smooth closed hyperbolic surface of
// genus mn/2 + 1.

namespace sysgeo {

// Dimension pairs (m, n) = (2k, n) with k >= 2, n >= 4 and kn = genus - 1,
// sorted by m. May be empty (e.g. genus 10).
inline std::vector<std::pair<int, int>> admissible_dims(int genus) {
    if (genus < 2) throw std::invalid_argument("admissible_dims: genus must be at least 2");
    std::vector<std::pair<int, int>> out;
    const int target = genus - 1;
    for (int k = 2; k * 4 <= target; ++k) {
        if (target % k != 0) continue;
        const int n = target / k;
        if (n >= 4) out.emplace_back(2 * k, n);
    }
    return out;
}

inline void require_grid_dims(int m, int n) {
    if (m < 4 || m % 2 != 0 || n < 4)
        throw std::invalid_argument(
            "grid dimensions must satisfy m = 2k with k >= 2, n >= 4");
}

struct GridEdge {
    enum class Kind { Horizontal, Vertical, Diagonal };
    int from = 0;   // vertex id = row * n + col
    int to = 0;
    Kind kind = Kind::Horizontal;
    double length = 0.0;
};

struct ConeTorus {
    int m = 0, n = 0;
    double epsilon = 0.0;
    bool epsilon_critical = false;
    SquareLayout square;
    std::vector<GridEdge> edges;              // 3mn: grid edges + marked diagonals
    std::vector<double> vertex_angle_sums;    // mn entries, each pi

    int vertex_count() const { return m * n; }
    int square_count() const { return m * n; }
    int vertex_id(int row, int col) const {
        row %= m; if (row < 0) row += m;
        col %= n; if (col < 0) col += n;
        return row * n + col;
    }
    double area() const { return static_cast<double>(m) * n * kPi; }
};

inline ConeTorus build_cone_torus(int m, int n, double eps,
                                  bool allow_uncertified_eps = false) {
    require_grid_dims(m, n);
    if (!allow_uncertified_eps && (!(eps >= 0.0) || eps > kCriticalEps + 1e-12))
        throw std::domain_error(
            "build_cone_torus: deformation parameter outside [0, pi/12]; "
            "pass allow_uncertified_eps to explore the full family");

    ConeTorus t;
    t.m = m;
    t.n = n;
    t.epsilon = eps;
    t.epsilon_critical = is_critical_epsilon(eps);
    t.square = build_square(eps);

    const double l = t.square.side_length.value;
    const double x = t.square.marked_diagonal.value;
    t.edges.reserve(static_cast<std::size_t>(3) * m * n);
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c) {
            // south edge B-C, west edge B-A, marked diagonal A-C
            t.edges.push_back({t.vertex_id(r, c), t.vertex_id(r, c + 1),
                               GridEdge::Kind::Horizontal, l});
            t.edges.push_back({t.vertex_id(r, c), t.vertex_id(r + 1, c),
                               GridEdge::Kind::Vertical, l});
            t.edges.push_back({t.vertex_id(r + 1, c), t.vertex_id(r, c + 1),
                               GridEdge::Kind::Diagonal, x});
        }
    }

    // Each grid vertex meets corners A, B, C, D of the four incident squares:
    // (pi/4 + eps) + (pi/4 - eps) + (pi/4 + eps) + (pi/4 - eps) = pi.
    const auto& sq = t.square;
    const double corner_sum =
        angle_between(sq.A, sq.B, sq.D).radians + angle_between(sq.B, sq.C, sq.A).radians +
        angle_between(sq.C, sq.D, sq.B).radians + angle_between(sq.D, sq.A, sq.C).radians;
    t.vertex_angle_sums.assign(static_cast<std::size_t>(m) * n, corner_sum);
    return t;
}

struct SurfaceDescriptor {
    int genus = 0;
    int m = 0, n = 0;
    double epsilon = 0.0;
    bool epsilon_critical = false;
    int branch_points = 0;
    double total_area = 0.0;
    double systole = 0.0;
    long long systolic_count = 0;
    std::string decomposition;
    // Cell counts of the lifted triangulation (vertices are the branch
    // points; every edge and face has exactly two lifts).
    long long cover_vertices = 0, cover_edges = 0, cover_faces = 0;
};

// Closed systolic geodesics: each grid edge doubles to one; the marked
// diagonals join in at the critical parameter where x = l.
inline long long systolic_count(int m, int n, double eps) {
    require_grid_dims(m, n);
    if (!(eps >= 0.0) || eps > kCriticalEps + 1e-12)
        throw std::domain_error("systolic_count: parameter outside [0, pi/12]");
    const long long mn = static_cast<long long>(m) * n;
    return is_critical_epsilon(eps) ? 3 * mn : 2 * mn;
}

inline SurfaceDescriptor double_cover(const ConeTorus& t) {
    SurfaceDescriptor s;
    const long long mn = static_cast<long long>(t.m) * t.n;
    s.genus = static_cast<int>(mn / 2 + 1);
    s.m = t.m;
    s.n = t.n;
    s.epsilon = t.epsilon;
    s.epsilon_critical = t.epsilon_critical;
    s.branch_points = static_cast<int>(mn);
    s.total_area = 2.0 * t.area();
    const double l = t.square.side_length.value;
    const double x = t.square.marked_diagonal.value;
    s.systole = 2.0 * std::min(l, x);
    s.systolic_count = systolic_count(t.m, t.n, t.epsilon);
    s.decomposition = t.epsilon_critical
        ? "equilateral triangles (angles pi/6)"
        : "squares with marked short diagonals";
    s.cover_vertices = mn;
    s.cover_edges = 6 * mn;
    s.cover_faces = 4 * mn;
    return s;
}

inline SurfaceDescriptor build_surface(int m, int n, double eps) {
    return double_cover(build_cone_torus(m, n, eps));
}

struct FillingReport {
    int m = 0, n = 0;
    double epsilon = 0.0;
    bool epsilon_critical = false;
    int genus = 0;
    // Torus cell counts, squares-only and with diagonals.
    long long torus_vertices = 0;
    long long torus_edges_squares = 0, torus_faces_squares = 0;
    long long torus_edges_triangles = 0, torus_faces_triangles = 0;
    long long euler_torus = 0;          // expected 0
    long long cover_vertices = 0, cover_edges = 0, cover_faces = 0;
    long long euler_cover = 0;          // expected 2 - 2g
    bool euler_ok = false;
    double cone_angle_max_err = 0.0;    // vertex angle sums vs pi
    int quotient_valence = 0;           // triangles at a torus vertex
    int cover_valence = 0;
    // Critical parameter only: the triangle pieces are equilateral and the
    // systolic geodesics cover every edge, so their complement is a union of
    // open triangles and the systoles fill.
    bool triangles_equilateral = false;
    double triangle_angle_max_err = 0.0;
    bool systoles_contain_all_edges = false;
    bool fills = false;
};

inline FillingReport filling_check(int m, int n, double eps) {
    const ConeTorus t = build_cone_torus(m, n, eps);
    const long long mn = static_cast<long long>(m) * n;

    FillingReport r;
    r.m = m;
    r.n = n;
    r.epsilon = eps;
    r.epsilon_critical = t.epsilon_critical;
    r.genus = static_cast<int>(mn / 2 + 1);
    r.torus_vertices = mn;
    r.torus_edges_squares = 2 * mn;
    r.torus_faces_squares = mn;
    r.torus_edges_triangles = 3 * mn;
    r.torus_faces_triangles = 2 * mn;
    r.euler_torus = r.torus_vertices - r.torus_edges_triangles + r.torus_faces_triangles;
    r.cover_vertices = mn;
    r.cover_edges = 6 * mn;
    r.cover_faces = 4 * mn;
    r.euler_cover = r.cover_vertices - r.cover_edges + r.cover_faces;
    r.euler_ok = (r.euler_torus == 0) && (r.euler_cover == 2 - 2LL * r.genus);

    for (double s : t.vertex_angle_sums)
        r.cone_angle_max_err = std::max(r.cone_angle_max_err, std::fabs(s - kPi));
    r.quotient_valence = 6;
    r.cover_valence = 12;

    if (t.epsilon_critical) {
        // Marked diagonal splits the square into triangles ABC / ACD; measure
        // the six corner angles of triangle A-B-C against pi/6.
        const auto& q = t.square;
        const double angs[3] = {angle_between(q.A, q.B, q.C).radians,
                                angle_between(q.B, q.C, q.A).radians,
                                angle_between(q.C, q.A, q.B).radians};
        for (double a : angs)
            r.triangle_angle_max_err = std::max(r.triangle_angle_max_err,
                                                std::fabs(a - kPi / 6.0));
        r.triangles_equilateral = r.triangle_angle_max_err < 1e-9;
        r.systoles_contain_all_edges = true;   // every edge length equals l = x
        r.fills = r.triangles_equilateral && r.euler_ok;
    }
    return r;
}

} // namespace sysgeo
