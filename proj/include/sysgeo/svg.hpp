#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "certify.hpp"
#include "hexagon.hpp"
#include "parity.hpp"

// SVG 1.1 renderings: the flat m x n torus with its marked diagonals and an
// optional straight-line curve class, the disk development of square
// galleries, and a right-angled hexagon. Geodesics in the disk are drawn as
// short polylines sampled along exact geodesic interpolation.

namespace sysgeo {

namespace svgdetail {

inline std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

struct Canvas {
    std::string body;
    double width = 0.0, height = 0.0;

    void line(double x1, double y1, double x2, double y2, const std::string& style) {
        body += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                "\" y2=\"" + num(y2) + "\" " + style + "/>\n";
    }
    void circle(double cx, double cy, double r, const std::string& style) {
        body += "  <circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) +
                "\" " + style + "/>\n";
    }
    void polyline(const std::vector<std::pair<double, double>>& pts,
                  const std::string& style) {
        body += "  <polyline points=\"";
        for (const auto& [x, y] : pts) body += num(x) + "," + num(y) + " ";
        body += "\" " + style + "/>\n";
    }
    std::string finish() const {
        return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
               "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
               num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " +
               num(width) + " " + num(height) + "\">\n" + body + "</svg>\n";
    }
};

// Points along the geodesic from p to q (hyperboloid interpolation).
inline std::vector<DiskPoint> geodesic_samples(const DiskPoint& p, const DiskPoint& q,
                                               int segments = 24) {
    using namespace mink;
    const Vec3 P = lift(p), Q = lift(q);
    const double d = distance(P, Q);
    std::vector<DiskPoint> out;
    out.reserve(segments + 1);
    if (d < 1e-12) {
        out.push_back(p);
        out.push_back(q);
        return out;
    }
    const double sh = std::sinh(d);
    for (int i = 0; i <= segments; ++i) {
        const double s = static_cast<double>(i) / segments;
        const Vec3 v = P * (std::sinh((1.0 - s) * d) / sh) + Q * (std::sinh(s * d) / sh);
        out.push_back(drop(normalize_point(v)));
    }
    return out;
}

} // namespace svgdetail

const inline std::string kGridStyle = "stroke=\"#444444\" stroke-width=\"2\" fill=\"none\"";
const inline std::string kDiagStyle =
    "stroke=\"#2266cc\" stroke-width=\"2\" stroke-dasharray=\"8,6\" fill=\"none\"";
const inline std::string kCurveStyle = "stroke=\"#cc3322\" stroke-width=\"3\" fill=\"none\"";
const inline std::string kBoundaryStyle = "stroke=\"#000000\" stroke-width=\"2\" fill=\"none\"";
const inline std::string kSeamStyle =
    "stroke=\"#2266cc\" stroke-width=\"2\" stroke-dasharray=\"6,5\" fill=\"none\"";

// Flat torus [0,n] x [0,m]: unit grid, marked diagonals, and optionally the
// straight representative of a curve class through the generic offset point.
inline std::string render_flat_torus(int m, int n, const CurveClass* curve = nullptr) {
    require_grid_dims(m, n);
    const double cell = 90.0, margin = 45.0;
    svgdetail::Canvas cv;
    cv.width = n * cell + 2 * margin;
    cv.height = m * cell + 2 * margin;
    auto X = [&](double x) { return margin + x * cell; };
    auto Y = [&](double y) { return cv.height - margin - y * cell; };

    for (int c = 0; c <= n; ++c) cv.line(X(c), Y(0), X(c), Y(m), kGridStyle);
    for (int r = 0; r <= m; ++r) cv.line(X(0), Y(r), X(n), Y(r), kGridStyle);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            cv.line(X(c), Y(r + 1), X(c + 1), Y(r), kDiagStyle);

    if (curve) {
        require_primitive(*curve);
        const RatPoint o = default_offsets();
        const double ox = o.x.to_double(), oy = o.y.to_double();
        const double dx = static_cast<double>(curve->p) * n;
        const double dy = static_cast<double>(curve->q) * m;
        std::vector<double> cuts{0.0, 1.0};
        if (curve->p != 0)
            for (int k = -std::abs(curve->p) - 1; k <= std::abs(curve->p) + 1; ++k) {
                const double s = (k * static_cast<double>(n) - ox) / dx;
                if (s > 0.0 && s < 1.0) cuts.push_back(s);
            }
        if (curve->q != 0)
            for (int k = -std::abs(curve->q) - 1; k <= std::abs(curve->q) + 1; ++k) {
                const double s = (k * static_cast<double>(m) - oy) / dy;
                if (s > 0.0 && s < 1.0) cuts.push_back(s);
            }
        std::sort(cuts.begin(), cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double s0 = cuts[i], s1 = cuts[i + 1];
            if (s1 - s0 < 1e-12) continue;
            const double sm = 0.5 * (s0 + s1);
            const double shift_x = std::floor((ox + dx * sm) / n) * n;
            const double shift_y = std::floor((oy + dy * sm) / m) * m;
            cv.line(X(ox + dx * s0 - shift_x), Y(oy + dy * s0 - shift_y),
                    X(ox + dx * s1 - shift_x), Y(oy + dy * s1 - shift_y), kCurveStyle);
        }
    }
    return cv.finish();
}

// Square galleries developed into the disk, marked diagonals dashed.
inline std::string render_development(const ConeTorus& torus, int depth = 2) {
    const double R = 420.0, margin = 30.0;
    svgdetail::Canvas cv;
    cv.width = 2 * (R + margin);
    cv.height = 2 * (R + margin);
    auto X = [&](double x) { return R + margin + x * R; };
    auto Y = [&](double y) { return R + margin - y * R; };
    auto draw = [&](const DiskPoint& p, const DiskPoint& q, const std::string& style) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& s : svgdetail::geodesic_samples(p, q))
            pts.emplace_back(X(s.x), Y(s.y));
        cv.polyline(pts, style);
    };

    cv.circle(X(0), Y(0), R, kBoundaryStyle);
    auto draw_square = [&](const PlacedSquare& ps) {
        for (int i = 0; i < 4; ++i)
            draw(ps.corner[i], ps.corner[(i + 1) % 4], kGridStyle);
        draw(ps.corner[0], ps.corner[2], kDiagStyle);
    };
    draw_square(detail::place_base(torus, 0, 0));
    visit_chains(torus, depth, 0, 0, [&](const DevelopedChain& chain) {
        draw_square(chain.squares.back());
    });
    return cv.finish();
}

inline std::string render_hexagon(const HexagonSpec& hex) {
    const double R = 420.0, margin = 30.0;
    svgdetail::Canvas cv;
    cv.width = 2 * (R + margin);
    cv.height = 2 * (R + margin);
    auto X = [&](double x) { return R + margin + x * R; };
    auto Y = [&](double y) { return R + margin - y * R; };

    cv.circle(X(0), Y(0), R, kBoundaryStyle);
    for (int i = 0; i < 6; ++i) {
        const DiskPoint& p = hex.vertex[i];
        const DiskPoint& q = hex.vertex[(i + 1) % 6];
        std::vector<std::pair<double, double>> pts;
        for (const auto& s : svgdetail::geodesic_samples(p, q))
            pts.emplace_back(X(s.x), Y(s.y));
        cv.polyline(pts, i % 2 == 0 ? kCurveStyle : kSeamStyle);
    }
    return cv.finish();
}

} // namespace sysgeo
