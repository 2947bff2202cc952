#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "surface.hpp"

// Numerical certification of the systole claim. Two ingredients, mirroring
// the two kinds of closed geodesics on the branched cover:
//
//  * geodesics through cone points project to concatenations of saddle
//    connections (cone-point-to-cone-point geodesic arcs), so their length is
//    bounded below by twice the shortest saddle connection. That minimum is
//    found by developing square galleries into the disk and measuring
//    corner-to-corner segments that genuinely traverse the gallery;
//
//  * geodesics avoiding cone points must cross the width strips of min(m, n)
//    square rows or columns, giving length >= min(m, n) * width, which is
//    checked against 2 * min(side, diagonal) with an explicit margin.

namespace sysgeo {

inline constexpr int kMaxGalleryDepth = 8;
inline constexpr int kDefaultGalleryDepth = 4;

enum class Move : char { East = 'E', North = 'N', West = 'W', South = 'S' };

struct PlacedSquare {
    int row = 0, col = 0;                 // torus position
    std::array<DiskPoint, 4> corner;      // images of A, B, C, D
    std::array<int, 4> vertex_id;         // torus vertex under each corner
};

struct DevelopedChain {
    std::vector<PlacedSquare> squares;
    std::string moves;                                  // over {E,N,W,S}
    std::vector<std::array<DiskPoint, 2>> shared_edges; // one per move
    int depth() const { return static_cast<int>(moves.size()); }
};

namespace detail {

inline PlacedSquare place_base(const ConeTorus& t, int row, int col) {
    PlacedSquare p;
    p.row = row;
    p.col = col;
    p.corner = t.square.corners();
    p.vertex_id = {t.vertex_id(row + 1, col), t.vertex_id(row, col),
                   t.vertex_id(row, col + 1), t.vertex_id(row + 1, col + 1)};
    return p;
}

// Corner indices: A=0 (NW), B=1 (SW), C=2 (SE), D=3 (NE). Crossing an edge
// of the current square places the neighbour by pinning two of its corners
// onto the shared edge's endpoints.
struct MoveRule {
    int dr, dc;          // torus displacement
    int new_a, new_b;    // new square's corners landing on...
    int cur_a, cur_b;    // ...these corners of the current square
};

inline const MoveRule& move_rule(Move mv) {
    static const MoveRule east{0, 1, 1, 0, 2, 3};    // new B,A -> cur C,D
    static const MoveRule north{1, 0, 1, 2, 0, 3};   // new B,C -> cur A,D
    static const MoveRule west{0, -1, 3, 2, 0, 1};   // new D,C -> cur A,B
    static const MoveRule south{-1, 0, 0, 3, 1, 2};  // new A,D -> cur B,C
    switch (mv) {
        case Move::East: return east;
        case Move::North: return north;
        case Move::West: return west;
        case Move::South: return south;
    }
    throw std::logic_error("move_rule: bad move");
}

inline Move opposite(Move mv) {
    switch (mv) {
        case Move::East: return Move::West;
        case Move::West: return Move::East;
        case Move::North: return Move::South;
        case Move::South: return Move::North;
    }
    throw std::logic_error("opposite: bad move");
}

inline PlacedSquare develop_step(const ConeTorus& t, const PlacedSquare& cur, Move mv,
                                 std::array<DiskPoint, 2>& shared_edge) {
    const MoveRule& rule = move_rule(mv);
    const auto canon = t.square.corners();
    const Isometry frame = map_segment(canon[rule.new_a], canon[rule.new_b],
                                       cur.corner[rule.cur_a], cur.corner[rule.cur_b]);
    PlacedSquare next;
    next.row = cur.row + rule.dr;
    next.col = cur.col + rule.dc;
    for (int i = 0; i < 4; ++i) next.corner[i] = frame(canon[i]);
    next.vertex_id = {t.vertex_id(next.row + 1, next.col),
                      t.vertex_id(next.row, next.col),
                      t.vertex_id(next.row, next.col + 1),
                      t.vertex_id(next.row + 1, next.col + 1)};
    shared_edge = {cur.corner[rule.cur_a], cur.corner[rule.cur_b]};
    return next;
}

} // namespace detail

// Visit every gallery of 1..depth squares glued edge-to-edge without
// immediate backtracking, developed isometrically from the base square.
inline void visit_chains(const ConeTorus& t, int depth, int base_row, int base_col,
                         const std::function<void(const DevelopedChain&)>& visit) {
    if (depth < 1 || depth > kMaxGalleryDepth)
        throw std::invalid_argument("visit_chains: depth must lie in [1, 8]");
    DevelopedChain chain;
    chain.squares.push_back(detail::place_base(t, base_row, base_col));

    static constexpr std::array<Move, 4> kMoves{Move::East, Move::North, Move::West,
                                                Move::South};
    std::function<void()> recurse = [&]() {
        const int d = chain.depth();
        if (d >= 1) visit(chain);
        if (d == depth) return;
        for (Move mv : kMoves) {
            if (d > 0 && mv == detail::opposite(static_cast<Move>(chain.moves.back())))
                continue;
            std::array<DiskPoint, 2> edge;
            PlacedSquare next = detail::develop_step(t, chain.squares.back(), mv, edge);
            chain.squares.push_back(next);
            chain.moves.push_back(static_cast<char>(mv));
            chain.shared_edges.push_back(edge);
            recurse();
            chain.squares.pop_back();
            chain.moves.pop_back();
            chain.shared_edges.pop_back();
        }
    };
    recurse();
}

inline std::vector<DevelopedChain> enumerate_chains(const ConeTorus& t, int depth,
                                                    int base_row = 0, int base_col = 0) {
    std::vector<DevelopedChain> out;
    visit_chains(t, depth, base_row, base_col,
                 [&](const DevelopedChain& c) { out.push_back(c); });
    return out;
}

struct SaddleWitness {
    double length = 0.0;
    std::string gallery;     // move string; empty for the base square
    int from_corner = 0, to_corner = 0;
    int from_vertex = 0, to_vertex = 0;
    std::string kind;        // side | marked-diagonal | long-diagonal | developed
};

struct SaddleScan {
    double min_length = 0.0;
    std::vector<SaddleWitness> witnesses;   // all candidates within 1e-9 of min
    long long chains_examined = 0;
    long long candidates_admitted = 0;
    int depth = 0;
};

namespace detail {

// A corner-to-corner segment counts only if it traverses the gallery: it must
// cross every glued edge strictly in the edge's interior, at parameters that
// advance monotonically along the segment, clear of all endpoints.
inline bool traverses_gallery(const DiskPoint& u, const DiskPoint& v,
                              const std::vector<std::array<DiskPoint, 2>>& edges,
                              double clearance = 1e-9) {
    double prev_t = 0.0;
    for (const auto& e : edges) {
        const auto hit = segment_intersection(u, v, e[0], e[1]);
        if (!hit) return false;
        if (distance(hit->point, e[0]) <= clearance ||
            distance(hit->point, e[1]) <= clearance)
            return false;
        if (distance(hit->point, u) <= clearance ||
            distance(hit->point, v) <= clearance)
            return false;
        if (hit->t_first <= prev_t + 1e-12) return false;
        prev_t = hit->t_first;
    }
    return true;
}

inline const char* base_pair_kind(int i, int j) {
    const int lo = std::min(i, j), hi = std::max(i, j);
    if (lo == 0 && hi == 2) return "marked-diagonal";
    if (lo == 1 && hi == 3) return "long-diagonal";
    return "side";
}

} // namespace detail

inline SaddleScan min_saddle_connection_scan(const ConeTorus& t, int depth,
                                             int base_row = 0, int base_col = 0) {
    if (depth < 1 || depth > kMaxGalleryDepth)
        throw std::invalid_argument("min_saddle_connection_scan: depth must lie in [1, 8]");

    SaddleScan scan;
    scan.depth = depth;
    std::vector<SaddleWitness> candidates;
    double best = std::numeric_limits<double>::infinity();
    const double keep_slack = 1e-6;

    const PlacedSquare base = detail::place_base(t, base_row, base_col);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            SaddleWitness w;
            w.length = distance(base.corner[i], base.corner[j]);
            w.gallery = "";
            w.from_corner = i;
            w.to_corner = j;
            w.from_vertex = base.vertex_id[i];
            w.to_vertex = base.vertex_id[j];
            w.kind = detail::base_pair_kind(i, j);
            candidates.push_back(w);
            best = std::min(best, w.length);
        }
    }
    scan.chains_examined = 1;
    scan.candidates_admitted = 6;

    visit_chains(t, depth, base_row, base_col, [&](const DevelopedChain& chain) {
        ++scan.chains_examined;
        const PlacedSquare& first = chain.squares.front();
        const PlacedSquare& last = chain.squares.back();
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const DiskPoint& u = first.corner[i];
                const DiskPoint& v = last.corner[j];
                const double len = distance(u, v);
                if (len <= 1e-9 || len >= best + keep_slack) continue;
                if (!detail::traverses_gallery(u, v, chain.shared_edges)) continue;
                SaddleWitness w;
                w.length = len;
                w.gallery = chain.moves;
                w.from_corner = i;
                w.to_corner = j;
                w.from_vertex = first.vertex_id[i];
                w.to_vertex = last.vertex_id[j];
                w.kind = "developed";
                candidates.push_back(w);
                ++scan.candidates_admitted;
                best = std::min(best, len);
            }
        }
    });

    scan.min_length = best;
    for (auto& w : candidates)
        if (w.length <= best + 1e-9) scan.witnesses.push_back(w);
    std::sort(scan.witnesses.begin(), scan.witnesses.end(),
              [](const SaddleWitness& a, const SaddleWitness& b) {
                  return std::tie(a.length, a.gallery, a.from_corner, a.to_corner) <
                         std::tie(b.length, b.gallery, b.from_corner, b.to_corner);
              });
    return scan;
}

inline HypLength min_saddle_connection(const ConeTorus& t, int depth = kDefaultGalleryDepth) {
    return HypLength{min_saddle_connection_scan(t, depth).min_length};
}

struct CrossingBound {
    int strip_count = 0;        // min(m, n), or a hypothetical multiplier
    double width = 0.0;         // y
    double lower_bound = 0.0;   // strip_count * width
    double systole = 0.0;       // 2 * min(side, diagonal)
    double margin = 0.0;        // lower_bound - systole
    bool holds = false;
};

inline CrossingBound crossing_bound_with_multiplier(int strips, double eps) {
    if (strips < 1) throw std::invalid_argument("crossing_bound: strips must be positive");
    CrossingBound b;
    b.strip_count = strips;
    b.width = perpendicular_width_formula(eps).value;
    const DeformationSample s = deformation_sample_any(eps);
    b.lower_bound = strips * b.width;
    b.systole = s.systole;
    b.margin = b.lower_bound - b.systole;
    b.holds = b.margin > 0.0;
    return b;
}

inline CrossingBound crossing_lower_bound(int m, int n, double eps) {
    require_grid_dims(m, n);
    return crossing_bound_with_multiplier(std::min(m, n), eps);
}

enum class Verdict { Pass, Fail, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

struct SystoleCertificate {
    Verdict verdict = Verdict::Inconclusive;
    int m = 0, n = 0;
    double epsilon = 0.0;
    int depth = 0;
    double claimed_systole = 0.0;        // 2 * min(side, diagonal)
    double min_saddle = 0.0;
    double min_saddle_prev_depth = 0.0;  // stabilization check
    bool scan_stable = false;
    bool scan_matches_claim = false;
    CrossingBound crossing;
    std::vector<SaddleWitness> witnesses;
    long long chains_examined = 0;
    std::string method =
        "depth-bounded saddle-connection scan plus width-strip crossing bound";
    std::string note;
};

// Numerical, depth-bounded certification: PASS means the scan minimum is
// stable in depth, matches min(side, diagonal), and the crossing bound holds
// with positive margin. It is not a formal proof object.
inline SystoleCertificate verify_systole(int m, int n, double eps,
                                         int depth = kDefaultGalleryDepth,
                                         double tol = 1e-9) {
    const ConeTorus t = build_cone_torus(m, n, eps);
    SystoleCertificate cert;
    cert.m = m;
    cert.n = n;
    cert.epsilon = eps;
    cert.depth = depth;

    const double l = t.square.side_length.value;
    const double x = t.square.marked_diagonal.value;
    cert.claimed_systole = 2.0 * std::min(l, x);
    cert.crossing = crossing_lower_bound(m, n, eps);

    SaddleScan scan = min_saddle_connection_scan(t, depth);
    cert.min_saddle = scan.min_length;
    cert.witnesses = scan.witnesses;
    cert.chains_examined = scan.chains_examined;

    if (depth < 2) {
        cert.verdict = Verdict::Inconclusive;
        cert.note = "depth below 2: scan minimum not yet trustworthy";
        cert.min_saddle_prev_depth = scan.min_length;
        return cert;
    }

    SaddleScan prev = min_saddle_connection_scan(t, depth - 1);
    cert.min_saddle_prev_depth = prev.min_length;
    cert.scan_stable = std::fabs(scan.min_length - prev.min_length) <= 1e-12;
    cert.scan_matches_claim =
        std::fabs(2.0 * scan.min_length - cert.claimed_systole) <= tol;

    if (2.0 * scan.min_length < cert.claimed_systole - tol) {
        cert.verdict = Verdict::Fail;
        cert.note = "scan found a saddle connection shorter than claimed";
    } else if (!cert.crossing.holds) {
        cert.verdict = Verdict::Fail;
        cert.note = "width-strip crossing bound does not dominate the claimed systole";
    } else if (!cert.scan_stable) {
        cert.verdict = Verdict::Inconclusive;
        cert.note = "scan minimum still moving with depth";
    } else if (!cert.scan_matches_claim) {
        cert.verdict = Verdict::Fail;
        cert.note = "scan minimum does not match min(side, diagonal)";
    } else {
        cert.verdict = Verdict::Pass;
        cert.note = "";
    }
    return cert;
}

} // namespace sysgeo
