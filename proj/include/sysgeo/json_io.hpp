#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "certify.hpp"
#include "hexagon.hpp"
#include "parity.hpp"

// JSON documents: {"schema_version": 1, "kind": ..., ...}. Integers are JSON
// numbers; every real-valued quantity is a 15-significant-digit decimal
// string so that serialization is deterministic across platforms and
// re-parsing stays within 1e-12 relative of the original.

namespace sysgeo {

using Json = nlohmann::ordered_json;

inline std::string num15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline double parse_num15(const Json& j) {
    if (j.is_string()) return std::strtod(j.get<std::string>().c_str(), nullptr);
    return j.get<double>();
}

inline Json make_document(const std::string& kind) {
    Json doc;
    doc["schema_version"] = 1;
    doc["kind"] = kind;
    return doc;
}

inline Json to_json(const DeformationSample& s) {
    Json j;
    j["epsilon"] = num15(s.epsilon);
    j["side"] = num15(s.side);
    j["marked_diagonal"] = num15(s.marked_diagonal);
    j["width"] = num15(s.width);
    j["systole"] = num15(s.systole);
    j["dcosh_side"] = num15(s.dcosh_side);
    j["dcosh_diagonal"] = num15(s.dcosh_diagonal);
    j["dside"] = num15(s.dside);
    j["ddiagonal"] = num15(s.ddiagonal);
    return j;
}

inline Json to_json(const SurfaceDescriptor& s) {
    Json j;
    j["genus"] = s.genus;
    j["m"] = s.m;
    j["n"] = s.n;
    j["epsilon"] = num15(s.epsilon);
    j["epsilon_critical"] = s.epsilon_critical;
    j["branch_points"] = s.branch_points;
    j["total_area"] = num15(s.total_area);
    j["systole"] = num15(s.systole);
    j["systolic_count"] = s.systolic_count;
    j["decomposition"] = s.decomposition;
    j["cover_vertices"] = s.cover_vertices;
    j["cover_edges"] = s.cover_edges;
    j["cover_faces"] = s.cover_faces;
    return j;
}

inline SurfaceDescriptor surface_from_json(const Json& j) {
    SurfaceDescriptor s;
    s.genus = j.at("genus").get<int>();
    s.m = j.at("m").get<int>();
    s.n = j.at("n").get<int>();
    s.epsilon = parse_num15(j.at("epsilon"));
    s.epsilon_critical = j.at("epsilon_critical").get<bool>();
    s.branch_points = j.at("branch_points").get<int>();
    s.total_area = parse_num15(j.at("total_area"));
    s.systole = parse_num15(j.at("systole"));
    s.systolic_count = j.at("systolic_count").get<long long>();
    s.decomposition = j.at("decomposition").get<std::string>();
    s.cover_vertices = j.at("cover_vertices").get<long long>();
    s.cover_edges = j.at("cover_edges").get<long long>();
    s.cover_faces = j.at("cover_faces").get<long long>();
    return s;
}

inline Json to_json(const SaddleWitness& w) {
    Json j;
    j["length"] = num15(w.length);
    j["gallery"] = w.gallery;
    j["from_corner"] = w.from_corner;
    j["to_corner"] = w.to_corner;
    j["from_vertex"] = w.from_vertex;
    j["to_vertex"] = w.to_vertex;
    j["kind"] = w.kind;
    return j;
}

inline Json to_json(const CrossingBound& b) {
    Json j;
    j["strip_count"] = b.strip_count;
    j["width"] = num15(b.width);
    j["lower_bound"] = num15(b.lower_bound);
    j["systole"] = num15(b.systole);
    j["margin"] = num15(b.margin);
    j["holds"] = b.holds;
    return j;
}

inline Json to_json(const SystoleCertificate& c) {
    Json j;
    j["verdict"] = to_string(c.verdict);
    j["m"] = c.m;
    j["n"] = c.n;
    j["epsilon"] = num15(c.epsilon);
    j["depth"] = c.depth;
    j["claimed_systole"] = num15(c.claimed_systole);
    j["min_saddle"] = num15(c.min_saddle);
    j["min_saddle_prev_depth"] = num15(c.min_saddle_prev_depth);
    j["scan_stable"] = c.scan_stable;
    j["scan_matches_claim"] = c.scan_matches_claim;
    j["crossing_bound"] = to_json(c.crossing);
    j["chains_examined"] = c.chains_examined;
    j["method"] = c.method;
    j["note"] = c.note;
    Json ws = Json::array();
    for (const auto& w : c.witnesses) ws.push_back(to_json(w));
    j["witnesses"] = ws;
    return j;
}

inline SystoleCertificate certificate_from_json(const Json& j) {
    SystoleCertificate c;
    const std::string v = j.at("verdict").get<std::string>();
    c.verdict = v == "PASS" ? Verdict::Pass
              : v == "FAIL" ? Verdict::Fail
                            : Verdict::Inconclusive;
    c.m = j.at("m").get<int>();
    c.n = j.at("n").get<int>();
    c.epsilon = parse_num15(j.at("epsilon"));
    c.depth = j.at("depth").get<int>();
    c.claimed_systole = parse_num15(j.at("claimed_systole"));
    c.min_saddle = parse_num15(j.at("min_saddle"));
    c.min_saddle_prev_depth = parse_num15(j.at("min_saddle_prev_depth"));
    c.scan_stable = j.at("scan_stable").get<bool>();
    c.scan_matches_claim = j.at("scan_matches_claim").get<bool>();
    const Json& cb = j.at("crossing_bound");
    c.crossing.strip_count = cb.at("strip_count").get<int>();
    c.crossing.width = parse_num15(cb.at("width"));
    c.crossing.lower_bound = parse_num15(cb.at("lower_bound"));
    c.crossing.systole = parse_num15(cb.at("systole"));
    c.crossing.margin = parse_num15(cb.at("margin"));
    c.crossing.holds = cb.at("holds").get<bool>();
    c.chains_examined = j.at("chains_examined").get<long long>();
    c.method = j.at("method").get<std::string>();
    c.note = j.at("note").get<std::string>();
    for (const Json& wj : j.at("witnesses")) {
        SaddleWitness w;
        w.length = parse_num15(wj.at("length"));
        w.gallery = wj.at("gallery").get<std::string>();
        w.from_corner = wj.at("from_corner").get<int>();
        w.to_corner = wj.at("to_corner").get<int>();
        w.from_vertex = wj.at("from_vertex").get<int>();
        w.to_vertex = wj.at("to_vertex").get<int>();
        w.kind = wj.at("kind").get<std::string>();
        c.witnesses.push_back(w);
    }
    return c;
}

inline Json to_json(const FillingReport& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["epsilon"] = num15(r.epsilon);
    j["epsilon_critical"] = r.epsilon_critical;
    j["genus"] = r.genus;
    j["torus_vertices"] = r.torus_vertices;
    j["torus_edges_squares"] = r.torus_edges_squares;
    j["torus_faces_squares"] = r.torus_faces_squares;
    j["torus_edges_triangles"] = r.torus_edges_triangles;
    j["torus_faces_triangles"] = r.torus_faces_triangles;
    j["euler_torus"] = r.euler_torus;
    j["cover_vertices"] = r.cover_vertices;
    j["cover_edges"] = r.cover_edges;
    j["cover_faces"] = r.cover_faces;
    j["euler_cover"] = r.euler_cover;
    j["euler_ok"] = r.euler_ok;
    j["cone_angle_max_err"] = num15(r.cone_angle_max_err);
    j["quotient_valence"] = r.quotient_valence;
    j["cover_valence"] = r.cover_valence;
    j["triangles_equilateral"] = r.triangles_equilateral;
    j["triangle_angle_max_err"] = num15(r.triangle_angle_max_err);
    j["systoles_contain_all_edges"] = r.systoles_contain_all_edges;
    j["fills"] = r.fills;
    return j;
}

inline Json to_json(const ParityReport& r) {
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["pmax"] = r.pmax;
    j["qmax"] = r.qmax;
    j["violations"] = r.violations;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json ej;
        ej["p"] = e.p;
        ej["q"] = e.q;
        ej["count"] = e.count;
        ej["even"] = e.even;
        entries.push_back(ej);
    }
    j["entries"] = entries;
    return j;
}

inline Json to_json(const HexagonSpec& h) {
    Json j;
    j["boundary_side"] = num15(h.boundary_side);
    j["seam_side"] = num15(h.seam_side);
    j["identity_residual"] = num15(h.identity_residual);
    Json vs = Json::array();
    for (const auto& v : h.vertex) {
        Json vj;
        vj["x"] = num15(v.x);
        vj["y"] = num15(v.y);
        vs.push_back(vj);
    }
    j["vertices"] = vs;
    return j;
}

inline Json to_json(const BoundedSurfaceDescriptor& s) {
    Json j;
    j["genus"] = s.genus;
    j["m"] = s.m;
    j["n"] = s.n;
    j["boundary_side"] = num15(s.boundary_side);
    j["seam_side"] = num15(s.seam_side);
    j["boundary_count"] = s.boundary_count;
    j["boundary_sides_each"] = s.boundary_sides_each;
    j["boundary_length_each"] = num15(s.boundary_length_each);
    j["hexagon_count"] = s.hexagon_count;
    j["total_area"] = num15(s.total_area);
    j["hexagon"] = to_json(s.hexagon);
    return j;
}

inline Json to_json(const CuspLimitReport& r) {
    Json j;
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.boundary_side.size(); ++i) {
        Json row;
        row["boundary_side"] = num15(r.boundary_side[i]);
        row["seam_side"] = num15(r.seam_side[i]);
        row["boundary_length"] = num15(r.boundary_length[i]);
        rows.push_back(row);
    }
    j["samples"] = rows;
    j["seam_increasing"] = r.seam_increasing;
    j["boundary_shrinking"] = r.boundary_shrinking;
    j["area"] = num15(r.area);
    return j;
}

} // namespace sysgeo
