#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sysgeo/sysgeo.hpp"

// Command-line workbench over the library. Exit codes: 0 success, 1 internal
// error, 2 invalid input or usage, 3 verification failure (a requested check
// did not certify).

namespace {

using namespace sysgeo;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
}

void emit_json(const Json& doc, const std::string& out_path) {
    emit(doc.dump(2) + "\n", out_path);
}

std::string fmt(double v) { return num15(v); }

struct EpsOption {
    std::string token = "0";
    Angle angle() const { return parse_angle_token(token); }
};

RatPoint offsets_for_seed(std::optional<unsigned> seed) {
    if (!seed) return default_offsets();
    // Deterministic generic offsets: prime denominators well above any swept
    // winding keep all crossings simple.
    static const long long primes[] = {251, 257, 263, 269, 271, 277, 281, 283};
    std::mt19937 rng(*seed);
    const long long dx = primes[rng() % 8];
    const long long dy = primes[rng() % 8];
    const long long nx = 1 + static_cast<long long>(rng() % (dx - 1));
    const long long ny = 1 + static_cast<long long>(rng() % (dy - 1));
    return {Rat{nx, dx}, Rat{ny, dy}};
}

int run_construct(int genus, int m, int n, const EpsOption& eps, bool json,
                  const std::string& out) {
    std::vector<std::pair<int, int>> dims;
    if (genus > 0) {
        dims = admissible_dims(genus);
        if (dims.empty()) {
            std::cerr << "no admissible grid for genus " << genus
                      << ": need genus = kn + 1 with m = 2k, k >= 2, n >= 4\n";
            return kExitUsage;
        }
        m = dims.front().first;
        n = dims.front().second;
    }
    const double e = eps.angle().radians;
    const SurfaceDescriptor s = build_surface(m, n, e);
    if (json) {
        Json doc = make_document("surface");
        doc["surface"] = to_json(s);
        Json alt = Json::array();
        for (auto [am, an] : dims) alt.push_back({{"m", am}, {"n", an}});
        doc["admissible_dims"] = alt;
        emit_json(doc, out);
    } else {
        std::ostringstream os;
        os << "genus " << s.genus << " surface from a " << s.m << " x " << s.n
           << " square torus (eps = " << fmt(s.epsilon) << ")\n"
           << "  branch points:  " << s.branch_points << "\n"
           << "  total area:     " << fmt(s.total_area) << "\n"
           << "  systole:        " << fmt(s.systole) << "\n"
           << "  systolic count: " << s.systolic_count << "\n"
           << "  decomposition:  " << s.decomposition << "\n";
        emit(os.str(), out);
    }
    return kExitOk;
}

int run_lengths(const EpsOption& eps, int grid, bool json, const std::string& out) {
    std::vector<DeformationSample> rows;
    if (grid > 0) {
        for (int i = 0; i <= grid; ++i)
            rows.push_back(deformation_sample(kCriticalEps * i / grid));
    } else {
        rows.push_back(deformation_sample(eps.angle().radians));
    }
    if (json) {
        Json doc = make_document(grid > 0 ? "deformation-profile" : "lengths");
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        doc["samples"] = arr;
        emit_json(doc, out);
    } else {
        std::ostringstream os;
        os << "eps             side            diagonal        width           systole\n";
        for (const auto& r : rows)
            os << fmt(r.epsilon) << "  " << fmt(r.side) << "  " << fmt(r.marked_diagonal)
               << "  " << fmt(r.width) << "  " << fmt(r.systole) << "\n";
        emit(os.str(), out);
    }
    return kExitOk;
}

int run_find_eps0(bool json, const std::string& out) {
    const double e0 = find_critical_epsilon();
    const DeformationSample s = deformation_sample(e0);
    if (json) {
        Json doc = make_document("critical-epsilon");
        doc["epsilon0"] = fmt(e0);
        doc["side"] = fmt(s.side);
        doc["marked_diagonal"] = fmt(s.marked_diagonal);
        doc["offset_from_pi_over_12"] = fmt(e0 - kCriticalEps);
        emit_json(doc, out);
    } else {
        std::ostringstream os;
        os << "critical eps = " << fmt(e0) << "\n"
           << "  side       = " << fmt(s.side) << "\n"
           << "  diagonal   = " << fmt(s.marked_diagonal) << "\n"
           << "  eps - pi/12 = " << fmt(e0 - kCriticalEps) << "\n";
        emit(os.str(), out);
    }
    return kExitOk;
}

int run_verify(int m, int n, const EpsOption& eps, int depth, bool json,
               const std::string& out) {
    const double tol = env_geometric_tolerance();
    const SystoleCertificate cert = verify_systole(m, n, eps.angle().radians, depth, tol);
    if (json) {
        Json doc = make_document("systole-certificate");
        doc["certificate"] = to_json(cert);
        emit_json(doc, out);
    } else {
        std::ostringstream os;
        os << to_string(cert.verdict) << ": " << m << " x " << n
           << " grid, eps = " << fmt(cert.epsilon) << ", depth " << depth << "\n"
           << "  claimed systole:   " << fmt(cert.claimed_systole) << "\n"
           << "  2 x min saddle:    " << fmt(2.0 * cert.min_saddle) << "\n"
           << "  crossing bound:    " << fmt(cert.crossing.lower_bound) << " (margin "
           << fmt(cert.crossing.margin) << ")\n"
           << "  chains examined:   " << cert.chains_examined << "\n"
           << "  shortest witnesses: " << cert.witnesses.size() << "\n";
        if (!cert.note.empty()) os << "  note: " << cert.note << "\n";
        emit(os.str(), out);
    }
    return cert.verdict == Verdict::Pass ? kExitOk : kExitVerification;
}

int run_parity(int m, int n, int pmax, int qmax, std::optional<unsigned> seed, bool json,
               const std::string& out) {
    const ParityReport rep = parity_theorem_sweep(m, n, pmax, qmax, offsets_for_seed(seed));
    if (json) {
        Json doc = make_document("parity-sweep");
        doc["report"] = to_json(rep);
        emit_json(doc, out);
    } else {
        std::ostringstream os;
        os << "parity sweep on the " << m << " x " << n << " grid, |p| <= " << pmax
           << ", |q| <= " << qmax << "\n";
        for (const auto& e : rep.entries)
            os << "  (" << e.p << ", " << e.q << "): " << e.count
               << (e.even ? " (even)" : " (ODD)") << "\n";
        os << (rep.violations == 0 ? "all counts even\n"
                                   : std::to_string(rep.violations) + " odd counts\n");
        emit(os.str(), out);
    }
    return rep.violations == 0 ? kExitOk : kExitVerification;
}

std::vector<double> parse_csv_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

int run_hexagon(int genus, int m, int n, double side, const std::string& limit_csv,
                bool json, const std::string& out) {
    if (genus > 0) {
        const auto dims = admissible_dims(genus);
        if (dims.empty()) {
            std::cerr << "no admissible grid for genus " << genus
                      << ": need genus = kn + 1 with m = 2k, k >= 2, n >= 4\n";
            return kExitUsage;
        }
        m = dims.front().first;
        n = dims.front().second;
    }
    const SurfaceDescriptor base = build_surface(m, n, kCriticalEps);
    const BoundedSurfaceDescriptor s = build_hexagon_surface(base, side);
    std::optional<CuspLimitReport> limit;
    if (!limit_csv.empty()) limit = cusp_limit_check(base, parse_csv_doubles(limit_csv));

    if (json) {
        Json doc = make_document("hexagon-surface");
        doc["surface"] = to_json(s);
        if (limit) doc["cusp_limit"] = to_json(*limit);
        emit_json(doc, out);
    } else {
        std::ostringstream os;
        os << "bounded surface from the genus " << s.genus << " cover (" << s.m << " x "
           << s.n << " grid), hexagon boundary side a = " << fmt(s.boundary_side) << "\n"
           << "  seam side t:        " << fmt(s.seam_side) << "\n"
           << "  boundaries:         " << s.boundary_count << " (each " << s.boundary_sides_each
           << " sides, length " << fmt(s.boundary_length_each) << ")\n"
           << "  hexagons:           " << s.hexagon_count << "\n"
           << "  total area:         " << fmt(s.total_area) << "\n"
           << "  identity residual:  " << fmt(s.hexagon.identity_residual) << "\n";
        if (limit) {
            os << "  cusp limit: seam increasing " << (limit->seam_increasing ? "yes" : "NO")
               << ", boundary shrinking " << (limit->boundary_shrinking ? "yes" : "NO") << "\n";
        }
        emit(os.str(), out);
    }
    return kExitOk;
}

int run_render(const std::string& target, int m, int n, const EpsOption& eps, int depth,
               double side, int p, int q, bool has_curve, const std::string& out) {
    std::string svg;
    if (target == "flat-torus") {
        CurveClass c{p, q};
        svg = render_flat_torus(m, n, has_curve ? &c : nullptr);
    } else if (target == "development") {
        svg = render_development(build_cone_torus(m, n, eps.angle().radians), depth);
    } else if (target == "hexagon") {
        svg = render_hexagon(solve_hexagon(side));
    } else {
        std::cerr << "unknown render target '" << target
                  << "' (expected flat-torus, development, or hexagon)\n";
        return kExitUsage;
    }
    emit(svg, out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbolic square-tiled surfaces: construction, certification, parity"};
    app.require_subcommand(1);

    int genus = 0, m = 4, n = 4, depth = kDefaultGalleryDepth;
    int grid = 0, pmax = 3, qmax = 3, p = 0, q = 0;
    double side = 1.0;
    EpsOption eps;
    bool json = false;
    std::string out, limit_csv, target;
    std::optional<unsigned> seed;

    auto add_eps = [&](CLI::App* cmd) {
        cmd->add_option("--eps", eps.token,
                        "deformation parameter: decimal radians or pi/<k> (default 0)");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", json, "emit a JSON document");
        cmd->add_option("-o,--out", out, "write output to a file instead of stdout");
    };

    CLI::App* c_construct = app.add_subcommand("construct", "build a surface descriptor");
    c_construct->add_option("-g,--genus", genus, "target genus (selects grid dimensions)");
    c_construct->add_option("-m", m, "grid rows (even, >= 4)");
    c_construct->add_option("-n", n, "grid columns (>= 4)");
    add_eps(c_construct);
    add_common(c_construct);

    CLI::App* c_lengths = app.add_subcommand("lengths", "square family lengths and derivatives");
    add_eps(c_lengths);
    c_lengths->add_option("--grid", grid, "sample count: profile over [0, pi/12]");
    add_common(c_lengths);

    CLI::App* c_eps0 = app.add_subcommand("find-eps0", "locate the side = diagonal crossover");
    add_common(c_eps0);

    CLI::App* c_verify = app.add_subcommand("verify", "certify the systole numerically");
    c_verify->add_option("-m", m, "grid rows")->required();
    c_verify->add_option("-n", n, "grid columns")->required();
    add_eps(c_verify);
    c_verify->add_option("-d,--depth", depth, "gallery depth (1..8, default 4)");
    add_common(c_verify);

    CLI::App* c_parity = app.add_subcommand("parity", "intersection parity sweep");
    c_parity->add_option("-m", m, "grid rows")->required();
    c_parity->add_option("-n", n, "grid columns")->required();
    c_parity->add_option("--pmax", pmax, "max |p| (default 3)");
    c_parity->add_option("--qmax", qmax, "max |q| (default 3)");
    c_parity->add_option("--seed", seed, "alternative generic offsets from this seed");
    add_common(c_parity);

    CLI::App* c_hex = app.add_subcommand("hexagon", "replace triangles by right-angled hexagons");
    c_hex->add_option("-g,--genus", genus, "target genus (selects grid dimensions)");
    c_hex->add_option("-m", m, "grid rows");
    c_hex->add_option("-n", n, "grid columns");
    c_hex->add_option("-a,--side", side, "hexagon boundary side length a")->required();
    c_hex->add_option("--limit-sequence", limit_csv,
                      "decreasing CSV of side lengths for the cusp limit check");
    add_common(c_hex);

    CLI::App* c_render = app.add_subcommand("render", "emit an SVG drawing");
    c_render->add_option("target", target, "flat-torus | development | hexagon")->required();
    c_render->add_option("-m", m, "grid rows");
    c_render->add_option("-n", n, "grid columns");
    add_eps(c_render);
    c_render->add_option("-d,--depth", depth, "gallery depth for development");
    c_render->add_option("-a,--side", side, "hexagon boundary side length");
    CLI::Option* opt_p = c_render->add_option("-p", p, "curve class horizontal winding");
    c_render->add_option("-q", q, "curve class vertical winding");
    add_common(c_render);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_construct->parsed()) return run_construct(genus, m, n, eps, json, out);
        if (c_lengths->parsed()) return run_lengths(eps, grid, json, out);
        if (c_eps0->parsed()) return run_find_eps0(json, out);
        if (c_verify->parsed()) return run_verify(m, n, eps, depth, json, out);
        if (c_parity->parsed()) return run_parity(m, n, pmax, qmax, seed, json, out);
        if (c_hex->parsed()) return run_hexagon(genus, m, n, side, limit_csv, json, out);
        if (c_render->parsed())
            return run_render(target, m, n, eps, depth, side, p, q, opt_p->count() > 0, out);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
