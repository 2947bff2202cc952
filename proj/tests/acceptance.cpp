// End-to-end acceptance run: prints one PASS/FAIL line per criterion and
// exits with the number of failures. Criterion 11 drives the installed CLI
// binary, whose path arrives as argv[1].

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "oracles.hpp"
#include "sysgeo/sysgeo.hpp"

using namespace sysgeo;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (!ok) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---- criterion 1: baseline lengths at the symmetric point ------------------

void criterion_1() {
    const double l0 = side_length_formula(0.0).value;
    const double x0 = diagonal_length_formula(0.0).value;
    const bool ok = std::fabs(l0 - 2.4485) <= 5e-3 && std::fabs(x0 - 3.0572) <= 5e-3;
    report(1, ok,
           "baseline lengths: side(0) = " + fmt(l0) + " (2.4485 +- 5e-3), diagonal(0) = " +
               fmt(x0) + " (3.0572 +- 5e-3)");
}

// ---- criterion 2: critical parameter ----------------------------------------

void criterion_2() {
    const double e0 = find_critical_epsilon();
    const double l = side_length_formula(e0).value;
    const double x = diagonal_length_formula(e0).value;
    const bool ok = std::fabs(e0 - kPi / 12.0) <= 1e-10 && std::fabs(l - x) <= 1e-12 &&
                    std::fabs(l - 2.5533) <= 5e-3;
    report(2, ok,
           "critical parameter: e0 - pi/12 = " + fmt(e0 - kPi / 12.0) +
               " (|.| <= 1e-10), |side - diagonal| = " + fmt(std::fabs(l - x)) +
               " (<= 1e-12), value " + fmt(l) + " (2.5533 +- 5e-3)");
}

// ---- criterion 3: perpendicular width ---------------------------------------

void criterion_3() {
    double identity_err = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double e = (kPi / 4.0 - 1e-6) * i / 99.0;
        const double w = perpendicular_width_formula(e).value;
        identity_err = std::max(identity_err,
                                std::fabs(std::cosh(w) - (std::sqrt(2.0) * std::cos(e) + 1.0)));
    }
    bool monotone = true;
    double prev = perpendicular_width_formula(0.0).value;
    for (int i = 1; i <= 100; ++i) {
        const double w = perpendicular_width_formula(kPi / 12.0 * i / 100.0).value;
        if (!(w < prev)) monotone = false;
        prev = w;
    }
    const double y_crit = perpendicular_width_formula(kPi / 12.0).value;
    const bool ok = identity_err <= 1e-12 && std::fabs(y_crit - 1.5066) <= 5e-4 && monotone;
    report(3, ok,
           "width: cosh identity residual " + fmt(identity_err) +
               " (<= 1e-12 on 100-point grid), width(pi/12) = " + fmt(y_crit) +
               " (1.5066 +- 5e-4), strictly decreasing: " + (monotone ? "yes" : "no"));
}

// ---- criterion 4: derivative closed forms -----------------------------------

void criterion_4() {
    const auto cosh_side = [](double e) { return std::cosh(side_length_formula(e).value); };
    const auto cosh_diag = [](double e) {
        return std::cosh(diagonal_length_formula(e).value);
    };
    double rel = 0.0;
    bool signs = true;
    for (int i = 1; i < 40; ++i) {
        const double e = (kPi / 12.0) * i / 40.0;
        const double ds = dcosh_side_formula(e);
        const double dx = dcosh_diagonal_formula(e);
        if (!(ds > 0.0) || !(dx < 0.0)) signs = false;
        rel = std::max(rel,
                       std::fabs(ds - oracle::central_difference(cosh_side, e)) / std::fabs(ds));
        rel = std::max(rel,
                       std::fabs(dx - oracle::central_difference(cosh_diag, e)) / std::fabs(dx));
    }
    const bool ok = rel < 1e-6 && signs;
    report(4, ok,
           "derivatives vs central differences: max relative error " + fmt(rel) +
               " (< 1e-6 on (0, pi/12)), signs strictly +/-: " + (signs ? "yes" : "no"));
}

// ---- criterion 5: monotone systole ------------------------------------------

void criterion_5() {
    std::vector<double> grid;
    for (int i = 0; i <= 50; ++i) grid.push_back(kPi / 12.0 * i / 50.0);
    const auto profile = systole_profile(grid);
    bool increasing = true;
    for (std::size_t i = 1; i < profile.size(); ++i)
        if (!(profile[i].systole > profile[i - 1].systole)) increasing = false;
    report(5, increasing,
           "systole strictly increasing over the 50-point grid on [0, pi/12]: from " +
               fmt(profile.front().systole) + " to " + fmt(profile.back().systole));
}

// ---- criterion 6: genus, counts, Euler characteristic, area ------------------

void criterion_6() {
    const int grids[4][2] = {{4, 4}, {4, 5}, {6, 4}, {4, 10}};
    const long long critical_counts[4] = {48, 60, 72, 120};
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 4; ++i) {
        const int m = grids[i][0], n = grids[i][1];
        const int genus = (m * n + 2) / 2;
        const SurfaceDescriptor crit = build_surface(m, n, kPi / 12.0);
        const SurfaceDescriptor sub = build_surface(m, n, kPi / 24.0);
        const FillingReport fill = filling_check(m, n, kPi / 12.0);
        const bool good = crit.genus == genus && crit.branch_points == 2 * genus - 2 &&
                          crit.systolic_count == 6LL * genus - 6 &&
                          crit.systolic_count == critical_counts[i] &&
                          sub.systolic_count == 4LL * genus - 4 && fill.euler_torus == 0 &&
                          fill.euler_cover == 2LL - 2LL * genus &&
                          std::fabs(crit.total_area - 4.0 * kPi * (genus - 1)) <= 1e-9;
        if (!good) ok = false;
        if (!detail.empty()) detail += ", ";
        detail += std::to_string(m) + "x" + std::to_string(n) + ": g=" +
                  std::to_string(crit.genus) + " count=" +
                  std::to_string(crit.systolic_count);
    }
    report(6, ok, "combinatorics (count at critical = 6g-6, subcritical = 4g-4): " + detail);
}

// ---- criterion 7: geometric vs formula oracle --------------------------------

void criterion_7() {
    std::mt19937 gen(20240816);
    std::uniform_real_distribution<double> dist(0.0, kPi / 4.0 - 0.02);
    double err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double e = dist(gen);
        const SquareLayout sq = build_square(e);
        err = std::max(err, std::fabs(sq.side_length.value - side_length_formula(e).value));
        err = std::max(err,
                       std::fabs(sq.marked_diagonal.value - diagonal_length_formula(e).value));
        err = std::max(err,
                       std::fabs(sq.long_diagonal.value - long_diagonal_formula(e).value));
        err = std::max(err,
                       std::fabs(sq.width.value - perpendicular_width_formula(e).value));
    }
    report(7, err <= 1e-9,
           "coordinate-built squares vs closed forms on 100 random parameters: max |diff| = " +
               fmt(err) + " (<= 1e-9)");
}

// ---- criterion 8: systole certificates ---------------------------------------

void criterion_8() {
    bool ok = true;
    std::string detail;
    for (const double e : {0.0, kPi / 24.0, kPi / 12.0}) {
        const auto start = std::chrono::steady_clock::now();
        const SystoleCertificate cert = verify_systole(4, 4, e, 4);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool good = cert.verdict == Verdict::Pass &&
                          std::fabs(2.0 * cert.min_saddle - cert.claimed_systole) <= 1e-9 &&
                          cert.crossing.holds && seconds < 10.0;
        if (!good) ok = false;
        if (!detail.empty()) detail += ", ";
        detail += "eps=" + fmt(e) + ": " + to_string(cert.verdict) + " in " + fmt(seconds) + "s";
    }
    const bool three_fails = !crossing_bound_with_multiplier(3, kPi / 12.0).holds;
    const bool four_holds = crossing_bound_with_multiplier(4, kPi / 12.0).holds;
    if (!(three_fails && four_holds)) ok = false;
    report(8, ok,
           "depth-4 certificates on the 4x4 grid (" + detail +
               "); strip multiplier minimality at pi/12: 3 fails / 4 holds: " +
               (three_fails && four_holds ? "yes" : "no"));
}

// ---- criterion 9: intersection parity ----------------------------------------

void criterion_9() {
    bool ok = true;
    long long checked = 0;
    const std::pair<int, int> grids[] = {{4, 4}, {4, 5}, {6, 4}};
    for (const auto& [m, n] : grids) {
        const ParityReport rep = parity_theorem_sweep(m, n, 5, 5);
        if (rep.violations != 0) ok = false;
        for (const auto& e : rep.entries) {
            ++checked;
            if (e.p > 0 && e.q > 0 &&
                e.count != 2LL * (static_cast<long long>(e.p) * n +
                                  static_cast<long long>(e.q) * m))
                ok = false;
        }
    }
    if (straight_line_count({1, 1}, 4, 5) != 18) ok = false;

    // Contractible detours move the count by even amounts.
    std::mt19937 gen(5551212);
    std::uniform_int_distribution<int> coord(-15, 15);
    std::uniform_int_distribution<int> winding(-3, 3);
    int done = 0;
    bool detours_even = true;
    while (done < 20) {
        const int p = 1 + (done % 3);
        const int q = winding(gen);
        if (std::gcd(p, q < 0 ? -q : q) != 1) continue;
        TorusPath direct;
        direct.points = {default_offsets()};
        direct.wind_x = p;
        direct.wind_y = q;
        TorusPath detour = direct;
        detour.points.push_back({direct.points[0].x + Rat{coord(gen), 11},
                                 direct.points[0].y + Rat{coord(gen), 13}});
        detour.points.push_back({direct.points[0].x + Rat{coord(gen), 17},
                                 direct.points[0].y + Rat{coord(gen), 19}});
        try {
            const long long a = path_crossing_count(direct, 4, 5);
            const long long b = path_crossing_count(detour, 4, 5);
            if ((b - a) % 2 != 0 || a % 2 != 0) detours_even = false;
            ++done;
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
    if (!detours_even) ok = false;
    report(9, ok,
           "parity sweep |p|,|q| <= 5 on three grids: " + std::to_string(checked) +
               " classes all even, positive classes = 2(pn+qm); 20 detour perturbations even: " +
               (detours_even ? "yes" : "no"));
}

// ---- criterion 10: right-angled hexagons -------------------------------------

void criterion_10() {
    bool ok = true;
    double angle_err = 0.0, seam_err = 0.0;
    for (const double a : {0.25, 0.5, 1.0, 2.0}) {
        const HexagonSpec h = solve_hexagon(a);
        for (int i = 0; i < 6; ++i) {
            const double ang =
                angle_between(h.vertex[i], h.vertex[(i + 5) % 6], h.vertex[(i + 1) % 6])
                    .radians;
            angle_err = std::max(angle_err, std::fabs(ang - kPi / 2.0));
            const double side = distance(h.vertex[i], h.vertex[(i + 1) % 6]);
            const double expect = (i % 2 == 0) ? a : hexagon_seam_formula(a).value;
            seam_err = std::max(seam_err, std::fabs(side - expect));
        }
    }
    if (angle_err > 1e-9 || seam_err > 1e-9) ok = false;

    const SurfaceDescriptor base = build_surface(4, 4, kPi / 12.0);
    const BoundedSurfaceDescriptor s = build_hexagon_surface(base, 0.5);
    if (s.boundary_sides_each != 12) ok = false;
    if (std::fabs(s.boundary_length_each - 12.0 * 0.5) > 1e-12) ok = false;

    const CuspLimitReport limit = cusp_limit_check(base, {1.0, 0.5, 0.25, 0.1, 0.01});
    const bool cusp = limit.seam_increasing && limit.boundary_shrinking &&
                      limit.seam_side.back() > 10.0;
    if (!cusp) ok = false;
    report(10, ok,
           "hexagons: max angle error " + fmt(angle_err) + ", max side error " + fmt(seam_err) +
               " (<= 1e-9); boundary sides per cusp = " + std::to_string(s.boundary_sides_each) +
               ", boundary length 12a; seam diverges monotonically as a -> 0: " +
               (cusp ? "yes" : "no"));
}

// ---- criterion 11: CLI determinism, JSON round trip, SVG ----------------------

int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "\"" + cli + "\" " + args;
    const int raw = std::system(cmd.c_str());
    if (raw == -1) return -1;
    if (WIFEXITED(raw)) return WEXITSTATUS(raw);
    return -2;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_11(const std::string& cli) {
    if (cli.empty()) {
        report(11, false, "CLI binary path not supplied");
        return;
    }
    bool ok = true;
    std::string detail;
    const auto twice_identical = [&](const std::string& name, const std::string& args,
                                     std::string& first_out) -> bool {
        const std::string f1 = "acceptance_" + name + "_1.out";
        const std::string f2 = "acceptance_" + name + "_2.out";
        const int rc1 = run_cli(cli, args + " -o " + f1);
        const int rc2 = run_cli(cli, args + " -o " + f2);
        first_out = read_file(f1);
        const bool same = rc1 == 0 && rc2 == 0 && !first_out.empty() &&
                          first_out == read_file(f2);
        std::remove(f1.c_str());
        std::remove(f2.c_str());
        return same;
    };

    std::string surface_doc, cert_doc, parity_doc, svg_doc;
    if (!twice_identical("construct", "construct -m 4 -n 4 --eps pi/12 --json", surface_doc)) {
        ok = false;
        detail += "construct not byte-deterministic; ";
    }
    if (!twice_identical("verify", "verify -m 4 -n 4 --eps pi/12 -d 3 --json", cert_doc)) {
        ok = false;
        detail += "verify not byte-deterministic; ";
    }
    if (!twice_identical("parity", "parity -m 4 -n 5 --pmax 4 --qmax 4 --json", parity_doc)) {
        ok = false;
        detail += "parity not byte-deterministic; ";
    }
    if (!twice_identical("render", "render flat-torus -m 4 -n 5 -p 2 -q 1", svg_doc)) {
        ok = false;
        detail += "render not byte-deterministic; ";
    }

    try {
        const Json sdoc = Json::parse(surface_doc);
        const SurfaceDescriptor s = surface_from_json(sdoc.at("surface"));
        if (to_json(s).dump() != sdoc.at("surface").dump()) {
            ok = false;
            detail += "surface JSON round trip not exact; ";
        }
        const Json cdoc = Json::parse(cert_doc);
        const SystoleCertificate c = certificate_from_json(cdoc.at("certificate"));
        if (to_json(c).dump() != cdoc.at("certificate").dump()) {
            ok = false;
            detail += "certificate JSON round trip not exact; ";
        }
        if (c.verdict != Verdict::Pass) {
            ok = false;
            detail += "CLI certificate did not PASS; ";
        }
        const Json pdoc = Json::parse(parity_doc);
        if (pdoc.at("report").at("violations").get<long long>() != 0) {
            ok = false;
            detail += "CLI parity sweep reported violations; ";
        }
    } catch (const std::exception& e) {
        ok = false;
        detail += std::string("JSON parsing failed: ") + e.what() + "; ";
    }

    std::string why;
    if (!oracle::xml_well_formed(svg_doc, &why) || svg_doc.find("<svg") == std::string::npos) {
        ok = false;
        detail += "SVG not well-formed (" + why + "); ";
    }

    report(11, ok,
           ok ? "CLI byte-deterministic across runs; JSON round trips exact; SVG well-formed"
              : detail);
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11(cli);
    if (failures == 0)
        std::printf("all 11 criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
