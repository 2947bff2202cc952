#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace sysgeo {

inline constexpr double kPi = std::numbers::pi_v<double>;

// Default tolerances. Closed-form identities are expected to hold to near
// machine precision; quantities measured on constructed geometry accumulate
// more rounding, so they get a looser default. Both can be overridden per
// call, and the CLI reads SYSGEO_TOL to override the geometric one.
struct Tolerances {
    double closed_form = 1e-12;
    double geometric = 1e-9;
};

inline double env_geometric_tolerance(double fallback = 1e-9) {
    if (const char* s = std::getenv("SYSGEO_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0.0 && std::isfinite(v)) return v;
    }
    return fallback;
}

// acosh(1 + u) for u >= 0 without cancellation near u = 0.
inline double acosh1p(double u) {
    if (u < 0.0) {
        if (u > -1e-12) u = 0.0;
        else throw std::domain_error("acosh1p: argument below 1");
    }
    return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

// acosh with a guard for values that dip below 1 by rounding.
inline double acosh_stable(double x) { return acosh1p(x - 1.0); }

// Exact rational multiple of pi, kept alongside floating-point angles so
// that symbolic inputs like pi/12 can be recognized without drift.
struct PiRational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr PiRational() = default;
    PiRational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("PiRational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double radians() const { return static_cast<double>(num) / static_cast<double>(den) * kPi; }
    bool operator==(const PiRational&) const = default;
};

struct Angle {
    double radians = 0.0;
    std::optional<PiRational> exact;

    static Angle from_radians(double r) { return Angle{r, std::nullopt}; }
    static Angle pi_times(std::int64_t num, std::int64_t den) {
        PiRational f(num, den);
        return Angle{f.radians(), f};
    }
};

struct HypLength {
    double value = 0.0;
};

// The deformation parameter is geometrically an angle; tokens accepted by
// the CLI ("0", "pi/12", "pi/24", or a plain decimal) land here.
inline Angle parse_angle_token(const std::string& token) {
    if (token == "0") return Angle::pi_times(0, 1);
    if (token.rfind("pi/", 0) == 0) {
        const std::string d = token.substr(3);
        if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad angle token: " + token);
        long long den = std::stoll(d);
        if (den <= 0) throw std::invalid_argument("bad angle token: " + token);
        return Angle::pi_times(1, den);
    }
    if (token == "pi") return Angle::pi_times(1, 1);
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0' || !std::isfinite(v))
        throw std::invalid_argument("bad angle token: " + token);
    return Angle::from_radians(v);
}

inline bool is_critical_epsilon(const Angle& eps, double tol = 1e-12) {
    if (eps.exact && *eps.exact == PiRational(1, 12)) return true;
    return std::fabs(eps.radians - kPi / 12.0) <= tol;
}

inline bool is_critical_epsilon(double eps, double tol = 1e-12) {
    return std::fabs(eps - kPi / 12.0) <= tol;
}

} // namespace sysgeo
