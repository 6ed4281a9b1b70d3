#include "mcfs/profile.hpp"
#include "mcfs/errors.hpp"
#include "mcfs/expression.hpp"

#include <cmath>
#include <memory>

namespace mcfs {

std::string to_string(ProfileName name) {
    switch (name) {
    case ProfileName::euclidean_cone:     return "euclidean_cone";
    case ProfileName::horospherical:      return "horospherical";
    case ProfileName::geodesic_spherical: return "geodesic_spherical";
    case ProfileName::equidistant:        return "equidistant";
    case ProfileName::spherical:          return "spherical";
    case ProfileName::product:            return "product";
    case ProfileName::custom:             return "custom";
    }
    return "custom";
}

ProfileName profile_name_from_string(const std::string& s) {
    if (s == "euclidean_cone")     return ProfileName::euclidean_cone;
    if (s == "horospherical")      return ProfileName::horospherical;
    if (s == "geodesic_spherical") return ProfileName::geodesic_spherical;
    if (s == "equidistant")        return ProfileName::equidistant;
    if (s == "spherical")          return ProfileName::spherical;
    if (s == "product")            return ProfileName::product;
    if (s == "custom")             return ProfileName::custom;
    throw config_error("unknown profile name '" + s + "'");
}

WarpingProfile WarpingProfile::catalog(ProfileName name) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    WarpingProfile p;
    p.name = name;
    switch (name) {
    case ProfileName::euclidean_cone:
        p.interval_lo = 0.0;
        p.interval_hi = inf;
        p.h = [](double t) { return t; };
        p.h1 = [](double) { return 1.0; };
        p.h2 = [](double) { return 0.0; };
        break;
    case ProfileName::horospherical:
        p.interval_lo = -inf;
        p.interval_hi = inf;
        p.h = [](double t) { return std::exp(t); };
        p.h1 = [](double t) { return std::exp(t); };
        p.h2 = [](double t) { return std::exp(t); };
        break;
    case ProfileName::geodesic_spherical:
        p.interval_lo = 0.0;
        p.interval_hi = inf;
        p.h = [](double t) { return std::sinh(t); };
        p.h1 = [](double t) { return std::cosh(t); };
        p.h2 = [](double t) { return std::sinh(t); };
        break;
    case ProfileName::equidistant:
        p.interval_lo = -inf;
        p.interval_hi = inf;
        p.h = [](double t) { return std::cosh(t); };
        p.h1 = [](double t) { return std::sinh(t); };
        p.h2 = [](double t) { return std::cosh(t); };
        break;
    case ProfileName::spherical:
        p.interval_lo = 0.0;
        p.interval_hi = std::acos(-1.0);
        p.h = [](double t) { return std::sin(t); };
        p.h1 = [](double t) { return std::cos(t); };
        p.h2 = [](double t) { return -std::sin(t); };
        break;
    case ProfileName::product:
        p.interval_lo = -inf;
        p.interval_hi = inf;
        p.h = [](double) { return 1.0; };
        p.h1 = [](double) { return 0.0; };
        p.h2 = [](double) { return 0.0; };
        break;
    case ProfileName::custom:
        throw config_error("custom profiles require explicit h; use WarpingProfile::custom");
    }
    return p;
}

namespace {

// 5-point centered stencils; step scales with |t| to keep relative accuracy.
double fd_step(double t) { return 1e-5 * std::max(1.0, std::abs(t)); }

double fd1(const std::function<double(double)>& f, double t) {
    double d = fd_step(t);
    return (f(t - 2 * d) - 8 * f(t - d) + 8 * f(t + d) - f(t + 2 * d)) / (12 * d);
}

double fd2(const std::function<double(double)>& f, double t) {
    double d = fd_step(t);
    return (-f(t - 2 * d) + 16 * f(t - d) - 30 * f(t) + 16 * f(t + d) - f(t + 2 * d)) /
           (12 * d * d);
}

} // namespace

WarpingProfile WarpingProfile::custom(double lo, double hi, const std::string& h_expr,
                                      const std::string& h1_expr,
                                      const std::string& h2_expr) {
    if (!(lo < hi))
        throw config_error("custom profile: interval_lo must be below interval_hi");
    WarpingProfile p;
    p.name = ProfileName::custom;
    p.interval_lo = lo;
    p.interval_hi = hi;
    auto h = std::make_shared<Expression>(h_expr);
    p.h = [h](double t) { return (*h)(t); };
    if (!h1_expr.empty()) {
        auto e = std::make_shared<Expression>(h1_expr);
        p.h1 = [e](double t) { return (*e)(t); };
    } else {
        auto base = p.h;
        p.h1 = [base](double t) { return fd1(base, t); };
    }
    if (!h2_expr.empty()) {
        auto e = std::make_shared<Expression>(h2_expr);
        p.h2 = [e](double t) { return (*e)(t); };
    } else {
        auto base = p.h;
        p.h2 = [base](double t) { return fd2(base, t); };
    }
    return p;
}

void WarpingProfile::check_domain(double t) const {
    if (!contains(t))
        throw domain_error("t = " + std::to_string(t) + " outside the open interval (" +
                           std::to_string(interval_lo) + ", " + std::to_string(interval_hi) +
                           ") of profile " + to_string(name));
}

std::optional<double> WarpedSpace::space_form_check() const {
    // Sample both curvature branches over a representative window of I.
    double lo = std::max(profile.interval_lo, -10.0);
    double hi = std::min(profile.interval_hi, 10.0);
    double pad = 1e-3 * (hi - lo);
    lo += pad;
    hi -= pad;
    const int samples = 64;
    double ref = 0.0;
    for (int i = 0; i <= samples; ++i) {
        double t = lo + (hi - lo) * i / samples;
        double h = profile.h(t);
        double radial = -profile.h2(t) / h;
        double fiber = (kappa - profile.h1(t) * profile.h1(t)) / (h * h);
        if (i == 0)
            ref = radial;
        if (std::abs(radial - fiber) > 1e-8 || std::abs(radial - ref) > 1e-8)
            return std::nullopt;
    }
    return ref;
}

void SolitonContext::validate() const {
    if (c == 0.0)
        throw config_error("soliton constant c must be nonzero");
    if (m <= 0 || m > space.n)
        throw config_error("soliton dimension m must satisfy 1 <= m <= n");
    space.profile.check_domain(t0);
}

} // namespace mcfs
