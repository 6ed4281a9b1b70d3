#include "mcfs/flows.hpp"
#include "mcfs/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace mcfs {

double ClosedFormFlow::operator()(double tau) const {
    if (!(tau > window_lo && tau < window_hi))
        throw domain_error("closed-form flow: tau outside the maximal window");
    return t_of_tau(tau);
}

ClosedFormFlow closed_form_flow(ProfileName name, int n, double t_init) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    WarpingProfile p = WarpingProfile::catalog(name);
    p.check_domain(t_init);
    if (n <= 0)
        throw config_error("closed_form_flow: slice dimension n must be positive");

    ClosedFormFlow f;
    f.window_lo = -inf;
    f.window_hi = inf;
    switch (name) {
    case ProfileName::euclidean_cone: {
        double a = t_init * t_init;
        f.window_hi = a / (2.0 * n);
        f.t_of_tau = [a, n](double tau) { return std::sqrt(a - 2.0 * n * tau); };
        break;
    }
    case ProfileName::horospherical:
        f.t_of_tau = [t_init, n](double tau) { return t_init - n * tau; };
        break;
    case ProfileName::geodesic_spherical: {
        double a = std::cosh(t_init);
        f.window_hi = std::log(a) / n;
        f.t_of_tau = [a, n](double tau) { return std::acosh(a * std::exp(-n * tau)); };
        break;
    }
    case ProfileName::equidistant: {
        // Two branches, mirrored in t -> -t; the initial condition picks one.
        double a = std::sinh(t_init);
        f.t_of_tau = [a, n](double tau) { return std::asinh(a * std::exp(-n * tau)); };
        break;
    }
    case ProfileName::spherical: {
        double a = std::cos(t_init);
        if (a != 0.0)
            f.window_hi = -std::log(std::abs(a)) / n;
        f.t_of_tau = [a, n](double tau) { return std::acos(a * std::exp(n * tau)); };
        break;
    }
    case ProfileName::product:
        f.t_of_tau = [t_init](double) { return t_init; };
        break;
    case ProfileName::custom:
        throw config_error("closed_form_flow: no closed form for custom profiles");
    }
    return f;
}

namespace {

constexpr double kBoundaryMargin = 1e-6;

bool inside(const WarpingProfile& p, double t) {
    return t > p.interval_lo + kBoundaryMargin && t < p.interval_hi - kBoundaryMargin;
}

// One RK4 step of dt/dtau = -n h'/h; nullopt when any stage would leave the
// margin-shrunk interval.
std::optional<double> rk4_step(const WarpingProfile& p, int n, double t, double h) {
    auto f = [&p, n](double x) { return -n * p.h1(x) / p.h(x); };
    if (!inside(p, t)) return std::nullopt;
    double k1 = f(t);
    double t2 = t + 0.5 * h * k1;
    if (!inside(p, t2)) return std::nullopt;
    double k2 = f(t2);
    double t3 = t + 0.5 * h * k2;
    if (!inside(p, t3)) return std::nullopt;
    double k3 = f(t3);
    double t4 = t + h * k3;
    if (!inside(p, t4)) return std::nullopt;
    double k4 = f(t4);
    double out = t + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!inside(p, out)) return std::nullopt;
    return out;
}

} // namespace

FlowTrajectory integrate_flow(const FlowSpec& spec) {
    if (spec.step <= 0.0)
        throw config_error("integrate_flow: step must be positive");
    if (!(spec.tau_lo <= 0.0 && spec.tau_hi >= 0.0))
        throw config_error("integrate_flow: the tau window must contain 0");
    const WarpingProfile& p = spec.ctx.space.profile;
    const int n = spec.ctx.m;  // slice dimension

    FlowTrajectory traj;
    traj.n = n;

    // Forward and backward sweeps from tau = 0, assembled ascending.
    std::vector<std::pair<double, double>> fwd, bwd;  // (tau, t)
    fwd.emplace_back(0.0, spec.t_init);
    if (!inside(p, spec.t_init)) {
        traj.halted_lo = traj.halted_hi = true;
    } else {
        double tau = 0.0, t = spec.t_init;
        while (tau < spec.tau_hi - 1e-12) {
            double h = std::min(spec.step, spec.tau_hi - tau);
            auto next = rk4_step(p, n, t, h);
            if (!next) {
                traj.halted_hi = true;
                break;
            }
            t = *next;
            tau += h;
            fwd.emplace_back(tau, t);
        }
        tau = 0.0;
        t = spec.t_init;
        while (tau > spec.tau_lo + 1e-12) {
            double h = std::min(spec.step, tau - spec.tau_lo);
            auto next = rk4_step(p, n, t, -h);
            if (!next) {
                traj.halted_lo = true;
                break;
            }
            t = *next;
            tau -= h;
            bwd.emplace_back(tau, t);
        }
    }

    size_t total = bwd.size() + fwd.size();
    traj.taus.reserve(total);
    traj.ts.reserve(total);
    for (auto it = bwd.rbegin(); it != bwd.rend(); ++it) {
        traj.taus.push_back(it->first);
        traj.ts.push_back(it->second);
    }
    for (const auto& q : fwd) {
        traj.taus.push_back(q.first);
        traj.ts.push_back(q.second);
    }

    traj.sigmas.reserve(total);
    traj.c_taus.reserve(total);
    for (double t : traj.ts) {
        traj.sigmas.push_back(flow_param(spec.ctx, t));
        double h = p.h(t);
        traj.c_taus.push_back(-n * p.h1(t) / (h * h));
    }
    return traj;
}

double c_tau_at(const FlowTrajectory& traj, double tau) {
    if (traj.taus.empty() || tau < traj.taus.front() - 1e-12 ||
        tau > traj.taus.back() + 1e-12)
        throw domain_error("c_tau_at: tau outside the trajectory range");
    auto it = std::lower_bound(traj.taus.begin(), traj.taus.end(), tau);
    size_t i = static_cast<size_t>(it - traj.taus.begin());
    if (i == 0)
        return traj.c_taus.front();
    if (i >= traj.taus.size())
        return traj.c_taus.back();
    double t0 = traj.taus[i - 1], t1 = traj.taus[i];
    double w = (t1 > t0) ? (tau - t0) / (t1 - t0) : 0.0;
    return (1.0 - w) * traj.c_taus[i - 1] + w * traj.c_taus[i];
}

namespace {

// t(tau) within one stored interval, re-integrated with fine RK4 substeps
// from the left sample so the root refinement is not limited by linear
// interpolation.
double t_within(const WarpingProfile& p, int n, double tau0, double t0, double dtau) {
    const int sub = 32;
    double h = dtau / sub;
    double t = t0;
    (void)tau0;
    for (int i = 0; i < sub; ++i) {
        auto next = rk4_step(p, n, t, h);
        if (!next)
            return t;
        t = *next;
    }
    return t;
}

} // namespace

LeafConsistencyReport leaf_consistency(const SolitonContext& ctx,
                                       const FlowTrajectory& traj) {
    LeafConsistencyReport rep;
    const WarpingProfile& p = ctx.space.profile;
    const int n = traj.n;
    auto g = [&](double t) {
        double h = p.h(t);
        return -n * p.h1(t) / (h * h) - ctx.c;
    };
    for (size_t i = 0; i + 1 < traj.taus.size(); ++i) {
        double ga = g(traj.ts[i]);
        double gb = g(traj.ts[i + 1]);
        if (ga == 0.0 || (ga < 0) != (gb < 0)) {
            double lo = 0.0, hi = traj.taus[i + 1] - traj.taus[i];
            if (ga == 0.0) {
                rep.tau_bar = traj.taus[i];
                rep.t_bar = traj.ts[i];
            } else {
                for (int it = 0; it < 100; ++it) {
                    double mid = 0.5 * (lo + hi);
                    double tm = t_within(p, n, traj.taus[i], traj.ts[i], mid);
                    if ((g(tm) < 0) == (ga < 0))
                        lo = mid;
                    else
                        hi = mid;
                }
                rep.tau_bar = traj.taus[i] + 0.5 * (lo + hi);
                rep.t_bar = t_within(p, n, traj.taus[i], traj.ts[i], 0.5 * (lo + hi));
            }
            rep.found = true;
            double h = p.h(rep.t_bar);
            rep.zeta_residual = std::abs(n * p.h1(rep.t_bar) + ctx.c * h * h);
            return rep;
        }
    }
    return rep;
}

} // namespace mcfs
