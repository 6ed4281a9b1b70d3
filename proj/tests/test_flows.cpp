#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcfs/errors.hpp"
#include "mcfs/flows.hpp"

#include <cmath>

using namespace mcfs;

namespace {

SolitonContext make(ProfileName name, int m, double c, double t0, double kappa) {
    SolitonContext ctx;
    ctx.space.profile = WarpingProfile::catalog(name);
    ctx.space.kappa = kappa;
    ctx.space.n = m;
    ctx.m = m;
    ctx.c = c;
    ctx.t0 = t0;
    return ctx;
}

double flow_error(ProfileName name, int n, double t_init, double tau_lo,
                  double tau_hi, double kappa) {
    FlowSpec spec;
    spec.ctx = make(name, n, -1.0, t_init, kappa);
    spec.t_init = t_init;
    spec.tau_lo = tau_lo;
    spec.tau_hi = tau_hi;
    spec.step = 1e-3;
    FlowTrajectory traj = integrate_flow(spec);
    ClosedFormFlow exact = closed_form_flow(name, n, t_init);
    double sup = 0;
    for (size_t i = 0; i < traj.taus.size(); ++i)
        sup = std::max(sup, std::abs(traj.ts[i] - exact(traj.taus[i])));
    return sup;
}

} // namespace

TEST_CASE("closed-form flow values") {
    // linear cone: t = sqrt(t0^2 - 2 n tau)
    ClosedFormFlow f = closed_form_flow(ProfileName::euclidean_cone, 2, 2.0);
    CHECK(f(0.5) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(f.window_hi == doctest::Approx(1.0));
    // exponential: t = t0 - n tau
    ClosedFormFlow g = closed_form_flow(ProfileName::horospherical, 3, 0.0);
    CHECK(g(0.4) == doctest::Approx(-1.2).epsilon(1e-14));
    // sinh: cosh t = cosh(t0) e^{-n tau}
    ClosedFormFlow s = closed_form_flow(ProfileName::geodesic_spherical, 2, 2.0);
    CHECK(s(0.3) ==
          doctest::Approx(std::acosh(std::cosh(2.0) * std::exp(-0.6))).epsilon(1e-14));
    // cosh: sinh t = sinh(t0) e^{-n tau}, mirrored branch for t0 < 0
    ClosedFormFlow e = closed_form_flow(ProfileName::equidistant, 2, -1.0);
    CHECK(e(0.5) ==
          doctest::Approx(std::asinh(std::sinh(-1.0) * std::exp(-1.0))).epsilon(1e-14));
    // sin: cos t = cos(t0) e^{n tau}
    ClosedFormFlow p = closed_form_flow(ProfileName::spherical, 2, M_PI / 3);
    CHECK(p(0.2) == doctest::Approx(std::acos(0.5 * std::exp(0.4))).epsilon(1e-14));
    CHECK(p.window_hi == doctest::Approx(-std::log(0.5) / 2).epsilon(1e-12));
    CHECK_THROWS_AS(f(1.5), domain_error);
}

TEST_CASE("RK4 flow matches the closed forms to 1e-8") {
    CHECK(flow_error(ProfileName::euclidean_cone, 2, 2.0, -0.5, 0.9, 1) <= 1e-8);
    CHECK(flow_error(ProfileName::horospherical, 3, 0.0, -1.0, 1.0, 0) <= 1e-8);
    CHECK(flow_error(ProfileName::geodesic_spherical, 2, 2.0, -0.5, 0.55, 1) <= 1e-8);
    CHECK(flow_error(ProfileName::equidistant, 2, std::asinh(1.0), -1.0, 2.0, -1) <= 1e-8);
    CHECK(flow_error(ProfileName::spherical, 2, M_PI / 3, -1.0, 0.25, 1) <= 1e-8);
}

TEST_CASE("product slices are stationary") {
    FlowSpec spec;
    spec.ctx = make(ProfileName::product, 2, -1.0, 0.3, 0);
    spec.t_init = 0.3;
    spec.tau_lo = -1;
    spec.tau_hi = 1;
    spec.step = 1e-2;
    FlowTrajectory traj = integrate_flow(spec);
    for (double t : traj.ts)
        CHECK(t == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("integration halts cleanly at the interval boundary") {
    // spherical flow collapses toward t = 0 in finite forward time
    FlowSpec spec;
    spec.ctx = make(ProfileName::spherical, 2, -1.0, M_PI / 3, 1);
    spec.t_init = M_PI / 3;
    spec.tau_lo = 0;
    spec.tau_hi = 2.0;
    spec.step = 1e-3;
    FlowTrajectory traj = integrate_flow(spec);
    CHECK(traj.halted_hi);
    CHECK(traj.taus.back() < 2.0);
    CHECK(traj.ts.back() > 0.0);
}

TEST_CASE("interpolated speed and leaf consistency") {
    FlowSpec spec;
    spec.ctx = make(ProfileName::euclidean_cone, 2, -1.0, 2.0, 1);
    spec.t_init = 2.0;
    spec.tau_lo = -0.5;
    spec.tau_hi = 0.9;
    spec.step = 1e-3;
    FlowTrajectory traj = integrate_flow(spec);

    // c_tau = -n h'/h^2 = -2/t^2; at tau = 0 the slice is t = 2
    CHECK(c_tau_at(traj, 0.0) == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK_THROWS_AS(c_tau_at(traj, 5.0), domain_error);

    // c = -1 is attained where t = sqrt(2), the soliton leaf
    LeafConsistencyReport leaf = leaf_consistency(spec.ctx, traj);
    REQUIRE(leaf.found);
    CHECK(leaf.t_bar == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    CHECK(std::abs(leaf.zeta_residual) <= 1e-6);
}
