#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcfs/errors.hpp"
#include "mcfs/geometry.hpp"
#include "mcfs/quadrature.hpp"

#include <cmath>

using namespace mcfs;

namespace {

SolitonContext cone_ctx(int m = 2, double c = -1) {
    SolitonContext ctx;
    ctx.space.profile = WarpingProfile::catalog(ProfileName::euclidean_cone);
    ctx.space.kappa = 1;
    ctx.space.n = m;
    ctx.m = m;
    ctx.c = c;
    ctx.t0 = 1.0;
    return ctx;
}

} // namespace

TEST_CASE("adaptive quadrature") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -6.0, 6.0) ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));
    CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("potential and flow parameter, linear cone") {
    SolitonContext ctx = cone_ctx();
    for (double t : {0.5, 1.0, 2.0, 3.7}) {
        CHECK(eta_hat(ctx, t) == doctest::Approx((t * t - 1) / 2).epsilon(1e-12));
        CHECK(flow_param(ctx, t) == doctest::Approx(std::log(t)).epsilon(1e-12));
    }
    CHECK(soliton_function(ctx, 2.0) == doctest::Approx(2.0 - 4.0));
}

TEST_CASE("soliton leaves of the three witness profiles") {
    {
        auto leaves = soliton_leaves(cone_ctx(), 0.1, 10.0);
        REQUIRE(leaves.size() == 1);
        CHECK(leaves[0].t_bar == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
        CHECK(std::abs(leaves[0].zeta_residual) <= 1e-12);
    }
    {
        SolitonContext ctx;
        ctx.space.profile = WarpingProfile::catalog(ProfileName::horospherical);
        ctx.space.kappa = 0;
        ctx.space.n = 3;
        ctx.m = 3;
        ctx.c = -3;
        ctx.t0 = 0;
        auto leaves = soliton_leaves(ctx, -2.0, 2.0);
        REQUIRE(leaves.size() == 1);
        CHECK(std::abs(leaves[0].t_bar) <= 1e-10);
        CHECK(std::abs(leaves[0].zeta_residual) <= 1e-12);
    }
    {
        SolitonContext ctx;
        ctx.space.profile = WarpingProfile::catalog(ProfileName::geodesic_spherical);
        ctx.space.kappa = 1;
        ctx.space.n = 2;
        ctx.m = 2;
        ctx.c = -1;
        ctx.t0 = 1;
        auto leaves = soliton_leaves(ctx, 0.1, 5.0);
        REQUIRE(leaves.size() == 1);
        CHECK(leaves[0].t_bar ==
              doctest::Approx(std::acosh(1 + std::sqrt(2.0))).epsilon(1e-10));
        CHECK(std::abs(leaves[0].zeta_residual) <= 1e-12);
    }
}

TEST_CASE("no leaves for expanders of the cone") {
    SolitonContext ctx = cone_ctx(2, 1.0);  // zeta = 2 + t^2 > 0
    CHECK(soliton_leaves(ctx, 0.1, 10.0).empty());
}

TEST_CASE("curvature tensor of the hyperbolic model") {
    // h = sinh t over the unit sphere: every sectional curvature is -1
    WarpedSpace space;
    space.profile = WarpingProfile::catalog(ProfileName::geodesic_spherical);
    space.kappa = 1;
    space.n = 3;
    double t = 1.3;
    TangentVec dt = {1, 0, 0, 0}, e1 = {0, 1, 0, 0}, e2 = {0, 0, 1, 0};
    CHECK(riemann_component(space, t, dt, e1, e1, dt) == doctest::Approx(-1.0));
    CHECK(riemann_component(space, t, e1, e2, e2, e1) == doctest::Approx(-1.0));
    auto ok = space.space_form_check();
    REQUIRE(ok.has_value());
    CHECK(*ok == doctest::Approx(-1.0));
}

TEST_CASE("curvature tensor symmetries") {
    WarpedSpace space;
    space.profile = WarpingProfile::catalog(ProfileName::spherical);
    space.kappa = 1;
    space.n = 3;
    double t = 1.1;
    TangentVec U = {0.3, -1.2, 0.5, 0.7}, V = {1.1, 0.2, -0.4, 0.0};
    TangentVec W = {-0.6, 0.9, 1.3, -0.2}, Z = {0.8, -0.5, 0.1, 1.4};
    double ruvwz = riemann_component(space, t, U, V, W, Z);
    CHECK(riemann_component(space, t, V, U, W, Z) == doctest::Approx(-ruvwz));
    CHECK(riemann_component(space, t, U, V, Z, W) == doctest::Approx(-ruvwz));
    CHECK(riemann_component(space, t, W, Z, U, V) == doctest::Approx(ruvwz));
    // first Bianchi
    double cyc = riemann_component(space, t, U, V, W, Z) +
                 riemann_component(space, t, V, W, U, Z) +
                 riemann_component(space, t, W, U, V, Z);
    CHECK(cyc == doctest::Approx(0.0));
}

TEST_CASE("radial Ricci contraction") {
    WarpedSpace space;
    space.profile = WarpingProfile::catalog(ProfileName::equidistant);
    space.kappa = -1;  // hyperbolic space in equidistant coordinates
    space.n = 2;
    double t = 0.7;
    double h = std::cosh(t), h2 = std::cosh(t);
    TangentVec Z = {0.4, -0.3, 1.1};
    // Ric(Z, X) = -n (h''/h) <Z, X> with X = h dt
    double expect = -space.n * (h2 / h) * (Z[0] * h);
    CHECK(ricci_radial(space, t, Z) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("ambient curvature floor varkappa") {
    WarpedSpace cone;
    cone.profile = WarpingProfile::catalog(ProfileName::euclidean_cone);
    cone.kappa = 1;
    cone.n = 2;
    CHECK(varkappa(cone, 2.0) == doctest::Approx(0.0));

    WarpedSpace sph;
    sph.profile = WarpingProfile::catalog(ProfileName::spherical);
    sph.kappa = 1;
    sph.n = 2;
    CHECK(varkappa(sph, 1.0) == doctest::Approx(1.0));

    WarpedSpace mixed;
    mixed.profile = WarpingProfile::catalog(ProfileName::product);
    mixed.kappa = -2;
    mixed.n = 2;
    CHECK(varkappa(mixed, 0.0) == doctest::Approx(-2.0));
}
