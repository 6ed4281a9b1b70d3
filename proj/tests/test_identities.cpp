#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcfs/errors.hpp"
#include "mcfs/identities.hpp"
#include "mcfs/rotational.hpp"
#include "mcfs/sample.hpp"

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
    ctx.t0 = 1;
    return ctx;
}

ImmersionSample sphere_sample(size_t n = 400) {
    return rotational_sample(cone_ctx(), exact_sphere_curve(2, -1, n));
}

ProfileCurve shot_sphere(long double step) {
    ShootingConfig cfg;
    cfg.m = 2;
    cfg.c = -1;
    cfg.x0 = -std::sqrt(2.0L);
    cfg.step = step;
    cfg.max_length = 4.3L;
    return shoot(cfg);
}

} // namespace

TEST_CASE("all identities vanish on the exact solitons") {
    std::vector<ImmersionSample> samples;
    samples.push_back(slice_sample(cone_ctx(), std::sqrt(2.0)));
    samples.push_back(sphere_sample());
    samples.push_back(rotational_sample(cone_ctx(), exact_cylinder_curve(2, -1, 3.0, 400)));
    samples.push_back(rotational_sample(cone_ctx(), exact_plane_curve(2, -1, 3.0, 400)));
    for (const auto& s : samples) {
        CAPTURE(int(s.kind));
        CHECK(check_delta_eta(s).sup <= 1e-10);
        CHECK(check_delta_eta_weighted(s).sup <= 1e-10);
        CHECK(check_grad_H(s).sup <= 1e-10);
        CHECK(conserved_quantity(s).drift <= 1e-10);
        CHECK(simons_residual(s, 0.0).sup <= 1e-10);
        CHECK(delta_H_residual(s).sup <= 1e-10);
    }
}

TEST_CASE("non-soliton slice is a calibrated control") {
    // zeta(1) = 1 for the linear cone with m = 2, c = -1
    ImmersionSample s = slice_sample(cone_ctx(), 1.0);
    CHECK(check_delta_eta_weighted(s).sup == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("conserved quantity on the normalized shrinker sphere") {
    ConservedReport rep = conserved_quantity(sphere_sample());
    for (size_t i = 0; i < rep.Q.size(); ++i)
        CHECK(std::abs(rep.Q[i]) <= 1e-10);
    CHECK(rep.drift <= 1e-10);

    ImmersionSample shot = rotational_sample(cone_ctx(), shot_sphere(1e-3L));
    CHECK(conserved_quantity(shot).drift <= 1e-6);
}

TEST_CASE("profiles without a first-integral law are rejected") {
    SolitonContext ctx;
    ctx.space.profile = WarpingProfile::catalog(ProfileName::equidistant);
    ctx.space.kappa = -1;
    ctx.space.n = 2;
    ctx.m = 2;
    ctx.c = -1;
    ctx.t0 = 0;
    ImmersionSample s = slice_sample(ctx, 0.5);
    CHECK_THROWS_AS(conserved_quantity(s), config_error);
}

TEST_CASE("discretized identities converge on the shot sphere") {
    ImmersionSample coarse = rotational_sample(cone_ctx(), shot_sphere(2e-3L));
    ImmersionSample fine = rotational_sample(cone_ctx(), shot_sphere(1e-3L));
    for (auto check : {check_delta_eta, check_grad_H}) {
        IdentityReport rc = check(coarse), rf = check(fine);
        IdentityReport with = observed_order(rc, rf);
        REQUIRE(with.order.has_value());
        CHECK(*with.order >= 1.9);
    }
    IdentityReport sc = simons_residual(coarse, 0.0), sf = simons_residual(fine, 0.0);
    CHECK(*observed_order(sc, sf).order >= 1.5);
}

TEST_CASE("umbilicity gap") {
    CHECK(std::abs(umbilicity_gap(sphere_sample())) <= 1e-10);
    CHECK(umbilicity_gap(rotational_sample(cone_ctx(), exact_cylinder_curve(2, -1, 3.0, 400))) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(umbilicity_gap(rotational_sample(cone_ctx(),
                                                    exact_plane_curve(2, -1, 3.0, 400)))) <=
          1e-10);
}

TEST_CASE("height estimates are sharp on the three witnesses") {
    HeightReport sph = height_estimate_check(sphere_sample());
    CHECK(std::abs(sph.slack) <= 1e-8);
    CHECK(sph.passes);
    CHECK(sph.H_ok);

    SolitonContext hctx;
    hctx.space.profile = WarpingProfile::catalog(ProfileName::horospherical);
    hctx.space.kappa = 0;
    hctx.space.n = 3;
    hctx.m = 3;
    hctx.c = -3;
    hctx.t0 = 0;
    HeightReport horo = height_estimate_check(slice_sample(hctx, 0.0));
    CHECK(std::abs(horo.slack) <= 1e-8);
    CHECK(horo.H_ok);

    SolitonContext gctx;
    gctx.space.profile = WarpingProfile::catalog(ProfileName::geodesic_spherical);
    gctx.space.kappa = 1;
    gctx.space.n = 2;
    gctx.m = 2;
    gctx.c = -1;
    gctx.t0 = 1;
    HeightReport geo =
        height_estimate_check(slice_sample(gctx, std::acosh(1 + std::sqrt(2.0))));
    CHECK(std::abs(geo.slack) <= 1e-8);
    CHECK(geo.H_ok);
}

TEST_CASE("height estimates hold on every verified soliton sample") {
    for (const auto& s :
         {sphere_sample(), rotational_sample(cone_ctx(), exact_cylinder_curve(2, -1, 3.0, 400)),
          rotational_sample(cone_ctx(), exact_plane_curve(2, -1, 3.0, 400)),
          rotational_sample(cone_ctx(), shot_sphere(1e-3L))}) {
        HeightReport rep = height_estimate_check(s);
        CHECK(rep.passes);
        CHECK(rep.H_ok);
    }
}

TEST_CASE("slice second fundamental form decomposition") {
    SliceGeometry g = slice_geometry(cone_ctx(), std::sqrt(2.0), true);
    CHECK(g.dt_component == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(g.soliton_criterion);

    SolitonContext pctx;
    pctx.space.profile = WarpingProfile::catalog(ProfileName::product);
    pctx.space.kappa = 0;
    pctx.space.n = 2;
    pctx.m = 2;
    pctx.c = -1;
    pctx.t0 = 0;
    SliceGeometry p = slice_geometry(pctx, 0.5, true);
    CHECK(p.dt_component == doctest::Approx(0.0));
    CHECK_FALSE(p.soliton_criterion);

    SolitonContext sctx;
    sctx.space.profile = WarpingProfile::catalog(ProfileName::spherical);
    sctx.space.kappa = 1;
    sctx.space.n = 2;
    sctx.m = 2;
    sctx.c = -1;
    sctx.t0 = 1.5;
    SliceGeometry q = slice_geometry(sctx, M_PI / 2, true);
    CHECK(q.dt_component == doctest::Approx(0.0));
    CHECK_FALSE(q.soliton_criterion);
}

TEST_CASE("confinement bookkeeping for the lowest eigenvalue") {
    SolitonContext ctx = cone_ctx();
    BartaReport r1 = barta_lambda1_bound(ctx, 1.0, 2.0, 0.0);
    CHECK(r1.zeta_star == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(r1.consistent);

    BartaReport r2 = barta_lambda1_bound(ctx, 0.5, 1.0, 0.0);
    CHECK(r2.zeta_star == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_FALSE(r2.consistent);

    BartaReport r3 = barta_lambda1_bound(ctx, 0.5, 2.0, 1.0);
    CHECK(r3.b_threshold ==
          doctest::Approx(std::sqrt(16.25 / 9.0)).epsilon(1e-12));
}

TEST_CASE("sample construction guards") {
    SolitonContext bad = cone_ctx();
    bad.space.kappa = 0;
    CHECK_THROWS_AS(rotational_sample(bad, exact_sphere_curve(2, -1, 100)), config_error);
    CHECK_THROWS_AS(slice_sample(cone_ctx(), -1.0), domain_error);
}
