#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcfs/errors.hpp"
#include "mcfs/rotational.hpp"

#include <cmath>

using namespace mcfs;

TEST_CASE("exact reference curves satisfy the governing relation") {
    CHECK(soliton_residual(exact_sphere_curve(2, -1, 400)).sup <= 1e-12L);
    CHECK(soliton_residual(exact_sphere_curve(3, -2, 400)).sup <= 1e-12L);
    CHECK(soliton_residual(exact_cylinder_curve(2, -1, 3.0, 400)).sup <= 1e-12L);
    CHECK(soliton_residual(exact_plane_curve(2, -1, 3.0, 400)).sup <= 1e-12L);
}

TEST_CASE("circle of the wrong radius is a calibrated control") {
    // R = 1 with m = 2, c = -1: H = -2 but c<X,nu> = -1, residual 1
    ResidualReport rep = soliton_residual(circle_curve(2, -1, 1.0, 400));
    CHECK(double(rep.sup) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sphere curvature data") {
    ProfileCurve sphere = exact_sphere_curve(2, -1, 200);
    FundamentalForms f = fundamental_forms(sphere);
    double R = std::sqrt(2.0);
    for (size_t i = 0; i < sphere.size(); ++i) {
        CHECK(double(f.kappa1[i]) == doctest::Approx(-1 / R).epsilon(1e-12));
        CHECK(double(f.kappa2[i]) == doctest::Approx(-1 / R).epsilon(1e-12));
        CHECK(double(f.H[i]) == doctest::Approx(-2 / R).epsilon(1e-12));
        CHECK(double(f.A2[i]) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("axis launch reproduces the round sphere") {
    // launching from the south pole of the radius-sqrt(2) sphere
    ShootingConfig cfg;
    cfg.m = 2;
    cfg.c = -1;
    cfg.x0 = -std::sqrt(2.0L);
    cfg.r0 = 0;
    cfg.step = 1e-3L;
    cfg.max_length = 4.3L;
    ProfileCurve curve = shoot(cfg);
    CHECK(curve.axis_start);
    CHECK(curve.size() > 4000);

    double R = std::sqrt(2.0);
    for (size_t i = 0; i < curve.size(); i += 500) {
        double dist = std::sqrt(double(curve.x[i] * curve.x[i] + curve.r[i] * curve.r[i]));
        CHECK(dist == doctest::Approx(R).epsilon(1e-8));
    }
    CHECK(double(soliton_residual(curve).sup) <= 1e-9);
}

TEST_CASE("shot cylinder stays at the critical radius") {
    ShootingConfig cfg;
    cfg.m = 2;
    cfg.c = -1;
    cfg.x0 = 0;
    cfg.r0 = 1.0;  // sqrt(-(m-1)/c)
    cfg.theta0 = 0;
    cfg.step = 1e-3L;
    cfg.max_length = 2.0L;
    ProfileCurve curve = shoot(cfg);
    for (size_t i = 0; i < curve.size(); i += 200)
        CHECK(double(curve.r[i]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("residual refinement order on the shot sphere") {
    auto sup_at = [](long double step) {
        ShootingConfig cfg;
        cfg.m = 2;
        cfg.c = -1;
        cfg.x0 = -std::sqrt(2.0L);
        cfg.step = step;
        cfg.max_length = 4.3L;
        return double(soliton_residual(shoot(cfg)).sup);
    };
    double coarse = sup_at(2e-3L), fine = sup_at(1e-3L);
    double order = std::log2(coarse / fine);
    CHECK(order >= 3.5);
}

TEST_CASE("launch state validation") {
    ShootingConfig bad;
    bad.step = 0;
    CHECK_THROWS_AS(shoot(bad), config_error);

    // off-axis launch squeezed against the axis: immediate curvature blow-up
    ShootingConfig tight;
    tight.m = 2;
    tight.c = -1;
    tight.x0 = 0;
    tight.r0 = 1e-8L;
    tight.theta0 = 0;
    CHECK_THROWS_AS(shoot(tight), nonconvergence_error);
}

TEST_CASE("curvature data guards") {
    ProfileCurve curve = exact_plane_curve(2, -1, 1.0, 100);
    curve.r[10] = 1e-12L;  // corrupt an interior sample
    CHECK_THROWS_AS(fundamental_forms(curve), domain_error);

    ProfileCurve tiny = exact_plane_curve(2, -1, 1.0, 3);
    CHECK_THROWS_AS(soliton_residual(tiny), domain_error);
}
