#include "mcfs/sample.hpp"

#include "mcfs/errors.hpp"
#include "mcfs/fd.hpp"
#include "mcfs/geometry.hpp"

#include <cmath>

namespace mcfs {

namespace {

// Natural primitive of h, pinned so that eta' = chi(eta)^{1/2} holds with
// the catalog chi laws (custom profiles fall back to the t0-anchored
// integral; they carry no chi law anyway).
double catalog_primitive(const SolitonContext& ctx, double t) {
    switch (ctx.space.profile.name) {
        case ProfileName::euclidean_cone: return t * t / 2;
        case ProfileName::horospherical: return std::exp(t);
        case ProfileName::geodesic_spherical: return std::cosh(t);
        case ProfileName::equidistant: return std::sinh(t);
        case ProfileName::spherical: return 1 - std::cos(t);
        case ProfileName::product: return t;
        case ProfileName::custom: return eta_hat(ctx, t);
    }
    return eta_hat(ctx, t);
}

} // namespace

ImmersionSample slice_sample(const SolitonContext& ctx, double t_bar) {
    ctx.validate();
    ctx.space.profile.check_domain(t_bar);
    ImmersionSample s;
    s.kind = SampleKind::slice;
    s.ctx = ctx;
    s.t_bar = t_bar;
    double h = ctx.space.profile.h(t_bar);
    double h1 = ctx.space.profile.h1(t_bar);
    double k = -h1 / h;  // principal curvature w.r.t. N = dt
    s.p = {0.0};
    s.ds_dp = {1.0};
    s.t = {t_bar};
    s.eta = {catalog_primitive(ctx, t_bar)};
    s.deta = {0.0};
    s.grad_eta_sq = {0.0};
    s.delta_eta = {0.0};
    s.H = {ctx.m * k};
    s.dH = {0.0};
    s.A2 = {ctx.m * k * k};
    s.kappa1 = {k};
    s.kappa2 = {k};
    s.Theta = {1.0};
    s.X_sq = {h * h};
    s.r_orbit = {1.0};
    s.skip = {0};
    return s;
}

ImmersionSample rotational_sample(const SolitonContext& ctx, const ProfileCurve& curve) {
    ctx.validate();
    if (ctx.space.profile.name != ProfileName::euclidean_cone ||
        ctx.space.kappa != 1.0 || ctx.space.n != curve.m || ctx.m != curve.m)
        throw config_error("rotational_sample: context must be the linear cone over "
                           "the unit m-sphere with n = m = curve.m");
    if (std::abs(double(curve.c) - ctx.c) > 1e-14)
        throw config_error("rotational_sample: curve.c and ctx.c disagree");
    size_t n = curve.size();
    if (n < 6)
        throw config_error("rotational_sample: need at least 6 samples");

    ImmersionSample s;
    s.kind = SampleKind::rotational;
    s.ctx = ctx;
    s.curve = curve;
    s.p.resize(n);
    s.ds_dp.assign(n, 1.0);
    s.t.resize(n);
    s.eta.resize(n);
    s.deta.resize(n);
    s.grad_eta_sq.resize(n);
    s.H.resize(n);
    s.A2.resize(n);
    s.kappa1.resize(n);
    s.kappa2.resize(n);
    s.Theta.resize(n);
    s.X_sq.resize(n);
    s.r_orbit.resize(n);
    s.skip.assign(n, 0);

    FundamentalForms forms = fundamental_forms(curve);
    for (size_t i = 0; i < n; ++i) {
        double x = double(curve.x[i]), r = double(curve.r[i]);
        double th = double(curve.theta[i]);
        double dist = std::sqrt(x * x + r * r);
        s.p[i] = double(curve.s[i]);
        s.t[i] = dist;
        s.eta[i] = dist * dist / 2;
        s.deta[i] = x * std::cos(th) + r * std::sin(th);
        s.grad_eta_sq[i] = s.deta[i] * s.deta[i];
        s.H[i] = double(forms.H[i]);
        s.A2[i] = double(forms.A2[i]);
        s.kappa1[i] = double(forms.kappa1[i]);
        s.kappa2[i] = double(forms.kappa2[i]);
        double xnu = r * std::cos(th) - x * std::sin(th);
        s.Theta[i] = dist > 0 ? xnu / dist : 1.0;
        s.X_sq[i] = dist * dist;
        s.r_orbit[i] = r;
        bool axis = (i == 0 && curve.axis_start) || (i + 1 == n && curve.axis_end);
        if (axis || r < 1e-9)
            s.skip[i] = 1;
    }
    // dH and delta_eta are finite differences of the cached data, done in
    // extended precision on the long double curve: in double the quantization
    // of eta alone puts eps |eta| / dp^2 noise near 5e-10 on a 400-sample
    // curve, swamping residual bars at 1e-10.
    std::vector<rreal> eta_ld(n);
    for (size_t i = 0; i < n; ++i)
        eta_ld[i] = (curve.x[i] * curve.x[i] + curve.r[i] * curve.r[i]) / 2;
    rreal dp = curve.s[1] - curve.s[0];
    std::vector<rreal> dH_ld = derivative_uniform(forms.H, dp);
    std::vector<rreal> e1 = derivative_uniform(eta_ld, dp);
    std::vector<rreal> e2 = second_derivative_uniform(eta_ld, dp);
    s.dH.resize(n);
    s.delta_eta.assign(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
        s.dH[i] = double(dH_ld[i]);
        if (s.skip[i])
            continue;
        rreal rp = std::sin(curve.theta[i]);
        s.delta_eta[i] =
            double(e2[i] + (ctx.m - 1) * (rp / curve.r[i]) * e1[i]);
    }
    return s;
}

ImmersionSample graph_sample(const SolitonContext& ctx, const GraphGrid& grid) {
    ctx.validate();
    grid.validate();
    if (ctx.space.profile.name != ProfileName::product)
        throw config_error("graph_sample: context must use the product profile");
    if (grid.d != 1 || grid.topology != Topology::dirichlet)
        throw config_error("graph_sample: needs a 1-D Dirichlet grid");

    size_t n = grid.nodes();
    ImmersionSample s;
    s.kind = SampleKind::graph;
    s.ctx = ctx;
    s.grid = grid;
    s.p.resize(n);
    for (size_t i = 0; i < n; ++i)
        s.p[i] = grid.coord(int(i));
    // the derivative chain is evaluated in extended precision: H = u''/W^3
    // feeds second differences downstream (eigen_check_H), and double FD
    // noise amplified by 1/dx^2 twice would dominate refinement studies
    std::vector<long double> ul(grid.u.begin(), grid.u.end());
    long double dx = grid.dx();
    std::vector<long double> ux = derivative_uniform(ul, dx);
    std::vector<long double> uxx = second_derivative_uniform(ul, dx);
    s.ds_dp.resize(n);
    s.t = grid.u;
    s.eta = grid.u;
    s.deta.resize(n);
    s.grad_eta_sq.resize(n);
    s.H.resize(n);
    s.A2.resize(n);
    s.kappa1.resize(n);
    s.kappa2.assign(n, 0.0);
    s.Theta.resize(n);
    s.X_sq.assign(n, 1.0);
    s.r_orbit.assign(n, 1.0);
    s.skip.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        long double W = std::sqrt(1 + ux[i] * ux[i]);
        long double k = uxx[i] / (W * W * W);
        s.ds_dp[i] = double(W);
        s.deta[i] = double(ux[i] / W);
        s.grad_eta_sq[i] = s.deta[i] * s.deta[i];
        s.kappa1[i] = double(k);
        s.H[i] = double(k);
        s.A2[i] = double(k * k);
        s.Theta[i] = double(1 / W);
    }
    s.dH = intrinsic_derivative(s, s.H);
    s.delta_eta = laplace_beltrami(s, s.eta);
    return s;
}

std::vector<double> intrinsic_derivative(const ImmersionSample& sample,
                                         const std::vector<double>& f) {
    if (sample.kind == SampleKind::slice)
        return std::vector<double>(f.size(), 0.0);
    double dp = sample.p[1] - sample.p[0];
    std::vector<double> d = derivative_uniform(f, dp);
    for (size_t i = 0; i < d.size(); ++i)
        d[i] /= sample.ds_dp[i];
    return d;
}

std::vector<double> laplace_beltrami(const ImmersionSample& sample,
                                     const std::vector<double>& f) {
    size_t n = f.size();
    if (sample.kind == SampleKind::slice)
        return std::vector<double>(n, 0.0);
    double dp = sample.p[1] - sample.p[0];
    if (sample.kind == SampleKind::rotational) {
        std::vector<double> f1 = derivative_uniform(f, dp);
        std::vector<double> f2 = second_derivative_uniform(f, dp);
        std::vector<double> out(n, 0.0);
        int m = sample.ctx.m;
        for (size_t i = 0; i < n; ++i) {
            if (sample.skip[i])
                continue;
            double rprime = std::sin(double(sample.curve.theta[i]));
            out[i] = f2[i] + (m - 1) * (rprime / sample.r_orbit[i]) * f1[i];
        }
        return out;
    }
    // graph: (1/W) d/dx (f_x / W)
    std::vector<double> fx = derivative_uniform(f, dp);
    std::vector<double> flux(n);
    for (size_t i = 0; i < n; ++i)
        flux[i] = fx[i] / sample.ds_dp[i];
    std::vector<double> out = derivative_uniform(flux, dp);
    for (size_t i = 0; i < n; ++i)
        out[i] /= sample.ds_dp[i];
    return out;
}

} // namespace mcfs
