#include "mcfs/geometry.hpp"
#include "mcfs/errors.hpp"
#include "mcfs/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace mcfs {

double eta_hat(const SolitonContext& ctx, double t) {
    ctx.space.profile.check_domain(t);
    return integrate(ctx.space.profile.h, ctx.t0, t);
}

double flow_param(const SolitonContext& ctx, double t) {
    ctx.space.profile.check_domain(t);
    const auto& h = ctx.space.profile.h;
    return integrate([&h](double s) { return 1.0 / h(s); }, ctx.t0, t);
}

double soliton_function(const SolitonContext& ctx, double t) {
    ctx.space.profile.check_domain(t);
    double h = ctx.space.profile.h(t);
    return ctx.m * ctx.space.profile.h1(t) + ctx.c * h * h;
}

namespace {

// Bisection on a bracketed sign change, then one Newton polish step using
// zeta' = m h'' + 2 c h h'.
double polish_root(const SolitonContext& ctx, double a, double b, double fa) {
    for (int i = 0; i < 200 && b - a > 1e-10; ++i) {
        double mid = 0.5 * (a + b);
        double fm = soliton_function(ctx, mid);
        if ((fm < 0) == (fa < 0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    double t = 0.5 * (a + b);
    double zp = ctx.m * ctx.space.profile.h2(t) +
                2.0 * ctx.c * ctx.space.profile.h(t) * ctx.space.profile.h1(t);
    if (zp != 0.0) {
        double step = soliton_function(ctx, t) / zp;
        double polished = t - step;
        if (polished > a - (b - a) && polished < b + (b - a) &&
            ctx.space.profile.contains(polished))
            t = polished;
    }
    return t;
}

} // namespace

std::vector<SolitonLeaf> soliton_leaves(const SolitonContext& ctx,
                                        double bracket_lo, double bracket_hi) {
    if (!(bracket_lo < bracket_hi))
        throw domain_error("soliton_leaves: empty bracket");
    ctx.space.profile.check_domain(bracket_lo);
    ctx.space.profile.check_domain(bracket_hi);

    const int kScan = 10000;
    std::vector<double> ts(kScan + 1), zs(kScan + 1);
    for (int i = 0; i <= kScan; ++i) {
        ts[i] = bracket_lo + (bracket_hi - bracket_lo) * i / kScan;
        zs[i] = soliton_function(ctx, ts[i]);
    }

    std::vector<SolitonLeaf> leaves;
    for (int i = 0; i < kScan; ++i) {
        if (zs[i] == 0.0) {
            leaves.push_back({ts[i], 0.0, false});
            continue;
        }
        if ((zs[i] < 0) != (zs[i + 1] < 0)) {
            double root = polish_root(ctx, ts[i], ts[i + 1], zs[i]);
            leaves.push_back({root, std::abs(soliton_function(ctx, root)), false});
        } else if (i > 0) {
            // Tangential root: |zeta| dips below 1e-10 at an interior local
            // minimum with no sign change around it.
            double a0 = std::abs(zs[i - 1]), a1 = std::abs(zs[i]), a2 = std::abs(zs[i + 1]);
            if (a1 < 1e-10 && a1 <= a0 && a1 <= a2 &&
                (zs[i - 1] < 0) == (zs[i + 1] < 0)) {
                leaves.push_back({ts[i], a1, true});
            }
        }
    }
    std::sort(leaves.begin(), leaves.end(),
              [](const SolitonLeaf& a, const SolitonLeaf& b) { return a.t_bar < b.t_bar; });
    return leaves;
}

namespace {

double dot(const TangentVec& a, const TangentVec& b) {
    double s = 0.0;
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        s += a[i] * b[i];
    return s;
}

// Fiber (dt-orthogonal) part dot product: skip component 0.
double fdot(const TangentVec& a, const TangentVec& b) {
    double s = 0.0;
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 1; i < n; ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace

double riemann_component(const WarpedSpace& space, double t,
                         const TangentVec& U, const TangentVec& V,
                         const TangentVec& W, const TangentVec& Z) {
    space.profile.check_domain(t);
    double h = space.profile.h(t);
    double h1 = space.profile.h1(t);
    double h2 = space.profile.h2(t);
    double fiber = (h1 * h1 - space.kappa) / (h * h);
    double radial = h2 / h;
    double ut = U.empty() ? 0.0 : U[0];
    double vt = V.empty() ? 0.0 : V[0];
    double wt = W.empty() ? 0.0 : W[0];
    double zt = Z.empty() ? 0.0 : Z[0];
    double term1 = fiber * (fdot(U, W) * fdot(V, Z) - fdot(V, W) * fdot(U, Z));
    double term2 = radial * (ut * wt * fdot(Z, V) - ut * zt * fdot(W, V) -
                             vt * wt * fdot(Z, U) + vt * zt * fdot(W, U));
    return term1 + term2;
}

double ricci_radial(const WarpedSpace& space, double t, const TangentVec& Z) {
    space.profile.check_domain(t);
    size_t dim = static_cast<size_t>(space.n) + 1;
    TangentVec X(dim, 0.0);
    X[0] = space.profile.h(t);
    double ric = 0.0;
    for (size_t i = 0; i < dim; ++i) {
        TangentVec e(dim, 0.0);
        e[i] = 1.0;
        ric += riemann_component(space, t, e, Z, X, e);
    }
    return ric;
}

double varkappa(const WarpedSpace& space, double t) {
    space.profile.check_domain(t);
    double h = space.profile.h(t);
    double h1 = space.profile.h1(t);
    double radial = -space.profile.h2(t) / h;
    double fiber = (space.kappa - h1 * h1) / (h * h);
    return std::min(radial, fiber);
}

} // namespace mcfs
