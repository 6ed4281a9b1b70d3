#ifndef MCFS_SAMPLE_HPP
#define MCFS_SAMPLE_HPP

#include "mcfs/graph.hpp"
#include "mcfs/profile.hpp"
#include "mcfs/rotational.hpp"

#include <vector>

namespace mcfs {

enum class SampleKind { slice, rotational, graph };

// A hypersurface sample with every field the identity and spectrum checks
// consume cached per sample point. Three kinds:
//
//   slice      {t_bar} x P in I x_h P; a single sample point carries the
//              (constant) fields.
//   rotational a profile curve of revolution in flat R^{m+1}, viewed in
//              the cone picture h = t over the unit sphere (the context
//              must use the linear-cone profile); points indexed by
//              arclength.
//   graph      a 1-D Dirichlet graph over a flat fiber in the product
//              profile h = 1; points indexed by the fiber coordinate x,
//              arclength element ds = W dx.
//
// eta is the natural primitive of h pinned per catalog profile (t^2/2,
// e^t, cosh t, sinh t, 1 - cos t, t), so the first-integral checks can use
// their matching chi laws; derivatives of eta never see the constant.
// Derivative-based caches (delta_eta, deta, dH) come from finite
// differences along the sample, so discretization error stays visible.
struct ImmersionSample {
    SampleKind kind = SampleKind::slice;
    SolitonContext ctx;

    double t_bar = 0.0;   // slice only
    ProfileCurve curve;   // rotational only
    GraphGrid grid;       // graph only

    // per-point caches (size 1 for slices)
    std::vector<double> p;            // parameter: s, or fiber x
    std::vector<double> ds_dp;        // arclength element per unit parameter
    std::vector<double> t;            // height pi(psi)
    std::vector<double> eta;          // potential along the sample
    std::vector<double> deta;         // d eta / ds (arclength)
    std::vector<double> grad_eta_sq;  // |grad eta|^2
    std::vector<double> delta_eta;    // Laplace-Beltrami of eta
    std::vector<double> H;            // scalar mean curvature (tr A)
    std::vector<double> dH;           // dH/ds
    std::vector<double> A2;           // |A|^2
    std::vector<double> kappa1, kappa2;
    std::vector<double> Theta;        // <dt, N>
    std::vector<double> X_sq;         // |X|^2 = h(t)^2
    std::vector<double> r_orbit;      // orbit radius (rotational; else 1)
    std::vector<char> skip;           // axis-flagged points excluded from checks

    size_t size() const { return t.size(); }
};

ImmersionSample slice_sample(const SolitonContext& ctx, double t_bar);

// ctx.space must be the linear cone over the unit sphere with n = m = curve.m.
ImmersionSample rotational_sample(const SolitonContext& ctx, const ProfileCurve& curve);

// ctx.space must be the product profile; grid must be 1-D Dirichlet.
ImmersionSample graph_sample(const SolitonContext& ctx, const GraphGrid& grid);

// d f / ds along the sample (4th-order finite differences in the stored
// parameter, converted by ds_dp). Slices return {0}.
std::vector<double> intrinsic_derivative(const ImmersionSample& sample,
                                         const std::vector<double>& f);

// Laplace-Beltrami of a per-point function: the 1-D reduction
// f'' + (m-1)(r'/r) f' in arclength for rotational samples, the curve
// Laplacian (1/W) d/dx (f_x / W) for graphs, zero on slices.
std::vector<double> laplace_beltrami(const ImmersionSample& sample,
                                     const std::vector<double>& f);

} // namespace mcfs

#endif
