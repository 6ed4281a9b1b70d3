#ifndef MCFS_GEOMETRY_HPP
#define MCFS_GEOMETRY_HPP

#include "mcfs/profile.hpp"

#include <vector>

namespace mcfs {

// Potential of the conformal field X = h(t) dt: eta_hat(t) = int_{t0}^t h.
// Strictly increasing; eta_hat(t0) = 0.
double eta_hat(const SolitonContext& ctx, double t);

// Flow reparametrization s(t) = int_{t0}^t ds / h(s); strictly increasing.
double flow_param(const SolitonContext& ctx, double t);

// zeta(t) = m h'(t) + c h(t)^2. Its zeros are the slices that satisfy the
// soliton equation on their own.
double soliton_function(const SolitonContext& ctx, double t);

struct SolitonLeaf {
    double t_bar;
    double zeta_residual;
    bool tangential;  // |zeta| vanishes without a sign change (double root)
};

// All roots of zeta inside [bracket_lo, bracket_hi], found by a uniform
// 10^4-subinterval sign-change scan, bisection to 1e-10, and one Newton
// polish step. Tangential roots are detected at local minima of |zeta|
// below 1e-10 and flagged. Sorted ascending.
std::vector<SolitonLeaf> soliton_leaves(const SolitonContext& ctx,
                                        double bracket_lo, double bracket_hi);

// Tangent vector at a point (t, .) of I x_h P in an orthonormal frame
// {dt, e_1, ..., e_n}: component 0 is the dt part, the rest are fiber
// parts. Inner products are plain dot products in this frame.
using TangentVec = std::vector<double>;

// <R(U,V)W,Z> of the warped metric with a constant-curvature-kappa fiber,
// evaluated at coordinate t. Sign convention: for the hyperbolic model
// (h = sinh t, kappa = 1) every sectional curvature K(U,V) =
// <R(U,V)V,U> equals -1.
double riemann_component(const WarpedSpace& space, double t,
                         const TangentVec& U, const TangentVec& V,
                         const TangentVec& W, const TangentVec& Z);

// Ricci contraction against the conformal field X = h dt:
// Ric(Z, X) = sum_i <R(e_i, Z) X, e_i>. Equals -n (h''/h) <Z, X> for the
// implemented tensor (ambient count n; see the module notes).
double ricci_radial(const WarpedSpace& space, double t, const TangentVec& Z);

// min{ -h''/h, (kappa - h'^2)/h^2 } at t: the smaller of the two ambient
// sectional curvature branches.
double varkappa(const WarpedSpace& space, double t);

} // namespace mcfs

#endif
