#ifndef MCFS_IDENTITIES_HPP
#define MCFS_IDENTITIES_HPP

#include "mcfs/sample.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mcfs {

struct IdentityReport {
    std::string name;
    double sup = 0.0;
    double l2 = 0.0;                // root-mean-square over checked points
    double grid = 0.0;              // grid parameter (step) of the sample
    std::optional<double> order;    // only set by observed_order
};

// Observed convergence order from the same check at two resolutions.
IdentityReport observed_order(const IdentityReport& coarse, const IdentityReport& fine);

// Residual of Delta eta = m h'(t) + |H|^2 / c.
IdentityReport check_delta_eta(const ImmersionSample& sample);

// Residual of the drift form: Delta eta + c|grad eta|^2 = m h'(t) + c|X|^2.
IdentityReport check_delta_eta_weighted(const ImmersionSample& sample);

// Residual of grad H = -c A(grad eta), reduced along the profile direction:
// dH/ds + c kappa1 (d eta/ds).
IdentityReport check_grad_H(const ImmersionSample& sample);

// First integral Q = |H|^2 + c^2 |grad eta|^2 - c^2 chi(eta) evaluated per
// point; drift = max - min. The chi law per profile: 2 tau (linear cone),
// tau^2 (exponential), tau^2 - 1 (sinh), 2 tau - tau^2 (sin). Profiles
// without a chi law raise config_error.
struct ConservedReport {
    std::vector<double> Q;
    double drift = 0.0;
};
ConservedReport conserved_quantity(const ImmersionSample& sample);

// Residual of the Simons-type equation in a space form of curvature
// kappa_bar: (1/2) Delta_{-c eta} |A|^2 =
//   |grad A|^2 - (c h' + |A|^2)|A|^2 + (m |A|^2 - H^2) kappa_bar,
// with |grad A|^2 = (kappa1')^2 + 3(m-1)(kappa2')^2 and the kappa2
// derivative from the Codazzi relation kappa2' = (kappa1 - kappa2) r'/r.
// Slice and rotational samples only.
IdentityReport simons_residual(const ImmersionSample& sample, double kappa_bar);

// Residual of (1/2) Delta_{-c eta} H^2 =
//   -(c h' + |A|^2) H^2 + |grad H|^2 - H^2 (Ric(N,N) + m h''/h).
IdentityReport delta_H_residual(const ImmersionSample& sample);

// sup over points of |A|^2 - H^2/m (vanishes exactly on umbilic samples).
double umbilicity_gap(const ImmersionSample& sample);

// Height reach t* = sup t against the profile's lower bound for compact
// solitons with c < 0, plus the mean curvature bound
// inf |H|^2 <= -m c h'(t*).
struct HeightReport {
    double t_star = 0.0;
    double bound = 0.0;
    double slack = 0.0;       // t_star - bound
    bool passes = false;      // t_star >= bound - tol
    double inf_H2 = 0.0;
    double H_bound = 0.0;     // -m c h'(t_star)
    bool H_ok = false;
};
HeightReport height_estimate_check(const ImmersionSample& sample);

// Second fundamental form decomposition of the slice {t_bar} x P relative
// to submanifolds of the fiber, and the slice soliton criterion
// (zeta(t_bar) = 0 together with minimality inside the fiber).
struct SliceGeometry {
    double dt_component = 0.0;     // -m h'(t_bar)/h(t_bar)
    double fiber_component = 0.0;  // 0 when the minimality flag holds
    bool soliton_criterion = false;
};
SliceGeometry slice_geometry(const SolitonContext& ctx, double t_bar,
                             bool minimal_submanifold);

// Spectral consistency bound for solitons confined to [a, b] with weighted
// volume growth rate alpha: zeta* = inf_{[a,b]} zeta must not exceed
// (alpha^2/4)(eta_hat(b) - eta_hat(a)). Also reports the b-threshold
// sqrt((8m + alpha^2 a^2)/(alpha^2 - 8c)) for the linear-cone profile
// (NaN when the denominator is not positive).
struct BartaReport {
    double zeta_star = 0.0;
    double lambda_bound = 0.0;
    double b_threshold = 0.0;
    bool consistent = false;
};
BartaReport barta_lambda1_bound(const SolitonContext& ctx, double a, double b,
                                double alpha_vol);

} // namespace mcfs

#endif
