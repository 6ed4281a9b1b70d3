#ifndef MCFS_FLOWS_HPP
#define MCFS_FLOWS_HPP

#include "mcfs/geometry.hpp"
#include "mcfs/profile.hpp"

#include <functional>
#include <vector>

namespace mcfs {

// Closed-form trajectory of the slice flow dt/dtau = -n h'/h, re-anchored
// so that t(0) = t_init. Evaluation outside (window_lo, window_hi) throws
// domain_error. Profiles whose maximal window is all of R report infinite
// endpoints. For the equidistant profile with t_init < 0 the trajectory is
// the mirrored branch (two branches exist; the initial condition selects
// one).
struct ClosedFormFlow {
    double window_lo;
    double window_hi;
    std::function<double(double)> t_of_tau;

    double operator()(double tau) const;
};

ClosedFormFlow closed_form_flow(ProfileName name, int n, double t_init);

struct FlowSpec {
    SolitonContext ctx;   // ctx.m is reused as the slice dimension n
    double t_init = 1.0;
    double tau_lo = -1.0;
    double tau_hi = 1.0;
    double step = 1e-3;
};

struct FlowTrajectory {
    std::vector<double> taus;    // ascending
    std::vector<double> ts;
    std::vector<double> sigmas;  // sigma(tau) = s(t(tau))
    std::vector<double> c_taus;  // dsigma/dtau = -n h'/h^2
    bool halted_lo = false;      // boundary reached integrating backward
    bool halted_hi = false;      // boundary reached integrating forward
    int n = 2;
};

// Fixed-step RK4 integration of dt/dtau = -n h'(t)/h(t) from t(0) = t_init,
// forward to tau_hi and backward to tau_lo. Integration halts cleanly when
// t comes within 1e-6 of an interval endpoint; the halt is flagged and the
// trajectory keeps the points reached.
FlowTrajectory integrate_flow(const FlowSpec& spec);

// Interpolated c_tau at tau (linear between stored samples).
double c_tau_at(const FlowTrajectory& traj, double tau);

struct LeafConsistencyReport {
    bool found = false;
    double tau_bar = 0.0;
    double t_bar = 0.0;
    double zeta_residual = 0.0;  // |n h'(t_bar) + c h(t_bar)^2|
};

// Searches the trajectory for tau_bar with c_tau(tau_bar) = ctx.c and
// checks that the slice there is a root of the slice soliton function
// n h' + c h^2. Absence of such tau_bar is reported, not an error.
LeafConsistencyReport leaf_consistency(const SolitonContext& ctx,
                                       const FlowTrajectory& traj);

} // namespace mcfs

#endif
