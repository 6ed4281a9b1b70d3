#ifndef MCFS_STABILITY_HPP
#define MCFS_STABILITY_HPP

#include "mcfs/sample.hpp"

#include <vector>

namespace mcfs {

// Discrete stability operator L f = Delta_{-c eta} f + V f with potential
// V = |A|^2 + Ric(N,N) - c h'(t), assembled in divergence form on the
// sample's 1-D grid: L f = (1/(rho w)) d/dp((rho/w) df/dp) + V f with
// weight rho = r^{m-1} e^{c eta} and arclength element w = ds/dp. The
// tridiagonal matrix is exactly self-adjoint with respect to the mass
// rho w dp. Ends where the orbit radius collapses (axis points, closed
// profiles) get the natural zero-flux closure; true boundary ends are
// Dirichlet and boundary nodes of graph grids are eliminated.
struct StabilityOperator {
    int n = 0;                       // operator rows
    int offset = 0;                  // sample index of row 0
    std::vector<double> sub, diag, sup;  // tridiagonal action of L
    std::vector<double> mass;        // weighted inner product <f,g> = sum f g mass
    std::vector<double> V;
    bool natural_lo = false, natural_hi = false;

    std::vector<double> apply(const std::vector<double>& f) const;
};

StabilityOperator assemble_L(const ImmersionSample& sample);

// Lowest k eigenvalues under the convention L phi = -lambda phi, lambda
// ascending (negative lambda = unstable direction). Eigenvalues located
// by Sturm bisection on the symmetrized tridiagonal matrix, eigenvectors
// by deflated inverse iteration from the all-ones start, initial shift
// 1e-3 inside the target. negative_count counts every lambda < 0 of the
// discrete operator (a Morse index lower bound).
struct SpectrumReport {
    std::vector<double> lambda;
    std::vector<std::vector<double>> phi;  // mass-normalized, original coords
    std::vector<double> rayleigh_residual; // ||L phi + lambda phi|| / ||phi||
    int negative_count = 0;
};
SpectrumReport eigen_lowest(const StabilityOperator& op, int k);

// Sup residual of L H = -(2 c h' + m h''/h) H over operator rows, skipping
// the row next to each Dirichlet end (the closure there assumes a vanishing
// function, which H does not satisfy).
double eigen_check_H(const ImmersionSample& sample);

// Weighted sphere and ball volumes of intrinsic metric balls about the
// sample's marked origin (rotational: the axis end; graph: the center
// node), with the weight e^{c eta}. log_sphere stays finite where the
// weighted measure under- or overflows.
struct VolumeProfile {
    std::vector<double> r;
    std::vector<double> sphere, ball;
    std::vector<double> log_sphere;
};
VolumeProfile weighted_volume(const ImmersionSample& sample,
                              const std::vector<double>& r_grid);

// Finite-cutoff heuristic for the divergence of int dr / vol(dB_r): fits
// the tail exponent q of 1/vol ~ r^{-q} on [r_max/2, r_max] in the log
// domain and calls the integral divergent when q <= 1.05. Also reports
// log of the cutoff integrals at r_max/8, r_max/4, r_max/2, r_max. An
// extrapolation heuristic, not a proof.
struct ParabolicityVerdict {
    bool divergent = false;
    double tail_exponent = 0.0;
    std::vector<double> log_integral;  // at the four cutoffs
};
ParabolicityVerdict parabolicity_volume_test(const VolumeProfile& vol, double r_max);

// (1/(m-1)) sup over points of (|A|^2 + c h'(t) - (m-1) varkappa(t)).
double lambda_coefficient(const ImmersionSample& sample);

} // namespace mcfs

#endif
