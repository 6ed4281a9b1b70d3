#ifndef MCFS_GRAPH_HPP
#define MCFS_GRAPH_HPP

#include <functional>
#include <vector>

namespace mcfs {

enum class Topology { dirichlet, periodic };

// Grid-sampled graph function u: P -> I over a flat 1-D or 2-D fiber.
// Dirichlet grids include their boundary nodes (spacing (hi-lo)/(N-1));
// periodic grids tile [lo, hi) with spacing (hi-lo)/N. 2-D grids are
// square, row-major (index = iy * N + ix).
struct GraphGrid {
    int d = 1;
    Topology topology = Topology::dirichlet;
    int N = 0;
    double lo = 0.0, hi = 1.0;
    std::vector<double> u;

    double dx() const {
        return (hi - lo) / (topology == Topology::dirichlet ? (N - 1) : N);
    }
    double coord(int i) const { return lo + i * dx(); }
    size_t nodes() const { return d == 1 ? size_t(N) : size_t(N) * N; }
    void validate() const;
};

struct ResidualField {
    std::vector<double> r;  // per node; zero at Dirichlet boundary nodes
    double sup = 0.0;
};

// Graph translator residual div(grad u / W) - c/W with W = sqrt(1+|grad u|^2).
// The flux discretization is 4th order in the 1-D interior (wide face
// gradients, wide staggered divergence, flux interpolated to nodes for the
// c/W term, one-sided closures near the boundary; the node next to each
// boundary uses the compact 2nd-order divergence) and compact 2nd order
// in 2-D (face-averaged transverse gradients).
ResidualField translator_residual(const GraphGrid& grid, double c);

struct TranslatorSolution {
    GraphGrid grid;
    double c = 0.0;
    double residual_sup = 0.0;  // of the solver's scaled system W*(div - c/W)
    int newton_iters = 0;
    bool converged = false;
};

// Damped Newton on the W-scaled residual (the steady equation of the
// translating frame), boundary conditions included as residual rows
// u_b - bc(x,y). Initial iterate is init.u as given (the standard start is
// all zeros). Converges when the scaled sup-residual is <= tol or throws
// nonconvergence_error when damping falls below 2^-20; at most 50 steps.
// Periodic topology requires c = 0 (integrating div(grad u/W) = c/W over
// a closed fiber forces the incompatible condition int c/W = 0) and fixes
// the gauge by re-centering to zero mean.
TranslatorSolution solve_translator(const GraphGrid& init, double c,
                                    const std::function<double(double, double)>& bc,
                                    double tol = 1e-10);

// One explicit Euler step of the graph flow du/dtau = W div(grad u / W),
// interior nodes only on Dirichlet grids. dtau must satisfy the stability
// bound dtau <= 0.2 dx^2.
GraphGrid parabolic_step(const GraphGrid& grid, double dtau);

struct SelfSimilarityReport {
    double horizon = 0.0;
    double dtau = 0.0;
    double max_deviation = 0.0;  // sup over tau and x of |u - u0 - c tau|
    int steps = 0;
};

// Flows the solved translator for time T and compares with the exact
// translation law u0 + c tau. Dirichlet boundary values are advanced by
// c dtau each step (a translating graph drags its boundary data along).
SelfSimilarityReport self_similarity_check(const TranslatorSolution& solution,
                                           double T, double dtau);

} // namespace mcfs

#endif
