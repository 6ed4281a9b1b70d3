#include "mcfs/graph.hpp"
#include "mcfs/errors.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>

namespace mcfs {

void GraphGrid::validate() const {
    if (d != 1 && d != 2)
        throw config_error("GraphGrid: d must be 1 or 2");
    if (N < 8)
        throw config_error("GraphGrid: need at least 8 nodes per axis");
    if (!(lo < hi))
        throw config_error("GraphGrid: lo must be below hi");
    if (u.size() != nodes())
        throw config_error("GraphGrid: u has the wrong number of nodes");
}

namespace {

double flux_of_gradient(double g) { return g / std::sqrt(1.0 + g * g); }
double wcube_inv(double g) {
    double w = std::sqrt(1.0 + g * g);
    return 1.0 / (w * w * w);
}
double q_of(double s2) { return std::sqrt(std::max(1e-300, 1.0 - s2)); }

// ---------- 1-D discretization ----------
//
// Faces sit between consecutive nodes. Gradients are 4th order: wide
// centered stencils inside, matched-order one-sided stencils at the two
// outermost faces of a Dirichlet grid. The divergence and the node value
// of the flux (for the c/W term) are likewise 4th order with compact
// closures at the first and last interior node.

struct Stencil1 {
    int idx[5];
    double w[5];
    int len;
};

struct Op1D {
    int N;
    double dx;
    bool periodic;
    int nf;                          // number of faces
    std::vector<Stencil1> grad;      // per face, node indices
    std::vector<Stencil1> div, sval; // per interior row, face indices
    std::vector<int> rows;           // node index of each interior row
};

Op1D build_op1d(const GraphGrid& grid) {
    Op1D op;
    op.N = grid.N;
    op.dx = grid.dx();
    op.periodic = grid.topology == Topology::periodic;
    int N = op.N;
    double dx = op.dx;
    op.nf = op.periodic ? N : N - 1;

    auto wrap = [N](int i) { return ((i % N) + N) % N; };

    op.grad.resize(op.nf);
    for (int f = 0; f < op.nf; ++f) {
        Stencil1 st{};
        if (op.periodic) {
            st.len = 4;
            int base[4] = {f - 1, f, f + 1, f + 2};
            double cw[4] = {1, -27, 27, -1};
            for (int k = 0; k < 4; ++k) {
                st.idx[k] = wrap(base[k]);
                st.w[k] = cw[k] / (24 * dx);
            }
        } else if (f == 0) {
            st.len = 5;
            double cw[5] = {-22, 17, 9, -5, 1};
            for (int k = 0; k < 5; ++k) {
                st.idx[k] = k;
                st.w[k] = cw[k] / (24 * dx);
            }
        } else if (f == op.nf - 1) {
            st.len = 5;
            double cw[5] = {22, -17, -9, 5, -1};
            for (int k = 0; k < 5; ++k) {
                st.idx[k] = N - 1 - k;
                st.w[k] = cw[k] / (24 * dx);
            }
        } else {
            st.len = 4;
            int base[4] = {f - 1, f, f + 1, f + 2};
            double cw[4] = {1, -27, 27, -1};
            for (int k = 0; k < 4; ++k) {
                st.idx[k] = base[k];
                st.w[k] = cw[k] / (24 * dx);
            }
        }
        op.grad[f] = st;
    }

    int row_lo = op.periodic ? 0 : 1;
    int row_hi = op.periodic ? N - 1 : N - 2;
    for (int i = row_lo; i <= row_hi; ++i) {
        op.rows.push_back(i);
        Stencil1 dv{}, sv{};
        bool wide = op.periodic || (i >= 2 && i <= N - 3);
        if (wide) {
            dv.len = sv.len = 4;
            int base[4] = {i - 2, i - 1, i, i + 1};
            double cd[4] = {1, -27, 27, -1};
            double cs[4] = {-1, 9, 9, -1};
            for (int k = 0; k < 4; ++k) {
                int f = op.periodic ? wrap(base[k]) : base[k];
                dv.idx[k] = f;
                dv.w[k] = cd[k] / (24 * dx);
                sv.idx[k] = f;
                sv.w[k] = cs[k] / 16.0;
            }
        } else if (i == 1) {
            dv.len = 2;
            dv.idx[0] = 0;
            dv.idx[1] = 1;
            dv.w[0] = -1 / dx;
            dv.w[1] = 1 / dx;
            sv.len = 4;
            double cs[4] = {5, 15, -5, 1};
            for (int k = 0; k < 4; ++k) {
                sv.idx[k] = k;
                sv.w[k] = cs[k] / 16.0;
            }
        } else {  // i == N - 2
            dv.len = 2;
            dv.idx[0] = op.nf - 2;
            dv.idx[1] = op.nf - 1;
            dv.w[0] = -1 / dx;
            dv.w[1] = 1 / dx;
            sv.len = 4;
            double cs[4] = {5, 15, -5, 1};
            for (int k = 0; k < 4; ++k) {
                sv.idx[k] = op.nf - 1 - k;
                sv.w[k] = cs[k] / 16.0;
            }
        }
        op.div.push_back(dv);
        op.sval.push_back(sv);
    }
    return op;
}

struct Eval1D {
    std::vector<double> g, F, winv3;       // per face
    std::vector<double> divv, S, Q, resid; // per interior row (unscaled resid)
};

Eval1D evaluate_1d(const Op1D& op, const std::vector<double>& u, double c) {
    Eval1D ev;
    ev.g.resize(op.nf);
    ev.F.resize(op.nf);
    ev.winv3.resize(op.nf);
    for (int f = 0; f < op.nf; ++f) {
        double g = 0;
        const Stencil1& st = op.grad[f];
        for (int k = 0; k < st.len; ++k)
            g += st.w[k] * u[st.idx[k]];
        ev.g[f] = g;
        ev.F[f] = flux_of_gradient(g);
        ev.winv3[f] = wcube_inv(g);
    }
    size_t nrows = op.rows.size();
    ev.divv.resize(nrows);
    ev.S.resize(nrows);
    ev.Q.resize(nrows);
    ev.resid.resize(nrows);
    for (size_t r = 0; r < nrows; ++r) {
        double dv = 0, sv = 0;
        for (int k = 0; k < op.div[r].len; ++k)
            dv += op.div[r].w[k] * ev.F[op.div[r].idx[k]];
        for (int k = 0; k < op.sval[r].len; ++k)
            sv += op.sval[r].w[k] * ev.F[op.sval[r].idx[k]];
        ev.divv[r] = dv;
        ev.S[r] = sv;
        ev.Q[r] = q_of(sv * sv);
        ev.resid[r] = dv - c * ev.Q[r];
    }
    return ev;
}

// ---------- 2-D discretization (compact 2nd order) ----------

struct Eval2D {
    std::vector<double> Fx, Fy;                 // per face, row-major face grids
    std::vector<double> gx_, gy_, wx3, wy3;     // per face: own gradients and W^-3
    std::vector<double> txy_x, txy_y;           // transverse gradient at the face
    std::vector<double> divv, Sx, Sy, Q, resid; // per node (full grid, 0 on boundary)
};

struct Op2D {
    int N;
    double dx;
    bool periodic;
    int nfx;  // faces per row in x (N-1 dirichlet, N periodic)
};

Op2D build_op2d(const GraphGrid& grid) {
    return {grid.N, grid.dx(), grid.topology == Topology::periodic,
            grid.topology == Topology::periodic ? grid.N : grid.N - 1};
}

Eval2D evaluate_2d(const Op2D& op, const std::vector<double>& u, double c) {
    const int N = op.N;
    const double dx = op.dx;
    auto wrap = [N](int i) { return ((i % N) + N) % N; };
    auto id = [N](int ix, int iy) { return size_t(iy) * N + ix; };

    Eval2D ev;
    size_t nfaces = size_t(op.nfx) * N;
    ev.Fx.assign(nfaces, 0.0);
    ev.Fy.assign(nfaces, 0.0);
    ev.gx_.assign(nfaces, 0.0);
    ev.gy_.assign(nfaces, 0.0);
    ev.wx3.assign(nfaces, 0.0);
    ev.wy3.assign(nfaces, 0.0);
    ev.txy_x.assign(nfaces, 0.0);
    ev.txy_y.assign(nfaces, 0.0);

    auto fid = [&](int f, int j) { return size_t(j) * op.nfx + f; };

    // x-faces between (f, j) and (f+1, j); transverse y-gradient averaged
    // over the two endpoint nodes. Faces touching the transverse boundary
    // are never consumed on Dirichlet grids.
    for (int j = 0; j < N; ++j) {
        for (int f = 0; f < op.nfx; ++f) {
            int i0 = f, i1 = op.periodic ? wrap(f + 1) : f + 1;
            bool have_trans = op.periodic || (j > 0 && j < N - 1);
            double gx = (u[id(i1, j)] - u[id(i0, j)]) / dx;
            double gy = 0.0;
            if (have_trans) {
                int jp = op.periodic ? wrap(j + 1) : j + 1;
                int jm = op.periodic ? wrap(j - 1) : j - 1;
                gy = (u[id(i0, jp)] - u[id(i0, jm)] + u[id(i1, jp)] - u[id(i1, jm)]) /
                     (4 * dx);
            }
            double w = std::sqrt(1.0 + gx * gx + gy * gy);
            ev.Fx[fid(f, j)] = gx / w;
            ev.gx_[fid(f, j)] = gx;
            ev.txy_x[fid(f, j)] = gy;
            ev.wx3[fid(f, j)] = 1.0 / (w * w * w);
        }
    }
    // y-faces between (i, f) and (i, f+1).
    for (int f = 0; f < op.nfx; ++f) {
        for (int i = 0; i < N; ++i) {
            int j0 = f, j1 = op.periodic ? wrap(f + 1) : f + 1;
            bool have_trans = op.periodic || (i > 0 && i < N - 1);
            double gy = (u[id(i, j1)] - u[id(i, j0)]) / dx;
            double gx = 0.0;
            if (have_trans) {
                int ip = op.periodic ? wrap(i + 1) : i + 1;
                int im = op.periodic ? wrap(i - 1) : i - 1;
                gx = (u[id(ip, j0)] - u[id(im, j0)] + u[id(ip, j1)] - u[id(im, j1)]) /
                     (4 * dx);
            }
            double w = std::sqrt(1.0 + gx * gx + gy * gy);
            ev.Fy[fid(f, i)] = gy / w;  // indexed (face along y, x position)
            ev.gy_[fid(f, i)] = gy;
            ev.txy_y[fid(f, i)] = gx;
            ev.wy3[fid(f, i)] = 1.0 / (w * w * w);
        }
    }

    size_t nn = size_t(N) * N;
    ev.divv.assign(nn, 0.0);
    ev.Sx.assign(nn, 0.0);
    ev.Sy.assign(nn, 0.0);
    ev.Q.assign(nn, 1.0);
    ev.resid.assign(nn, 0.0);
    int lo = op.periodic ? 0 : 1, hi = op.periodic ? N - 1 : N - 2;
    for (int iy = lo; iy <= hi; ++iy) {
        for (int ix = lo; ix <= hi; ++ix) {
            int fxr = ix, fxl = op.periodic ? wrap(ix - 1) : ix - 1;
            int fyr = iy, fyl = op.periodic ? wrap(iy - 1) : iy - 1;
            double Fxr = ev.Fx[fid(fxr, iy)], Fxl = ev.Fx[fid(fxl, iy)];
            double Fyr = ev.Fy[fid(fyr, ix)], Fyl = ev.Fy[fid(fyl, ix)];
            double dv = (Fxr - Fxl + Fyr - Fyl) / dx;
            double sx = 0.5 * (Fxr + Fxl), sy = 0.5 * (Fyr + Fyl);
            size_t k = id(ix, iy);
            ev.divv[k] = dv;
            ev.Sx[k] = sx;
            ev.Sy[k] = sy;
            ev.Q[k] = q_of(sx * sx + sy * sy);
            ev.resid[k] = dv - c * ev.Q[k];
        }
    }
    return ev;
}

} // namespace

ResidualField translator_residual(const GraphGrid& grid, double c) {
    grid.validate();
    ResidualField out;
    out.r.assign(grid.nodes(), 0.0);
    if (grid.d == 1) {
        Op1D op = build_op1d(grid);
        Eval1D ev = evaluate_1d(op, grid.u, c);
        for (size_t r = 0; r < op.rows.size(); ++r) {
            out.r[op.rows[r]] = ev.resid[r];
            out.sup = std::max(out.sup, std::abs(ev.resid[r]));
        }
    } else {
        Op2D op = build_op2d(grid);
        Eval2D ev = evaluate_2d(op, grid.u, c);
        for (size_t k = 0; k < ev.resid.size(); ++k) {
            out.r[k] = ev.resid[k];
            out.sup = std::max(out.sup, std::abs(ev.resid[k]));
        }
    }
    return out;
}

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// Scaled residual and Jacobian rows for the Newton system. The scaled
// residual at an interior node is (div - cQ)/Q; its derivative combines
// the div stencil with the S stencil through
//   d resid~ = (1/Q) d div + S (c/Q^2 + resid/Q^3) dS.

void newton_system_1d(const Op1D& op, const std::vector<double>& u, double c,
                      Eigen::VectorXd& R, std::vector<Triplet>& trips) {
    Eval1D ev = evaluate_1d(op, u, c);
    for (size_t r = 0; r < op.rows.size(); ++r) {
        int i = op.rows[r];
        double Q = ev.Q[r];
        R[i] = ev.resid[r] / Q;
        double alpha = 1.0 / Q;
        double beta = ev.S[r] * (c / (Q * Q) + ev.resid[r] / (Q * Q * Q));
        auto add_face = [&](int f, double coef) {
            const Stencil1& st = op.grad[f];
            double dF = coef * ev.winv3[f];
            for (int k = 0; k < st.len; ++k)
                trips.emplace_back(i, st.idx[k], dF * st.w[k]);
        };
        for (int k = 0; k < op.div[r].len; ++k)
            add_face(op.div[r].idx[k], alpha * op.div[r].w[k]);
        for (int k = 0; k < op.sval[r].len; ++k)
            add_face(op.sval[r].idx[k], beta * op.sval[r].w[k]);
    }
}

void newton_system_2d(const Op2D& op, const std::vector<double>& u, double c,
                      Eigen::VectorXd& R, std::vector<Triplet>& trips) {
    const int N = op.N;
    const double dx = op.dx;
    auto wrap = [N](int i) { return ((i % N) + N) % N; };
    auto id = [N](int ix, int iy) { return size_t(iy) * N + ix; };
    auto fid = [&](int f, int j) { return size_t(j) * op.nfx + f; };
    Eval2D ev = evaluate_2d(op, u, c);

    int lo = op.periodic ? 0 : 1, hi = op.periodic ? N - 1 : N - 2;
    for (int iy = lo; iy <= hi; ++iy) {
        for (int ix = lo; ix <= hi; ++ix) {
            size_t k = id(ix, iy);
            double Q = ev.Q[k];
            R[k] = ev.resid[k] / Q;
            double alpha = 1.0 / Q;
            double common = c / (Q * Q) + ev.resid[k] / (Q * Q * Q);
            double bx = ev.Sx[k] * common, by = ev.Sy[k] * common;

            // contribution of an x-face: coef * dFx with
            // dFx = ((1+gy^2) dgx - gx gy dgy) / W^3
            auto add_xface = [&](int f, int j, double coef) {
                size_t ff = fid(f, j);
                double gx = ev.gx_[ff], gy = ev.txy_x[ff], w3 = ev.wx3[ff];
                double cgx = coef * (1.0 + gy * gy) * w3;
                double cgy = -coef * gx * gy * w3;
                int i0 = f, i1 = op.periodic ? wrap(f + 1) : f + 1;
                trips.emplace_back(k, id(i0, j), -cgx / dx);
                trips.emplace_back(k, id(i1, j), cgx / dx);
                if (cgy != 0.0) {
                    int jp = op.periodic ? wrap(j + 1) : j + 1;
                    int jm = op.periodic ? wrap(j - 1) : j - 1;
                    double wq = cgy / (4 * dx);
                    trips.emplace_back(k, id(i0, jp), wq);
                    trips.emplace_back(k, id(i0, jm), -wq);
                    trips.emplace_back(k, id(i1, jp), wq);
                    trips.emplace_back(k, id(i1, jm), -wq);
                }
            };
            auto add_yface = [&](int f, int i, double coef) {
                size_t ff = fid(f, i);
                double gy = ev.gy_[ff], gx = ev.txy_y[ff], w3 = ev.wy3[ff];
                double cgy = coef * (1.0 + gx * gx) * w3;
                double cgx = -coef * gx * gy * w3;
                int j0 = f, j1 = op.periodic ? wrap(f + 1) : f + 1;
                trips.emplace_back(k, id(i, j0), -cgy / dx);
                trips.emplace_back(k, id(i, j1), cgy / dx);
                if (cgx != 0.0) {
                    int ip = op.periodic ? wrap(i + 1) : i + 1;
                    int im = op.periodic ? wrap(i - 1) : i - 1;
                    double wq = cgx / (4 * dx);
                    trips.emplace_back(k, id(ip, j0), wq);
                    trips.emplace_back(k, id(im, j0), -wq);
                    trips.emplace_back(k, id(ip, j1), wq);
                    trips.emplace_back(k, id(im, j1), -wq);
                }
            };

            int fxr = ix, fxl = op.periodic ? wrap(ix - 1) : ix - 1;
            int fyr = iy, fyl = op.periodic ? wrap(iy - 1) : iy - 1;
            add_xface(fxr, iy, alpha / dx + bx * 0.5);
            add_xface(fxl, iy, -alpha / dx + bx * 0.5);
            add_yface(fyr, ix, alpha / dx + by * 0.5);
            add_yface(fyl, ix, -alpha / dx + by * 0.5);
        }
    }
}

double scaled_sup(const GraphGrid& grid, const std::vector<double>& u, double c,
                  const std::vector<double>& bc_target,
                  const std::vector<char>& is_boundary) {
    double sup = 0.0;
    if (grid.d == 1) {
        Op1D op = build_op1d(grid);
        Eval1D ev = evaluate_1d(op, u, c);
        for (size_t r = 0; r < op.rows.size(); ++r)
            sup = std::max(sup, std::abs(ev.resid[r] / ev.Q[r]));
    } else {
        Op2D op = build_op2d(grid);
        Eval2D ev = evaluate_2d(op, u, c);
        int lo = op.periodic ? 0 : 1, hi = op.periodic ? op.N - 1 : op.N - 2;
        for (int iy = lo; iy <= hi; ++iy)
            for (int ix = lo; ix <= hi; ++ix) {
                size_t k = size_t(iy) * op.N + ix;
                sup = std::max(sup, std::abs(ev.resid[k] / ev.Q[k]));
            }
    }
    for (size_t k = 0; k < u.size(); ++k)
        if (is_boundary[k])
            sup = std::max(sup, std::abs(u[k] - bc_target[k]));
    return sup;
}

} // namespace

TranslatorSolution solve_translator(const GraphGrid& init, double c,
                                    const std::function<double(double, double)>& bc,
                                    double tol) {
    init.validate();
    if (init.topology == Topology::periodic && c != 0.0)
        throw config_error(
            "solve_translator: a periodic fiber admits no translator with c != 0 "
            "(integrating div(grad u/W) = c/W over the closed fiber gives 0 on the "
            "left and a nonzero weighted volume times c on the right)");

    const size_t n = init.nodes();
    std::vector<char> is_boundary(n, 0);
    std::vector<double> bc_target(n, 0.0);
    if (init.topology == Topology::dirichlet) {
        if (init.d == 1) {
            is_boundary[0] = is_boundary[n - 1] = 1;
            bc_target[0] = bc(init.coord(0), 0.0);
            bc_target[n - 1] = bc(init.coord(init.N - 1), 0.0);
        } else {
            for (int iy = 0; iy < init.N; ++iy)
                for (int ix = 0; ix < init.N; ++ix)
                    if (ix == 0 || iy == 0 || ix == init.N - 1 || iy == init.N - 1) {
                        size_t k = size_t(iy) * init.N + ix;
                        is_boundary[k] = 1;
                        bc_target[k] = bc(init.coord(ix), init.coord(iy));
                    }
        }
    } else {
        is_boundary[0] = 1;  // gauge pin; re-centered after convergence
        bc_target[0] = 0.0;
    }

    TranslatorSolution sol;
    sol.grid = init;
    sol.c = c;

    std::vector<double>& u = sol.grid.u;
    double sup = scaled_sup(sol.grid, u, c, bc_target, is_boundary);

    Op1D op1{};
    Op2D op2{};
    if (init.d == 1)
        op1 = build_op1d(init);
    else
        op2 = build_op2d(init);

    for (int iter = 0; iter < 50; ++iter) {
        if (sup <= tol) {
            sol.converged = true;
            break;
        }
        Eigen::VectorXd R = Eigen::VectorXd::Zero(n);
        std::vector<Triplet> trips;
        if (init.d == 1)
            newton_system_1d(op1, u, c, R, trips);
        else
            newton_system_2d(op2, u, c, R, trips);
        // Boundary (or gauge) rows replace whatever the stencils produced.
        std::vector<Triplet> kept;
        kept.reserve(trips.size() + n);
        for (const auto& t : trips)
            if (!is_boundary[size_t(t.row())])
                kept.push_back(t);
        for (size_t k = 0; k < n; ++k)
            if (is_boundary[k]) {
                kept.emplace_back(int(k), int(k), 1.0);
                R[k] = u[k] - bc_target[k];
            }
        SpMat J(n, n);
        J.setFromTriplets(kept.begin(), kept.end());
        Eigen::SparseLU<SpMat> lu;
        lu.compute(J);
        if (lu.info() != Eigen::Success)
            throw nonconvergence_error("solve_translator: singular Newton system");
        Eigen::VectorXd du = lu.solve(-R);

        double lambda = 1.0;
        std::vector<double> trial(n);
        double trial_sup = sup;
        while (lambda >= std::ldexp(1.0, -20)) {
            for (size_t k = 0; k < n; ++k)
                trial[k] = u[k] + lambda * du[k];
            GraphGrid tg = sol.grid;
            tg.u = trial;
            trial_sup = scaled_sup(tg, trial, c, bc_target, is_boundary);
            if (trial_sup < sup)
                break;
            lambda *= 0.5;
        }
        if (!(trial_sup < sup)) {
            sol.newton_iters = iter;
            sol.residual_sup = sup;
            throw nonconvergence_error(
                "solve_translator: Newton stagnation (damping fell below 2^-20 at "
                "scaled residual " + std::to_string(sup) + ")");
        }
        u = trial;
        sup = trial_sup;
        sol.newton_iters = iter + 1;
    }
    sol.residual_sup = sup;
    if (!sol.converged)
        throw nonconvergence_error("solve_translator: 50 Newton steps without reaching "
                                   "tolerance (scaled residual " + std::to_string(sup) + ")");
    if (init.topology == Topology::periodic) {
        double mean = 0.0;
        for (double v : u)
            mean += v;
        mean /= double(n);
        for (double& v : u)
            v -= mean;
    }
    return sol;
}

GraphGrid parabolic_step(const GraphGrid& grid, double dtau) {
    grid.validate();
    double dx = grid.dx();
    if (dtau <= 0.0 || dtau > 0.2 * dx * dx)
        throw config_error("parabolic_step: dtau must lie in (0, 0.2 dx^2]");
    GraphGrid out = grid;
    if (grid.d == 1) {
        Op1D op = build_op1d(grid);
        Eval1D ev = evaluate_1d(op, grid.u, 0.0);
        for (size_t r = 0; r < op.rows.size(); ++r)
            out.u[op.rows[r]] += dtau * ev.divv[r] / ev.Q[r];
    } else {
        Op2D op = build_op2d(grid);
        Eval2D ev = evaluate_2d(op, grid.u, 0.0);
        int lo = op.periodic ? 0 : 1, hi = op.periodic ? grid.N - 1 : grid.N - 2;
        for (int iy = lo; iy <= hi; ++iy)
            for (int ix = lo; ix <= hi; ++ix) {
                size_t k = size_t(iy) * grid.N + ix;
                out.u[k] += dtau * ev.divv[k] / ev.Q[k];
            }
    }
    return out;
}

SelfSimilarityReport self_similarity_check(const TranslatorSolution& solution,
                                           double T, double dtau) {
    SelfSimilarityReport rep;
    rep.horizon = T;
    rep.dtau = dtau;
    GraphGrid g = solution.grid;
    const std::vector<double> u0 = g.u;
    double tau = 0.0;
    while (tau < T - 1e-15) {
        double h = std::min(dtau, T - tau);
        g = parabolic_step(g, h);
        tau += h;
        if (g.topology == Topology::dirichlet) {
            // a translating graph drags its boundary data along
            if (g.d == 1) {
                g.u[0] = u0[0] + solution.c * tau;
                g.u[g.nodes() - 1] = u0[g.nodes() - 1] + solution.c * tau;
            } else {
                for (int iy = 0; iy < g.N; ++iy)
                    for (int ix = 0; ix < g.N; ++ix)
                        if (ix == 0 || iy == 0 || ix == g.N - 1 || iy == g.N - 1) {
                            size_t k = size_t(iy) * g.N + ix;
                            g.u[k] = u0[k] + solution.c * tau;
                        }
            }
        }
        ++rep.steps;
        for (size_t k = 0; k < g.u.size(); ++k)
            rep.max_deviation = std::max(rep.max_deviation,
                                         std::abs(g.u[k] - u0[k] - solution.c * tau));
    }
    return rep;
}

} // namespace mcfs
