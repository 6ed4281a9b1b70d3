#include "mcfs/stability.hpp"

#include "mcfs/errors.hpp"
#include "mcfs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mcfs {

std::vector<double> StabilityOperator::apply(const std::vector<double>& f) const {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) {
        double v = diag[i] * f[i];
        if (i > 0)
            v += sub[i] * f[i - 1];
        if (i + 1 < n)
            v += sup[i] * f[i + 1];
        out[i] = v;
    }
    return out;
}

StabilityOperator assemble_L(const ImmersionSample& s) {
    if (s.kind == SampleKind::slice)
        throw config_error("assemble_L: needs a gridded (rotational or graph) sample");
    const size_t ns = s.size();
    const double dp = s.p[1] - s.p[0];
    const auto& prof = s.ctx.space.profile;

    // operator rows: skip axis-flagged samples; eliminate Dirichlet
    // boundary nodes of graph grids
    int i0 = 0, i1 = int(ns) - 1;
    if (s.kind == SampleKind::graph) {
        i0 = 1;
        i1 = int(ns) - 2;
    } else {
        while (i0 < i1 && s.skip[i0])
            ++i0;
        while (i1 > i0 && s.skip[i1])
            --i1;
    }
    StabilityOperator op;
    op.offset = i0;
    op.n = i1 - i0 + 1;
    if (op.n < 4)
        throw config_error("assemble_L: too few operator rows");

    // ends collapsing onto the rotation axis get the natural closure
    if (s.kind == SampleKind::rotational) {
        op.natural_lo = s.r_orbit[i0] < 2 * dp;
        op.natural_hi = s.r_orbit[i1] < 2 * dp;
    }

    std::vector<double> rho(op.n), w(op.n);
    op.V.resize(op.n);
    op.mass.resize(op.n);
    for (int j = 0; j < op.n; ++j) {
        int i = i0 + j;
        rho[j] = std::pow(s.r_orbit[i], s.ctx.m - 1) * std::exp(s.ctx.c * s.eta[i]);
        w[j] = s.ds_dp[i];
        op.mass[j] = rho[j] * w[j] * dp;
        op.V[j] = s.A2[i] - s.ctx.c * prof.h1(s.t[i]);  // flat ambient: Ric(N,N) = 0
    }

    op.sub.assign(op.n, 0.0);
    op.diag.assign(op.n, 0.0);
    op.sup.assign(op.n, 0.0);
    auto face = [&](int j) { return 0.5 * (rho[j] / w[j] + rho[j + 1] / w[j + 1]); };
    for (int j = 0; j < op.n; ++j) {
        double denom = rho[j] * w[j] * dp * dp;
        double a_lo, a_hi;
        if (j > 0)
            a_lo = face(j - 1);
        else
            a_lo = op.natural_lo ? 0.0 : rho[j] / w[j];
        if (j + 1 < op.n)
            a_hi = face(j);
        else
            a_hi = op.natural_hi ? 0.0 : rho[j] / w[j];
        op.diag[j] = -(a_lo + a_hi) / denom + op.V[j];
        if (j > 0)
            op.sub[j] = a_lo / denom;
        if (j + 1 < op.n)
            op.sup[j] = a_hi / denom;
    }
    return op;
}

namespace {

// Symmetrized matrix of -L under M^{1/2} (.) M^{-1/2}: its eigenvalues are
// the lambda of L phi = -lambda phi.
struct SymTrid {
    std::vector<double> d, e;  // diagonal, off-diagonal (size n-1)
};

SymTrid symmetrize(const StabilityOperator& op) {
    SymTrid t;
    t.d.resize(op.n);
    t.e.resize(op.n - 1);
    for (int j = 0; j < op.n; ++j)
        t.d[j] = -op.diag[j];
    for (int j = 0; j + 1 < op.n; ++j)
        t.e[j] = -op.sup[j] * std::sqrt(op.mass[j] / op.mass[j + 1]);
    return t;
}

// number of eigenvalues strictly below x (Sturm sequence count)
int sturm_count(const SymTrid& t, double x) {
    int count = 0;
    double d = t.d[0] - x;
    if (d == 0)
        d = -1e-300;
    if (d < 0)
        ++count;
    for (size_t i = 1; i < t.d.size(); ++i) {
        d = t.d[i] - x - t.e[i - 1] * t.e[i - 1] / d;
        if (d == 0)
            d = -1e-300;
        if (d < 0)
            ++count;
    }
    return count;
}

double bisect_eigenvalue(const SymTrid& t, int j) {
    double lo = t.d[0], hi = t.d[0];
    for (size_t i = 0; i < t.d.size(); ++i) {
        double r = (i > 0 ? std::abs(t.e[i - 1]) : 0.0) +
                   (i + 1 < t.d.size() ? std::abs(t.e[i]) : 0.0);
        lo = std::min(lo, t.d[i] - r);
        hi = std::max(hi, t.d[i] + r);
    }
    double scale = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    while (hi - lo > 1e-13 * scale) {
        double mid = 0.5 * (lo + hi);
        if (sturm_count(t, mid) > j)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// tridiagonal solve of (T - sigma I) x = b with partial pivoting
std::vector<double> shifted_solve(const SymTrid& t, double sigma,
                                  std::vector<double> b) {
    size_t n = t.d.size();
    std::vector<double> dl(n, 0.0), d(n), du(n, 0.0), du2(n, 0.0);
    for (size_t i = 0; i < n; ++i)
        d[i] = t.d[i] - sigma;
    for (size_t i = 0; i + 1 < n; ++i) {
        dl[i + 1] = t.e[i];
        du[i] = t.e[i];
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(dl[i + 1]) > std::abs(d[i])) {
            std::swap(d[i], dl[i + 1]);
            std::swap(du[i], d[i + 1]);
            du2[i] = du[i + 1];
            du[i + 1] = 0.0;
            std::swap(b[i], b[i + 1]);
        }
        if (d[i] == 0)
            d[i] = 1e-300;
        double f = dl[i + 1] / d[i];
        d[i + 1] -= f * du[i];
        if (du2[i] != 0.0)
            du[i + 1] -= f * du2[i];
        b[i + 1] -= f * b[i];
    }
    if (d[n - 1] == 0)
        d[n - 1] = 1e-300;
    std::vector<double> x(n);
    x[n - 1] = b[n - 1] / d[n - 1];
    if (n >= 2)
        x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (int i = int(n) - 3; i >= 0; --i)
        x[i] = (b[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    return x;
}

double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v)
        s += x * x;
    return std::sqrt(s);
}

std::vector<double> trid_apply(const SymTrid& t, const std::vector<double>& v) {
    size_t n = t.d.size();
    std::vector<double> out(n);
    for (size_t i = 0; i < n; ++i) {
        out[i] = t.d[i] * v[i];
        if (i > 0)
            out[i] += t.e[i - 1] * v[i - 1];
        if (i + 1 < n)
            out[i] += t.e[i] * v[i + 1];
    }
    return out;
}

} // namespace

SpectrumReport eigen_lowest(const StabilityOperator& op, int k) {
    if (k < 1 || k > op.n)
        throw config_error("eigen_lowest: k out of range");
    SymTrid t = symmetrize(op);
    SpectrumReport rep;
    rep.negative_count = sturm_count(t, 0.0);

    std::vector<std::vector<double>> found;  // eigenvectors in symmetric coords
    for (int j = 0; j < k; ++j) {
        double lam = bisect_eigenvalue(t, j);
        double scale = std::max(1.0, std::abs(lam));
        double sigma = lam - 1e-3 * scale;
        std::vector<double> v(op.n, 1.0);
        double vn = norm2(v);
        for (double& x : v)
            x /= vn;
        double ray = lam, res = std::numeric_limits<double>::infinity();
        for (int iter = 0; iter < 100; ++iter) {
            std::vector<double> x = shifted_solve(t, sigma, v);
            for (const auto& prev : found) {
                double dot = 0;
                for (int i = 0; i < op.n; ++i)
                    dot += x[i] * prev[i];
                for (int i = 0; i < op.n; ++i)
                    x[i] -= dot * prev[i];
            }
            double xn = norm2(x);
            if (xn == 0)
                throw nonconvergence_error("eigen_lowest: deflated iterate vanished");
            for (double& y : x)
                y /= xn;
            std::vector<double> Sx = trid_apply(t, x);
            ray = 0;
            for (int i = 0; i < op.n; ++i)
                ray += x[i] * Sx[i];
            double r2 = 0;
            for (int i = 0; i < op.n; ++i) {
                double d = Sx[i] - ray * x[i];
                r2 += d * d;
            }
            res = std::sqrt(r2);
            v = x;
            if (res <= 1e-11 * scale)
                break;
            if (iter == 20)
                sigma = lam - 1e-9 * scale;  // tighten on slow clusters
        }
        if (!(res <= 1e-9 * scale))
            throw nonconvergence_error("eigen_lowest: inverse iteration stagnated");
        found.push_back(v);
        rep.lambda.push_back(lam);
        // back to original coordinates, mass-normalized
        std::vector<double> phi(op.n);
        for (int i = 0; i < op.n; ++i)
            phi[i] = v[i] / std::sqrt(op.mass[i]);
        std::vector<double> Lphi = op.apply(phi);
        double r2 = 0, p2 = 0;
        for (int i = 0; i < op.n; ++i) {
            double d = Lphi[i] + lam * phi[i];
            r2 += d * d;
            p2 += phi[i] * phi[i];
        }
        rep.rayleigh_residual.push_back(std::sqrt(r2 / p2));
        rep.phi.push_back(std::move(phi));
    }
    return rep;
}

double eigen_check_H(const ImmersionSample& s) {
    StabilityOperator op = assemble_L(s);
    const auto& prof = s.ctx.space.profile;
    std::vector<double> H(op.n);
    for (int j = 0; j < op.n; ++j)
        H[j] = s.H[op.offset + j];
    std::vector<double> LH = op.apply(H);
    double sup = 0;
    int lo = op.natural_lo ? 0 : 1;
    int hi = op.natural_hi ? op.n - 1 : op.n - 2;
    for (int j = lo; j <= hi; ++j) {
        double t = s.t[op.offset + j];
        double law = 2 * s.ctx.c * prof.h1(t) + s.ctx.m * prof.h2(t) / prof.h(t);
        sup = std::max(sup, std::abs(LH[j] + law * H[j]));
    }
    return sup;
}

namespace {

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin())
        return ys.front();
    if (it == xs.end())
        return ys.back();
    size_t i = size_t(it - xs.begin());
    double f = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return (1 - f) * ys[i - 1] + f * ys[i];
}

} // namespace

VolumeProfile weighted_volume(const ImmersionSample& s,
                              const std::vector<double>& r_grid) {
    VolumeProfile out;
    out.r = r_grid;
    const double c = s.ctx.c;
    const int m = s.ctx.m;
    if (s.kind == SampleKind::rotational) {
        double dp = s.p[1] - s.p[0];
        if (!(s.curve.axis_start || s.r_orbit[0] < 2 * dp))
            throw config_error("weighted_volume: rotational sample does not start "
                               "at the axis (origin not marked)");
        double omega = 2 * std::pow(M_PI, m / 2.0) / std::tgamma(m / 2.0);
        size_t ns = s.size();
        std::vector<double> logv(ns), ball(ns, 0.0);
        for (size_t i = 0; i < ns; ++i)
            logv[i] = std::log(omega) + (m - 1) * std::log(std::max(s.r_orbit[i], 1e-300)) +
                      c * s.eta[i];
        for (size_t i = 1; i < ns; ++i)
            ball[i] = ball[i - 1] +
                      0.5 * (std::exp(logv[i - 1]) + std::exp(logv[i])) * dp;
        for (double r : r_grid) {
            if (r < s.p.front() || r > s.p.back())
                throw config_error("weighted_volume: radius outside the sampled range");
            double lv = interp(s.p, logv, r);
            out.log_sphere.push_back(lv);
            out.sphere.push_back(std::exp(lv));
            out.ball.push_back(interp(s.p, ball, r));
        }
        return out;
    }
    if (s.kind == SampleKind::graph) {
        size_t ns = s.size();
        double dp = s.p[1] - s.p[0];
        std::vector<double> arc(ns, 0.0), cum(ns, 0.0);
        for (size_t i = 1; i < ns; ++i) {
            arc[i] = arc[i - 1] + 0.5 * (s.ds_dp[i - 1] + s.ds_dp[i]) * dp;
            cum[i] = cum[i - 1] + 0.5 * (std::exp(c * s.eta[i - 1]) +
                                         std::exp(c * s.eta[i])) *
                                      (arc[i] - arc[i - 1]);
        }
        double s0 = arc[ns / 2];
        for (double r : r_grid) {
            double sl = s0 - r, sr = s0 + r;
            if (sl < arc.front() || sr > arc.back())
                throw config_error("weighted_volume: radius outside the sampled range");
            double wl = std::exp(c * interp(arc, s.eta, sl));
            double wr = std::exp(c * interp(arc, s.eta, sr));
            out.sphere.push_back(wl + wr);
            out.log_sphere.push_back(std::log(wl + wr));
            out.ball.push_back(interp(arc, cum, sr) - interp(arc, cum, sl));
        }
        return out;
    }
    throw config_error("weighted_volume: slices carry no marked origin");
}

ParabolicityVerdict parabolicity_volume_test(const VolumeProfile& vol, double r_max) {
    std::vector<double> r, li;  // log integrand = -log_sphere
    for (size_t i = 0; i < vol.r.size(); ++i)
        if (vol.r[i] > 0 && vol.r[i] <= r_max) {
            r.push_back(vol.r[i]);
            li.push_back(-vol.log_sphere[i]);
        }
    if (r.size() < 16)
        throw config_error("parabolicity_volume_test: need at least 16 samples "
                           "up to r_max");

    ParabolicityVerdict verdict;
    // cutoff integrals in the log domain (running log-sum-exp of trapezoids)
    double cutoffs[4] = {r_max / 8, r_max / 4, r_max / 2, r_max};
    double logsum = -std::numeric_limits<double>::infinity();
    size_t next = 0;
    auto logadd = [](double a, double b) {
        if (a == -std::numeric_limits<double>::infinity())
            return b;
        double hi = std::max(a, b), lo = std::min(a, b);
        return hi + std::log1p(std::exp(lo - hi));
    };
    for (size_t i = 1; i < r.size(); ++i) {
        double term = logadd(li[i - 1], li[i]) - std::log(2.0) + std::log(r[i] - r[i - 1]);
        logsum = logadd(logsum, term);
        while (next < 4 && r[i] >= cutoffs[next] - 1e-12) {
            verdict.log_integral.push_back(logsum);
            ++next;
        }
    }
    while (verdict.log_integral.size() < 4)
        verdict.log_integral.push_back(logsum);

    // tail fit: log(1/vol) ~ const - q log r on [r_max/2, r_max]
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (size_t i = 0; i < r.size(); ++i) {
        if (r[i] < r_max / 2)
            continue;
        double x = std::log(r[i]);
        sx += x;
        sy += li[i];
        sxx += x * x;
        sxy += x * li[i];
        ++n;
    }
    if (n < 4)
        throw config_error("parabolicity_volume_test: too few tail samples");
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    verdict.tail_exponent = -slope;
    verdict.divergent = verdict.tail_exponent <= 1.05;
    return verdict;
}

double lambda_coefficient(const ImmersionSample& s) {
    if (s.ctx.m < 2)
        throw config_error("lambda_coefficient: needs m >= 2");
    double sup = -std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < s.size(); ++i) {
        if (s.skip[i])
            continue;
        double v = s.A2[i] + s.ctx.c * s.ctx.space.profile.h1(s.t[i]) -
                   (s.ctx.m - 1) * varkappa(s.ctx.space, s.t[i]);
        sup = std::max(sup, v);
    }
    return sup / (s.ctx.m - 1);
}

} // namespace mcfs
