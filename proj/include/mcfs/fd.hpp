#ifndef MCFS_FD_HPP
#define MCFS_FD_HPP

#include <cstddef>
#include <vector>

namespace mcfs {

// Fourth-order first derivative of uniformly sampled data: 5-point centered
// stencil in the interior, one-sided 5-point stencils at the first and last
// two samples. Needs at least 5 samples.
//
// Every stencil has coefficients summing to zero, so each row is applied to
// the differences f[k] - f[anchor]. This changes nothing analytically but
// keeps the rounding error proportional to the local variation of f instead
// of its magnitude, which matters when residuals are compared against
// absolute tolerances near 1e-10.
template <typename Real>
std::vector<Real> derivative_uniform(const std::vector<Real>& f, Real ds) {
    const size_t n = f.size();
    std::vector<Real> d(n);
    if (n < 5) {
        for (size_t i = 0; i + 1 < n; ++i)
            d[i] = (f[i + 1] - f[i]) / ds;
        if (n > 1)
            d[n - 1] = d[n - 2];
        return d;
    }
    const Real w = Real(1) / (Real(12) * ds);
    for (size_t i = 2; i + 2 < n; ++i) {
        const Real a = f[i];
        d[i] = ((f[i - 2] - a) - 8 * (f[i - 1] - a) + 8 * (f[i + 1] - a) -
                (f[i + 2] - a)) * w;
    }
    {
        const Real a = f[0];
        d[0] = (48 * (f[1] - a) - 36 * (f[2] - a) + 16 * (f[3] - a) -
                3 * (f[4] - a)) * w;
        d[1] = (-3 * (f[0] - a) - 10 * (f[1] - a) + 18 * (f[2] - a) -
                6 * (f[3] - a) + (f[4] - a)) * w;
    }
    {
        const Real a = f[n - 1];
        d[n - 2] = (3 * (f[n - 1] - a) + 10 * (f[n - 2] - a) - 18 * (f[n - 3] - a) +
                    6 * (f[n - 4] - a) - (f[n - 5] - a)) * w;
        d[n - 1] = (-48 * (f[n - 2] - a) + 36 * (f[n - 3] - a) -
                    16 * (f[n - 4] - a) + 3 * (f[n - 5] - a)) * w;
    }
    return d;
}

// Second derivative, 4th order centered with one-sided ends (at least 6
// samples for the stated order near the ends; degrades gracefully below).
template <typename Real>
std::vector<Real> second_derivative_uniform(const std::vector<Real>& f, Real ds) {
    const size_t n = f.size();
    std::vector<Real> d(n);
    if (n < 6) {
        for (size_t i = 1; i + 1 < n; ++i)
            d[i] = (f[i - 1] - 2 * f[i] + f[i + 1]) / (ds * ds);
        if (n > 2) {
            d[0] = d[1];
            d[n - 1] = d[n - 2];
        }
        return d;
    }
    const Real w = Real(1) / (Real(12) * ds * ds);
    for (size_t i = 2; i + 2 < n; ++i) {
        const Real a = f[i];
        d[i] = (-(f[i - 2] - a) + 16 * (f[i - 1] - a) + 16 * (f[i + 1] - a) -
                (f[i + 2] - a)) * w;
    }
    {
        const Real a = f[0];
        d[0] = (-154 * (f[1] - a) + 214 * (f[2] - a) - 156 * (f[3] - a) +
                61 * (f[4] - a) - 10 * (f[5] - a)) * w;
        d[1] = (10 * (f[0] - a) - 15 * (f[1] - a) - 4 * (f[2] - a) +
                14 * (f[3] - a) - 6 * (f[4] - a) + (f[5] - a)) * w;
    }
    {
        const Real a = f[n - 1];
        d[n - 2] = (10 * (f[n - 1] - a) - 15 * (f[n - 2] - a) - 4 * (f[n - 3] - a) +
                    14 * (f[n - 4] - a) - 6 * (f[n - 5] - a) + (f[n - 6] - a)) * w;
        d[n - 1] = (-154 * (f[n - 2] - a) + 214 * (f[n - 3] - a) -
                    156 * (f[n - 4] - a) + 61 * (f[n - 5] - a) -
                    10 * (f[n - 6] - a)) * w;
    }
    return d;
}

} // namespace mcfs

#endif
