#ifndef MCFS_QUADRATURE_HPP
#define MCFS_QUADRATURE_HPP

#include <functional>

namespace mcfs {

// Adaptive Simpson integration of a smooth integrand over [a, b] (a may
// exceed b; the result is signed). Subdivides until the local Richardson
// error estimate is below abs_tol, with recursion depth capped at 20
// levels (2^20 panels). Throws nonconvergence_error if the cap is hit
// before the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12);

} // namespace mcfs

#endif
