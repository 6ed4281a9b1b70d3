#include "mcfs/quadrature.hpp"
#include "mcfs/errors.hpp"

#include <cmath>

namespace mcfs {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return (h / 6.0) * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double fa, double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol)
        return left + right + err / 15.0;
    if (depth >= 20)
        throw nonconvergence_error("adaptive quadrature: subdivision cap reached");
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol) {
    if (a == b)
        return 0.0;
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = simpson(fa, fm, fb, b - a);
    return adapt(f, a, b, fa, fm, fb, whole, abs_tol, 0);
}

} // namespace mcfs
