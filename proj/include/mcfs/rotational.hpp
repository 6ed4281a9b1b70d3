#ifndef MCFS_ROTATIONAL_HPP
#define MCFS_ROTATIONAL_HPP

#include <array>
#include <vector>

namespace mcfs {

// Rotationally symmetric hypersurfaces of revolution in R^{m+1}, profile
// curve gamma(s) = (x(s), r(s)) in the half plane r >= 0, arclength s,
// tangent angle theta (x' = cos theta, r' = sin theta).
//
// The whole module computes in extended precision: the acceptance-level
// step-refinement study of the shooting residual reaches ~1e-13 where
// double rounding would drown the signal.
using rreal = long double;

// Orientation: nu = tangent rotated by +pi/2 = (-sin theta, cos theta),
// principal curvatures kappa1 = theta' (profile) and kappa2 =
// -cos(theta)/r (orbit, multiplicity m-1), H = tr A non-normalized. The
// governing relation H = c <X, nu> with X the position vector then reads
//
//   theta' = (m-1) cos(theta)/r + c (r cos(theta) - x sin(theta)).
struct ProfileCurve {
    std::vector<rreal> s, x, r, theta;
    std::vector<rreal> nu_x, nu_r;      // unit normal
    std::vector<rreal> kappa_prof;      // theta' from the governing relation
    int m = 2;
    rreal c = -1.0;
    bool axis_start = false;            // first sample sits on the axis (r=0)
    bool axis_end = false;

    size_t size() const { return s.size(); }
};

struct ShootingConfig {
    rreal x0 = 0.0;
    rreal r0 = 0.0;          // 0 launches from the axis (theta0 forced to pi/2)
    rreal theta0 = 0.0;
    rreal step = 1e-3;
    rreal max_length = 10.0;
    rreal c = -1.0;
    int m = 2;
};

// Right-hand side (x', r', theta') of the profile ODE at (x, r, theta).
std::array<rreal, 3> profile_rhs(const std::array<rreal, 3>& state, rreal c, int m);

// RK4 integration of the profile ODE until max_length, axis return, or a
// curvature blow-up (|theta'| > 1e6). Axis launches start with a series
// expansion for the first step (the orbit term is removable there).
// Immediate blow-up raises nonconvergence_error with the offending state.
ProfileCurve shoot(const ShootingConfig& config);

struct FundamentalForms {
    std::vector<rreal> kappa1;  // profile curvature
    std::vector<rreal> kappa2;  // orbit curvature (each of the m-1 copies)
    std::vector<rreal> H;       // kappa1 + (m-1) kappa2
    std::vector<rreal> A2;      // kappa1^2 + (m-1) kappa2^2
};

// Per-sample curvature data from the stored (state-exact) kappa_prof.
// Samples with r < 1e-9 that are not flagged axis points raise
// domain_error; flagged axis points use the umbilic limit kappa2 = kappa1.
FundamentalForms fundamental_forms(const ProfileCurve& curve);

struct ResidualReport {
    std::vector<rreal> residual;  // per sample; axis-flagged samples excluded
    rreal sup = 0.0;
};

// A-posteriori residual H - c<X,nu> with the profile curvature recomputed
// by 5-point finite differences of theta, so integration error is actually
// visible (the stored kappa_prof satisfies the relation identically).
ResidualReport soliton_residual(const ProfileCurve& curve);

// Analytic reference curves (exact solitons and controls).

// Round sphere of radius R = sqrt(-m/c) centered at the origin, traversed
// so the normal points outward (H = -m/R). Samples at cell-centered
// arclengths over the full profile (axis to axis, endpoints excluded).
ProfileCurve exact_sphere_curve(int m, rreal c, size_t samples);

// Cylinder r = sqrt(-(m-1)/c), x = s over [0, length].
ProfileCurve exact_cylinder_curve(int m, rreal c, rreal length, size_t samples);

// Hyperplane through the origin: x = 0, r = s over (0, length].
ProfileCurve exact_plane_curve(int m, rreal c, rreal length, size_t samples);

// Circle of radius R about the origin (not a soliton unless R^2 = -m/c);
// negative control for the residual.
ProfileCurve circle_curve(int m, rreal c, rreal R, size_t samples);

} // namespace mcfs

#endif
