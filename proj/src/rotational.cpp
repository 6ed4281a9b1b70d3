#include "mcfs/rotational.hpp"
#include "mcfs/errors.hpp"
#include "mcfs/fd.hpp"

#include <cmath>
#include <sstream>

namespace mcfs {

namespace {

constexpr rreal kPi = 3.14159265358979323846264338327950288L;
constexpr rreal kBlowup = 1e6L;
constexpr rreal kAxisEps = 1e-9L;

rreal theta_prime(rreal x, rreal r, rreal theta, rreal c, int m) {
    return (m - 1) * std::cos(theta) / r +
           c * (r * std::cos(theta) - x * std::sin(theta));
}

} // namespace

std::array<rreal, 3> profile_rhs(const std::array<rreal, 3>& state, rreal c, int m) {
    rreal x = state[0], r = state[1], theta = state[2];
    if (r <= 0)
        throw domain_error("profile_rhs: r must be positive off the axis");
    return {std::cos(theta), std::sin(theta), theta_prime(x, r, theta, c, m)};
}

namespace {

struct State {
    rreal x, r, theta;
};

State rk4(const State& y, rreal h, rreal c, int m) {
    auto f = [c, m](const State& u) -> State {
        return {std::cos(u.theta), std::sin(u.theta),
                theta_prime(u.x, u.r, u.theta, c, m)};
    };
    State k1 = f(y);
    State k2 = f({y.x + h / 2 * k1.x, y.r + h / 2 * k1.r, y.theta + h / 2 * k1.theta});
    State k3 = f({y.x + h / 2 * k2.x, y.r + h / 2 * k2.r, y.theta + h / 2 * k2.theta});
    State k4 = f({y.x + h * k3.x, y.r + h * k3.r, y.theta + h * k3.theta});
    return {y.x + h / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x),
            y.r + h / 6 * (k1.r + 2 * k2.r + 2 * k3.r + k4.r),
            y.theta + h / 6 * (k1.theta + 2 * k2.theta + 2 * k3.theta + k4.theta)};
}

void push_sample(ProfileCurve& curve, rreal s, const State& y, rreal kappa) {
    curve.s.push_back(s);
    curve.x.push_back(y.x);
    curve.r.push_back(y.r);
    curve.theta.push_back(y.theta);
    curve.nu_x.push_back(-std::sin(y.theta));
    curve.nu_r.push_back(std::cos(y.theta));
    curve.kappa_prof.push_back(kappa);
}

} // namespace

ProfileCurve shoot(const ShootingConfig& config) {
    if (config.step <= 0)
        throw config_error("shoot: step must be positive");
    if (config.r0 < 0)
        throw config_error("shoot: r0 must be nonnegative");
    if (config.max_length <= 0)
        throw config_error("shoot: max_length must be positive");

    ProfileCurve curve;
    curve.m = config.m;
    curve.c = config.c;

    const rreal h = config.step;
    State y;
    rreal s = 0;

    if (config.r0 < kAxisEps) {
        // Axis launch: the orbit curvature term (m-1)cos(theta)/r is
        // removable at a smooth cap; the cap is even in s with
        //   theta = pi/2 + a1 s + a3 s^3 + O(s^5),
        //   r = s - a1^2 s^3/6 + O(s^5),  x = x0 - a1 s^2/2 + O(s^4),
        // where a1 = -c x0/m and a3 = c a1 (x0 a1 - 1)/(2(m+2)).
        curve.axis_start = true;
        rreal x0 = config.x0;
        rreal a1 = -config.c * x0 / config.m;
        rreal a3 = config.c * a1 * (x0 * a1 - 1) / (2 * (config.m + 2));
        push_sample(curve, 0, {x0, 0, kPi / 2}, a1);
        y = {x0 - a1 * h * h / 2, h - a1 * a1 * h * h * h / 6,
             kPi / 2 + a1 * h + a3 * h * h * h};
        s = h;
        push_sample(curve, s, y, theta_prime(y.x, y.r, y.theta, config.c, config.m));
    } else {
        y = {config.x0, config.r0, config.theta0};
        rreal k0 = theta_prime(y.x, y.r, y.theta, config.c, config.m);
        if (std::abs(k0) > kBlowup) {
            std::ostringstream os;
            os << "shoot: curvature blow-up at launch (x=" << (double)y.x
               << ", r=" << (double)y.r << ", theta=" << (double)y.theta << ")";
            throw nonconvergence_error(os.str());
        }
        push_sample(curve, 0, y, k0);
    }

    while (s < config.max_length - h / 2) {
        State next = rk4(y, h, config.c, config.m);
        if (!(next.r > kAxisEps)) {
            curve.axis_end = true;
            break;
        }
        rreal k = theta_prime(next.x, next.r, next.theta, config.c, config.m);
        if (std::abs(k) > kBlowup) {
            if (curve.size() <= 2) {
                std::ostringstream os;
                os << "shoot: immediate curvature blow-up (x=" << (double)next.x
                   << ", r=" << (double)next.r << ", theta=" << (double)next.theta << ")";
                throw nonconvergence_error(os.str());
            }
            break;
        }
        y = next;
        s += h;
        push_sample(curve, s, y, k);
    }
    return curve;
}

FundamentalForms fundamental_forms(const ProfileCurve& curve) {
    FundamentalForms f;
    size_t n = curve.size();
    f.kappa1.resize(n);
    f.kappa2.resize(n);
    f.H.resize(n);
    f.A2.resize(n);
    for (size_t i = 0; i < n; ++i) {
        bool axis = (i == 0 && curve.axis_start) || (i + 1 == n && curve.axis_end);
        rreal k1 = curve.kappa_prof[i];
        rreal k2;
        if (curve.r[i] < kAxisEps) {
            if (!axis)
                throw domain_error("fundamental_forms: sample with r < 1e-9 off the axis");
            k2 = k1;  // umbilic limit at a smooth cap
        } else {
            k2 = -std::cos(curve.theta[i]) / curve.r[i];
        }
        f.kappa1[i] = k1;
        f.kappa2[i] = k2;
        f.H[i] = k1 + (curve.m - 1) * k2;
        f.A2[i] = k1 * k1 + (curve.m - 1) * k2 * k2;
    }
    return f;
}

ResidualReport soliton_residual(const ProfileCurve& curve) {
    ResidualReport rep;
    size_t n = curve.size();
    rep.residual.assign(n, 0);
    if (n < 5)
        throw domain_error("soliton_residual: need at least 5 samples");
    rreal ds = curve.s[1] - curve.s[0];
    std::vector<rreal> k1_fd = derivative_uniform(curve.theta, ds);
    for (size_t i = 0; i < n; ++i) {
        bool axis = (i == 0 && curve.axis_start) || (i + 1 == n && curve.axis_end);
        if (axis || curve.r[i] < kAxisEps)
            continue;  // orbit term is a removable limit there; skip
        rreal H = k1_fd[i] - (curve.m - 1) * std::cos(curve.theta[i]) / curve.r[i];
        rreal xn = curve.r[i] * std::cos(curve.theta[i]) -
                   curve.x[i] * std::sin(curve.theta[i]);
        rep.residual[i] = H - curve.c * xn;
        rep.sup = std::max(rep.sup, std::abs(rep.residual[i]));
    }
    return rep;
}

ProfileCurve exact_sphere_curve(int m, rreal c, size_t samples) {
    if (!(c < 0))
        throw config_error("exact_sphere_curve: needs c < 0");
    ProfileCurve curve;
    curve.m = m;
    curve.c = c;
    rreal R = std::sqrt(-rreal(m) / c);
    rreal ds = kPi * R / samples;
    for (size_t i = 0; i < samples; ++i) {
        rreal s = (i + rreal(0.5)) * ds;
        rreal phi = kPi - s / R;  // decreasing: outward normal
        State y = {R * std::cos(phi), R * std::sin(phi), phi - kPi / 2};
        push_sample(curve, s, y, -1 / R);
    }
    return curve;
}

ProfileCurve exact_cylinder_curve(int m, rreal c, rreal length, size_t samples) {
    if (!(c < 0) || m < 2)
        throw config_error("exact_cylinder_curve: needs c < 0 and m >= 2");
    ProfileCurve curve;
    curve.m = m;
    curve.c = c;
    rreal R = std::sqrt(-rreal(m - 1) / c);
    rreal ds = length / samples;
    for (size_t i = 0; i < samples; ++i) {
        rreal s = (i + rreal(0.5)) * ds;
        push_sample(curve, s, {s, R, 0}, 0);
    }
    return curve;
}

ProfileCurve exact_plane_curve(int m, rreal c, rreal length, size_t samples) {
    ProfileCurve curve;
    curve.m = m;
    curve.c = c;
    rreal ds = length / samples;
    for (size_t i = 0; i < samples; ++i) {
        rreal s = (i + rreal(0.5)) * ds;
        push_sample(curve, s, {0, s, kPi / 2}, 0);
    }
    return curve;
}

ProfileCurve circle_curve(int m, rreal c, rreal R, size_t samples) {
    ProfileCurve curve;
    curve.m = m;
    curve.c = c;
    rreal ds = kPi * R / samples;
    for (size_t i = 0; i < samples; ++i) {
        rreal s = (i + rreal(0.5)) * ds;
        rreal phi = kPi - s / R;
        push_sample(curve, s, {R * std::cos(phi), R * std::sin(phi), phi - kPi / 2}, -1 / R);
    }
    return curve;
}

} // namespace mcfs
