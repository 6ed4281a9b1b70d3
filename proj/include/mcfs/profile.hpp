#ifndef MCFS_PROFILE_HPP
#define MCFS_PROFILE_HPP

#include <functional>
#include <limits>
#include <optional>
#include <string>

namespace mcfs {

// Catalog of warping functions h on an interval I. The warped metric on
// I x P is dt^2 + h(t)^2 g_P; slices {t} x P are the model leaves.
enum class ProfileName {
    euclidean_cone,      // h = t       on (0, inf)
    horospherical,       // h = e^t     on R
    geodesic_spherical,  // h = sinh t  on (0, inf)
    equidistant,         // h = cosh t  on R
    spherical,           // h = sin t   on (0, pi)
    product,             // h = 1       on R
    custom
};

std::string to_string(ProfileName name);
ProfileName profile_name_from_string(const std::string& s);

// Warping function with its first two derivatives on an open interval.
// Catalog entries carry analytic derivatives; custom profiles may supply
// closed-form derivative expressions or fall back to 5-point centered
// finite differences with step 1e-5 * max(1, |t|).
struct WarpingProfile {
    ProfileName name = ProfileName::custom;
    double interval_lo = -std::numeric_limits<double>::infinity();
    double interval_hi = std::numeric_limits<double>::infinity();
    std::function<double(double)> h, h1, h2;

    static WarpingProfile catalog(ProfileName name);

    // h_expr is required; derivative expressions are optional and replaced
    // by finite differences of h when absent.
    static WarpingProfile custom(double lo, double hi, const std::string& h_expr,
                                 const std::string& h1_expr = "",
                                 const std::string& h2_expr = "");

    // Throws domain_error when t is outside I or within 1e-9 of a finite
    // endpoint (the profiles with h -> 0 there are treated as open).
    void check_domain(double t) const;

    bool contains(double t) const {
        return t > interval_lo + kEndpointMargin && t < interval_hi - kEndpointMargin;
    }

    static constexpr double kEndpointMargin = 1e-9;
};

// Ambient warped product I x_h P with a constant-curvature fiber.
struct WarpedSpace {
    WarpingProfile profile;
    double kappa = 0.0;  // fiber sectional curvature
    int n = 2;           // fiber dimension

    // If -h''/h and (kappa - h'^2)/h^2 agree and are constant (within 1e-8)
    // on a sample grid over I, returns that common constant curvature.
    std::optional<double> space_form_check() const;
};

// Parameters of the soliton equation c X^perp = H for m-dimensional
// submanifolds, with the potential anchored at t0.
struct SolitonContext {
    WarpedSpace space;
    double c = -1.0;  // soliton constant, nonzero
    int m = 2;        // soliton dimension, m <= n
    double t0 = 1.0;  // base point of the potential integral

    void validate() const;
};

} // namespace mcfs

#endif
