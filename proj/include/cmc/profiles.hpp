#pragma once

// Rotational CMC profile families: nodoid-type profiles with a circular
// neck (finite r), their r -> 0 cap and r -> infinity horocycle limits,
// peak/zero locations, and the critical slab height.

#include <limits>
#include <vector>

namespace cmc {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct ProfileParams {
    double H = 0.0;  // mean curvature, >= 0
    double r = 1.0;  // neck radius, > 0; +inf selects the horocycle family
};

struct ProfileSample {
    double s = 0.0;       // hyperbolic distance from the neck
    double height = 0.0;  // profile value
    double phi = 0.0;     // u' / sqrt(1 + u'^2)
};

struct SlabBound {
    double H = 0.0;
    double h_max = 0.0;
};

// Domain half-width of the profile: +inf for H <= 1/2, else
// log((2H+1)/(2H-1)). Independent of the neck radius.
double t_cutoff(double H);

// phi(s) = u'/sqrt(1+u'^2) along the profile. Accepts r = +inf (horocycle
// family), where phi(s) = (1+2H)e^{-s} - 2H.
double slope_ratio(const ProfileParams& params, double s);

// Height of the neck-radius-r profile at arc parameter s, by
// singularity-aware quadrature. Requires finite r > 0.
double hnod_eval(const ProfileParams& params, double s);

// Minimal (H = 0) profile.
double cat_eval(double r, double s);

// Cap profile (r -> 0 limit), closed form; H >= 1/2.
double hcap_eval(double H, double s);

// Horocycle-family profile (r = +inf), closed form; H >= 0.
double horonod_eval(double H, double s);

// Location of the profile maximum; +inf when H = 0. Accepts r = +inf.
double x_peak(double H, double r);

// Positive zero of the profile (exists for H > 0, r > 0).
double rho_zero(double H, double r);

// Supremum of the profile: attained at x_peak for H > 0, horizontal
// asymptote for H = 0.
double max_height(const ProfileParams& params);

// Critical slab height: no taller slab admits the crossing surfaces the
// bound governs. Three branches, continuous at H = 1/2.
SlabBound h_slab(double H);

// Centered finite-difference residual of phi' + phi*coth(r+s) + 2H
// (coth term = 1 for r = +inf).
double ode_residual(const ProfileParams& params, double s, double step);

// Conserved flux along a profile: sinh(r+s)*phi + 2H*cosh(r+s) for finite
// r, e^s*(phi + 2H) for r = +inf. flux_residual subtracts the s = 0 value.
double flux_value(const ProfileParams& params, double s);
double flux_residual(const ProfileParams& params, double s);

// Uniform table over [0, s_max] with n rows (n >= 2).
std::vector<ProfileSample> profile_table(const ProfileParams& params,
                                         double s_max, int n);

}  // namespace cmc
