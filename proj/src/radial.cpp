#include "cmc/radial.hpp"

#include <algorithm>
#include <cmath>

#include "cmc/errors.hpp"
#include "cmc/numerics.hpp"

namespace cmc {
namespace {

double g_plus(double H, double rho) {
    return 2.0 * H * std::cosh(rho) + std::sinh(rho);
}

double g_minus(double H, double rho) {
    return 2.0 * H * std::cosh(rho) - std::sinh(rho);
}

// g_plus(x + t) - g_plus(x) and g_minus(x + t) - g_minus(x) in cancellation-
// free product form (sum-to-product of the cosh/sinh differences).
double dg_plus(double H, double x, double t) {
    return 2.0 * std::sinh(0.5 * t) *
           (2.0 * H * std::sinh(x + 0.5 * t) + std::cosh(x + 0.5 * t));
}

double dg_minus(double H, double x, double t) {
    return 2.0 * std::sinh(0.5 * t) *
           (2.0 * H * std::sinh(x + 0.5 * t) - std::cosh(x + 0.5 * t));
}

void validate(const RadialProblem& p) {
    if (!(p.H >= 0.0) || !std::isfinite(p.H))
        throw InputError("radial: H must be finite and >= 0");
    if (!(p.rho_in > 0.0) || !(p.rho_out > p.rho_in) || !std::isfinite(p.rho_out))
        throw InputError("radial: need 0 < rho_in < rho_out < inf");
    if (!std::isfinite(p.h)) throw InputError("radial: h must be finite");
}

// Integral of u' = (c - 2H cosh rho) / sqrt((g_plus - c)(c - g_minus)) over
// [rho0, rho_out]. The square-root factors are assembled from the exact
// endpoint margins of the admissible interval plus product-form increments,
// so the integrable endpoint singularities at |phi| = 1 lose no precision.
double slope_integral(const RadialProblem& p, double c, double rho0) {
    const double H = p.H;
    const double out = p.rho_out;
    if (rho0 >= out) return 0.0;
    const double m_hi = g_plus(H, p.rho_in) - c;      // >= 0 when admissible
    const double baseA = dg_plus(H, p.rho_in, rho0 - p.rho_in);
    const bool bind_in = g_minus(H, p.rho_in) >= g_minus(H, out);
    const double m_lo_in = c - g_minus(H, p.rho_in);
    const double m_lo_out = c - g_minus(H, out);
    const double baseB = dg_minus(H, p.rho_in, rho0 - p.rho_in);

    auto f = [&](double rho, double da, double db) {
        const double A = m_hi + baseA + dg_plus(H, rho0, da);
        const double B = bind_in ? m_lo_in - (baseB + dg_minus(H, rho0, da))
                                 : m_lo_out - dg_minus(H, out, -db);
        const double AB = std::max(A * B, 1e-300);
        return (c - 2.0 * H * std::cosh(rho)) / std::sqrt(AB);
    };
    return tanh_sinh(f, rho0, out, 1e-13, 1e-13);
}

}  // namespace

std::pair<double, double> flux_bounds(const RadialProblem& problem) {
    validate(problem);
    const double c_hi = g_plus(problem.H, problem.rho_in);
    const double c_lo = std::max(g_minus(problem.H, problem.rho_in),
                                 g_minus(problem.H, problem.rho_out));
    return {c_lo, c_hi};
}

double radial_height(const RadialProblem& problem, double c) {
    validate(problem);
    return -slope_integral(problem, c, problem.rho_in);
}

double radial_u_at(const RadialProblem& problem, double c, double rho) {
    validate(problem);
    if (rho < problem.rho_in - 1e-12 || rho > problem.rho_out + 1e-12)
        throw DomainError("radial_u_at: rho outside the annulus");
    return -slope_integral(problem, c, std::min(rho, problem.rho_out));
}

std::pair<double, double> attainable_height_range(double H, double rho_in,
                                                  double rho_out) {
    RadialProblem p{H, rho_in, rho_out, 0.0};
    const auto [c_lo, c_hi] = flux_bounds(p);
    if (c_lo > c_hi) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        return {nan, nan};
    }
    return {radial_height(p, c_hi), radial_height(p, c_lo)};
}

RadialSolution solve_radial(const RadialProblem& problem, int n_samples) {
    validate(problem);
    if (n_samples < 2) throw InputError("solve_radial: n_samples must be >= 2");
    const auto [c_lo, c_hi] = flux_bounds(problem);
    if (c_lo > c_hi) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        throw NoRadialGraph(
            "solve_radial: no admissible flux constant (annulus wider than "
            "the profile domain)",
            nan, nan);
    }

    double c;
    if (problem.H == 0.0 && problem.h == 0.0) {
        c = 0.0;
    } else {
        const double h_min = radial_height(problem, c_hi);
        const double h_max = radial_height(problem, c_lo);
        if (problem.h < h_min - 1e-12 || problem.h > h_max + 1e-12)
            throw NoRadialGraph(
                "solve_radial: boundary height outside the attainable range",
                h_min, h_max);
        const double h_t = std::clamp(problem.h, h_min, h_max);
        const double scale = std::max({1.0, std::abs(c_lo), std::abs(c_hi)});
        c = brent_root(
            [&](double cc) { return radial_height(problem, cc) - h_t; },
            c_lo, c_hi, 1e-13 * scale, 1e-12);
    }

    RadialSolution sol;
    sol.flux_c = c;
    sol.samples.resize(n_samples);
    const double span = problem.rho_out - problem.rho_in;
    for (int k = 0; k < n_samples; ++k) {
        const double rho = problem.rho_in + span * k / (n_samples - 1);
        RadialSample& s = sol.samples[k];
        s.rho = rho;
        s.u = -slope_integral(problem, c, rho);
        s.phi = std::clamp((c - 2.0 * problem.H * std::cosh(rho)) / std::sinh(rho),
                           -1.0, 1.0);
    }
    sol.samples.back().u = 0.0;
    sol.achieved_h = sol.samples.front().u;
    if (std::abs(sol.achieved_h - problem.h) > 1e-8)
        throw ConvergenceError("solve_radial: achieved height misses the datum",
                               std::abs(sol.achieved_h - problem.h), 0);
    return sol;
}

}  // namespace cmc
