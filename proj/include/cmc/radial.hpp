#pragma once

// Rotationally symmetric solver on concentric annuli: the graph equation
// reduces to the conserved flux c = sinh(rho) phi(rho) + 2H cosh(rho), so
// solutions are exact up to quadrature. Boundary data: u = h at rho_in,
// u = 0 at rho_out.

#include <utility>
#include <vector>

namespace cmc {

struct RadialProblem {
    double H = 0.0;
    double rho_in = 1.0;   // inner geodesic radius, > 0
    double rho_out = 2.0;  // outer geodesic radius, > rho_in
    double h = 0.0;        // value at the inner boundary
};

struct RadialSample {
    double rho = 0.0;
    double u = 0.0;
    double phi = 0.0;  // u' / sqrt(1 + u'^2)
};

struct RadialSolution {
    double flux_c = 0.0;
    std::vector<RadialSample> samples;
    double achieved_h = 0.0;
};

// Admissible flux interval [c_lo, c_hi]: the c with |phi_c| <= 1 on the
// whole closed annulus. Empty (c_lo > c_hi) iff H > 1/2 and the annulus
// width exceeds T_H; returned as-is so callers can detect it.
std::pair<double, double> flux_bounds(const RadialProblem& problem);

// Inner boundary height produced by flux constant c (u(rho_out) = 0).
// Strictly decreasing in c.
double radial_height(const RadialProblem& problem, double c);

// u(rho) for flux constant c, by quadrature from rho_out.
double radial_u_at(const RadialProblem& problem, double c, double rho);

// Heights reachable by some admissible flux: (h at c_hi, h at c_lo).
// (NaN, NaN) when no flux is admissible. Always contains 0 otherwise.
std::pair<double, double> attainable_height_range(double H, double rho_in,
                                                  double rho_out);

// Finds the flux constant by Brent and samples the solution. Throws
// NoRadialGraph (carrying the attainable range) when h is out of reach.
RadialSolution solve_radial(const RadialProblem& problem, int n_samples = 129);

}  // namespace cmc
