#pragma once

// Dirichlet solvers for the CMC graph equation: conserved-flux radial
// solver (see radial.hpp) and a damped-Newton finite-difference solver on
// general annular domains, discretizing the conformal reformulation
// lambda^2 Q_H(u) = div_e(lambda Du / sqrt(lambda^2 + |Du|^2)) + 2H lambda^2.

#include <vector>

#include "cmc/grid.hpp"

namespace cmc {

struct SolveOptions {
    double tol = 1e-8;    // converged when max |Q_H| <= tol * lambda_max
    int max_newton = 50;
    double damping = 0.5; // backtracking factor
    int max_backtrack = 25;
    // Start from 0 in the interior instead of the boundary-data interpolant
    // (used to probe uniqueness).
    bool zero_initial_guess = false;
};

struct FieldSolution {
    DiskGrid grid;
    std::vector<double> u;      // per node; boundary entries hold the data
    double residual_inf = 0.0;  // max |Q_H| over interior nodes
    int newton_iters = 0;
    bool converged = false;
    double H = 0.0;
    double h = 0.0;  // inner boundary datum (outer datum is 0)
};

// Solves Q_H(u) = 0 with u = h on the inner curve, 0 on the outer curve.
// Throws ConvergenceError on Newton stagnation or when the converged field
// is under-resolved (|Du| * spacing > 10 across some arm).
FieldSolution solve_disk(const AnnularDomain& domain, double H, double h,
                         double target_spacing, const SolveOptions& opts = {});

// Discrete Q_H recomputed per node (0 at boundary nodes).
std::vector<double> residual_field(const FieldSolution& field, double H);

// max over arms of |du|/len * spacing: the refinement diagnostic used by
// the blow-up check.
double max_gradient_step(const FieldSolution& field);

}  // namespace cmc
