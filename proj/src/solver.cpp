#include "cmc/solver.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>

#include "cmc/errors.hpp"
#include "cmc/numerics.hpp"

namespace cmc {
namespace {

using Trip = Eigen::Triplet<double>;

// d/dx (axis 0) or d/dy (axis 1) of u at node idx: quadratic through the node
// and both arm endpoints, so the estimate stays second order on the unequal
// arms of the cut ring. cols/w expose the three-point stencil for the Jacobian.
double deriv_at(const DiskGrid& g, const std::vector<double>& u, int idx,
                int axis, int cols[3], double w[3]) {
    const GridNode& nd = g.nodes[idx];
    const Arm& a = (axis == 0) ? nd.east : nd.north;
    const Arm& b = (axis == 0) ? nd.west : nd.south;
    const double A = b.len / (a.len * (a.len + b.len));
    const double B = a.len / (b.len * (a.len + b.len));
    if (cols) {
        cols[0] = a.nb;
        cols[1] = b.nb;
        cols[2] = idx;
        w[0] = A;
        w[1] = -B;
        w[2] = B - A;
    }
    return A * u[a.nb] - B * u[b.nb] + (B - A) * u[idx];
}

// Assembles the scaled residual F_P = div_e(lambda Du / sqrt(lambda^2+|Du|^2))
// + 2H lambda_P^2 at every interior node; optionally its Jacobian triplets.
void assemble(const DiskGrid& g, const std::vector<double>& u, double H,
              Eigen::VectorXd& F, std::vector<Trip>* trip) {
    const int n = g.n_interior;
    for (int k = 0; k < n; ++k) {
        const GridNode& P = g.nodes[k];
        const double hx = 0.5 * (P.east.len + P.west.len);
        const double hy = 0.5 * (P.north.len + P.south.len);
        double FP = 2.0 * H * sq(conformal_factor(P.p));

        // One face of the dual cell. sgn/h weights its flux in the
        // divergence; axis 0 = x-face (transverse derivative is dy),
        // axis 1 = y-face (transverse is dx). opp is the opposite arm.
        auto face = [&](const Arm& arm, const Arm& opp, int axis, double sgn,
                        double h) {
            const int nb = arm.nb;
            const double len = arm.len;
            const double mx = P.p.x + (axis == 0 ? sgn * 0.5 * len : 0.0);
            const double my = P.p.y + (axis == 1 ? sgn * 0.5 * len : 0.0);
            const double lam = 2.0 / (1.0 - mx * mx - my * my);
            const double grad = sgn * (u[nb] - u[k]) / len;
            const int tax = 1 - axis;

            // Transverse derivative at the face midpoint: average of the two
            // endpoint values across an interior face. A face into the
            // boundary has no stencil at its far endpoint; extrapolating from
            // P and the opposite neighbor keeps the flux second order there
            // too, which is what sets the observed convergence rate (the
            // boundary ring otherwise pins it near first order). The cap on
            // the extrapolation weight keeps sliver arms from amplifying it.
            int colsP[3], colsO[3];
            double wtP[3], wtO[3];
            const double transP = deriv_at(g, u, k, tax, colsP, wtP);
            double wSelf = 1.0, wOther = 0.0;
            int other = -1;
            if (nb < n) {
                other = nb;
                wSelf = wOther = 0.5;
            } else if (opp.nb < n && len <= 2.0 * opp.len) {
                const double beta = 0.5 * len / opp.len;
                other = opp.nb;
                wSelf = 1.0 + beta;
                wOther = -beta;
            }
            double trans = wSelf * transP;
            if (other >= 0)
                trans += wOther * deriv_at(g, u, other, tax, colsO, wtO);

            const double D = std::sqrt(lam * lam + grad * grad + trans * trans);
            FP += sgn * lam * grad / (h * D);
            if (!trip) return;
            const double D3 = D * D * D;
            const double dGdg = lam * (lam * lam + trans * trans) / D3;
            const double dGdt = -lam * grad * trans / D3;
            auto add = [&](int col, double val) {
                if (col < n) trip->emplace_back(k, col, val);
            };
            // d(grad)/du
            add(nb, dGdg / (h * len));
            add(k, -dGdg / (h * len));
            // d(trans)/du through both contributing stencils
            for (int q = 0; q < 3; ++q)
                add(colsP[q], sgn * dGdt * wSelf * wtP[q] / h);
            if (other >= 0)
                for (int q = 0; q < 3; ++q)
                    add(colsO[q], sgn * dGdt * wOther * wtO[q] / h);
        };

        face(P.east, P.west, 0, +1.0, hx);
        face(P.west, P.east, 0, -1.0, hx);
        face(P.north, P.south, 1, +1.0, hy);
        face(P.south, P.north, 1, -1.0, hy);
        F[k] = FP;
    }
}

double q_norm(const DiskGrid& g, const Eigen::VectorXd& F) {
    double r = 0.0;
    for (int k = 0; k < g.n_interior; ++k)
        r = std::max(r, std::abs(F[k]) / sq(conformal_factor(g.nodes[k].p)));
    return r;
}

// Hyperbolic distance from p to a domain curve: exact for circles, strided
// vertex minimum otherwise. Only used to shape the initial guess.
double curve_distance(const AnnularDomain& dom, const DiskPoint& p, bool inner) {
    if (dom.has_circles) {
        const double s =
            distance_to_circle(p, inner ? dom.inner_circle : dom.outer_circle);
        return inner ? s : -s;
    }
    const auto& v = (inner ? dom.inner : dom.outer).vertices;
    const size_t stride = std::max<size_t>(1, v.size() / 1024);
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < v.size(); i += stride)
        best = std::min(best, hyperbolic_distance(p, v[i]));
    return best;
}

}  // namespace

FieldSolution solve_disk(const AnnularDomain& domain, double H, double h,
                         double target_spacing, const SolveOptions& opts) {
    if (!(H >= 0.0) || !std::isfinite(H))
        throw InputError("solve_disk: H must be finite and >= 0");
    if (!std::isfinite(h)) throw InputError("solve_disk: h must be finite");

    FieldSolution field;
    field.grid = build_grid(domain, target_spacing);
    field.H = H;
    field.h = h;
    const DiskGrid& g = field.grid;
    const int n = g.n_interior;

    field.u.assign(g.nodes.size(), 0.0);
    for (size_t k = n; k < g.nodes.size(); ++k)
        field.u[k] = (g.nodes[k].boundary_curve == 1) ? h : 0.0;
    if (!opts.zero_initial_guess && h != 0.0) {
        for (int k = 0; k < n; ++k) {
            const double sa = curve_distance(domain, g.nodes[k].p, true);
            const double sb = curve_distance(domain, g.nodes[k].p, false);
            field.u[k] = h * sb / (sa + sb);
        }
    }

    Eigen::VectorXd F(n), Ftry(n);
    std::vector<Trip> trip;
    std::vector<double> utry(field.u);
    double rq = 0.0;
    bool done = false;
    int it = 0;
    for (; it <= opts.max_newton; ++it) {
        trip.clear();
        assemble(g, field.u, H, F, &trip);
        rq = q_norm(g, F);
        if (rq <= opts.tol * g.lambda_max) { done = true; break; }
        if (it == opts.max_newton) break;

        Eigen::SparseMatrix<double> J(n, n);
        J.setFromTriplets(trip.begin(), trip.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        lu.compute(J);
        if (lu.info() != Eigen::Success)
            throw ConvergenceError("solve_disk: jacobian factorization failed", rq, it);
        const Eigen::VectorXd delta = lu.solve(-F);

        const double m0 = F.lpNorm<Eigen::Infinity>();
        double sigma = 1.0;
        bool accepted = false;
        for (int bt = 0; bt <= opts.max_backtrack; ++bt) {
            for (int k = 0; k < n; ++k) utry[k] = field.u[k] + sigma * delta[k];
            assemble(g, utry, H, Ftry, nullptr);
            if (Ftry.lpNorm<Eigen::Infinity>() <= (1.0 - 0.25 * sigma) * m0) {
                accepted = true;
                break;
            }
            sigma *= opts.damping;
        }
        if (!accepted)
            throw ConvergenceError(
                "solve_disk: newton stagnation (step rejected " +
                    std::to_string(opts.max_backtrack + 1) + " times)",
                rq, it);
        for (int k = 0; k < n; ++k) field.u[k] = utry[k];
    }
    if (!done)
        throw ConvergenceError("solve_disk: newton iteration limit", rq, it);

    field.residual_inf = rq;
    field.newton_iters = it;
    field.converged = true;

    const double jump = max_gradient_step(field);
    if (jump > 10.0)
        throw ConvergenceError(
            "solve_disk: gradient exceeds grid resolution (|Du|*spacing = " +
                std::to_string(jump) + "); refine spacing",
            rq, it);
    return field;
}

std::vector<double> residual_field(const FieldSolution& field, double H) {
    const DiskGrid& g = field.grid;
    Eigen::VectorXd F(g.n_interior);
    assemble(g, field.u, H, F, nullptr);
    std::vector<double> q(g.nodes.size(), 0.0);
    for (int k = 0; k < g.n_interior; ++k)
        q[k] = F[k] / sq(conformal_factor(g.nodes[k].p));
    return q;
}

double max_gradient_step(const FieldSolution& field) {
    const DiskGrid& g = field.grid;
    double worst = 0.0;
    for (int k = 0; k < g.n_interior; ++k) {
        const GridNode& nnode = g.nodes[k];
        for (const Arm* a : {&nnode.east, &nnode.west, &nnode.north, &nnode.south})
            worst = std::max(worst, std::abs(field.u[a->nb] - field.u[k]) /
                                        a->len * g.spacing);
    }
    return worst;
}

}  // namespace cmc
