#include "cmc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cmc/errors.hpp"
#include "cmc/numerics.hpp"

namespace cmc {
namespace {

// Fractional lattice offsets keep nodes off the coordinate axes and off
// exact circle intersections, which would otherwise produce degenerate
// zero-length arms.
constexpr double kOffsetX = 0.617;
constexpr double kOffsetY = 0.415;
constexpr double kMinArmFraction = 1e-6;

struct CircleAnnulus {
    EuclideanCircle inner, outer;
};

bool inside_annulus(const AnnularDomain& dom, const CircleAnnulus& circ,
                    double x, double y) {
    if (dom.has_circles) {
        const double din = sq(x - circ.inner.cx) + sq(y - circ.inner.cy);
        const double dout = sq(x - circ.outer.cx) + sq(y - circ.outer.cy);
        return din > sq(circ.inner.radius) && dout < sq(circ.outer.radius);
    }
    return polygon_contains(dom.outer, x, y) && !polygon_contains(dom.inner, x, y);
}

// Smallest t in (0, 1] with |p + t*dir - c| = radius; +inf when none.
double ray_circle_t(double px, double py, double dx, double dy,
                    const EuclideanCircle& c) {
    const double ox = px - c.cx, oy = py - c.cy;
    const double a = dx * dx + dy * dy;
    const double b = 2.0 * (ox * dx + oy * dy);
    const double cc = ox * ox + oy * oy - sq(c.radius);
    const double disc = b * b - 4.0 * a * cc;
    if (disc < 0.0) return std::numeric_limits<double>::infinity();
    const double sd = std::sqrt(disc);
    // Stable pair of quadratic roots.
    const double q = -0.5 * (b + (b >= 0.0 ? sd : -sd));
    double t1 = q / a;
    double t2 = (q == 0.0) ? t1 : cc / q;
    if (t1 > t2) std::swap(t1, t2);
    const double eps = 1e-15;
    if (t1 > eps && t1 <= 1.0 + 1e-12) return t1;
    if (t2 > eps && t2 <= 1.0 + 1e-12) return t2;
    return std::numeric_limits<double>::infinity();
}

// Smallest t in (0, 1] where segment p -> p+dir crosses the polyline.
double ray_polyline_t(double px, double py, double dx, double dy,
                      const CurvePolyline& poly) {
    double best = std::numeric_limits<double>::infinity();
    const auto& v = poly.vertices;
    const size_t n = v.size();
    const double qx = px + dx, qy = py + dy;
    const double lox = std::min(px, qx), hix = std::max(px, qx);
    const double loy = std::min(py, qy), hiy = std::max(py, qy);
    for (size_t k = 0; k < n; ++k) {
        const DiskPoint& a = v[k];
        const DiskPoint& b = v[(k + 1) % n];
        if (std::max(a.x, b.x) < lox || std::min(a.x, b.x) > hix ||
            std::max(a.y, b.y) < loy || std::min(a.y, b.y) > hiy)
            continue;
        const double ex = b.x - a.x, ey = b.y - a.y;
        const double den = dx * ey - dy * ex;
        if (den == 0.0) continue;
        const double wx = a.x - px, wy = a.y - py;
        const double t = (wx * ey - wy * ex) / den;  // along the arm
        const double u = (wx * dy - wy * dx) / den;  // along the segment
        if (t > 1e-15 && t <= 1.0 + 1e-12 && u >= -1e-12 && u <= 1.0 + 1e-12)
            best = std::min(best, t);
    }
    return best;
}

// Minimum Euclidean separation between the two boundary curves. Exact for
// circle pairs; strided vertex sampling otherwise (a bound check only).
double euclidean_gap(const AnnularDomain& dom, const CircleAnnulus& circ) {
    if (dom.has_circles) {
        const double cd = std::hypot(circ.inner.cx - circ.outer.cx,
                                     circ.inner.cy - circ.outer.cy);
        return circ.outer.radius - cd - circ.inner.radius;
    }
    const auto& a = dom.inner.vertices;
    const auto& b = dom.outer.vertices;
    const size_t sa = std::max<size_t>(1, a.size() / 512);
    const size_t sb = std::max<size_t>(1, b.size() / 512);
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < a.size(); i += sa)
        for (size_t j = 0; j < b.size(); j += sb)
            best = std::min(best, std::hypot(a[i].x - b[j].x, a[i].y - b[j].y));
    return best;
}

}  // namespace

DiskGrid build_grid(const AnnularDomain& domain, double spacing) {
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw InputError("build_grid: spacing must be positive");
    CircleAnnulus circ;
    if (domain.has_circles) {
        circ.inner = circle_to_euclidean(domain.inner_circle);
        circ.outer = circle_to_euclidean(domain.outer_circle);
    }
    const double gap = euclidean_gap(domain, circ);
    if (!(spacing <= gap / 4.0))
        throw InputError("build_grid: spacing " + std::to_string(spacing) +
                         " too coarse for annulus gap " + std::to_string(gap) +
                         " (need at least 4 cells across)");

    double xmin = 1.0, xmax = -1.0, ymin = 1.0, ymax = -1.0;
    for (const DiskPoint& v : domain.outer.vertices) {
        xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
    }
    const int i0 = static_cast<int>(std::floor(xmin / spacing - kOffsetX)) - 1;
    const int i1 = static_cast<int>(std::ceil(xmax / spacing - kOffsetX)) + 1;
    const int j0 = static_cast<int>(std::floor(ymin / spacing - kOffsetY)) - 1;
    const int j1 = static_cast<int>(std::ceil(ymax / spacing - kOffsetY)) + 1;

    DiskGrid grid;
    grid.spacing = spacing;
    auto node_x = [&](int i) { return (i + kOffsetX) * spacing; };
    auto node_y = [&](int j) { return (j + kOffsetY) * spacing; };

    for (int i = i0; i <= i1; ++i) {
        for (int j = j0; j <= j1; ++j) {
            const double x = node_x(i), y = node_y(j);
            if (x * x + y * y >= 1.0) continue;
            if (!inside_annulus(domain, circ, x, y)) continue;
            GridNode n;
            n.p = {x, y};
            n.interior = true;
            n.i = i;
            n.j = j;
            grid.lattice.emplace(lattice_key(i, j), static_cast<int>(grid.nodes.size()));
            grid.nodes.push_back(n);
        }
    }
    grid.n_interior = static_cast<int>(grid.nodes.size());
    if (grid.n_interior == 0)
        throw InputError("build_grid: no interior nodes; spacing too coarse");

    // Cut a boundary arm: locate the crossing, create the boundary node.
    auto cut_arm = [&](const DiskPoint& p, double dx, double dy) -> Arm {
        double t;
        int curve;
        if (domain.has_circles) {
            const double ti = ray_circle_t(p.x, p.y, dx, dy, circ.inner);
            const double to = ray_circle_t(p.x, p.y, dx, dy, circ.outer);
            t = std::min(ti, to);
            curve = (ti < to) ? 1 : 0;
        } else {
            const double ti = ray_polyline_t(p.x, p.y, dx, dy, domain.inner);
            const double to = ray_polyline_t(p.x, p.y, dx, dy, domain.outer);
            t = std::min(ti, to);
            curve = (ti < to) ? 1 : 0;
        }
        if (!std::isfinite(t)) {
            // Numerically tangent exit: treat the full arm as boundary and
            // tag by the nearer curve.
            t = 1.0;
            curve = domain.has_circles
                        ? ((std::hypot(p.x - circ.inner.cx, p.y - circ.inner.cy) -
                            circ.inner.radius) <
                                   (circ.outer.radius -
                                    std::hypot(p.x - circ.outer.cx, p.y - circ.outer.cy))
                               ? 1 : 0)
                        : 0;
        }
        t = std::max(t, kMinArmFraction);
        GridNode bn;
        bn.p = {p.x + t * dx, p.y + t * dy};
        bn.interior = false;
        bn.i = std::numeric_limits<int>::min();
        bn.j = std::numeric_limits<int>::min();
        bn.boundary_curve = curve;
        const int idx = static_cast<int>(grid.nodes.size());
        grid.nodes.push_back(bn);
        return Arm{idx, t * std::hypot(dx, dy)};
    };

    auto arm_to = [&](const GridNode& n, int di, int dj) -> Arm {
        const auto it = grid.lattice.find(lattice_key(n.i + di, n.j + dj));
        if (it != grid.lattice.end()) return Arm{it->second, spacing};
        return cut_arm(n.p, di * spacing, dj * spacing);
    };

    for (int k = 0; k < grid.n_interior; ++k) {
        // Note: arms may append boundary nodes; take a copy of the anchor.
        const GridNode n = grid.nodes[k];
        grid.nodes[k].east = arm_to(n, +1, 0);
        grid.nodes[k].west = arm_to(n, -1, 0);
        grid.nodes[k].north = arm_to(n, 0, +1);
        grid.nodes[k].south = arm_to(n, 0, -1);
    }

    for (const GridNode& n : grid.nodes)
        grid.lambda_max = std::max(grid.lambda_max, conformal_factor(n.p));
    return grid;
}

}  // namespace cmc
