#include "cmc/curves.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "cmc/errors.hpp"
#include "cmc/numerics.hpp"

namespace cmc {

namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

DiskPoint lerp(const DiskPoint& a, const DiskPoint& b, double t) {
    return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

double orient(const DiskPoint& a, const DiskPoint& b, const DiskPoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool segments_cross(const DiskPoint& a, const DiskPoint& b,
                    const DiskPoint& c, const DiskPoint& d) {
    const double o1 = orient(a, b, c), o2 = orient(a, b, d);
    const double o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) return true;
    // Touching configurations count as intersection for nesting purposes.
    auto on = [](const DiskPoint& p, const DiskPoint& q, const DiskPoint& w) {
        return std::min(p.x, q.x) - 1e-15 <= w.x && w.x <= std::max(p.x, q.x) + 1e-15 &&
               std::min(p.y, q.y) - 1e-15 <= w.y && w.y <= std::max(p.y, q.y) + 1e-15;
    };
    if (o1 == 0 && on(a, b, c)) return true;
    if (o2 == 0 && on(a, b, d)) return true;
    if (o3 == 0 && on(c, d, a)) return true;
    if (o4 == 0 && on(c, d, b)) return true;
    return false;
}

// Hyperbolic distance between points of two chords, Euclidean-linear in
// the parameters.
double seg_pair_dist(const DiskPoint& a0, const DiskPoint& a1,
                     const DiskPoint& b0, const DiskPoint& b1,
                     double t, double u) {
    return hyperbolic_distance(lerp(a0, a1, t), lerp(b0, b1, u));
}

double polygon_signed_area(const CurvePolyline& c) {
    double s = 0.0;
    const int n = static_cast<int>(c.vertices.size());
    for (int i = 0; i < n; ++i) {
        const DiskPoint& p = c.vertices[i];
        const DiskPoint& q = c.vertices[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return 0.5 * s;
}

}  // namespace

void validate_curve(const CurvePolyline& c) {
    if (c.closed && c.vertices.size() < 3)
        throw DomainError("closed curve needs at least 3 vertices");
    if (c.vertices.empty())
        throw DomainError("curve has no vertices");
    for (const auto& v : c.vertices) validate_point(v);
    const int n = static_cast<int>(c.vertices.size());
    const int last = c.closed ? n : n - 1;
    for (int i = 0; i < last; ++i) {
        const DiskPoint& p = c.vertices[i];
        const DiskPoint& q = c.vertices[(i + 1) % n];
        if (sq(p.x - q.x) + sq(p.y - q.y) < 1e-30)
            throw DomainError("curve has equal consecutive vertices");
    }
}

bool polygon_contains(const CurvePolyline& poly, double x, double y) {
    bool in = false;
    const int n = static_cast<int>(poly.vertices.size());
    for (int i = 0, j = n - 1; i < n; j = i++) {
        const DiskPoint& a = poly.vertices[i];
        const DiskPoint& b = poly.vertices[j];
        if ((a.y > y) != (b.y > y)) {
            const double xc = a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (x < xc) in = !in;
        }
    }
    return in;
}

bool curves_intersect(const CurvePolyline& a, const CurvePolyline& b) {
    const int na = static_cast<int>(a.vertices.size());
    const int nb = static_cast<int>(b.vertices.size());
    // Bucket b's segments on a uniform grid so dense curves stay tractable.
    double maxlen = 1e-12;
    for (int j = 0; j < nb; ++j) {
        const DiskPoint& c = b.vertices[j];
        const DiskPoint& d = b.vertices[(j + 1) % nb];
        maxlen = std::max(maxlen, std::hypot(d.x - c.x, d.y - c.y));
    }
    const double cell = std::max(maxlen, 2.0 / 512.0);
    const int gw = static_cast<int>(std::ceil(2.0 / cell));
    std::unordered_map<int, std::vector<int>> buckets;
    for (int j = 0; j < nb; ++j) {
        const DiskPoint& c = b.vertices[j];
        const DiskPoint& d = b.vertices[(j + 1) % nb];
        const int x0 = std::clamp(static_cast<int>((std::min(c.x, d.x) + 1.0) / cell), 0, gw - 1);
        const int x1 = std::clamp(static_cast<int>((std::max(c.x, d.x) + 1.0) / cell), 0, gw - 1);
        const int y0 = std::clamp(static_cast<int>((std::min(c.y, d.y) + 1.0) / cell), 0, gw - 1);
        const int y1 = std::clamp(static_cast<int>((std::max(c.y, d.y) + 1.0) / cell), 0, gw - 1);
        for (int iy = y0; iy <= y1; ++iy)
            for (int ix = x0; ix <= x1; ++ix)
                buckets[iy * gw + ix].push_back(j);
    }
    for (int i = 0; i < na; ++i) {
        const DiskPoint& p = a.vertices[i];
        const DiskPoint& q = a.vertices[(i + 1) % na];
        const int x0 = std::clamp(static_cast<int>((std::min(p.x, q.x) + 1.0) / cell) - 1, 0, gw - 1);
        const int x1 = std::clamp(static_cast<int>((std::max(p.x, q.x) + 1.0) / cell) + 1, 0, gw - 1);
        const int y0 = std::clamp(static_cast<int>((std::min(p.y, q.y) + 1.0) / cell) - 1, 0, gw - 1);
        const int y1 = std::clamp(static_cast<int>((std::max(p.y, q.y) + 1.0) / cell) + 1, 0, gw - 1);
        for (int iy = y0; iy <= y1; ++iy) {
            for (int ix = x0; ix <= x1; ++ix) {
                auto it = buckets.find(iy * gw + ix);
                if (it == buckets.end()) continue;
                for (int j : it->second) {
                    const DiskPoint& c = b.vertices[j];
                    const DiskPoint& d = b.vertices[(j + 1) % nb];
                    if (segments_cross(p, q, c, d)) return true;
                }
            }
        }
    }
    return false;
}

std::optional<GeodesicCircle> detect_circle(const CurvePolyline& c, double tol_euclid) {
    const int n = static_cast<int>(c.vertices.size());
    // Coarse polygons (a square has all vertices on its circumcircle) must
    // not be replaced by that circle; 16 matches make_circle_domain's floor.
    if (!c.closed || n < 16) return std::nullopt;
    const DiskPoint& a = c.vertices[0];
    const DiskPoint& b = c.vertices[n / 3];
    const DiskPoint& w = c.vertices[(2 * n) / 3];
    // Circumcenter of three points (hyperbolic circles are Euclidean ones).
    const double det = 2.0 * ((b.x - a.x) * (w.y - a.y) - (b.y - a.y) * (w.x - a.x));
    if (std::abs(det) < 1e-18) return std::nullopt;
    const double la = a.x * a.x + a.y * a.y;
    const double lb = b.x * b.x + b.y * b.y;
    const double lw = w.x * w.x + w.y * w.y;
    EuclideanCircle e;
    e.cx = ((lb - la) * (w.y - a.y) - (lw - la) * (b.y - a.y)) / det;
    e.cy = ((lw - la) * (b.x - a.x) - (lb - la) * (w.x - a.x)) / det;
    e.radius = std::hypot(a.x - e.cx, a.y - e.cy);
    for (const auto& v : c.vertices) {
        if (std::abs(std::hypot(v.x - e.cx, v.y - e.cy) - e.radius) > tol_euclid)
            return std::nullopt;
    }
    if (!(std::hypot(e.cx, e.cy) + e.radius < 1.0)) return std::nullopt;
    return circle_from_euclidean(e);
}

namespace {

// Minimize (sign=+1) or maximize (sign=-1) the hyperbolic distance between
// two polylines' chords near the vertex pair (i0, j0).
double refine_extremum(const CurvePolyline& A, const CurvePolyline& B,
                       int i0, int j0, int sign) {
    const int na = static_cast<int>(A.vertices.size());
    const int nb = static_cast<int>(B.vertices.size());
    double best = sign * hyperbolic_distance(A.vertices[i0], B.vertices[j0]);
    for (int si = -1; si <= 0; ++si) {
        for (int sj = -1; sj <= 0; ++sj) {
            const DiskPoint& a0 = A.vertices[wrap(i0 + si, na)];
            const DiskPoint& a1 = A.vertices[wrap(i0 + si + 1, na)];
            const DiskPoint& b0 = B.vertices[wrap(j0 + sj, nb)];
            const DiskPoint& b1 = B.vertices[wrap(j0 + sj + 1, nb)];
            double t = si ? 1.0 : 0.0, u = sj ? 1.0 : 0.0;
            for (int sweep = 0; sweep < 24; ++sweep) {
                const double t_old = t, u_old = u;
                t = golden_min([&](double tt) {
                    return sign * seg_pair_dist(a0, a1, b0, b1, tt, u);
                }, 0.0, 1.0, 1e-11);
                u = golden_min([&](double uu) {
                    return sign * seg_pair_dist(a0, a1, b0, b1, t, uu);
                }, 0.0, 1.0, 1e-11);
                if (std::abs(t - t_old) + std::abs(u - u_old) < 1e-11) break;
            }
            best = std::min(best, sign * seg_pair_dist(a0, a1, b0, b1, t, u));
        }
    }
    return sign * best;
}

// Discrete extremum of d(A_i, B_j) over the vertex grid: coarse scan with
// a stride, then steepest descent on index neighborhoods.
std::pair<int, int> vertex_extremum(const CurvePolyline& A, const CurvePolyline& B,
                                    int sign) {
    const int na = static_cast<int>(A.vertices.size());
    const int nb = static_cast<int>(B.vertices.size());
    const int sa = std::max(1, na / 256), sb = std::max(1, nb / 256);
    int bi = 0, bj = 0;
    double best = sign * hyperbolic_distance(A.vertices[0], B.vertices[0]);
    for (int i = 0; i < na; i += sa) {
        for (int j = 0; j < nb; j += sb) {
            const double v = sign * hyperbolic_distance(A.vertices[i], B.vertices[j]);
            if (v < best) { best = v; bi = i; bj = j; }
        }
    }
    const int step0 = std::max(sa, sb);
    for (int step = step0; step >= 1; step /= 2) {
        bool moved = true;
        int guard = 0;
        while (moved && guard++ < na + nb) {
            moved = false;
            for (int di = -1; di <= 1; ++di) {
                for (int dj = -1; dj <= 1; ++dj) {
                    if (!di && !dj) continue;
                    const int i = wrap(bi + di * step, na);
                    const int j = wrap(bj + dj * step, nb);
                    const double v = sign * hyperbolic_distance(A.vertices[i], B.vertices[j]);
                    if (v < best - 1e-15) { best = v; bi = i; bj = j; moved = true; }
                }
            }
        }
        if (step == 1) break;
    }
    return {bi, bj};
}

void check_nested(const CurvePolyline& outer, const CurvePolyline& inner) {
    if (curves_intersect(outer, inner))
        throw DomainError("curves not nested: boundaries intersect");
    if (!polygon_contains(outer, inner.vertices[0].x, inner.vertices[0].y))
        throw DomainError("curves not nested: inner curve not inside outer");
    if (polygon_contains(inner, outer.vertices[0].x, outer.vertices[0].y))
        throw DomainError("curves not nested: outer curve inside inner");
}

}  // namespace

CurveMetrics curve_metrics(const CurvePolyline& outer, const CurvePolyline& inner) {
    validate_curve(outer);
    validate_curve(inner);
    if (!outer.closed || !inner.closed)
        throw DomainError("curve_metrics requires closed curves");
    check_nested(outer, inner);

    CurveMetrics m;
    auto [i0, j0] = vertex_extremum(outer, inner, +1);
    m.d = refine_extremum(outer, inner, i0, j0, +1);
    auto [i1, j1] = vertex_extremum(outer, outer, -1);
    m.diam_beta = refine_extremum(outer, outer, i1, j1, -1);
    return m;
}

AnnularDomain make_circle_domain(const DiskPoint& center_in, double rho_in,
                                 const DiskPoint& center_out, double rho_out,
                                 int n_vertices) {
    if (!(rho_in > 0.0) || !(rho_out > 0.0))
        throw DomainError("circle radii must be positive");
    if (n_vertices < 16) throw DomainError("circle sampling too coarse");
    const double c = hyperbolic_distance(center_in, center_out);
    if (!(c + rho_in < rho_out))
        throw DomainError("inner disk not strictly inside outer disk");

    AnnularDomain dom;
    dom.inner_circle = {center_in, rho_in};
    dom.outer_circle = {center_out, rho_out};
    dom.has_circles = true;
    dom.r = rho_in;
    dom.R = rho_out;
    dom.d = rho_out - c - rho_in;
    dom.diam_beta = 2.0 * rho_out;
    dom.outer_diam_exceeds_2rd = dom.diam_beta > 2.0 * (dom.r + dom.d);
    dom.inner.closed = dom.outer.closed = true;
    dom.inner.vertices.reserve(n_vertices);
    dom.outer.vertices.reserve(n_vertices);
    for (int k = 0; k < n_vertices; ++k) {
        const double th = 2.0 * M_PI * k / n_vertices;
        dom.inner.vertices.push_back(circle_point(dom.inner_circle, th));
        dom.outer.vertices.push_back(circle_point(dom.outer_circle, th));
    }
    return dom;
}

namespace {

// Tangent-circle spot check at subsampled vertices; returns a warning
// message on the first violation found, empty string otherwise.
std::string tangent_circle_check(const CurvePolyline& curve, double radius,
                                 bool interior_side, const char* label) {
    const int n = static_cast<int>(curve.vertices.size());
    const bool ccw = polygon_signed_area(curve) > 0.0;
    const int stride = std::max(1, n / 64);
    for (int k = 0; k < n; k += stride) {
        const DiskPoint& prev = curve.vertices[wrap(k - 1, n)];
        const DiskPoint& v = curve.vertices[k];
        const DiskPoint& next = curve.vertices[wrap(k + 1, n)];
        double tx = next.x - prev.x, ty = next.y - prev.y;
        const double tn = std::hypot(tx, ty);
        if (tn < 1e-15) continue;
        tx /= tn; ty /= tn;
        // Left normal points into the enclosed region for CCW orientation.
        double nx = -ty, ny = tx;
        if (!ccw) { nx = -nx; ny = -ny; }
        if (!interior_side) { nx = -nx; ny = -ny; }
        const double ang = std::atan2(ny, nx);
        DiskPoint center;
        try {
            center = geodesic_step(v, ang, radius);
        } catch (const DomainError&) {
            return std::string("tangent circle of radius ") + label +
                   " leaves the disk model near a vertex";
        }
        // Tangency allows distance == radius; anything closer violates the
        // circle condition at this vertex.
        for (int j = 0; j < n; ++j) {
            if (wrap(j - k, n) <= 1 || wrap(k - j, n) <= 1) continue;
            if (hyperbolic_distance(center, curve.vertices[j]) < radius - 1e-6)
                return std::string("circle condition of radius ") + label +
                       " violated near vertex " + std::to_string(k);
        }
    }
    return {};
}

}  // namespace

AnnularDomain make_domain(const CurvePolyline& outer, const CurvePolyline& inner,
                          std::optional<double> r, std::optional<double> R) {
    validate_curve(outer);
    validate_curve(inner);
    if (!outer.closed || !inner.closed)
        throw DomainError("domain boundaries must be closed curves");
    check_nested(outer, inner);

    AnnularDomain dom;
    dom.outer = outer;
    dom.inner = inner;

    const auto ic = detect_circle(inner);
    const auto oc = detect_circle(outer);
    if (ic && oc) {
        dom.has_circles = true;
        dom.inner_circle = *ic;
        dom.outer_circle = *oc;
        const double c = hyperbolic_distance(ic->center, oc->center);
        dom.d = oc->radius - c - ic->radius;
        dom.diam_beta = 2.0 * oc->radius;
        if (!(dom.d > 0.0))
            throw DomainError("inner circle not strictly inside outer circle");
        dom.r = r.value_or(ic->radius);
        dom.R = R.value_or(oc->radius);
        if (r && std::abs(*r - ic->radius) > 1e-6)
            dom.warnings.push_back("supplied r differs from the inner circle radius");
        if (R && std::abs(*R - oc->radius) > 1e-6)
            dom.warnings.push_back("supplied R differs from the outer circle radius");
    } else {
        if (!r || !R)
            throw InputError("r and R must be supplied for non-circular boundaries");
        if (!(*r > 0.0) || !(*R > 0.0))
            throw DomainError("r and R must be positive");
        dom.r = *r;
        dom.R = *R;
        const CurveMetrics m = curve_metrics(outer, inner);
        dom.d = m.d;
        dom.diam_beta = m.diam_beta;
        std::string w = tangent_circle_check(inner, dom.r, true, "r");
        if (!w.empty()) dom.warnings.push_back(w + " (inner curve)");
        w = tangent_circle_check(outer, dom.R, false, "R");
        if (!w.empty()) dom.warnings.push_back(w + " (outer curve)");
    }
    dom.outer_diam_exceeds_2rd = dom.diam_beta > 2.0 * (dom.r + dom.d);
    return dom;
}

}  // namespace cmc
