#include "cmc/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "cmc/errors.hpp"
#include "cmc/numerics.hpp"

namespace cmc {

void validate_point(const DiskPoint& p) {
    if (!(p.x * p.x + p.y * p.y < 1.0))
        throw DomainError("point not strictly inside the unit disk");
}

double hyperbolic_distance(const DiskPoint& p, const DiskPoint& q) {
    validate_point(p);
    validate_point(q);
    const double dp = 1.0 - (p.x * p.x + p.y * p.y);
    const double dq = 1.0 - (q.x * q.x + q.y * q.y);
    const double e2 = sq(p.x - q.x) + sq(p.y - q.y);
    // acosh(1 + eps) loses half the digits for tiny eps; the asinh form of
    // the same distance is accurate uniformly.
    const double t = e2 / (dp * dq);
    return 2.0 * std::asinh(std::sqrt(t));
}

double conformal_factor(const DiskPoint& p) {
    validate_point(p);
    return 2.0 / (1.0 - (p.x * p.x + p.y * p.y));
}

double distance_to_circle(const DiskPoint& p, const GeodesicCircle& c) {
    if (!(c.radius > 0.0) || !std::isfinite(c.radius))
        throw DomainError("geodesic circle radius must be finite and positive");
    return hyperbolic_distance(p, c.center) - c.radius;
}

double distance_to_horocycle(const DiskPoint& p, const Horocycle& h) {
    validate_point(p);
    const double n = std::hypot(h.ideal_x, h.ideal_y);
    if (std::abs(n - 1.0) > 1e-12)
        throw DomainError("horocycle ideal point must be a unit vector");
    const double wx = h.ideal_x / n, wy = h.ideal_y / n;
    // Busemann function toward w: B(p) = log(|w - p|^2 / (1 - |p|^2)),
    // zero on the horocycle through the origin. The horocycle at offset o
    // is the level set B = -o, so B(p) + o is the signed distance.
    const double num = sq(wx - p.x) + sq(wy - p.y);
    const double den = 1.0 - (p.x * p.x + p.y * p.y);
    return std::log(num / den) + h.offset;
}

DiskPoint circle_point(const GeodesicCircle& c, double theta) {
    validate_point(c.center);
    const double e = std::tanh(0.5 * c.radius);
    const cplx z = mobius_translate(e * std::polar(1.0, theta), to_c(c.center));
    return from_c(z);
}

DiskPoint geodesic_step(const DiskPoint& p, double theta, double t) {
    validate_point(p);
    const double e = std::tanh(0.5 * t);
    return from_c(mobius_translate(e * std::polar(1.0, theta), to_c(p)));
}

EuclideanCircle circle_to_euclidean(const GeodesicCircle& c) {
    validate_point(c.center);
    const double m = std::hypot(c.center.x, c.center.y);
    double ux = 1.0, uy = 0.0;
    if (m > 0.0) { ux = c.center.x / m; uy = c.center.y / m; }
    const double rho_c = 2.0 * std::atanh(m);
    const double t1 = std::tanh(0.5 * (rho_c - c.radius));
    const double t2 = std::tanh(0.5 * (rho_c + c.radius));
    EuclideanCircle e;
    const double mid = 0.5 * (t1 + t2);
    e.cx = mid * ux;
    e.cy = mid * uy;
    e.radius = 0.5 * (t2 - t1);
    return e;
}

GeodesicCircle circle_from_euclidean(const EuclideanCircle& e) {
    const double m = std::hypot(e.cx, e.cy);
    if (!(m + e.radius < 1.0))
        throw DomainError("Euclidean circle not inside the unit disk");
    double ux = 1.0, uy = 0.0;
    if (m > 0.0) { ux = e.cx / m; uy = e.cy / m; }
    const double rho1 = 2.0 * std::atanh(m - e.radius);
    const double rho2 = 2.0 * std::atanh(m + e.radius);
    const double rho_c = 0.5 * (rho1 + rho2);
    const double t = std::tanh(0.5 * rho_c);
    GeodesicCircle c;
    c.center = {t * ux, t * uy};
    c.radius = 0.5 * (rho2 - rho1);
    return c;
}

EuclideanCircle horocycle_to_euclidean(const Horocycle& h) {
    const double n = std::hypot(h.ideal_x, h.ideal_y);
    if (std::abs(n - 1.0) > 1e-12)
        throw DomainError("horocycle ideal point must be a unit vector");
    const double re = 1.0 / (1.0 + std::exp(h.offset));
    EuclideanCircle e;
    e.cx = (1.0 - re) * h.ideal_x / n;
    e.cy = (1.0 - re) * h.ideal_y / n;
    e.radius = re;
    return e;
}

}  // namespace cmc
