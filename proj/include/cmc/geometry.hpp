#pragma once

// Poincare disk model of the hyperbolic plane (curvature -1): points,
// distances, geodesic circles, horocycles. The metric is lambda^2 |dz|^2
// with lambda = 2/(1-|z|^2).

#include <complex>

namespace cmc {

struct DiskPoint {
    double x = 0.0;
    double y = 0.0;
};

// Geodesic circle: hyperbolic circles are Euclidean circles in the disk
// model (with displaced center), which several modules exploit.
struct GeodesicCircle {
    DiskPoint center;
    double radius = 0.0;  // hyperbolic radius, > 0
};

// Horocycle identified by its ideal point and the signed hyperbolic offset
// from the horocycle through the origin, positive toward the ideal point.
struct Horocycle {
    double ideal_x = 1.0;
    double ideal_y = 0.0;
    double offset = 0.0;
};

// Euclidean footprint of a hyperbolic circle or horocycle in the disk.
struct EuclideanCircle {
    double cx = 0.0, cy = 0.0;
    double radius = 0.0;
};

using cplx = std::complex<double>;

inline cplx to_c(const DiskPoint& p) { return {p.x, p.y}; }
inline DiskPoint from_c(const cplx& z) { return {z.real(), z.imag()}; }

// Disk automorphism taking 0 to a: z -> (z + a)/(1 + conj(a) z).
inline cplx mobius_translate(const cplx& z, const cplx& a) {
    return (z + a) / (1.0 + std::conj(a) * z);
}

void validate_point(const DiskPoint& p);

double hyperbolic_distance(const DiskPoint& p, const DiskPoint& q);
double conformal_factor(const DiskPoint& p);

// Signed: negative when p lies inside the disk bounded by the circle.
double distance_to_circle(const DiskPoint& p, const GeodesicCircle& c);

// Signed: negative inside the horodisk, positive outside.
double distance_to_horocycle(const DiskPoint& p, const Horocycle& h);

// Point at hyperbolic distance rho from the circle center, at Euclidean
// direction angle theta as seen in the translated-to-origin chart.
DiskPoint circle_point(const GeodesicCircle& c, double theta);

// Step from p a hyperbolic distance t in Euclidean direction angle theta.
DiskPoint geodesic_step(const DiskPoint& p, double theta, double t);

EuclideanCircle circle_to_euclidean(const GeodesicCircle& c);
EuclideanCircle horocycle_to_euclidean(const Horocycle& h);

// Inverse of circle_to_euclidean; requires the Euclidean circle to lie
// strictly inside the unit disk.
GeodesicCircle circle_from_euclidean(const EuclideanCircle& e);

}  // namespace cmc
