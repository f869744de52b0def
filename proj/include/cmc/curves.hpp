#pragma once

// Polyline curves in the disk, annular domains bounded by two nested
// closed curves, and the metric scalars (d, diam) the criteria consume.

#include <optional>
#include <string>
#include <vector>

#include "cmc/geometry.hpp"

namespace cmc {

struct CurvePolyline {
    std::vector<DiskPoint> vertices;
    bool closed = true;
};

struct CurveMetrics {
    double d = 0.0;          // min hyperbolic distance between the curves
    double diam_beta = 0.0;  // max pairwise hyperbolic distance over outer
};

struct AnnularDomain {
    CurvePolyline outer;  // beta
    CurvePolyline inner;  // alpha
    double r = 0.0;          // interior tangent circle radius
    double R = 0.0;          // exterior tangent circle radius
    double d = 0.0;          // separation between the curves
    double diam_beta = 0.0;  // outer curve diameter
    // Reported flag: whether diam_beta exceeds 2(r + d).
    bool outer_diam_exceeds_2rd = false;
    // Set when both boundary curves are geodesic circles (exact descriptors
    // let the grid builder snap boundary nodes onto the true curves).
    bool has_circles = false;
    GeodesicCircle inner_circle, outer_circle;
    std::vector<std::string> warnings;
};

void validate_curve(const CurvePolyline& c);

// Even-odd test in Euclidean disk coordinates.
bool polygon_contains(const CurvePolyline& poly, double x, double y);

// True when any pair of segments properly intersects.
bool curves_intersect(const CurvePolyline& a, const CurvePolyline& b);

// Recognize a polyline all of whose vertices lie on one geodesic circle
// (within Euclidean tolerance tol_euclid). Polylines with fewer than 16
// vertices are never reported as circles: coarse polygons inscribed in a
// circle are not approximations of it.
std::optional<GeodesicCircle> detect_circle(const CurvePolyline& c,
                                            double tol_euclid = 1e-9);

// Minimum curve separation and outer diameter via coarse sampling,
// discrete descent on the vertex grid, and golden-section refinement
// over the adjacent segments.
CurveMetrics curve_metrics(const CurvePolyline& outer, const CurvePolyline& inner);

// Canonical circle-pair domain with analytic scalars.
AnnularDomain make_circle_domain(const DiskPoint& center_in, double rho_in,
                                 const DiskPoint& center_out, double rho_out,
                                 int n_vertices = 4096);

// General domain from two nested curves. r and R are caller-supplied and
// only spot-checked (warnings, not errors); when absent they are derived
// for circle pairs and rejected otherwise.
AnnularDomain make_domain(const CurvePolyline& outer, const CurvePolyline& inner,
                          std::optional<double> r, std::optional<double> R);

}  // namespace cmc
