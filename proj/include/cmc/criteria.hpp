#pragma once

// Decidable sufficient conditions for existence of the annulus-spanning
// CMC graphs (boundary data above/below), the slab non-existence bounds,
// the global supersolution radius, and the subsolution crossover distance.

#include <string>
#include <vector>

namespace cmc {

struct ExistenceInput {
    double H = 0.0;          // mean curvature, >= 0
    double r = 1.0;          // interior tangent circle radius of the inner curve
    double R = 2.0;          // exterior tangent circle radius of the outer curve
    double d = 1.0;          // separation between the curves
    double diam_beta = 4.0;  // outer curve diameter
    double h = 0.0;          // inner boundary height (sign selects the theorem)
};

enum class TheoremKind { ExistAbove, ExistBelow, NonExistHoro, NonExistCyl };

struct Hypothesis {
    std::string name;
    double required = 0.0;  // threshold the data must not exceed
    double actual = 0.0;
    bool satisfied = false;
    double margin = 0.0;  // required - actual; positive = satisfied
    std::string note;     // vacuous/unsatisfiable annotations
};

struct CriteriaReport {
    TheoremKind theorem = TheoremKind::ExistAbove;
    std::vector<Hypothesis> hypotheses;
    bool verdict = false;
};

const char* theorem_name(TheoremKind k);

// Existence of a graph with boundary data h >= 0 on the inner curve, 0 on
// the outer curve.
CriteriaReport check_exist_above(const ExistenceInput& input);

// Existence for h <= 0 (graph dips below the outer plane).
CriteriaReport check_exist_below(const ExistenceInput& input);

// Max slab height crossed by an outward-oriented CMC H surface inside a
// horocylinder.
double nonexist_bound_horo(double H);

// Same bound for surfaces inside the cylinder over a disk of radius r_star.
double nonexist_bound_cyl(double H, double r_star);

// Separation d0 where the catenoid and cone subsolution thresholds cross;
// requires coth(r)^2 > 4H^2.
double crossover_distance(double H, double r);

// Smallest L >= R with 2cosh(L/2) >= 2cosh((L-d)/2) + h. H enters only
// through its validity window (the half-cap construction needs H <= 1/2).
double supersolution_radius(double H, double d, double h, double R);

}  // namespace cmc
