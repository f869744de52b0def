#pragma once

// Comparison-principle certificates: explicit sub- and supersolutions
// anchored at tangent circles (or cap rim disks), their sign verification,
// and the sandwich check against a numerically solved field.

#include <string>

#include "cmc/geometry.hpp"
#include "cmc/profiles.hpp"
#include "cmc/solver.hpp"

namespace cmc {

enum class BarrierKind {
    CapSuper,      // cap profile lowered to vanish at distance T_H; H > 1/2
    HalfCapSuper,  // half-cap lowered to vanish at rim radius L; any H <= 1/2
    CatenoidSub,   // h - cat_r(s) off the inner tangent circle
    ConeSub,       // linear ramp h (1 - s/d)
    NodoidSuper,   // h + hnod_r(s) off the inner tangent circle
    ConstantSub,   // min(0, h)
};

const char* barrier_name(BarrierKind kind);

struct BarrierSpec {
    BarrierKind kind = BarrierKind::ConstantSub;
    // Tangent circle for the profile kinds (s = signed distance to it);
    // for the cap kinds only its center is used (s = distance to center).
    GeodesicCircle anchor;
    double H = 0.0;
    double h = 0.0;     // boundary datum matched at the tangency
    double d = 0.0;     // curve separation (cone slope, sampling span)
    double extra = 0.0; // cap rim radius L (HalfCapSuper)
};

// Barrier height at p. Throws DomainError when the induced profile
// parameter s falls outside the kind's domain (names the offending s).
double barrier_value(const BarrierSpec& spec, const DiskPoint& p);

struct BarrierSignReport {
    bool is_subsolution = false;   // sampled Q_H >= -1e-7 throughout
    bool is_supersolution = false; // sampled Q_H <= +1e-7 throughout
    double residual_min = 0.0;
    double residual_max = 0.0;
    // Max spread of barrier_value around rings of constant s; a rotation-
    // invariance diagnostic of the geometric plumbing.
    double angular_spread = 0.0;
};

// Samples the radial ODE residual phi' + phi coth + 2H across the barrier's
// working span (64 radii; value spread checked at 32 angles per probed
// ring). ConeSub's flag is decided by the closed inequality
// h/sqrt(d^2+h^2) <= 2H/coth(r), which the sampled minimum approaches at
// s -> 0.
BarrierSignReport barrier_sign_check(const BarrierSpec& spec);

struct ComparisonReport {
    double min_above_sub = 0.0;   // min over nodes of field - sub
    double min_below_super = 0.0; // min over nodes of super - field
    double tolerance = 0.0;
    bool ok = false;
};

// Verifies sub <= field <= super at every grid node (interior and
// boundary). tolerance < 0 selects 1e-6 * spacing * lambda_max.
ComparisonReport comparison_check(const FieldSolution& field,
                                  const BarrierSpec& sub,
                                  const BarrierSpec& super,
                                  double tolerance = -1.0);

}  // namespace cmc
