#include "cmc/barriers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cmc/errors.hpp"
#include "cmc/numerics.hpp"

namespace cmc {
namespace {

constexpr double kSignTol = 1e-7;

bool is_cap_kind(BarrierKind k) {
    return k == BarrierKind::CapSuper || k == BarrierKind::HalfCapSuper;
}

// Profile parameter induced at p: distance to the anchor center for cap
// kinds, signed distance to the anchor circle otherwise.
double barrier_s(const BarrierSpec& spec, const DiskPoint& p) {
    if (is_cap_kind(spec.kind)) return hyperbolic_distance(p, spec.anchor.center);
    double s = distance_to_circle(p, spec.anchor);
    if (s < -1e-12)
        throw DomainError("barrier_value: point inside the anchor circle (s = " +
                          std::to_string(s) + ")");
    return std::max(s, 0.0);
}

// Slope ratio phi of the barrier's radial profile; smooth on the domain,
// so the sign check can difference it directly.
double barrier_phi(const BarrierSpec& spec, double s) {
    switch (spec.kind) {
        case BarrierKind::CapSuper:
            return -2.0 * spec.H * std::tanh(0.5 * s);
        case BarrierKind::HalfCapSuper:
            return -std::tanh(0.5 * s);
        case BarrierKind::CatenoidSub:
            return -slope_ratio({0.0, spec.anchor.radius}, s);
        case BarrierKind::ConeSub:
            return -spec.h / std::hypot(spec.d, spec.h);
        case BarrierKind::NodoidSuper:
            return slope_ratio({spec.H, spec.anchor.radius}, s);
        case BarrierKind::ConstantSub:
            return 0.0;
    }
    return 0.0;
}

void validate_spec(const BarrierSpec& spec) {
    if (!(spec.H >= 0.0) || !std::isfinite(spec.H))
        throw InputError("barrier: H must be finite and >= 0");
    switch (spec.kind) {
        case BarrierKind::CapSuper:
            if (!(spec.H > 0.5))
                throw InputError("barrier: CapSuper needs H > 1/2");
            break;
        case BarrierKind::HalfCapSuper:
            if (!(spec.extra > 0.0))
                throw InputError("barrier: HalfCapSuper needs a rim radius (extra)");
            break;
        case BarrierKind::ConeSub:
            if (!(spec.d > 0.0))
                throw InputError("barrier: ConeSub needs d > 0");
            break;
        default:
            break;
    }
}

}  // namespace

const char* barrier_name(BarrierKind kind) {
    switch (kind) {
        case BarrierKind::CapSuper: return "cap_super";
        case BarrierKind::HalfCapSuper: return "half_cap_super";
        case BarrierKind::CatenoidSub: return "catenoid_sub";
        case BarrierKind::ConeSub: return "cone_sub";
        case BarrierKind::NodoidSuper: return "nodoid_super";
        case BarrierKind::ConstantSub: return "constant_sub";
    }
    return "?";
}

double barrier_value(const BarrierSpec& spec, const DiskPoint& p) {
    validate_spec(spec);
    if (spec.kind == BarrierKind::ConstantSub) {
        validate_point(p);
        return std::min(0.0, spec.h);
    }
    const double s = barrier_s(spec, p);
    switch (spec.kind) {
        case BarrierKind::CapSuper: {
            const double th = t_cutoff(spec.H);
            if (s > th + 1e-12)
                throw DomainError("barrier_value: s = " + std::to_string(s) +
                                  " beyond the cap domain T_H = " + std::to_string(th));
            return hcap_eval(spec.H, std::min(s, th)) - hcap_eval(spec.H, th);
        }
        case BarrierKind::HalfCapSuper:
            return hcap_eval(0.5, s) - hcap_eval(0.5, spec.extra);
        case BarrierKind::CatenoidSub:
            return spec.h - cat_eval(spec.anchor.radius, s);
        case BarrierKind::ConeSub:
            return spec.h * (1.0 - s / spec.d);
        case BarrierKind::NodoidSuper:
            return spec.h + hnod_eval({spec.H, spec.anchor.radius}, s);
        case BarrierKind::ConstantSub:
            break;
    }
    return 0.0;
}

BarrierSignReport barrier_sign_check(const BarrierSpec& spec) {
    validate_spec(spec);
    const bool cap = is_cap_kind(spec.kind);
    // Hard profile-domain ceiling; only the nodoid slope is undefined past
    // it (the cap slope formula is entire in s).
    const double domain_hi = spec.kind == BarrierKind::NodoidSuper
                                 ? t_cutoff(spec.H)
                                 : std::numeric_limits<double>::infinity();
    double span;
    switch (spec.kind) {
        case BarrierKind::CapSuper: span = t_cutoff(spec.H); break;
        case BarrierKind::HalfCapSuper: span = spec.extra; break;
        case BarrierKind::NodoidSuper:
            span = spec.d > 0.0 ? spec.d : 1.0;
            if (std::isfinite(domain_hi)) span = std::min(span, 0.995 * domain_hi);
            break;
        default: span = spec.d > 0.0 ? spec.d : 1.0; break;
    }

    BarrierSignReport rep;
    rep.residual_min = std::numeric_limits<double>::infinity();
    rep.residual_max = -std::numeric_limits<double>::infinity();
    const int n_radial = 64;
    for (int i = 0; i < n_radial; ++i) {
        const double s = (i + 0.5) * span / n_radial;
        double step = 1e-5 * std::max(1.0, s);
        step = std::min(step, 0.25 * s);
        if (std::isfinite(domain_hi)) step = std::min(step, 0.25 * (domain_hi - s));
        const double dphi =
            (barrier_phi(spec, s + step) - barrier_phi(spec, s - step)) /
            (2.0 * step);
        const double coth_arg = cap ? s : spec.anchor.radius + s;
        const double res =
            dphi + barrier_phi(spec, s) / std::tanh(coth_arg) + 2.0 * spec.H;
        rep.residual_min = std::min(rep.residual_min, res);
        rep.residual_max = std::max(rep.residual_max, res);
    }

    rep.is_subsolution = rep.residual_min >= -kSignTol;
    rep.is_supersolution = rep.residual_max <= kSignTol;
    if (spec.kind == BarrierKind::ConeSub) {
        // Closed criterion; the sampled minimum only approaches it as s -> 0.
        rep.is_subsolution =
            spec.h / std::hypot(spec.d, spec.h) <=
            2.0 * spec.H * std::tanh(spec.anchor.radius);
    }

    if (spec.kind != BarrierKind::ConstantSub) {
        const int n_angular = 32;
        for (int i = 0; i < n_radial; i += 9) {
            const double s = (i + 0.5) * span / n_radial;
            const double ring_rho = cap ? s : spec.anchor.radius + s;
            double lo = std::numeric_limits<double>::infinity();
            double hi = -lo;
            for (int j = 0; j < n_angular; ++j) {
                const DiskPoint p = circle_point(
                    {spec.anchor.center, ring_rho}, 2.0 * M_PI * j / n_angular);
                const double v = barrier_value(spec, p);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            rep.angular_spread = std::max(rep.angular_spread, hi - lo);
        }
    }
    return rep;
}

ComparisonReport comparison_check(const FieldSolution& field,
                                  const BarrierSpec& sub,
                                  const BarrierSpec& super,
                                  double tolerance) {
    if (!field.converged)
        throw InputError("comparison_check: field is not converged");
    ComparisonReport rep;
    rep.tolerance = tolerance >= 0.0
                        ? tolerance
                        : 1e-6 * field.grid.spacing * field.grid.lambda_max;
    rep.min_above_sub = std::numeric_limits<double>::infinity();
    rep.min_below_super = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < field.grid.nodes.size(); ++k) {
        const DiskPoint& p = field.grid.nodes[k].p;
        rep.min_above_sub =
            std::min(rep.min_above_sub, field.u[k] - barrier_value(sub, p));
        rep.min_below_super =
            std::min(rep.min_below_super, barrier_value(super, p) - field.u[k]);
    }
    rep.ok = rep.min_above_sub >= -rep.tolerance &&
             rep.min_below_super >= -rep.tolerance;
    return rep;
}

}  // namespace cmc
