#include "cmc/criteria.hpp"

#include <algorithm>
#include <cmath>

#include "cmc/errors.hpp"
#include "cmc/numerics.hpp"
#include "cmc/profiles.hpp"

namespace cmc {

namespace {

void validate_geometry(const ExistenceInput& in) {
    if (!(in.H >= 0.0)) throw DomainError("criteria: H must be >= 0");
    if (!(in.r > 0.0)) throw DomainError("criteria: r must be > 0");
    if (!(in.R > 0.0)) throw DomainError("criteria: R must be > 0");
    if (!(in.d > 0.0)) throw DomainError("criteria: d must be > 0");
    if (!(in.diam_beta > 0.0)) throw DomainError("criteria: diam_beta must be > 0");
    if (!(in.d <= in.diam_beta))
        throw DomainError("criteria: d exceeds diam_beta");
}

Hypothesis make_hyp(std::string name, double required, double actual,
                    std::string note = {}) {
    Hypothesis h;
    h.name = std::move(name);
    h.required = required;
    h.actual = actual;
    h.satisfied = actual <= required;
    h.margin = required - actual;
    h.note = std::move(note);
    return h;
}

Hypothesis make_unsatisfiable(std::string name, double actual, std::string note) {
    Hypothesis h;
    h.name = std::move(name);
    h.required = -kInf;
    h.actual = actual;
    h.satisfied = false;
    h.margin = -kInf;
    h.note = std::move(note);
    return h;
}

bool finish(CriteriaReport& rep) {
    rep.verdict = true;
    for (const auto& h : rep.hypotheses) rep.verdict = rep.verdict && h.satisfied;
    return rep.verdict;
}

}  // namespace

const char* theorem_name(TheoremKind k) {
    switch (k) {
        case TheoremKind::ExistAbove: return "ExistAbove";
        case TheoremKind::ExistBelow: return "ExistBelow";
        case TheoremKind::NonExistHoro: return "NonExistHoro";
        case TheoremKind::NonExistCyl: return "NonExistCyl";
    }
    return "?";
}

CriteriaReport check_exist_above(const ExistenceInput& in) {
    validate_geometry(in);
    if (!(in.h >= 0.0))
        throw DomainError("check_exist_above requires h >= 0 (use check_exist_below)");
    CriteriaReport rep;
    rep.theorem = TheoremKind::ExistAbove;

    // (i) outer diameter against the nodoid reach around the inner circle.
    if (in.H == 0.0) {
        rep.hypotheses.push_back(
            make_hyp("outer_diameter", kInf, in.diam_beta, "vacuous at H = 0"));
    } else {
        const double reach =
            in.d + 2.0 * std::acosh(std::cosh(in.r) + std::sinh(in.r) / (2.0 * in.H));
        rep.hypotheses.push_back(make_hyp("outer_diameter", reach, in.diam_beta));
    }

    // (ii) h against the better of the catenoid and cone subsolution caps.
    const double coth_r = 1.0 / std::tanh(in.r);
    const double c2r = coth_r * coth_r - 4.0 * in.H * in.H;
    double cone_cap = kInf;
    std::string note2;
    if (c2r > 0.0) {
        cone_cap = 2.0 * in.H * in.d / std::sqrt(c2r);
    } else {
        note2 = "cone branch unbounded: 2H >= coth(r)";
    }
    const double cat_cap = cat_eval(in.r, in.d);
    rep.hypotheses.push_back(
        make_hyp("height_subsolution", std::max(cat_cap, cone_cap), in.h, note2));

    // (iii) only binds past the cap regime.
    if (in.H > 0.5) {
        const double th = t_cutoff(in.H);
        rep.hypotheses.push_back(make_hyp("exterior_radius", th, in.R));
        if (in.d > th) {
            rep.hypotheses.push_back(make_unsatisfiable(
                "height_cap", in.h, "unsatisfiable: d exceeds the profile domain"));
        } else {
            const double root = std::sqrt(4.0 * in.H * in.H - 1.0);
            const double tt = std::tanh(0.5 * (th - in.d));
            const double inner = std::max(0.0, 1.0 - 4.0 * in.H * in.H * tt * tt);
            const double cap = (4.0 * in.H / root) * std::atan(std::sqrt(inner) / root);
            // Same threshold via the supersolution difference form; the two
            // are algebraically identical, so disagreement is diagnostic.
            const double alt = hcap_eval(in.H, th - in.d) - hcap_eval(in.H, th);
            std::string note3;
            if (std::abs(cap - alt) > 1e-9)
                note3 = "threshold forms disagree by " + std::to_string(cap - alt);
            rep.hypotheses.push_back(make_hyp("height_cap", cap, in.h, note3));
        }
    }
    finish(rep);
    return rep;
}

CriteriaReport check_exist_below(const ExistenceInput& in) {
    validate_geometry(in);
    if (!(in.h <= 0.0))
        throw DomainError("check_exist_below requires h <= 0 (use check_exist_above)");
    CriteriaReport rep;
    rep.theorem = TheoremKind::ExistBelow;

    const double th = t_cutoff(in.H);
    const double w = in.diam_beta - (2.0 * in.r + in.d);
    rep.hypotheses.push_back(make_hyp("diam_window", th, w));
    rep.hypotheses.push_back(make_hyp("exterior_radius", th, in.R));

    // (iii) depth against the nodoid evaluated at both window endpoints.
    if (in.d > th) {
        rep.hypotheses.push_back(make_unsatisfiable(
            "boundary_depth", -in.h, "unsatisfiable: d exceeds the profile domain"));
    } else if (w < 0.0) {
        rep.hypotheses.push_back(make_unsatisfiable(
            "boundary_depth", -in.h, "unsatisfiable: diam_beta < 2r + d"));
    } else if (w > th) {
        rep.hypotheses.push_back(make_unsatisfiable(
            "boundary_depth", -in.h,
            "unsatisfiable: diam_beta - (2r + d) exceeds the profile domain"));
    } else {
        const ProfileParams params{in.H, in.r};
        const double cap = std::min(hnod_eval(params, in.d), hnod_eval(params, w));
        rep.hypotheses.push_back(make_hyp("boundary_depth", cap, -in.h));
    }
    finish(rep);
    return rep;
}

double nonexist_bound_horo(double H) { return h_slab(H).h_max; }

double nonexist_bound_cyl(double H, double r_star) {
    if (!(H >= 0.0)) throw DomainError("nonexist_bound_cyl: H must be >= 0");
    if (!(r_star > 0.0)) throw DomainError("nonexist_bound_cyl: r_star must be > 0");
    return 2.0 * max_height({H, r_star});
}

double crossover_distance(double H, double r) {
    if (!(H > 0.0)) throw DomainError("crossover_distance: H must be > 0");
    if (!(r > 0.0) || r == kInf)
        throw DomainError("crossover_distance: r must be finite and > 0");
    const double coth_r = 1.0 / std::tanh(r);
    const double c2r = coth_r * coth_r - 4.0 * H * H;
    if (!(c2r > 0.0))
        throw DomainError("crossover_distance: cone branch always dominates (2H >= coth r)");
    const double slope = 2.0 * H / std::sqrt(c2r);
    auto f = [&](double d) { return cat_eval(r, d) - slope * d; };
    const double lo = 1e-6, hi = 50.0;
    if (f(hi) > 0.0)
        throw ConvergenceError("crossover_distance: no crossing below d = 50");
    return brent_root(f, lo, hi, 1e-9);
}

double supersolution_radius(double H, double d, double h, double R) {
    if (!(H >= 0.0) || !(H <= 0.5))
        throw DomainError("supersolution_radius: valid for 0 <= H <= 1/2");
    if (!(h >= 0.0)) throw DomainError("supersolution_radius: h must be >= 0");
    if (!(d > 0.0)) throw DomainError("supersolution_radius: d must be > 0");
    if (!(R > 0.0)) throw DomainError("supersolution_radius: R must be > 0");
    auto G = [&](double L) {
        return 2.0 * std::cosh(0.5 * L) - 2.0 * std::cosh(0.5 * (L - d)) - h;
    };
    if (G(R) >= 0.0) return R;
    double hi = R + 1.0;
    while (G(hi) < 0.0) {
        hi = R + 2.0 * (hi - R);
        if (hi > R + 1e4)
            throw ConvergenceError("supersolution_radius: bracket expansion failed");
    }
    return brent_root(G, R, hi, 1e-12);
}

}  // namespace cmc
