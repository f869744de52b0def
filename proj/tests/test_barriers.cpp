#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "cmc/barriers.hpp"
#include "cmc/curves.hpp"
#include "cmc/errors.hpp"
#include "cmc/profiles.hpp"

using namespace cmc;

namespace {

DiskPoint at_distance(const GeodesicCircle& anchor, double s, double theta = 0.3) {
    return circle_point({anchor.center, anchor.radius + s}, theta);
}

}  // namespace

TEST_CASE("barrier kind names") {
    CHECK(std::strcmp(barrier_name(BarrierKind::CapSuper), "cap_super") == 0);
    CHECK(std::strcmp(barrier_name(BarrierKind::HalfCapSuper), "half_cap_super") == 0);
    CHECK(std::strcmp(barrier_name(BarrierKind::CatenoidSub), "catenoid_sub") == 0);
    CHECK(std::strcmp(barrier_name(BarrierKind::ConeSub), "cone_sub") == 0);
    CHECK(std::strcmp(barrier_name(BarrierKind::NodoidSuper), "nodoid_super") == 0);
    CHECK(std::strcmp(barrier_name(BarrierKind::ConstantSub), "constant_sub") == 0);
}

TEST_CASE("barriers match their anchor data") {
    const GeodesicCircle anchor{{0.0, 0.0}, 1.0};

    BarrierSpec nod{BarrierKind::NodoidSuper, anchor, 0.3, 0.2, 1.0, 0.0};
    CHECK(barrier_value(nod, at_distance(anchor, 0.0)) ==
          doctest::Approx(0.2).epsilon(1e-12));
    CHECK(barrier_value(nod, at_distance(anchor, 1.0)) ==
          doctest::Approx(0.2 + 0.66159059491347441594).epsilon(1e-10));

    const double dsep = 0.8;
    BarrierSpec cat{BarrierKind::CatenoidSub, anchor, 0.0, cat_eval(1.0, dsep),
                    dsep, 0.0};
    CHECK(barrier_value(cat, at_distance(anchor, dsep)) ==
          doctest::Approx(0.0).epsilon(1e-10));
    CHECK(barrier_value(cat, at_distance(anchor, 0.0)) ==
          doctest::Approx(cat.h).epsilon(1e-12));

    BarrierSpec cone{BarrierKind::ConeSub, anchor, 0.6, 0.3, 0.9, 0.0};
    CHECK(barrier_value(cone, at_distance(anchor, 0.9)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(barrier_value(cone, at_distance(anchor, 0.0)) ==
          doctest::Approx(0.3).epsilon(1e-12));
    CHECK(barrier_value(cone, at_distance(anchor, 0.45)) ==
          doctest::Approx(0.15).epsilon(1e-10));

    BarrierSpec cap{BarrierKind::CapSuper, {{0.0, 0.0}, 0.0}, 1.0, 0.0, 0.0, 0.0};
    CHECK(barrier_value(cap, {0.0, 0.0}) ==
          doctest::Approx(1.2091995761561452337).epsilon(1e-12));
    // The cap slope is vertical at the rim, so roundoff in the rim point's
    // distance costs sqrt(eps) in height.
    const DiskPoint rim = geodesic_step({0.0, 0.0}, 0.9, t_cutoff(1.0));
    CHECK(std::abs(barrier_value(cap, rim)) < 1e-6);

    BarrierSpec half{BarrierKind::HalfCapSuper, {{0.0, 0.0}, 0.0}, 0.3, 0.0, 0.0, 1.5};
    CHECK(hcap_eval(0.5, 1.5) < 0.0);
    CHECK(barrier_value(half, {0.0, 0.0}) ==
          doctest::Approx(-hcap_eval(0.5, 1.5)).epsilon(1e-12));
    const DiskPoint hrim = geodesic_step({0.0, 0.0}, -1.2, 1.5);
    CHECK(barrier_value(half, hrim) == doctest::Approx(0.0).epsilon(1e-10));

    BarrierSpec cs{BarrierKind::ConstantSub, anchor, 0.4, 0.3, 0.0, 0.0};
    CHECK(barrier_value(cs, {0.2, 0.1}) == 0.0);
    cs.h = -0.2;
    CHECK(barrier_value(cs, {0.2, 0.1}) == -0.2);
}

TEST_CASE("barrier domain violations name the profile parameter") {
    const GeodesicCircle anchor{{0.0, 0.0}, 1.0};
    BarrierSpec cat{BarrierKind::CatenoidSub, anchor, 0.0, 0.5, 0.8, 0.0};
    try {
        barrier_value(cat, {0.0, 0.0});  // inside the anchor circle
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("s = ") != std::string::npos);
    }

    BarrierSpec cap{BarrierKind::CapSuper, {{0.0, 0.0}, 0.0}, 1.0, 0.0, 0.0, 0.0};
    try {
        barrier_value(cap, geodesic_step({0.0, 0.0}, 0.0, 1.5));  // past T_H
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("cap domain") != std::string::npos);
    }

    BarrierSpec nod{BarrierKind::NodoidSuper, anchor, 1.0, 0.1, 1.0, 0.0};
    CHECK_THROWS_AS(barrier_value(nod, at_distance(anchor, 1.2)), DomainError);
}

TEST_CASE("barrier spec validation") {
    const GeodesicCircle anchor{{0.0, 0.0}, 1.0};
    BarrierSpec cap{BarrierKind::CapSuper, anchor, 0.4, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(barrier_value(cap, {0.5, 0.0}), InputError);
    BarrierSpec half{BarrierKind::HalfCapSuper, anchor, 0.3, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(barrier_value(half, {0.5, 0.0}), InputError);
    BarrierSpec cone{BarrierKind::ConeSub, anchor, 0.3, 0.1, 0.0, 0.0};
    CHECK_THROWS_AS(barrier_value(cone, {0.5, 0.0}), InputError);
    BarrierSpec neg{BarrierKind::ConstantSub, anchor, -0.1, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(barrier_value(neg, {0.5, 0.0}), InputError);
}

TEST_CASE("sign verification classifies each barrier") {
    const GeodesicCircle anchor{{0.0, 0.0}, 1.0};

    // Catenoid solves the minimal ODE; against H > 0 it is a strict
    // subsolution with residual 2H.
    BarrierSpec cat{BarrierKind::CatenoidSub, anchor, 0.3, 0.5, 1.0, 0.0};
    auto rep = barrier_sign_check(cat);
    CHECK(rep.is_subsolution);
    CHECK_FALSE(rep.is_supersolution);
    CHECK(rep.residual_min == doctest::Approx(0.6).epsilon(1e-5));
    CHECK(rep.residual_max == doctest::Approx(0.6).epsilon(1e-5));
    CHECK(rep.angular_spread < 1e-9);

    // Cap and nodoid solve their own ODEs: residual ~ 0, both flags set.
    BarrierSpec cap{BarrierKind::CapSuper, {{0.3, -0.1}, 0.0}, 1.0, 0.0, 0.0, 0.0};
    rep = barrier_sign_check(cap);
    CHECK(rep.is_subsolution);
    CHECK(rep.is_supersolution);
    CHECK(std::abs(rep.residual_min) < 1e-6);
    CHECK(std::abs(rep.residual_max) < 1e-6);
    CHECK(rep.angular_spread < 1e-9);

    BarrierSpec nod{BarrierKind::NodoidSuper, anchor, 0.3, 0.2, 1.0, 0.0};
    rep = barrier_sign_check(nod);
    CHECK(rep.is_supersolution);
    CHECK(std::abs(rep.residual_min) < 1e-6);
    CHECK(std::abs(rep.residual_max) < 1e-6);
    CHECK(rep.angular_spread < 1e-9);

    // Half-cap against H < 1/2: residual 2H - 1 < 0.
    BarrierSpec half{BarrierKind::HalfCapSuper, {{0.0, 0.0}, 0.0}, 0.3, 0.0, 0.0, 1.5};
    rep = barrier_sign_check(half);
    CHECK(rep.is_supersolution);
    CHECK_FALSE(rep.is_subsolution);
    CHECK(rep.residual_min == doctest::Approx(-0.4).epsilon(1e-5));
    CHECK(rep.residual_max == doctest::Approx(-0.4).epsilon(1e-5));

    // Constant: residual exactly 2H.
    BarrierSpec cs{BarrierKind::ConstantSub, anchor, 0.4, 0.3, 0.0, 0.0};
    rep = barrier_sign_check(cs);
    CHECK(rep.is_subsolution);
    CHECK(rep.residual_min == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(rep.residual_max == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(rep.angular_spread == 0.0);
}

TEST_CASE("cone subsolution flag follows the closed slope inequality") {
    const GeodesicCircle anchor{{0.0, 0.0}, 1.0};
    // Threshold: h / sqrt(d^2 + h^2) = 2 H tanh(r) at H = 0.3, d = 1.
    BarrierSpec below{BarrierKind::ConeSub, anchor, 0.3, 0.51, 1.0, 0.0};
    CHECK(barrier_sign_check(below).is_subsolution);
    BarrierSpec above{BarrierKind::ConeSub, anchor, 0.3, 0.52, 1.0, 0.0};
    CHECK_FALSE(barrier_sign_check(above).is_subsolution);
}

TEST_CASE("sandwich check around a solved field") {
    const auto dom = make_circle_domain({0, 0}, 1.0, {0, 0}, 2.0);
    const auto sol = solve_disk(dom, 0.3, 0.2, 0.05);

    BarrierSpec sub{BarrierKind::ConstantSub, dom.inner_circle, 0.3, 0.2, 1.0, 0.0};
    BarrierSpec super{BarrierKind::NodoidSuper, dom.inner_circle, 0.3, 0.2, 1.0, 0.0};
    const auto rep = comparison_check(sol, sub, super);
    CHECK(rep.ok);
    CHECK(rep.tolerance == doctest::Approx(1e-6 * 0.05 * sol.grid.lambda_max));
    CHECK(rep.min_above_sub >= -rep.tolerance);
    CHECK(rep.min_below_super >= -rep.tolerance);

    // A super barrier matched to a lower datum fails by about the gap.
    BarrierSpec bad = super;
    bad.h = 0.1;
    const auto viol = comparison_check(sol, sub, bad, 1e-3);
    CHECK(viol.tolerance == 1e-3);
    CHECK_FALSE(viol.ok);
    CHECK(viol.min_below_super < -0.05);

    FieldSolution unconverged = sol;
    unconverged.converged = false;
    CHECK_THROWS_AS(comparison_check(unconverged, sub, super), InputError);
}
