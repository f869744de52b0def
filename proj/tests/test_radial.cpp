#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cmc/errors.hpp"
#include "cmc/profiles.hpp"
#include "cmc/radial.hpp"

using namespace cmc;

namespace {

double g_plus(double H, double rho) {
    return 2.0 * H * std::cosh(rho) + std::sinh(rho);
}
double g_minus(double H, double rho) {
    return 2.0 * H * std::cosh(rho) - std::sinh(rho);
}

void check_solution_invariants(const RadialProblem& p, const RadialSolution& sol) {
    REQUIRE(sol.samples.size() >= 2);
    CHECK(sol.samples.front().rho == p.rho_in);
    CHECK(sol.samples.back().rho == doctest::Approx(p.rho_out).epsilon(1e-15));
    CHECK(sol.samples.back().u == 0.0);
    CHECK(std::abs(sol.achieved_h - p.h) <= 1e-8);
    for (std::size_t k = 0; k < sol.samples.size(); ++k) {
        const auto& s = sol.samples[k];
        CHECK(std::abs(s.phi) <= 1.0);
        if (k > 0 && k + 1 < sol.samples.size()) CHECK(std::abs(s.phi) < 1.0);
        const double flux = std::sinh(s.rho) * s.phi + 2.0 * p.H * std::cosh(s.rho);
        CHECK(flux == doctest::Approx(sol.flux_c).epsilon(1e-10));
    }
}

}  // namespace

TEST_CASE("admissible flux interval endpoints") {
    const RadialProblem p{0.3, 1.0, 2.0, 0.2};
    const auto [lo, hi] = flux_bounds(p);
    CHECK(hi == doctest::Approx(g_plus(0.3, 1.0)).epsilon(1e-15));
    CHECK(lo == doctest::Approx(g_minus(0.3, 1.0)).epsilon(1e-15));
    CHECK(lo == doctest::Approx(-0.2493528127546551898).epsilon(1e-13));
    CHECK(hi == doctest::Approx(2.101049574532947724).epsilon(1e-13));

    // For larger curvature the lower bound binds at the outer radius.
    const RadialProblem q{0.6, 1.0, 2.0, 0.1};
    const auto [qlo, qhi] = flux_bounds(q);
    CHECK(qlo == doctest::Approx(g_minus(0.6, 2.0)).epsilon(1e-14));
    CHECK(qlo == doctest::Approx(0.887774421453481).epsilon(1e-12));
    CHECK(qhi == doctest::Approx(3.02689795542149).epsilon(1e-12));

    // Minimal case: symmetric interval.
    const RadialProblem m{0.0, 1.0, 2.0, 0.0};
    const auto [mlo, mhi] = flux_bounds(m);
    CHECK(mhi == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(mlo == doctest::Approx(-std::sinh(1.0)).epsilon(1e-15));
}

TEST_CASE("empty admissible interval when the annulus is too wide") {
    const RadialProblem p{1.0, 1.0, 2.2, 0.0};
    const auto [lo, hi] = flux_bounds(p);
    CHECK(lo > hi);
    const auto range = attainable_height_range(1.0, 1.0, 2.2);
    CHECK(std::isnan(range.first));
    CHECK(std::isnan(range.second));
    try {
        solve_radial(p);
        CHECK(false);
    } catch (const NoRadialGraph& e) {
        CHECK(std::isnan(e.h_lo));
        CHECK(std::isnan(e.h_hi));
    }
}

TEST_CASE("height is strictly decreasing in the flux constant") {
    const RadialProblem p{0.3, 1.0, 2.0, 0.0};
    const auto [lo, hi] = flux_bounds(p);
    double prev = kInf;
    for (int k = 0; k <= 6; ++k) {
        const double c = lo + (hi - lo) * k / 6.0;
        const double h = radial_height(p, c);
        CHECK(h < prev);
        prev = h;
    }
    CHECK(radial_height(p, lo) == doctest::Approx(1.7367896190185783692).epsilon(1e-9));
}

TEST_CASE("extreme flux reproduces the profile height") {
    // At c = c_hi the slope is vertical at the inner radius: the solution
    // is the (negated) neck profile with neck at rho_in.
    const RadialProblem p{0.3, 1.0, 2.0, 0.0};
    const auto [lo, hi] = flux_bounds(p);
    const double via_radial = radial_height(p, hi);
    const double via_profile = -hnod_eval({0.3, 1.0}, 1.0);
    CHECK(via_radial == doctest::Approx(via_profile).epsilon(2e-11));
    CHECK(via_profile == doctest::Approx(-0.66159059491347441594).epsilon(1e-11));

    const RadialProblem m{0.0, 1.0, 2.0, 0.0};
    CHECK(radial_height(m, std::sinh(1.0)) ==
          doctest::Approx(-cat_eval(1.0, 1.0)).epsilon(2e-11));
    const auto range = attainable_height_range(0.0, 1.0, 2.0);
    CHECK(range.first == doctest::Approx(-1.0386158808948348791).epsilon(1e-8));
    CHECK(range.second == doctest::Approx(1.0386158808948348791).epsilon(1e-8));
    CHECK(range.first < 0.0);
    CHECK(range.second > 0.0);
    CHECK(range.second < 0.5 * M_PI);
}

TEST_CASE("zero data on a minimal annulus is the zero solution") {
    const RadialProblem p{0.0, 1.0, 2.0, 0.0};
    const auto sol = solve_radial(p);
    CHECK(sol.flux_c == 0.0);
    for (const auto& s : sol.samples) {
        CHECK(s.u == 0.0);
        CHECK(s.phi == 0.0);
    }
}

TEST_CASE("frozen solve instances") {
    const RadialProblem a{0.3, 1.0, 2.0, 0.2};
    const auto sa = solve_radial(a);
    CHECK(sa.flux_c == doctest::Approx(0.96792151300507386384).epsilon(1e-10));
    CHECK(radial_u_at(a, sa.flux_c, 1.5) ==
          doctest::Approx(0.15064447303798265853).epsilon(1e-9));
    check_solution_invariants(a, sa);

    const RadialProblem b{0.0, 1.0, 2.0, 0.3};
    const auto sb = solve_radial(b);
    CHECK(sb.flux_c == doctest::Approx(-0.5666039378258425024).epsilon(1e-10));
    CHECK(radial_u_at(b, sb.flux_c, 1.5) ==
          doctest::Approx(0.10529224123352541944).epsilon(1e-9));
    check_solution_invariants(b, sb);

    const RadialProblem c{0.6, 1.0, 2.0, 0.1};
    const auto sc = solve_radial(c);
    CHECK(sc.flux_c == doctest::Approx(2.5254389283043147223).epsilon(1e-10));
    CHECK(radial_u_at(c, sc.flux_c, 1.5) ==
          doctest::Approx(0.19907220560104398991).epsilon(1e-9));
    check_solution_invariants(c, sc);
}

TEST_CASE("near-vertical boundary slope still solves") {
    const double cap = cat_eval(1.0, 1.0);
    const RadialProblem p{0.0, 1.0, 2.0, cap - 1e-3};
    const auto sol = solve_radial(p);
    CHECK(sol.flux_c > -std::sinh(1.0));
    CHECK(sol.flux_c < -0.9 * std::sinh(1.0));
    check_solution_invariants(p, sol);
}

TEST_CASE("out-of-range data reports the attainable window") {
    const RadialProblem p{0.3, 1.0, 2.0, 1.8};
    try {
        solve_radial(p);
        CHECK(false);
    } catch (const NoRadialGraph& e) {
        CHECK(e.h_lo == doctest::Approx(-0.66159059491347441594).epsilon(1e-6));
        CHECK(e.h_hi == doctest::Approx(1.7367896190185783692).epsilon(1e-6));
    }
}

TEST_CASE("sample count and u interpolation consistency") {
    const RadialProblem p{0.3, 1.0, 2.0, 0.2};
    const auto sol = solve_radial(p, 33);
    CHECK(sol.samples.size() == 33);
    for (const auto& s : sol.samples) {
        CHECK(radial_u_at(p, sol.flux_c, s.rho) ==
              doctest::Approx(s.u).epsilon(1e-12));
    }
    CHECK_THROWS_AS(radial_u_at(p, sol.flux_c, 0.5), DomainError);
    CHECK_THROWS_AS(radial_u_at(p, sol.flux_c, 2.5), DomainError);
    CHECK_THROWS_AS(solve_radial(p, 1), InputError);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(flux_bounds({-0.1, 1.0, 2.0, 0.0}), InputError);
    CHECK_THROWS_AS(flux_bounds({0.3, 0.0, 2.0, 0.0}), InputError);
    CHECK_THROWS_AS(flux_bounds({0.3, 2.0, 1.0, 0.0}), InputError);
    CHECK_THROWS_AS(solve_radial({0.3, 1.0, 2.0, kInf}), InputError);
}
