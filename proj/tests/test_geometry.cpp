#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cmc/errors.hpp"
#include "cmc/geometry.hpp"
#include "oracles.hpp"

using namespace cmc;

namespace {

std::mt19937 rng(20240517u);

DiskPoint random_point(double rmax) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
    std::uniform_real_distribution<double> rad(0.0, rmax);
    const double a = ang(rng), r = rad(rng);
    return {r * std::cos(a), r * std::sin(a)};
}

// Hyperbolic Laplacian by centered second differences in the conformal
// chart: (s_xx + s_yy) / lambda^2.
template <class F>
double fd_laplacian(const F& f, const DiskPoint& p, double e) {
    const double c = f(p);
    const double xx = f({p.x + e, p.y}) - 2.0 * c + f({p.x - e, p.y});
    const double yy = f({p.x, p.y + e}) - 2.0 * c + f({p.x, p.y - e});
    const double lam = conformal_factor(p);
    return (xx + yy) / (e * e * lam * lam);
}

}  // namespace

TEST_CASE("distance closed forms on a diameter") {
    CHECK(hyperbolic_distance({0, 0}, {0, 0}) == doctest::Approx(0.0).epsilon(1e-15));
    for (double x : {0.1, 0.3, 0.5, 0.8, 0.95}) {
        const double expect = 2.0 * std::atanh(x);
        CHECK(hyperbolic_distance({0, 0}, {x, 0}) ==
              doctest::Approx(expect).epsilon(1e-14));
        CHECK(hyperbolic_distance({-x, 0}, {x, 0}) ==
              doctest::Approx(2.0 * expect).epsilon(1e-14));
    }
}

TEST_CASE("distance agrees with the direct formula at random pairs") {
    for (int k = 0; k < 100; ++k) {
        const DiskPoint p = random_point(0.9), q = random_point(0.9);
        const double ref = oracle::hyp_dist(p.x, p.y, q.x, q.y);
        CHECK(hyperbolic_distance(p, q) == doctest::Approx(ref).epsilon(1e-13));
        CHECK(hyperbolic_distance(q, p) == doctest::Approx(ref).epsilon(1e-13));
    }
}

TEST_CASE("triangle inequality on random triples") {
    for (int k = 0; k < 100; ++k) {
        const DiskPoint p = random_point(0.9), q = random_point(0.9),
                        w = random_point(0.9);
        const double pq = hyperbolic_distance(p, q);
        const double qw = hyperbolic_distance(q, w);
        const double pw = hyperbolic_distance(p, w);
        CHECK(pw <= pq + qw + 1e-12);
    }
}

TEST_CASE("distance is invariant under disk automorphisms") {
    for (int k = 0; k < 100; ++k) {
        const DiskPoint p = random_point(0.8), q = random_point(0.8);
        const cplx a = to_c(random_point(0.5));
        const DiskPoint tp = from_c(mobius_translate(to_c(p), a));
        const DiskPoint tq = from_c(mobius_translate(to_c(q), a));
        CHECK(hyperbolic_distance(tp, tq) ==
              doctest::Approx(hyperbolic_distance(p, q)).epsilon(1e-10));
    }
}

TEST_CASE("conformal factor") {
    CHECK(conformal_factor({0, 0}) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(conformal_factor({0.5, 0}) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
    double prev = 0.0;
    for (double x = 0.0; x < 0.99; x += 0.07) {
        const double lam = conformal_factor({x, 0});
        CHECK(lam > prev);
        CHECK(lam >= 2.0);
        prev = lam;
    }
    CHECK_THROWS_AS(conformal_factor({1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(validate_point({0.0, 1.5}), DomainError);
}

TEST_CASE("circle points and euclidean footprint round-trip") {
    for (int k = 0; k < 30; ++k) {
        const GeodesicCircle c{random_point(0.6),
                               0.1 + 1.9 * (k % 10) / 10.0 + 0.05};
        const EuclideanCircle e = circle_to_euclidean(c);
        for (int j = 0; j < 16; ++j) {
            const DiskPoint pt = circle_point(c, 2.0 * M_PI * j / 16.0);
            CHECK(hyperbolic_distance(pt, c.center) ==
                  doctest::Approx(c.radius).epsilon(1e-12));
            CHECK(std::hypot(pt.x - e.cx, pt.y - e.cy) ==
                  doctest::Approx(e.radius).epsilon(1e-12));
        }
        const GeodesicCircle back = circle_from_euclidean(e);
        CHECK(back.center.x == doctest::Approx(c.center.x).epsilon(1e-11));
        CHECK(back.center.y == doctest::Approx(c.center.y).epsilon(1e-11));
        CHECK(back.radius == doctest::Approx(c.radius).epsilon(1e-11));
    }
}

TEST_CASE("signed distance to a circle") {
    const GeodesicCircle c{{0.1, -0.05}, 0.7};
    CHECK(distance_to_circle(c.center, c) == doctest::Approx(-0.7).epsilon(1e-13));
    for (int j = 0; j < 8; ++j) {
        const DiskPoint on = circle_point(c, 0.7 + j);
        CHECK(std::abs(distance_to_circle(on, c)) < 1e-12);
    }
    // Radial additivity: a point on the concentric circle of radius r + 2.
    const DiskPoint out = circle_point({c.center, c.radius + 2.0}, 1.3);
    CHECK(distance_to_circle(out, c) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("laplacian of the circle distance is coth(r+s)") {
    const GeodesicCircle c{{0.1, -0.05}, 0.7};
    for (double s : {0.3, 0.8, 1.5}) {
        for (double th : {0.2, 2.1, 4.4}) {
            const DiskPoint p = circle_point({c.center, c.radius + s}, th);
            const double lap = fd_laplacian(
                [&](const DiskPoint& q) { return distance_to_circle(q, c); }, p,
                1e-3);
            CHECK(lap == doctest::Approx(1.0 / std::tanh(c.radius + s)).epsilon(1e-4));
        }
    }
}

TEST_CASE("horocycle offset convention and euclidean footprint") {
    const Horocycle h0{1.0, 0.0, 0.0};
    CHECK(std::abs(distance_to_horocycle({0, 0}, h0)) < 1e-14);
    const EuclideanCircle e0 = horocycle_to_euclidean(h0);
    CHECK(e0.cx == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(e0.cy == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(e0.radius == doctest::Approx(0.5).epsilon(1e-14));

    const Horocycle h1{1.0, 0.0, std::log(3.0)};
    const EuclideanCircle e1 = horocycle_to_euclidean(h1);
    CHECK(e1.radius == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(e1.cx == doctest::Approx(0.75).epsilon(1e-13));

    const Horocycle hy{0.0, 1.0, std::log(3.0)};
    const EuclideanCircle ey = horocycle_to_euclidean(hy);
    CHECK(ey.cy == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(std::abs(ey.cx) < 1e-13);
}

TEST_CASE("horocycle distance is additive along the axis") {
    const Horocycle h{1.0, 0.0, 0.4};
    for (double x1 : {-0.5, -0.1, 0.2}) {
        for (double x2 : {0.3, 0.5, 0.7}) {
            const double s1 = distance_to_horocycle({x1, 0}, h);
            const double s2 = distance_to_horocycle({x2, 0}, h);
            const double gap = hyperbolic_distance({x1, 0}, {x2, 0});
            // Moving toward the ideal point decreases the signed distance.
            CHECK(s1 - s2 == doctest::Approx(gap).epsilon(1e-12));
        }
    }
}

TEST_CASE("laplacian of the horocycle distance is 1") {
    const Horocycle h{std::cos(0.7), std::sin(0.7), 0.2};
    int tested = 0;
    while (tested < 50) {
        const DiskPoint p = random_point(0.8);
        if (distance_to_horocycle(p, h) < 0.05) continue;
        const double lap = fd_laplacian(
            [&](const DiskPoint& q) { return distance_to_horocycle(q, h); }, p,
            1e-3);
        CHECK(lap == doctest::Approx(1.0).epsilon(1e-4));
        ++tested;
    }
}

TEST_CASE("geodesic step moves the stated distance") {
    CHECK(geodesic_step({0, 0}, 0.0, 1.0).x ==
          doctest::Approx(std::tanh(0.5)).epsilon(1e-14));
    for (int k = 0; k < 40; ++k) {
        const DiskPoint p = random_point(0.7);
        const double th = 2.0 * M_PI * k / 40.0;
        const double t = 0.1 + 0.05 * k;
        const DiskPoint q = geodesic_step(p, th, t);
        CHECK(hyperbolic_distance(p, q) == doctest::Approx(t).epsilon(1e-11));
    }
}
