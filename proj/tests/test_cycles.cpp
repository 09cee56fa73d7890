#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using namespace curvedkit;
using namespace curvedkit::testing;

TEST_CASE("spherical circle of radius pi/2 is a great circle") {
    const Point c(Geometry::Sphere, {0.3, -0.2, 1});
    const Cycle gc = Cycle::circle(c, M_PI / 2);
    CHECK(gc.kind().type == CycleType::Geodesic);
    CHECK(gc.curvature() == doctest::Approx(0).epsilon(1e-14));
    CHECK_THROWS_AS(Cycle::circle(c, 2.0), DomainError);  // > pi/2
}

TEST_CASE("H2 circle stores the section B(x, center) = -cosh r") {
    const Point c(Geometry::Hyperbolic, {0, 0, 1});
    const Cycle circ = Cycle::circle(c, 1.0);
    CHECK(circ.offset() == doctest::Approx(-std::cosh(1.0)).epsilon(1e-14));
    for (int k = 0; k < 32; ++k) {
        const Point p = circ.point_at(2 * M_PI * k / 32.0);
        CHECK(std::abs(distance(p, c) - 1.0) < 1e-10);
    }
    CHECK(circ.convex_margin(c) > 0);  // convex side contains the centre
}

TEST_CASE("Euclidean unit circle") {
    const Point c(Geometry::Euclidean, {2, -1, 1});
    const Cycle circ = Cycle::circle(c, 1.0);
    CHECK(circ.kind().type == CycleType::Circle);
    CHECK(circ.kind().parameter == doctest::Approx(1.0));
    CHECK(circ.curvature() == doctest::Approx(1.0));
    const Point p(Geometry::Euclidean, {3, -1, 1});
    CHECK(std::abs(circ.side(p)) < 1e-14);
}

TEST_CASE("hypercycle at distance l from its base") {
    Rng rng(21);
    const Cycle base = random_geodesic(Geometry::Hyperbolic, rng);
    SUBCASE("l = 0 returns the base itself") {
        const Cycle h0 = Cycle::hypercycle(base, 0.0);
        CHECK(h0.kind().type == CycleType::Geodesic);
        CHECK(h0.curvature() == doctest::Approx(0));
        CHECK(h0.same_section(base));
    }
    SUBCASE("sampled points sit at distance |l| (oracle: arcsinh |B(x, n)|)") {
        for (double l : {1.0, -0.6}) {
            const Cycle h = Cycle::hypercycle(base, l);
            for (int k = -8; k <= 8; ++k) {
                const Point p = h.point_at(0.35 * k);
                const double oracle = std::asinh(std::abs(base.side(p)));
                CHECK(std::abs(oracle - std::abs(l)) < 1e-10);
                // signed side per the sign of l
                CHECK(base.side(p) * l > 0);
            }
        }
    }
    SUBCASE("curvature tanh l") {
        for (double l : {0.3, 0.9, 2.0})
            CHECK(Cycle::hypercycle(base, l).curvature() ==
                  doctest::Approx(std::tanh(l)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(Cycle::hypercycle(Cycle::euclidean_line(0, 1, 0), 0.5),
                    UnsupportedGeometryError);
}

TEST_CASE("paracycle: curvature one, through-point incidence, no crossings at a shared ideal point") {
    Rng rng(22);
    for (int i = 0; i < 40; ++i) {
        const IdealPoint w = IdealPoint::from_angle(rng.uniform(0, 2 * M_PI));
        const Point p = random_point(Geometry::Hyperbolic, rng);
        const Cycle pc = Cycle::paracycle(w, p);
        CHECK(pc.curvature() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(pc.side(p)) < 1e-10);
        const Point q = random_point(Geometry::Hyperbolic, rng);
        const Cycle pc2 = Cycle::paracycle(w, q);
        if (pc.same_section(pc2)) continue;
        const CyclePoints cp = cycle_points(pc, pc2);
        CHECK(cp.points.size() <= 1);
        if (cp.points.size() == 1) CHECK(cp.tangential);
    }
}

TEST_CASE("curvature closed forms") {
    const Point hc(Geometry::Hyperbolic, {0.1, -0.2, std::sqrt(1.05)});
    CHECK(Cycle::circle(hc, 1.0).curvature() ==
          doctest::Approx(1.0 / std::tanh(1.0)).epsilon(1e-12));
    CHECK(Cycle::circle(hc, 1.0).curvature() == doctest::Approx(1.3130352855).epsilon(1e-9));
    Rng rng(23);
    CHECK(random_geodesic(Geometry::Hyperbolic, rng).curvature() == 0.0);
    const Point sc(Geometry::Sphere, {0, 0.6, 0.8});
    CHECK(Cycle::circle(sc, M_PI / 4).curvature() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("side: zero on the cycle, signed across it") {
    Rng rng(24);
    for (Geometry g : kAll) {
        const Point c = random_point(g, rng, 0.8);
        const Cycle circ = Cycle::circle(c, 0.7);
        CHECK(std::abs(circ.side(circ.point_at(1.234))) < 1e-10);
        CHECK(circ.convex_margin(c) > 0);

        // bisection along a geodesic through the cycle locates the sign flip
        const Point outside = geodesic_walk(c, project_to_tangent(c, {0.6, 0.8, 0}), 1.4);
        double lo = 0, hi = 1.4;
        const Vec3 dir = project_to_tangent(c, {0.6, 0.8, 0});
        CHECK(circ.side(c) * circ.side(outside) < 0);
        for (int it = 0; it < 60; ++it) {
            const double mid = (lo + hi) / 2;
            if (circ.side(geodesic_walk(c, dir, mid)) * circ.side(c) > 0)
                lo = mid;
            else
                hi = mid;
        }
        CHECK(std::abs((lo + hi) / 2 - 0.7) < 1e-9);  // the crossing is at distance r
    }
}

TEST_CASE("cycle_points: disjoint, tangent and crossing configurations") {
    SUBCASE("concentric circles do not meet") {
        Rng rng(25);
        for (Geometry g : kAll) {
            const Point c = random_point(g, rng, 0.5);
            const CyclePoints cp = cycle_points(Cycle::circle(c, 0.4), Cycle::circle(c, 0.7));
            CHECK(cp.points.empty());
        }
    }
    SUBCASE("congruent circles with centres 2r apart touch at one point") {
        for (Geometry g : kAll) {
            const double r = 0.35;
            const Point c1(g, {0, 0, 1});
            const Cycle axis = Cycle::geodesic_with_tangent(c1, project_to_tangent(c1, {1, 0, 0}));
            const Point c2 = translation(axis, 2 * r)(c1);
            const CyclePoints cp = cycle_points(Cycle::circle(c1, r), Cycle::circle(c2, r));
            REQUIRE(cp.points.size() == 1);
            CHECK(cp.tangential);
            CHECK(std::abs(distance(cp.points.front(), c1) - r) < 1e-7);
            CHECK(std::abs(distance(cp.points.front(), c2) - r) < 1e-7);
        }
    }
    SUBCASE("coincident sections are rejected") {
        const Point c(Geometry::Hyperbolic, {0, 0, 1});
        CHECK_THROWS_AS(cycle_points(Cycle::circle(c, 0.5), Cycle::circle(c, 0.5)),
                        CoincidentCycleError);
    }
}

TEST_CASE("H2 circle against a geodesic: tanh c = tanh r cos omega") {
    // circle of radius r centred at distance c from a geodesic, |c| <= r
    const Geometry g = Geometry::Hyperbolic;
    const Cycle base = Cycle::from_section(g, {0, 1, 0}, 0, ConvexSide::NonPositive);
    for (double r : {0.5, 1.0, 1.5})
        for (double c : {-0.3, 0.0, 0.2, 0.45}) {
            if (std::abs(c) > r) continue;
            const Point center(g, {0, std::sinh(c), std::cosh(c)});
            const CyclePoints cp = cycle_points(Cycle::circle(center, r), base);
            REQUIRE(cp.points.size() == 2);
            for (const auto& p : cp.points) {
                const Vec3 to_p = tangent_toward(center, p);
                const Vec3 down = project_to_tangent(center, Vec3{0, -1, 0});
                const double omega = angle_between(center, to_p, down);
                CHECK(std::tanh(c) ==
                      doctest::Approx(std::tanh(r) * std::cos(omega)).epsilon(1e-10));
            }
        }
}

TEST_CASE("base lines and ideal points") {
    Rng rng(26);
    const Cycle base = random_geodesic(Geometry::Hyperbolic, rng);
    CHECK(base.base_line().same_section(base));  // a geodesic is its own base line
    const Cycle h = Cycle::hypercycle(base, 0.8);
    CHECK(h.base_line().same_section(base));

    const Point c = random_point(Geometry::Hyperbolic, rng);
    CHECK(Cycle::circle(c, 0.5).ideal_points().empty());
    CHECK(Cycle::paracycle(IdealPoint::from_angle(1.1), c).ideal_points().size() == 1);

    const auto ib = base.ideal_points();
    const auto ih = h.ideal_points();
    REQUIRE(ib.size() == 2);
    REQUIRE(ih.size() == 2);
    const double d1 = ideal_distance(ib[0], ih[0]) + ideal_distance(ib[1], ih[1]);
    const double d2 = ideal_distance(ib[0], ih[1]) + ideal_distance(ib[1], ih[0]);
    CHECK(std::min(d1, d2) < 1e-10);

    CHECK_THROWS_AS(Cycle::circle(c, 0.5).base_line(), KindError);
    CHECK_THROWS_AS(Cycle::paracycle(IdealPoint::from_angle(0), c).base_line(), KindError);
}

TEST_CASE("isometry equivariance of cycles") {
    Rng rng(27);
    for (int i = 0; i < 60; ++i) {
        const Geometry g = kAll[i % 3];
        const Isometry iso = random_isometry(g, rng);
        const Point c = random_point(g, rng, 0.8);
        const Cycle circ = Cycle::circle(c, 0.6);
        const Cycle moved = circ.transported(iso);
        CHECK(moved.same_section(Cycle::circle(iso(c), 0.6)));
        CHECK(std::abs(moved.curvature() - circ.curvature()) < 1e-9);
        CHECK(moved.kind().type == circ.kind().type);

        if (g == Geometry::Hyperbolic) {
            const Cycle base = random_geodesic(g, rng);
            const Cycle h = Cycle::hypercycle(base, 0.7);
            const Cycle hm = h.transported(iso);
            CHECK(std::abs(hm.curvature() - std::tanh(0.7)) < 1e-9);
            CHECK(hm.base_line().same_section(base.transported(iso)));
            const Point p = random_point(g, rng);
            const Cycle pc = Cycle::paracycle(IdealPoint::from_angle(rng.uniform(0, 6.28)), p);
            const Cycle pcm = pc.transported(iso);
            CHECK(pcm.kind().type == CycleType::Paracycle);
            CHECK(std::abs(pcm.side(iso(p))) < 1e-9);
        }
    }
}

TEST_CASE("side values are preserved by transport") {
    Rng rng(28);
    for (Geometry g : kAll)
        for (int i = 0; i < 30; ++i) {
            const Isometry iso = random_isometry(g, rng);
            const Cycle circ = Cycle::circle(random_point(g, rng, 0.7), 0.5);
            const Point p = random_point(g, rng);
            CHECK(circ.transported(iso).side(iso(p)) ==
                  doctest::Approx(circ.side(p)).epsilon(1e-9));
        }
}

TEST_CASE("kind and curvature determine each other within a geometry") {
    // distinct kinds and distinct parameters give distinct curvatures
    std::vector<double> values;
    Rng rng(29);
    const Cycle base = random_geodesic(Geometry::Hyperbolic, rng);
    const Point c = random_point(Geometry::Hyperbolic, rng, 0.5);
    values.push_back(base.curvature());                                      // 0
    values.push_back(Cycle::paracycle(IdealPoint::from_angle(0), c).curvature());  // 1
    for (double l = 0.2; l < 2.05; l += 0.2)
        values.push_back(Cycle::hypercycle(base, l).curvature());  // (0, 1)
    for (double r = 0.2; r < 2.05; r += 0.2)
        values.push_back(Cycle::circle(c, r).curvature());  // (1, inf)
    std::sort(values.begin(), values.end());
    for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] - values[i - 1] > 1e-6);
}

TEST_CASE("cycle_points is symmetric in its arguments") {
    Rng rng(30);
    for (int i = 0; i < 60; ++i) {
        const Geometry g = kAll[i % 3];
        const Cycle a = Cycle::circle(random_point(g, rng, 0.8), rng.uniform(0.3, 1.0));
        const Cycle b = Cycle::circle(random_point(g, rng, 0.8), rng.uniform(0.3, 1.0));
        if (a.same_section(b)) continue;
        const auto ab = cycle_points(a, b);
        const auto ba = cycle_points(b, a);
        REQUIRE(ab.points.size() == ba.points.size());
        CHECK(ab.tangential == ba.tangential);
        for (const auto& p : ab.points) {
            double best = 1e9;
            for (const auto& q : ba.points) best = std::min(best, distance(p, q));
            CHECK(best < 1e-9);
        }
        for (const auto& p : ab.points) {
            CHECK(std::abs(a.side(p)) < 1e-9);
            CHECK(std::abs(b.side(p)) < 1e-9);
        }
    }
}
