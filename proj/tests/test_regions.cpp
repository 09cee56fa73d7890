#include <doctest.h>

#include <cmath>

#include "curvedkit/region.hpp"
#include "helpers.hpp"

using namespace curvedkit;
using namespace curvedkit::testing;

namespace {

const Geometry H2 = Geometry::Hyperbolic;

Cycle h2_geodesic(const Vec3& normal) {
    return Cycle::from_section(H2, normal, 0, ConvexSide::NonPositive);
}

// coarse-to-fine sampled minimum distance between two boundary curves
double sampled_min_distance(const Cycle& a, const Cycle& b) {
    double ta = 0, tb = 0, half = 3.0;
    double best = 1e300;
    for (int round = 0; round < 4; ++round) {
        double best_ta = ta, best_tb = tb;
        for (int i = 0; i <= 100; ++i)
            for (int j = 0; j <= 100; ++j) {
                const double ua = ta + half * (2.0 * i / 100 - 1);
                const double ub = tb + half * (2.0 * j / 100 - 1);
                const double d = distance(a.point_at(ua), b.point_at(ub));
                if (d < best) {
                    best = d;
                    best_ta = ua;
                    best_tb = ub;
                }
            }
        ta = best_ta;
        tb = best_tb;
        half /= 40;
    }
    return best;
}

Point random_interior_point(const ConvexRegion& K, Rng& rng, double spread) {
    for (int tries = 0; tries < 4000; ++tries) {
        const double a = rng.uniform(0, 2 * M_PI);
        const double r = rng.uniform(0, spread);
        const Point p = geodesic_walk(
            K.witness(), project_to_tangent(K.witness(), {std::cos(a), std::sin(a), 0.01}), r);
        if (K.contains(p) == Containment::Interior) return p;
    }
    throw std::runtime_error("no interior point found");
}

}  // namespace

TEST_CASE("ball is a single circle component with its centre as witness") {
    Rng rng(51);
    for (Geometry g : kAll) {
        const Point c = random_point(g, rng, 0.6);
        const ConvexRegion K = ConvexRegion::ball(c, 0.5);
        CHECK(K.components().size() == 1);
        CHECK(K.components().front().kind().type == CycleType::Circle);
        CHECK(K.contains(c) == Containment::Interior);
    }
}

TEST_CASE("parallel domain: two hypercycles of curvature tanh l sharing both ideal points") {
    Rng rng(52);
    const Cycle base = random_geodesic(H2, rng);
    const double l = 0.4;
    const ConvexRegion K = ConvexRegion::parallel_domain(base, l);
    REQUIRE(K.components().size() == 2);
    for (const auto& c : K.components()) {
        CHECK(c.kind().type == CycleType::Hypercycle);
        CHECK(c.curvature() == doctest::Approx(std::tanh(l)).epsilon(1e-12));
    }
    const auto i0 = K.components()[0].ideal_points();
    const auto i1 = K.components()[1].ideal_points();
    for (const auto& w : i0) {
        double best = 1e9;
        for (const auto& v : i1) best = std::min(best, ideal_distance(w, v));
        CHECK(best < 1e-10);
    }
}

TEST_CASE("contains agrees with the per-component side values") {
    Rng rng(53);
    for (Geometry g : kAll) {
        const Point c = random_point(g, rng, 0.4);
        const ConvexRegion K = ConvexRegion::ball(c, 0.6);
        CHECK(K.contains(K.witness()) == Containment::Interior);
        const Cycle& circ = K.components().front();
        CHECK(K.contains(circ.point_at(0.77)) == Containment::Boundary);
        for (int i = 0; i < 50; ++i) {
            const Point p = random_point(g, rng, 1.8);
            const Containment got = K.contains(p);
            const double m = circ.convex_margin(p);
            if (m > tol::side) CHECK(got == Containment::Interior);
            if (m < -tol::side) CHECK(got == Containment::Exterior);
        }
    }
}

TEST_CASE("ideal graph shapes") {
    SUBCASE("parallel domain is a 2-cycle") {
        const ConvexRegion K = ConvexRegion::parallel_domain(h2_geodesic({0, 1, 0}), 0.5);
        const IdealGraph graph = K.ideal_graph();
        CHECK(graph.vertices.size() == 2);
        CHECK(graph.edges.size() == 2);
        CHECK(graph.is_paths_or_single_cycle());
    }
    SUBCASE("half plane is a single edge") {
        const ConvexRegion K =
            ConvexRegion::half_plane(h2_geodesic({0, 1, 0}), ConvexSide::NonPositive);
        const IdealGraph graph = K.ideal_graph();
        CHECK(graph.vertices.size() == 2);
        CHECK(graph.edges.size() == 1);
        CHECK(graph.is_paths_or_single_cycle());
    }
    SUBCASE("three disjoint chords give six vertices and three disjoint edges") {
        const ConvexRegion K = ConvexRegion::chord_assembly(
            {{-0.4, 0.4, 0.2}, {1.7, 2.5, 0.1}, {3.8, 4.6, 0.3}});
        const IdealGraph graph = K.ideal_graph();
        CHECK(graph.vertices.size() == 6);
        CHECK(graph.edges.size() == 3);
        CHECK(graph.is_paths_or_single_cycle());
    }
    SUBCASE("paracycle component contributes a self-loop") {
        const ConvexRegion K =
            ConvexRegion::paraball(IdealPoint::from_angle(0.3), Point(H2, {0, 0, 1}));
        const IdealGraph graph = K.ideal_graph();
        CHECK(graph.vertices.size() == 1);
        REQUIRE(graph.edges.size() == 1);
        CHECK(graph.edges[0].v1 == graph.edges[0].v2);
    }
    SUBCASE("circle components are rejected") {
        const ConvexRegion K = ConvexRegion::ball(Point(H2, {0, 0, 1}), 0.5);
        CHECK_THROWS_AS(K.ideal_graph(), UnsupportedGeometryError);
    }
}

TEST_CASE("minimum component distance") {
    SUBCASE("single component: +inf") {
        const ConvexRegion K = ConvexRegion::ball(Point(H2, {0, 0, 1}), 0.5);
        CHECK(std::isinf(K.min_component_distance()));
    }
    SUBCASE("hypercycles bent toward each other over ultraparallel bases: D - l1 - l2") {
        // base lines at x = +-c in the Klein model, distance D = 2 artanh c
        const double c = 0.7, l1 = 0.25, l2 = 0.1;
        const double D = 2 * std::atanh(c);
        const double a = std::acos(c);
        const Cycle right = Cycle::geodesic_between_ideals(IdealPoint::from_angle(-a),
                                                           IdealPoint::from_angle(a));
        const Cycle left = Cycle::geodesic_between_ideals(IdealPoint::from_angle(M_PI - a),
                                                          IdealPoint::from_angle(M_PI + a));
        const Point o(H2, {0, 0, 1});
        const ConvexRegion K = ConvexRegion::from_components(
            {Cycle::hypercycle(with_normal_toward(right, o), l1),
             Cycle::hypercycle(with_normal_toward(left, o), l2)},
            o);
        const double expected = D - l1 - l2;
        CHECK(K.min_component_distance() == doctest::Approx(expected).epsilon(1e-10));
        CHECK(std::abs(sampled_min_distance(K.components()[0], K.components()[1]) -
                       expected) < 1e-6);
    }
    SUBCASE("parallel domain: closed form equals the sampled minimum") {
        const ConvexRegion K = ConvexRegion::parallel_domain(h2_geodesic({0, 1, 0}), 0.45);
        const double closed = K.min_component_distance();
        CHECK(closed == doctest::Approx(2 * 0.45).epsilon(1e-10));
        CHECK(std::abs(sampled_min_distance(K.components()[0], K.components()[1]) - closed) <
              1e-6);
    }
}

TEST_CASE("chord assembly validation and distances") {
    SUBCASE("two chords at mutual distance D (common-perpendicular oracle)") {
        const double c = 0.6;
        const double a = std::acos(c);
        const ConvexRegion K =
            ConvexRegion::chord_assembly({{-a, a, 0.0}, {M_PI - a, M_PI + a, 0.0}});
        // oracle: the common perpendicular length is acosh |B(n1, n2)|
        const double k = std::abs(
            bilinear(H2, K.components()[0].normal(), K.components()[1].normal()));
        const double oracle = std::acosh(k);
        CHECK(oracle == doctest::Approx(2 * std::atanh(c)).epsilon(1e-12));
        CHECK(K.min_component_distance() == doctest::Approx(oracle).epsilon(1e-8));
    }
    SUBCASE("crossing chords are rejected") {
        CHECK_THROWS_AS(ConvexRegion::chord_assembly({{0.0, 2.0, 0.1}, {1.0, 3.0, 0.1}}),
                        InvalidSpecError);
    }
    SUBCASE("chords sharing an endpoint are fine") {
        const ConvexRegion K =
            ConvexRegion::chord_assembly({{-1.2, 1.0, 0.2}, {1.0, 3.0, 0.2}});
        CHECK(K.components().size() == 2);
        CHECK(K.min_component_distance() == doctest::Approx(0.0));
    }
}

TEST_CASE("region constructors reject degenerate input") {
    CHECK_THROWS_AS(ConvexRegion::strip(h2_geodesic({0, 1, 0}), 1.0),
                    UnsupportedGeometryError);
    CHECK_THROWS_AS(ConvexRegion::strip(Cycle::euclidean_line(0, 1, 0), -1.0), DomainError);
    CHECK_THROWS_AS(ConvexRegion::parallel_domain(h2_geodesic({0, 1, 0}), 0.0), DomainError);
    const Point o(H2, {0, 0, 1});
    CHECK_THROWS_AS(
        ConvexRegion::from_components({h2_geodesic({0, 1, 0}), h2_geodesic({1, 0, 0})}, o),
        InvalidSpecError);
}

TEST_CASE("containment is equivariant under isometries") {
    Rng rng(54);
    for (Geometry g : kAll)
        for (int i = 0; i < 25; ++i) {
            const ConvexRegion K = ConvexRegion::ball(random_point(g, rng, 0.5), 0.7);
            const Isometry iso = random_isometry(g, rng);
            const ConvexRegion moved = K.transported(iso);
            for (int k = 0; k < 20; ++k) {
                const Point p = random_point(g, rng, 1.5);
                CHECK(moved.contains(iso(p)) == K.contains(p));
            }
        }
}

TEST_CASE("convexity: sampled geodesic chords stay inside") {
    Rng rng(55);
    const std::vector<ConvexRegion> regions = {
        ConvexRegion::ball(Point(H2, {0.2, 0.1, std::sqrt(1.05)}), 0.8),
        ConvexRegion::parallel_domain(h2_geodesic({0, 1, 0}), 0.5),
        ConvexRegion::paraball(IdealPoint::from_angle(1.0), Point(H2, {0, 0, 1})),
        ConvexRegion::chord_assembly({{-0.4, 0.4, 0.2}, {1.7, 2.5, 0.1}, {3.8, 4.6, 0.3}}),
        ConvexRegion::ball(Point(Geometry::Sphere, {0, 0, 1}), 0.9),
        ConvexRegion::strip(Cycle::euclidean_line(0, 1, 0.3), 1.2),
    };
    for (const auto& K : regions) {
        for (int i = 0; i < 200; ++i) {
            const Point a = random_interior_point(K, rng, 1.2);
            const Point b = random_interior_point(K, rng, 1.2);
            if (distance(a, b) < 1e-9) continue;
            const Vec3 u = tangent_toward(a, b);
            const double d = distance(a, b);
            for (int s = 1; s < 8; ++s) {
                const Point m = geodesic_walk(a, u, d * s / 8.0);
                CHECK(K.contains(m) != Containment::Exterior);
            }
        }
    }
}

TEST_CASE("ideal graph is invariant under orientation-preserving isometries") {
    Rng rng(56);
    const ConvexRegion K = ConvexRegion::chord_assembly(
        {{-0.4, 0.4, 0.2}, {1.7, 2.5, 0.1}, {3.8, 4.6, 0.3}});
    const IdealGraph before = K.ideal_graph();
    for (int i = 0; i < 10; ++i) {
        const Isometry iso = random_congruence(H2, rng, 1.0);
        const IdealGraph after = K.transported(iso).ideal_graph();
        CHECK(after.vertices.size() == before.vertices.size());
        CHECK(after.edges.size() == before.edges.size());
        CHECK(after.is_paths_or_single_cycle() == before.is_paths_or_single_cycle());
    }
}
