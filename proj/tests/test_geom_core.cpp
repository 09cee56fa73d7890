#include <doctest.h>

#include <cmath>

#include "helpers.hpp"

using namespace curvedkit;
using namespace curvedkit::testing;

namespace {

// Brute-force arc length of the H2 geodesic t -> (sinh t, 0, cosh t),
// summing metric lengths of small chords. Independent of distance().
double quadrature_length_x_axis(double t_end, int steps) {
    double len = 0;
    Vec3 prev{0, 0, 1};
    for (int i = 1; i <= steps; ++i) {
        const double t = t_end * i / steps;
        const Vec3 cur{std::sinh(t), 0, std::cosh(t)};
        const Vec3 d = cur - prev;
        len += std::sqrt(bilinear(Geometry::Hyperbolic, d, d));
        prev = cur;
    }
    return len;
}

}  // namespace

TEST_CASE("distance basics") {
    Rng rng(101);
    for (Geometry g : kAll) {
        const Point p = random_point(g, rng);
        CHECK(distance(p, p) == doctest::Approx(0).epsilon(1e-12));
    }
    // antipodal pair on the sphere
    const Point n(Geometry::Sphere, {0, 0, 1});
    const Point s(Geometry::Sphere, {0, 0, -1});
    CHECK(distance(n, s) == doctest::Approx(M_PI).epsilon(1e-14));
}

TEST_CASE("H2 distance matches arc-length quadrature") {
    const double oracle = quadrature_length_x_axis(1.0, 200000);
    CHECK(oracle == doctest::Approx(1.0).epsilon(1e-9));  // sanity of the oracle itself
    const Point o(Geometry::Hyperbolic, {0, 0, 1});
    const Point p(Geometry::Hyperbolic, {std::sinh(1.0), 0, std::cosh(1.0)});
    CHECK(distance(o, p) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("distance symmetry and triangle inequality") {
    Rng rng(77);
    for (Geometry g : kAll)
        for (int i = 0; i < 200; ++i) {
            const Point a = random_point(g, rng), b = random_point(g, rng),
                        c = random_point(g, rng);
            CHECK(distance(a, b) == doctest::Approx(distance(b, a)).epsilon(1e-12));
            CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
        }
}

TEST_CASE("rotation by zero angle is the identity") {
    Rng rng(5);
    for (Geometry g : kAll) {
        const Isometry r = rotation(random_point(g, rng), 0.0);
        CHECK(matrix_distance(r.matrix(), Mat3::identity()) < 1e-12);
    }
}

TEST_CASE("point reflection is an involution") {
    Rng rng(6);
    for (Geometry g : kAll) {
        const Point c = random_point(g, rng);
        const Isometry pr = point_reflection(c);
        CHECK(pr.orientation() == 1);
        const Point p = random_point(g, rng);
        CHECK(distance(pr(pr(p)), p) < 1e-10);
        // fixes its centre
        CHECK(distance(pr(c), c) < 1e-10);
    }
}

TEST_CASE("translation along the x-axis geodesic of H2") {
    const Geometry g = Geometry::Hyperbolic;
    const Point o(g, {0, 0, 1});
    const Point p(g, {std::sinh(1.0), 0, std::cosh(1.0)});
    const Cycle axis = Cycle::geodesic_through(o, p);
    const Isometry tr = translation(axis, 1.0);
    const Point img = tr(o);
    CHECK(distance(o, img) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(axis.side(img)) < 1e-10);  // stays on the axis
    // translations compose additively along one axis
    const Isometry twice = compose(tr, tr);
    CHECK(distance(twice(o), translation(axis, 2.0)(o)) < 1e-10);
}

TEST_CASE("reflection fixes its axis pointwise") {
    Rng rng(8);
    for (Geometry g : kAll) {
        const Cycle axis = random_geodesic(g, rng);
        const Isometry refl = reflection(axis);
        CHECK(refl.orientation() == -1);
        for (double t : {-0.7, 0.0, 1.3}) {
            const Point p = axis.point_at(t);
            CHECK(distance(refl(p), p) < 1e-10);
        }
        CHECK(matrix_distance(compose(refl, refl).matrix(), Mat3::identity()) < 1e-10);
    }
}

TEST_CASE("identity apply and order-6 rotation closure") {
    Rng rng(9);
    for (Geometry g : kAll) {
        const Point p = random_point(g, rng);
        CHECK(distance(Isometry::identity(g)(p), p) == doctest::Approx(0));
        const Isometry r = rotation(random_point(g, rng), M_PI / 3);
        Point q = p;
        for (int i = 0; i < 6; ++i) q = r(q);
        CHECK(distance(q, p) < 1e-9);
    }
}

TEST_CASE("two reflections compose to a rotation by twice the angle") {
    Rng rng(10);
    for (Geometry g : kAll) {
        const Point p = random_point(g, rng, 0.8);
        const Vec3 u = project_to_tangent(p, {0.3, 1.0, 0.1});
        const Cycle g1 = Cycle::geodesic_with_tangent(p, u);
        const double alpha = 0.55;
        const Cycle g2 = Cycle::geodesic_with_tangent(
            p, project_to_tangent(p, rotation(p, alpha).matrix() * u));
        const Isometry composed = compose(reflection(g2), reflection(g1));
        const double d_plus = matrix_distance(composed.matrix(), rotation(p, 2 * alpha).matrix());
        const double d_minus =
            matrix_distance(composed.matrix(), rotation(p, -2 * alpha).matrix());
        CHECK(std::min(d_plus, d_minus) < 1e-9);
    }
}

TEST_CASE("parabolic fixes its ideal point and nothing finite") {
    const IdealPoint w = IdealPoint::from_angle(0.4);
    const Isometry pb = parabolic(w, 0.7);
    CHECK(pb.orientation() == 1);
    const IdealPoint img = pb(w);
    CHECK(ideal_distance(img, w) < 1e-12);
    Rng rng(11);
    const Point p = random_point(Geometry::Hyperbolic, rng);
    CHECK(distance(pb(p), p) > 1e-3);
}

TEST_CASE("group laws on random triples") {
    Rng rng(12);
    for (Geometry g : kAll)
        for (int i = 0; i < 60; ++i) {
            const Isometry a = random_isometry(g, rng), b = random_isometry(g, rng),
                           c = random_isometry(g, rng);
            CHECK(matrix_distance(compose(compose(a, b), c).matrix(),
                                  compose(a, compose(b, c)).matrix()) < 1e-10);
            CHECK(matrix_distance(compose(a, inverse(a)).matrix(), Mat3::identity()) < 1e-10);
            CHECK(matrix_distance(compose(inverse(a), a).matrix(), Mat3::identity()) < 1e-10);
        }
}

TEST_CASE("metric preservation over 1000 random triples") {
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Geometry g = kAll[i % 3];
        const Isometry iso = random_isometry(g, rng);
        const Point p = random_point(g, rng), q = random_point(g, rng);
        CHECK(std::abs(distance(iso(p), iso(q)) - distance(p, q)) < 1e-9);
    }
}

TEST_CASE("orientation is a homomorphism") {
    Rng rng(14);
    for (Geometry g : kAll)
        for (int i = 0; i < 100; ++i) {
            const Isometry a = random_isometry(g, rng), b = random_isometry(g, rng);
            CHECK(compose(a, b).orientation() == a.orientation() * b.orientation());
        }
}

TEST_CASE("upper sheet preservation") {
    Rng rng(15);
    for (int i = 0; i < 300; ++i) {
        const Isometry iso = random_isometry(Geometry::Hyperbolic, rng);
        const Point p = random_point(Geometry::Hyperbolic, rng, 3.0);
        CHECK(iso(p).coords().z >= 1.0 - 1e-12);
    }
}

TEST_CASE("geometry tags are enforced") {
    const Point e(Geometry::Euclidean, {0.5, 0.5, 1});
    const Point h(Geometry::Hyperbolic, {0, 0, 1});
    CHECK_THROWS_AS(distance(e, h), TagMismatchError);
    CHECK_THROWS_AS(Isometry::identity(Geometry::Sphere)(e), TagMismatchError);
    CHECK_THROWS_AS(compose(Isometry::identity(Geometry::Sphere),
                            Isometry::identity(Geometry::Euclidean)),
                    TagMismatchError);
    CHECK_THROWS_AS(IdealPoint(Geometry::Euclidean, {1, 0, 1}), UnsupportedGeometryError);
}

TEST_CASE("surface invariants of Point") {
    const Point s(Geometry::Sphere, {3, 0, 4});
    CHECK(std::abs(dot(s.coords(), s.coords()) - 1) < 1e-12);
    const Point h(Geometry::Hyperbolic, {0.6, 0.8, std::sqrt(2.0)});
    CHECK(std::abs(bilinear(Geometry::Hyperbolic, h.coords(), h.coords()) + 1) < 1e-12);
    CHECK(h.coords().z >= 1);
    CHECK_THROWS_AS(Point(Geometry::Hyperbolic, {1, 0, 0.5}), DomainError);
    CHECK_THROWS_AS(Point(Geometry::Euclidean, {1, 0, 0.5}), DomainError);
}

TEST_CASE("midpoint is equidistant; antipodal pairs rejected") {
    const Point n(Geometry::Sphere, {0, 0, 1});
    const Point s(Geometry::Sphere, {0, 0, -1});
    CHECK_THROWS_AS(midpoint(n, s), DomainError);
    Rng rng(16);
    for (Geometry g : kAll) {
        const Point a = random_point(g, rng), b = random_point(g, rng);
        const Point m = midpoint(a, b);
        CHECK(std::abs(distance(m, a) - distance(m, b)) < 1e-9);
    }
}
