#pragma once

#include <cmath>

#include "curvedkit/cycle.hpp"
#include "curvedkit/scenario.hpp"

namespace curvedkit::testing {

inline Point origin(Geometry g) { return Point(g, {0, 0, 1}); }

/// Random point within geodesic distance `spread` of the origin.
inline Point random_point(Geometry g, Rng& rng, double spread = 1.5) {
    const double a = rng.uniform(0, 2 * M_PI);
    double r = rng.uniform(0, spread);
    if (g == Geometry::Sphere) r = std::min(r, M_PI - 1e-6);
    const Vec3 dir{std::cos(a), std::sin(a), 0};
    return geodesic_walk(origin(g), dir, r);
}

inline Cycle random_geodesic(Geometry g, Rng& rng, double spread = 1.0) {
    for (;;) {
        const Point p = random_point(g, rng, spread);
        const Point q = random_point(g, rng, spread);
        try {
            return Cycle::geodesic_through(p, q);
        } catch (const DomainError&) {
        }
    }
}

/// Random isometry; orientation-reversing with probability 1/2 when
/// `allow_reflections`.
inline Isometry random_isometry(Geometry g, Rng& rng, bool allow_reflections = true) {
    Isometry iso = random_congruence(g, rng, 1.0);
    if (allow_reflections && rng.uniform() < 0.5)
        iso = compose(reflection(random_geodesic(g, rng)), iso);
    return iso;
}

/// Geodesic with its normal oriented so that p lies on the positive side.
inline Cycle with_normal_toward(const Cycle& geod, const Point& p) {
    if (geod.side(p) >= 0) return geod;
    return Cycle::from_section(geod.geometry(), -geod.normal(), -geod.offset(),
                               geod.convex_side());
}

inline const Geometry kAll[] = {Geometry::Sphere, Geometry::Euclidean, Geometry::Hyperbolic};

}  // namespace curvedkit::testing
