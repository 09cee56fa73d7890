#pragma once

#include "curvedkit/errors.hpp"

namespace curvedkit {

/// Closed-form chord/angle machinery for a circle of radius r in H^2 whose
/// center lies at signed distance c from the base line of a hypercycle at
/// signed distance l (l >= 0; c varies over R, measured toward the
/// hypercycle's side).
namespace trig {

/// The circle meets the set {x : signed_dist(x, base) <= l} in a nonempty
/// arc iff |c - l| <= r.
bool chord_exists(double r, double c, double l);

/// Half central angle omega of that arc:
///   sinh l = cosh r sinh c - sinh r cosh c cos omega.
/// omega = 0 at internal tangency (l = c - r), pi at external (l = c + r).
/// cos omega excursions beyond [-1, 1] by more than 1e-12 are hard errors.
double half_central_angle(double r, double c, double l);

/// Hyperbolic law of cosines for the chord triangle:
///   cosh d = cosh r cosh c - sinh r sinh c cos omega.
double law_of_cosines_d(double r, double c, double omega);

}  // namespace trig
}  // namespace curvedkit
