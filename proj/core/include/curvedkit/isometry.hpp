#pragma once

#include "curvedkit/geometry.hpp"

namespace curvedkit {

class Cycle;  // cycle.hpp

/// A congruence of the tagged plane, stored as a 3x3 matrix acting on
/// ambient coordinates. For S^2 and H^2 the matrix preserves the bilinear
/// form (and the upper sheet); for R^2 it is a rigid affine map with last
/// row (0, 0, 1). Orientation is the sign of the determinant of the linear
/// action on the surface.
class Isometry {
  public:
    Isometry(Geometry g, const Mat3& m);

    Geometry geometry() const { return geom_; }
    const Mat3& matrix() const { return m_; }
    int orientation() const { return orientation_; }

    static Isometry identity(Geometry g) { return Isometry(g, Mat3::identity()); }
    bool is_identity(double eps = tol::matrix_dedup) const;

    Point operator()(const Point& p) const;
    IdealPoint operator()(const IdealPoint& w) const;

  private:
    Geometry geom_;
    Mat3 m_;
    int orientation_;
};

/// a then b is compose(b, a); compose(a, b) acts as a after b on points.
Isometry compose(const Isometry& a, const Isometry& b);
Isometry inverse(const Isometry& a);

/// Rotation about a point by a signed angle (orientation preserving).
Isometry rotation(const Point& center, double angle);

/// Point reflection: the order-2 rotation about `center`.
Isometry point_reflection(const Point& center);

/// Reflection in a geodesic (orientation reversing).
Isometry reflection(const Cycle& axis);

/// Translation along a geodesic by a signed length; fixes the axis.
/// The positive direction is the axis' own parametrization direction.
Isometry translation(const Cycle& axis, double length);

/// Rotation about an infinite point of H^2 (a parabolic isometry).
Isometry parabolic(const IdealPoint& fixed, double parameter);

inline Point apply(const Isometry& g, const Point& p) { return g(p); }
inline IdealPoint apply(const Isometry& g, const IdealPoint& w) { return g(w); }

}  // namespace curvedkit
