#pragma once

#include <array>
#include <cmath>
#include <string>

#include "curvedkit/errors.hpp"

namespace curvedkit {

// Shared tolerances. Surface/normalization residuals are tightest, metric
// checks loosest; the gaps keep rounding noise distinguishable from logic
// errors.
namespace tol {
inline constexpr double surface = 1e-12;       // on-surface residual after normalization
inline constexpr double form = 1e-10;          // bilinear-form preservation of isometries
inline constexpr double metric = 1e-9;         // distance preservation, point residuals
inline constexpr double side = 1e-10;          // boundary band for side()/contains()
inline constexpr double tangency = 1e-12;      // relative discriminant band
inline constexpr double ideal_dedup = 1e-9;    // ideal points, boundary coordinates
inline constexpr double matrix_dedup = 1e-8;   // candidate isometry dedup (Frobenius)
inline constexpr double detect_default = 1e-6; // default symmetry acceptance
}  // namespace tol

// ---------------------------------------------------------------------------
// Small fixed-size linear algebra. The ambient space is always R^3.
// ---------------------------------------------------------------------------

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

struct Mat3 {
    // row-major
    std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

    static Mat3 identity() { return {}; }

    double& operator()(int r, int c) { return m[3 * r + c]; }
    double operator()(int r, int c) const { return m[3 * r + c]; }

    Vec3 operator*(const Vec3& v) const {
        return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
                m[3] * v.x + m[4] * v.y + m[5] * v.z,
                m[6] * v.x + m[7] * v.y + m[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }

    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
        return r;
    }

    double det() const {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }

    Mat3 inverse() const;

    static Mat3 from_columns(const Vec3& a, const Vec3& b, const Vec3& c) {
        Mat3 r;
        r(0, 0) = a.x; r(1, 0) = a.y; r(2, 0) = a.z;
        r(0, 1) = b.x; r(1, 1) = b.y; r(2, 1) = b.z;
        r(0, 2) = c.x; r(1, 2) = c.y; r(2, 2) = c.z;
        return r;
    }
};

/// Frobenius distance, used for candidate-isometry deduplication.
double matrix_distance(const Mat3& a, const Mat3& b);

// ---------------------------------------------------------------------------
// Geometry tag and the ambient bilinear form.
// ---------------------------------------------------------------------------

/// The three constant-curvature planes, tagged by their curvature sign.
enum class Geometry : int {
    Sphere = +1,      // S^2: unit sphere x^2+y^2+z^2 = 1
    Euclidean = 0,    // R^2: affine chart z = 1
    Hyperbolic = -1,  // H^2: upper hyperboloid sheet x^2+y^2-z^2 = -1, z >= 1
};

inline int sigma(Geometry g) { return static_cast<int>(g); }

std::string to_string(Geometry g);
Geometry geometry_from_string(const std::string& s);

/// B_sigma(u,v) = u1 v1 + u2 v2 + sigma * u3 v3.
inline double bilinear(Geometry g, const Vec3& u, const Vec3& v) {
    return u.x * v.x + u.y * v.y + sigma(g) * u.z * v.z;
}

/// G u, the metric applied to an ambient vector.
inline Vec3 metric_apply(Geometry g, const Vec3& u) {
    return {u.x, u.y, sigma(g) * u.z};
}

inline void require_same_geometry(Geometry a, Geometry b, const char* where) {
    if (a != b) throw TagMismatchError(std::string(where) + ": geometry tags differ");
}

// ---------------------------------------------------------------------------
// Points.
// ---------------------------------------------------------------------------

/// A location on the model surface of its geometry. Coordinates are kept
/// normalized onto the surface (renormalized after every matrix application).
class Point {
  public:
    Point(Geometry g, const Vec3& coords);

    Geometry geometry() const { return geom_; }
    const Vec3& coords() const { return v_; }

    /// Projects an off-surface vector back onto the model surface.
    static Vec3 normalize_onto_surface(Geometry g, const Vec3& v);

  private:
    Geometry geom_;
    Vec3 v_;
};

/// A direction on the boundary circle at infinity of H^2, normalized so
/// that z = 1 (then (x, y) lies on the unit circle).
class IdealPoint {
  public:
    IdealPoint(Geometry g, const Vec3& direction);

    Geometry geometry() const { return geom_; }
    const Vec3& direction() const { return v_; }

    /// (x, y) on the unit circle; the model-boundary coordinates.
    std::array<double, 2> boundary_coords() const { return {v_.x, v_.y}; }

    /// The ideal point at boundary angle theta.
    static IdealPoint from_angle(double theta);

  private:
    Geometry geom_;
    Vec3 v_;
};

/// Euclidean distance of two ideal points in boundary coordinates.
double ideal_distance(const IdealPoint& a, const IdealPoint& b);

/// Geodesic metric of the tagged plane. Symmetric, satisfies the triangle
/// inequality; range [0, pi] on the sphere.
double distance(const Point& p, const Point& q);

/// Geodesic midpoint. Throws DomainError for antipodal spherical pairs.
Point midpoint(const Point& p, const Point& q);

/// Unit tangent at p of the geodesic towards q (in the tangent plane at p,
/// normalized against the bilinear form). Throws DomainError if p == q or
/// the pair is antipodal on the sphere.
Vec3 tangent_toward(const Point& p, const Point& q);

/// Unit tangent at p of the geodesic running into the ideal point w (H^2).
Vec3 tangent_toward(const Point& p, const IdealPoint& w);

/// Geodesic flow: walks distance t from p with initial unit tangent u.
Point geodesic_walk(const Point& p, const Vec3& unit_tangent, double t);

/// Angle at p between two unit tangent vectors, in [0, pi].
double angle_between(const Point& p, const Vec3& u1, const Vec3& u2);

/// Projects an ambient vector onto the tangent plane at p and normalizes it
/// against the form. Throws DomainError when the projection vanishes.
Vec3 project_to_tangent(const Point& p, const Vec3& v);

}  // namespace curvedkit
