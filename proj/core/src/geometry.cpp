#include "curvedkit/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace curvedkit {

Mat3 Mat3::inverse() const {
    const double d = det();
    if (std::abs(d) < 1e-300) throw DomainError("Mat3::inverse: singular matrix");
    Mat3 r;
    r(0, 0) = (m[4] * m[8] - m[5] * m[7]) / d;
    r(0, 1) = (m[2] * m[7] - m[1] * m[8]) / d;
    r(0, 2) = (m[1] * m[5] - m[2] * m[4]) / d;
    r(1, 0) = (m[5] * m[6] - m[3] * m[8]) / d;
    r(1, 1) = (m[0] * m[8] - m[2] * m[6]) / d;
    r(1, 2) = (m[2] * m[3] - m[0] * m[5]) / d;
    r(2, 0) = (m[3] * m[7] - m[4] * m[6]) / d;
    r(2, 1) = (m[1] * m[6] - m[0] * m[7]) / d;
    r(2, 2) = (m[0] * m[4] - m[1] * m[3]) / d;
    return r;
}

double matrix_distance(const Mat3& a, const Mat3& b) {
    double s = 0;
    for (int i = 0; i < 9; ++i) {
        const double d = a.m[i] - b.m[i];
        s += d * d;
    }
    return std::sqrt(s);
}

std::string to_string(Geometry g) {
    switch (g) {
        case Geometry::Sphere: return "S2";
        case Geometry::Euclidean: return "E2";
        case Geometry::Hyperbolic: return "H2";
    }
    return "?";
}

Geometry geometry_from_string(const std::string& s) {
    if (s == "S2") return Geometry::Sphere;
    if (s == "E2" || s == "R2") return Geometry::Euclidean;
    if (s == "H2") return Geometry::Hyperbolic;
    throw InvalidSpecError("unknown geometry tag '" + s + "' (expected S2, E2 or H2)");
}

static double clamp1(double v) { return std::clamp(v, -1.0, 1.0); }

Vec3 Point::normalize_onto_surface(Geometry g, const Vec3& v) {
    switch (g) {
        case Geometry::Sphere: {
            const double n = norm(v);
            if (n < 1e-14) throw DomainError("Point: zero vector cannot be normalized onto S2");
            return v / n;
        }
        case Geometry::Hyperbolic: {
            const double q = v.z * v.z - v.x * v.x - v.y * v.y;
            if (q <= 0 || v.z <= 0)
                throw DomainError("Point: vector is not timelike-future, cannot lie on H2");
            return v / std::sqrt(q);
        }
        case Geometry::Euclidean: {
            if (std::abs(v.z - 1.0) > 1e-9)
                throw DomainError("Point: Euclidean point must have z = 1");
            return {v.x, v.y, 1.0};
        }
    }
    throw DomainError("Point: bad geometry tag");
}

Point::Point(Geometry g, const Vec3& coords) : geom_(g), v_(normalize_onto_surface(g, coords)) {}

IdealPoint::IdealPoint(Geometry g, const Vec3& direction) : geom_(g) {
    if (g != Geometry::Hyperbolic)
        throw UnsupportedGeometryError("IdealPoint: only H2 has points at infinity");
    if (direction.z <= 0) throw DomainError("IdealPoint: direction must be future-pointing");
    Vec3 d = direction / direction.z;
    const double r = std::hypot(d.x, d.y);
    if (std::abs(r - 1.0) > 1e-6)
        throw DomainError("IdealPoint: direction is not lightlike");
    // snap exactly onto the light cone
    d.x /= r;
    d.y /= r;
    v_ = d;
}

IdealPoint IdealPoint::from_angle(double theta) {
    return IdealPoint(Geometry::Hyperbolic, {std::cos(theta), std::sin(theta), 1.0});
}

double ideal_distance(const IdealPoint& a, const IdealPoint& b) {
    const auto pa = a.boundary_coords(), pb = b.boundary_coords();
    return std::hypot(pa[0] - pb[0], pa[1] - pb[1]);
}

double distance(const Point& p, const Point& q) {
    require_same_geometry(p.geometry(), q.geometry(), "distance");
    const Vec3 &u = p.coords(), &v = q.coords();
    switch (p.geometry()) {
        // chordal forms: acos/acosh of a near-1 argument loses half the
        // significant digits exactly where exact symmetries are checked
        case Geometry::Sphere: {
            if (dot(u, v) >= 0) return 2 * std::asin(clamp1(norm(u - v) / 2));
            return M_PI - 2 * std::asin(clamp1(norm(u + v) / 2));
        }
        case Geometry::Hyperbolic: {
            const Vec3 d = u - v;
            const double q2 = std::max(0.0, bilinear(Geometry::Hyperbolic, d, d));
            return std::asinh(std::sqrt(q2 * (1 + q2 / 4)));
        }
        case Geometry::Euclidean:
            return std::hypot(u.x - v.x, u.y - v.y);
    }
    throw DomainError("distance: bad geometry tag");
}

Point midpoint(const Point& p, const Point& q) {
    require_same_geometry(p.geometry(), q.geometry(), "midpoint");
    const Vec3 s = p.coords() + q.coords();
    if (p.geometry() == Geometry::Sphere && norm(s) < 1e-9)
        throw DomainError("midpoint: antipodal pair has no unique midpoint");
    return Point(p.geometry(), p.geometry() == Geometry::Euclidean ? s / 2.0 : s);
}

Vec3 project_to_tangent(const Point& p, const Vec3& v) {
    const Geometry g = p.geometry();
    Vec3 t;
    if (g == Geometry::Euclidean) {
        t = {v.x, v.y, 0};
    } else {
        // remove the component along p (B(p,p) = sigma)
        const double c = bilinear(g, v, p.coords()) / static_cast<double>(sigma(g));
        t = v - c * p.coords();
    }
    const double n2 = bilinear(g, t, t);
    if (n2 < 1e-24) throw DomainError("project_to_tangent: vanishing tangent component");
    return t / std::sqrt(n2);
}

Vec3 tangent_toward(const Point& p, const Point& q) {
    require_same_geometry(p.geometry(), q.geometry(), "tangent_toward");
    if (p.geometry() == Geometry::Euclidean) {
        Vec3 d = q.coords() - p.coords();
        d.z = 0;
        const double n = norm(d);
        if (n < 1e-14) throw DomainError("tangent_toward: coincident points");
        return d / n;
    }
    return project_to_tangent(p, q.coords());
}

Vec3 tangent_toward(const Point& p, const IdealPoint& w) {
    require_same_geometry(p.geometry(), w.geometry(), "tangent_toward");
    return project_to_tangent(p, w.direction());
}

Point geodesic_walk(const Point& p, const Vec3& u, double t) {
    switch (p.geometry()) {
        case Geometry::Sphere:
            return Point(p.geometry(), std::cos(t) * p.coords() + std::sin(t) * u);
        case Geometry::Hyperbolic:
            return Point(p.geometry(), std::cosh(t) * p.coords() + std::sinh(t) * u);
        case Geometry::Euclidean:
            return Point(p.geometry(), p.coords() + t * u);
    }
    throw DomainError("geodesic_walk: bad geometry tag");
}

double angle_between(const Point& p, const Vec3& u1, const Vec3& u2) {
    return std::acos(clamp1(bilinear(p.geometry(), u1, u2)));
}

}  // namespace curvedkit
