#include "curvedkit/isometry.hpp"

#include <cmath>

#include "curvedkit/cycle.hpp"

namespace curvedkit {

namespace {

Mat3 metric_matrix(Geometry g) {
    Mat3 m;
    m(2, 2) = sigma(g);
    return m;
}

Mat3 rot_z(double a) {
    Mat3 m;
    const double c = std::cos(a), s = std::sin(a);
    m(0, 0) = c; m(0, 1) = -s;
    m(1, 0) = s; m(1, 1) = c;
    return m;
}

// Standard translation along the x-axis geodesic, taking (0,0,1) to the
// point at distance d in the +x direction.
Mat3 trans_x(Geometry g, double d) {
    Mat3 m;
    switch (g) {
        case Geometry::Sphere: {
            const double c = std::cos(d), s = std::sin(d);
            m(0, 0) = c; m(0, 2) = s;
            m(2, 0) = -s; m(2, 2) = c;
            break;
        }
        case Geometry::Hyperbolic: {
            const double c = std::cosh(d), s = std::sinh(d);
            m(0, 0) = c; m(0, 2) = s;
            m(2, 0) = s; m(2, 2) = c;
            break;
        }
        case Geometry::Euclidean:
            m(0, 2) = d;
            break;
    }
    return m;
}

// Some isometry taking the origin (0,0,1) to p.
Mat3 origin_to(const Point& p) {
    const Vec3& v = p.coords();
    const Point origin(p.geometry(), {0, 0, 1});
    const double d = distance(origin, p);
    if (d < 1e-15) return Mat3::identity();
    const double phi = std::atan2(v.y, v.x);
    return rot_z(phi) * trans_x(p.geometry(), d) * rot_z(-phi);
}

void validate(Geometry g, const Mat3& m) {
    if (g == Geometry::Euclidean) {
        if (std::abs(m(2, 0)) > tol::form || std::abs(m(2, 1)) > tol::form ||
            std::abs(m(2, 2) - 1.0) > tol::form)
            throw DomainError("Isometry: Euclidean matrix must have last row (0,0,1)");
        const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
        if (std::abs(a * a + c * c - 1) > tol::form || std::abs(b * b + d * d - 1) > tol::form ||
            std::abs(a * b + c * d) > tol::form)
            throw DomainError("Isometry: Euclidean linear block is not orthogonal");
        return;
    }
    const Mat3 G = metric_matrix(g);
    const Mat3 r = m.transpose() * G * m;
    double err = 0;
    for (int i = 0; i < 9; ++i) err = std::max(err, std::abs(r.m[i] - G.m[i]));
    if (err > tol::form) throw DomainError("Isometry: matrix does not preserve the bilinear form");
    if (g == Geometry::Hyperbolic && m(2, 2) <= 0)
        throw DomainError("Isometry: matrix does not preserve the upper sheet");
}

int compute_orientation(Geometry g, const Mat3& m) {
    const double d = (g == Geometry::Euclidean)
                         ? m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)
                         : m.det();
    return d >= 0 ? +1 : -1;
}

}  // namespace

Isometry::Isometry(Geometry g, const Mat3& m) : geom_(g), m_(m) {
    validate(g, m);
    orientation_ = compute_orientation(g, m);
}

bool Isometry::is_identity(double eps) const {
    return matrix_distance(m_, Mat3::identity()) < eps;
}

Point Isometry::operator()(const Point& p) const {
    require_same_geometry(geom_, p.geometry(), "apply");
    return Point(geom_, m_ * p.coords());
}

IdealPoint Isometry::operator()(const IdealPoint& w) const {
    require_same_geometry(geom_, w.geometry(), "apply");
    return IdealPoint(geom_, m_ * w.direction());
}

Isometry compose(const Isometry& a, const Isometry& b) {
    require_same_geometry(a.geometry(), b.geometry(), "compose");
    return Isometry(a.geometry(), a.matrix() * b.matrix());
}

Isometry inverse(const Isometry& a) {
    const Geometry g = a.geometry();
    if (g == Geometry::Euclidean) {
        const Mat3& m = a.matrix();
        Mat3 r;
        r(0, 0) = m(0, 0); r(0, 1) = m(1, 0);
        r(1, 0) = m(0, 1); r(1, 1) = m(1, 1);
        r(0, 2) = -(r(0, 0) * m(0, 2) + r(0, 1) * m(1, 2));
        r(1, 2) = -(r(1, 0) * m(0, 2) + r(1, 1) * m(1, 2));
        return Isometry(g, r);
    }
    // M^-1 = G M^T G for form-preserving matrices
    const Mat3 G = metric_matrix(g);
    return Isometry(g, G * a.matrix().transpose() * G);
}

Isometry rotation(const Point& center, double angle) {
    const Mat3 t = origin_to(center);
    return Isometry(center.geometry(), t * rot_z(angle) * t.inverse());
}

Isometry point_reflection(const Point& center) {
    return rotation(center, M_PI);
}

Isometry reflection(const Cycle& axis) {
    if (!axis.is_geodesic()) throw KindError("reflection: axis must be a geodesic");
    const Geometry g = axis.geometry();
    const Vec3& n = axis.normal();
    if (g == Geometry::Euclidean) {
        const double h = axis.offset();
        Mat3 m;
        m(0, 0) = 1 - 2 * n.x * n.x; m(0, 1) = -2 * n.x * n.y; m(0, 2) = 2 * h * n.x;
        m(1, 0) = -2 * n.x * n.y;    m(1, 1) = 1 - 2 * n.y * n.y; m(1, 2) = 2 * h * n.y;
        return Isometry(g, m);
    }
    // B-Householder: x -> x - 2 B(x,n) n, with B(n,n) = 1
    const Vec3 gn = metric_apply(g, n);
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = (i == j ? 1.0 : 0.0) - 2 * n[i] * gn[j];
    return Isometry(g, m);
}

Isometry translation(const Cycle& axis, double length) {
    if (!axis.is_geodesic()) throw KindError("translation: axis must be a geodesic");
    const Geometry g = axis.geometry();
    if (g == Geometry::Euclidean) {
        const Vec3 tau = axis.tangent_at(0);
        Mat3 m;
        m(0, 2) = length * tau.x;
        m(1, 2) = length * tau.y;
        return Isometry(g, m);
    }
    // Frame the axis: columns (tangent, normal, point). The conjugated
    // standard x-axis translation then slides along the axis in the
    // direction of its parametrization.
    const Point p0 = axis.point_at(0);
    const Vec3 tau = axis.tangent_at(0);
    const Mat3 f = Mat3::from_columns(tau, axis.normal(), p0.coords());
    const Mat3 G = metric_matrix(g);
    const Mat3 f_inv = (g == Geometry::Sphere) ? f.transpose() : G * f.transpose() * G;
    return Isometry(g, f * trans_x(g, length) * f_inv);
}

Isometry parabolic(const IdealPoint& fixed, double parameter) {
    if (fixed.geometry() != Geometry::Hyperbolic)
        throw UnsupportedGeometryError("parabolic: only defined on H2");
    const double s = parameter;
    // standard parabolic fixing the null direction (1, 0, 1)
    Mat3 p;
    p(0, 0) = 1 - s * s / 2; p(0, 1) = s;  p(0, 2) = s * s / 2;
    p(1, 0) = -s;            p(1, 1) = 1;  p(1, 2) = s;
    p(2, 0) = -s * s / 2;    p(2, 1) = s;  p(2, 2) = 1 + s * s / 2;
    const auto bc = fixed.boundary_coords();
    const Mat3 r = rot_z(std::atan2(bc[1], bc[0]));
    return Isometry(Geometry::Hyperbolic, r * p * r.transpose());
}

}  // namespace curvedkit
