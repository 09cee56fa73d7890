#include "curvedkit/cycle.hpp"

#include <algorithm>
#include <cmath>

namespace curvedkit {

namespace {

constexpr double kFamilyBand = 0.5;  // spacelike/lightlike/timelike separation after canonicalization

Vec3 least_aligned_axis(const Vec3& n) {
    const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
    if (ax <= ay && ax <= az) return {1, 0, 0};
    if (ay <= az) return {0, 1, 0};
    return {0, 0, 1};
}

double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

}  // namespace

std::string to_string(CycleType t) {
    switch (t) {
        case CycleType::Circle: return "circle";
        case CycleType::Paracycle: return "paracycle";
        case CycleType::Hypercycle: return "hypercycle";
        case CycleType::Geodesic: return "geodesic";
        case CycleType::Line: return "line";
    }
    return "?";
}

Cycle::Cycle(Geometry g, const Vec3& n, double h, ConvexSide side)
    : geom_(g), n_(n), h_(h), side_(side) {}

Cycle Cycle::from_section(Geometry g, const Vec3& n, double h, ConvexSide side) {
    Vec3 nn = n;
    double hh = h;
    switch (g) {
        case Geometry::Sphere: {
            const double len = norm(nn);
            if (len < 1e-14) throw DomainError("Cycle: zero normal");
            nn = nn / len;
            hh = hh / len;
            if (hh < 0) {  // canonical representative has h >= 0
                nn = -nn;
                hh = -hh;
                side = side == ConvexSide::NonPositive ? ConvexSide::NonNegative
                                                       : ConvexSide::NonPositive;
            }
            if (hh > 1.0 - 1e-14)
                throw DomainError("Cycle: section misses the sphere or degenerates to a point");
            break;
        }
        case Geometry::Hyperbolic: {
            const double q = bilinear(g, nn, nn);
            const double scale2 = dot(nn, nn);
            if (scale2 < 1e-28) throw DomainError("Cycle: zero normal");
            if (q > 1e-9 * scale2) {
                const double s = std::sqrt(q);
                nn = nn / s;
                hh = hh / s;
            } else if (q < -1e-9 * scale2) {
                double s = std::sqrt(-q);
                nn = nn / s;
                hh = hh / s;
                if (nn.z < 0) throw DomainError("Cycle: circle center on the lower sheet");
                if (hh > -1.0 - 1e-14)
                    throw DomainError("Cycle: section misses the hyperboloid or degenerates");
            } else {
                if (nn.z <= 0) throw DomainError("Cycle: pastlike paracycle normal");
                hh = hh / nn.z;
                nn = nn / nn.z;
                const double r = std::hypot(nn.x, nn.y);
                nn.x /= r;
                nn.y /= r;
                if (hh >= -1e-14) throw DomainError("Cycle: empty paracycle section");
            }
            break;
        }
        case Geometry::Euclidean: {
            if (std::abs(nn.z) < 0.5) {  // line
                const double len = std::hypot(nn.x, nn.y);
                if (len < 1e-14) throw DomainError("Cycle: zero line normal");
                nn = {nn.x / len, nn.y / len, 0};
                hh = hh / len;
            } else {  // circle: n = center, h = radius
                if (std::abs(nn.z - 1.0) > 1e-9)
                    throw DomainError("Cycle: Euclidean circle center must have z = 1");
                if (hh <= 0) throw DomainError("Cycle: circle radius must be positive");
            }
            break;
        }
    }
    return Cycle(g, nn, hh, side);
}

Cycle Cycle::circle(const Point& center, double r) {
    const Geometry g = center.geometry();
    if (r <= 0) throw DomainError("circle: radius must be positive");
    switch (g) {
        case Geometry::Sphere:
            if (r > M_PI / 2 + 1e-12) throw DomainError("circle: spherical radius must be <= pi/2");
            return from_section(g, center.coords(), std::cos(r), ConvexSide::NonNegative);
        case Geometry::Hyperbolic:
            return from_section(g, center.coords(), -std::cosh(r), ConvexSide::NonNegative);
        case Geometry::Euclidean:
            return from_section(g, center.coords(), r, ConvexSide::NonPositive);
    }
    throw DomainError("circle: bad geometry");
}

Cycle Cycle::hypercycle(const Cycle& base, double l) {
    if (base.geometry() != Geometry::Hyperbolic)
        throw UnsupportedGeometryError("hypercycle: only defined on H2");
    if (!base.is_geodesic()) throw KindError("hypercycle: base must be a geodesic");
    // convex domain {x : signed_dist(x, base) <= l}
    return Cycle(Geometry::Hyperbolic, base.normal(), std::sinh(l), ConvexSide::NonPositive);
}

Cycle Cycle::paracycle(const IdealPoint& at, const Point& through) {
    require_same_geometry(at.geometry(), through.geometry(), "paracycle");
    const Vec3 n = at.direction();
    const double h = bilinear(Geometry::Hyperbolic, through.coords(), n);
    // horodisk side: B grows toward the ideal point
    return Cycle(Geometry::Hyperbolic, n, h, ConvexSide::NonNegative);
}

Cycle Cycle::geodesic_through(const Point& p, const Point& q) {
    require_same_geometry(p.geometry(), q.geometry(), "geodesic_through");
    const Geometry g = p.geometry();
    if (g == Geometry::Euclidean) {
        Vec3 d = q.coords() - p.coords();
        const double len = std::hypot(d.x, d.y);
        if (len < 1e-12) throw DomainError("geodesic_through: coincident points");
        const Vec3 n{-d.y / len, d.x / len, 0};
        return Cycle(g, n, n.x * p.coords().x + n.y * p.coords().y, ConvexSide::NonPositive);
    }
    const Vec3 w = cross(metric_apply(g, p.coords()), metric_apply(g, q.coords()));
    const double q2 = bilinear(g, w, w);
    if (q2 < 1e-18)
        throw DomainError("geodesic_through: points coincide or are antipodal, geodesic not unique");
    return Cycle(g, w / std::sqrt(q2), 0.0, ConvexSide::NonPositive);
}

Cycle Cycle::geodesic_with_tangent(const Point& p, const Vec3& u) {
    const Geometry g = p.geometry();
    if (g == Geometry::Euclidean) {
        const Vec3 n{-u.y, u.x, 0};
        const double len = std::hypot(n.x, n.y);
        return Cycle(g, {n.x / len, n.y / len, 0},
                     (n.x * p.coords().x + n.y * p.coords().y) / len, ConvexSide::NonPositive);
    }
    const Vec3 w = cross(metric_apply(g, p.coords()), metric_apply(g, u));
    const double q2 = bilinear(g, w, w);
    if (q2 < 1e-18) throw DomainError("geodesic_with_tangent: degenerate tangent");
    return Cycle(g, w / std::sqrt(q2), 0.0, ConvexSide::NonPositive);
}

Cycle Cycle::geodesic_between_ideals(const IdealPoint& a, const IdealPoint& b) {
    if (ideal_distance(a, b) < 1e-12)
        throw DomainError("geodesic_between_ideals: ideal points coincide");
    const Geometry g = Geometry::Hyperbolic;
    const Vec3 w = cross(metric_apply(g, a.direction()), metric_apply(g, b.direction()));
    const double q2 = bilinear(g, w, w);
    return Cycle(g, w / std::sqrt(q2), 0.0, ConvexSide::NonPositive);
}

Cycle Cycle::perpendicular_bisector(const Point& p, const Point& q) {
    require_same_geometry(p.geometry(), q.geometry(), "perpendicular_bisector");
    const Geometry g = p.geometry();
    if (g == Geometry::Euclidean) {
        Vec3 d = q.coords() - p.coords();
        const double len = std::hypot(d.x, d.y);
        if (len < 1e-12) throw DomainError("perpendicular_bisector: coincident points");
        const Vec3 n{d.x / len, d.y / len, 0};
        const Vec3 m = (p.coords() + q.coords()) / 2.0;
        return Cycle(g, n, n.x * m.x + n.y * m.y, ConvexSide::NonPositive);
    }
    // {x : B(x, p - q) = 0} is the equidistant locus
    const Vec3 d = p.coords() - q.coords();
    const double q2 = bilinear(g, d, d);
    if (q2 < 1e-18)
        throw DomainError("perpendicular_bisector: points coincide or are antipodal");
    return Cycle(g, d / std::sqrt(q2), 0.0, ConvexSide::NonPositive);
}

Cycle Cycle::euclidean_line(double nx, double ny, double h) {
    return from_section(Geometry::Euclidean, {nx, ny, 0}, h, ConvexSide::NonPositive);
}

CycleKind Cycle::kind() const {
    switch (geom_) {
        case Geometry::Sphere:
            if (h_ < 1e-12) return {CycleType::Geodesic, 0};
            return {CycleType::Circle, std::acos(std::min(1.0, h_))};
        case Geometry::Hyperbolic: {
            const double q = bilinear(geom_, n_, n_);
            if (q > kFamilyBand) {
                if (std::abs(h_) < 1e-12) return {CycleType::Geodesic, 0};
                return {CycleType::Hypercycle, std::asinh(std::abs(h_))};
            }
            if (q < -kFamilyBand) return {CycleType::Circle, std::acosh(-h_)};
            return {CycleType::Paracycle, 0};
        }
        case Geometry::Euclidean:
            if (std::abs(n_.z) < 0.5) return {CycleType::Line, 0};
            return {CycleType::Circle, h_};
    }
    throw DomainError("kind: bad geometry");
}

bool Cycle::is_geodesic() const {
    const CycleType t = kind().type;
    return t == CycleType::Geodesic || t == CycleType::Line;
}

bool Cycle::compact() const {
    if (geom_ == Geometry::Sphere) return true;
    return kind().type == CycleType::Circle;
}

double Cycle::curvature() const {
    const CycleKind k = kind();
    switch (k.type) {
        case CycleType::Geodesic:
        case CycleType::Line:
            return 0.0;
        case CycleType::Paracycle:
            return 1.0;
        case CycleType::Hypercycle:
            return std::tanh(k.parameter);
        case CycleType::Circle:
            switch (geom_) {
                case Geometry::Sphere: return 1.0 / std::tan(k.parameter);
                case Geometry::Hyperbolic: return 1.0 / std::tanh(k.parameter);
                case Geometry::Euclidean: return 1.0 / k.parameter;
            }
    }
    throw DomainError("curvature: bad cycle");
}

double Cycle::side(const Point& p) const {
    require_same_geometry(geom_, p.geometry(), "side");
    if (geom_ == Geometry::Euclidean) {
        if (std::abs(n_.z) < 0.5)
            return n_.x * p.coords().x + n_.y * p.coords().y - h_;
        return std::hypot(p.coords().x - n_.x, p.coords().y - n_.y) - h_;
    }
    return bilinear(geom_, p.coords(), n_) - h_;
}

Cycle Cycle::with_convex_side(ConvexSide s) const { return Cycle(geom_, n_, h_, s); }

Cycle Cycle::transported(const Isometry& g) const {
    require_same_geometry(geom_, g.geometry(), "transported");
    if (geom_ == Geometry::Euclidean) {
        const Mat3& m = g.matrix();
        if (std::abs(n_.z) < 0.5) {
            const Vec3 rn{m(0, 0) * n_.x + m(0, 1) * n_.y, m(1, 0) * n_.x + m(1, 1) * n_.y, 0};
            const double hh = h_ + rn.x * m(0, 2) + rn.y * m(1, 2);
            return Cycle(geom_, rn, hh, side_);
        }
        const Point c2 = g(Point(geom_, n_));
        return Cycle(geom_, c2.coords(), h_, side_);
    }
    Vec3 nn = g.matrix() * n_;
    double hh = h_;
    // paracycle normals stay lightlike but need rescaling back to n3 = 1
    const double q = bilinear(geom_, n_, n_);
    if (geom_ == Geometry::Hyperbolic && std::abs(q) < kFamilyBand) {
        hh /= nn.z;
        nn = nn / nn.z;
    }
    return Cycle(geom_, nn, hh, side_);
}

bool Cycle::same_section(const Cycle& other, double eps) const {
    if (geom_ != other.geom_) return false;
    const auto close = [&](const Vec3& a, double ha, const Vec3& b, double hb) {
        return norm(a - b) < eps && std::abs(ha - hb) < eps;
    };
    // Spacelike H2 normals and great circles / Euclidean lines have the
    // (n, h) ~ (-n, -h) ambiguity.
    return close(n_, h_, other.n_, other.h_) || close(n_, h_, -other.n_, -other.h_);
}

// ---------------------------------------------------------------------------
// Parametrization frames.
// ---------------------------------------------------------------------------

void Cycle::make_frame() const {
    if (have_frame_) return;
    switch (geom_) {
        case Geometry::Sphere: {
            base_ = h_ * n_;
            rho_ = std::sqrt(std::max(0.0, 1 - h_ * h_));
            const Vec3 a = least_aligned_axis(n_);
            e1_ = cross(n_, a);
            e1_ = e1_ / norm(e1_);
            e2_ = cross(n_, e1_);
            break;
        }
        case Geometry::Hyperbolic: {
            const double q = bilinear(geom_, n_, n_);
            if (q > kFamilyBand) {
                // geodesic / hypercycle: x(t) = h n + rho (sinh t e1 + cosh t e2)
                base_ = h_ * n_;
                rho_ = std::sqrt(1 + h_ * h_);
                Vec3 t{n_.z * n_.x, n_.z * n_.y, 1 + n_.z * n_.z};  // (0,0,1) projected off n
                e2_ = t / std::sqrt(1 + n_.z * n_.z);
                e1_ = cross(metric_apply(geom_, n_), metric_apply(geom_, e2_));
                e1_ = e1_ / std::sqrt(bilinear(geom_, e1_, e1_));
                if (det3(e1_, n_, e2_) < 0) e1_ = -e1_;
            } else if (q < -kFamilyBand) {
                // circle: x(th) = (-h) n + rho (cos th e1 + sin th e2)
                base_ = (-h_) * n_;
                rho_ = std::sqrt(std::max(0.0, h_ * h_ - 1));
                const Vec3 a = least_aligned_axis(n_);
                Vec3 r1 = a + bilinear(geom_, a, n_) * n_;
                e1_ = r1 / std::sqrt(bilinear(geom_, r1, r1));
                Vec3 r2 = cross(metric_apply(geom_, n_), metric_apply(geom_, e1_));
                e2_ = r2 / std::sqrt(bilinear(geom_, r2, r2));
            } else {
                // paracycle: x(t) = (h/2) m + t e - ((1+t^2)/(2h)) n
                base_ = {n_.x * h_ / 2, n_.y * h_ / 2, -h_ / 2};  // (h/2) m, m = (n1,n2,-1)
                e1_ = {-n_.y, n_.x, 0};
                e2_ = n_;
                rho_ = 0;
            }
            break;
        }
        case Geometry::Euclidean: {
            if (std::abs(n_.z) < 0.5) {
                base_ = {h_ * n_.x, h_ * n_.y, 1};
                e1_ = {-n_.y, n_.x, 0};
                e2_ = {0, 0, 0};
                rho_ = 0;
            } else {
                base_ = {n_.x, n_.y, 1};
                e1_ = {1, 0, 0};
                e2_ = {0, 1, 0};
                rho_ = h_;
            }
            break;
        }
    }
    have_frame_ = true;
}

Point Cycle::point_at(double t) const {
    make_frame();
    switch (geom_) {
        case Geometry::Sphere:
            return Point(geom_, base_ + rho_ * (std::cos(t) * e1_ + std::sin(t) * e2_));
        case Geometry::Hyperbolic: {
            const double q = bilinear(geom_, n_, n_);
            if (q > kFamilyBand)
                return Point(geom_, base_ + rho_ * (std::sinh(t) * e1_ + std::cosh(t) * e2_));
            if (q < -kFamilyBand)
                return Point(geom_, base_ + rho_ * (std::cos(t) * e1_ + std::sin(t) * e2_));
            return Point(geom_, base_ + t * e1_ - ((1 + t * t) / (2 * h_)) * e2_);
        }
        case Geometry::Euclidean:
            if (std::abs(n_.z) < 0.5) return Point(geom_, base_ + t * e1_);
            return Point(geom_, base_ + rho_ * (std::cos(t) * e1_ + std::sin(t) * e2_));
    }
    throw DomainError("point_at: bad cycle");
}

double Cycle::param_of(const Point& p) const {
    make_frame();
    const Vec3& x = p.coords();
    switch (geom_) {
        case Geometry::Sphere:
            return std::atan2(dot(x, e2_), dot(x, e1_));
        case Geometry::Hyperbolic: {
            const double q = bilinear(geom_, n_, n_);
            if (q > kFamilyBand) return std::asinh(bilinear(geom_, x, e1_) / rho_);
            if (q < -kFamilyBand)
                return std::atan2(bilinear(geom_, x, e2_), bilinear(geom_, x, e1_));
            return bilinear(geom_, x, e1_);
        }
        case Geometry::Euclidean:
            if (std::abs(n_.z) < 0.5)
                return (x.x - base_.x) * e1_.x + (x.y - base_.y) * e1_.y;
            return std::atan2(x.y - base_.y, x.x - base_.x);
    }
    throw DomainError("param_of: bad cycle");
}

Vec3 Cycle::tangent_at(double t) const {
    make_frame();
    switch (geom_) {
        case Geometry::Sphere:
            return -std::sin(t) * e1_ + std::cos(t) * e2_;
        case Geometry::Hyperbolic: {
            const double q = bilinear(geom_, n_, n_);
            if (q > kFamilyBand) return std::cosh(t) * e1_ + std::sinh(t) * e2_;
            if (q < -kFamilyBand) return -std::sin(t) * e1_ + std::cos(t) * e2_;
            Vec3 u = e1_ - (t / h_) * e2_;
            return u / std::sqrt(bilinear(geom_, u, u));
        }
        case Geometry::Euclidean:
            if (std::abs(n_.z) < 0.5) return e1_;
            return -std::sin(t) * e1_ + std::cos(t) * e2_;
    }
    throw DomainError("tangent_at: bad cycle");
}

IdealPoint Cycle::ideal_end(int dir) const {
    if (geom_ != Geometry::Hyperbolic)
        throw UnsupportedGeometryError("ideal_end: only H2 curves reach infinity");
    make_frame();
    const double q = bilinear(geom_, n_, n_);
    if (q > kFamilyBand) return IdealPoint(geom_, e2_ + (dir > 0 ? e1_ : -e1_));
    if (std::abs(q) <= kFamilyBand) return IdealPoint(geom_, n_);
    throw KindError("ideal_end: circles have no points at infinity");
}

Cycle Cycle::base_line() const {
    if (geom_ != Geometry::Hyperbolic)
        throw UnsupportedGeometryError("base_line: only defined on H2");
    const CycleType t = kind().type;
    if (t != CycleType::Hypercycle && t != CycleType::Geodesic)
        throw KindError("base_line: only hypercycles and geodesics have base lines");
    return Cycle(geom_, n_, 0.0, side_);
}

std::vector<IdealPoint> Cycle::ideal_points() const {
    if (geom_ != Geometry::Hyperbolic) return {};
    switch (kind().type) {
        case CycleType::Circle: return {};
        case CycleType::Paracycle: return {IdealPoint(geom_, n_)};
        default: return {ideal_end(+1), ideal_end(-1)};
    }
}

// ---------------------------------------------------------------------------
// Pairwise intersection.
// ---------------------------------------------------------------------------

namespace {

CyclePoints euclidean_cycle_points(const Cycle& a, const Cycle& b) {
    CyclePoints out;
    const bool la = std::abs(a.normal().z) < 0.5, lb = std::abs(b.normal().z) < 0.5;
    const Geometry g = Geometry::Euclidean;
    const auto mk = [&](double x, double y) { out.points.emplace_back(g, Vec3{x, y, 1}); };
    if (la && lb) {
        const Vec3 &n1 = a.normal(), &n2 = b.normal();
        const double det = n1.x * n2.y - n1.y * n2.x;
        if (std::abs(det) < 1e-14) return out;  // parallel
        mk((a.offset() * n2.y - b.offset() * n1.y) / det,
           (n1.x * b.offset() - n2.x * a.offset()) / det);
        return out;
    }
    if (la != lb) {
        const Cycle& line = la ? a : b;
        const Cycle& circ = la ? b : a;
        const Vec3& n = line.normal();
        const Vec3& c = circ.normal();
        const double r = circ.offset();
        const double d = n.x * c.x + n.y * c.y - line.offset();  // signed center offset
        const double disc = r * r - d * d;
        const double scale = r * r + d * d + 1e-300;
        const Vec3 foot{c.x - d * n.x, c.y - d * n.y, 1};
        if (std::abs(disc) <= tol::tangency * scale) {
            out.tangential = true;
            mk(foot.x, foot.y);
            return out;
        }
        if (disc < 0) return out;
        const double s = std::sqrt(disc);
        mk(foot.x - s * n.y, foot.y + s * n.x);
        mk(foot.x + s * n.y, foot.y - s * n.x);
        return out;
    }
    // circle-circle
    const Vec3 &c1 = a.normal(), &c2 = b.normal();
    const double r1 = a.offset(), r2 = b.offset();
    const double dx = c2.x - c1.x, dy = c2.y - c1.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 < 1e-28) return out;  // concentric
    const double d = std::sqrt(d2);
    // signed distance from c1 to the radical line along (dx,dy)/d
    const double u = (d2 + r1 * r1 - r2 * r2) / (2 * d);
    const double disc = r1 * r1 - u * u;
    const double scale = r1 * r1 + u * u + d2 + 1e-300;
    const double mx = c1.x + u * dx / d, my = c1.y + u * dy / d;
    if (std::abs(disc) <= tol::tangency * scale) {
        out.tangential = true;
        mk(mx, my);
        return out;
    }
    if (disc < 0) return out;
    const double s = std::sqrt(disc);
    mk(mx - s * dy / d, my + s * dx / d);
    mk(mx + s * dy / d, my - s * dx / d);
    return out;
}

}  // namespace

CyclePoints cycle_points(const Cycle& a, const Cycle& b) {
    require_same_geometry(a.geometry(), b.geometry(), "cycle_points");
    if (a.same_section(b)) throw CoincidentCycleError("cycle_points: cycles coincide");
    const Geometry g = a.geometry();
    if (g == Geometry::Euclidean) return euclidean_cycle_points(a, b);

    CyclePoints out;
    // Euclidean normals of the two affine section planes
    const Vec3 u = metric_apply(g, a.normal());
    const Vec3 v = metric_apply(g, b.normal());
    const double uu = dot(u, u), uv = dot(u, v), vv = dot(v, v);
    const double gram = uu * vv - uv * uv;
    if (gram < 1e-18 * uu * vv) return out;  // parallel planes: disjoint sections
    const double al = (a.offset() * vv - b.offset() * uv) / gram;
    const double be = (b.offset() * uu - a.offset() * uv) / gram;
    const Vec3 x0 = al * u + be * v;
    const Vec3 d = cross(u, v);

    // B(x0 + t d, x0 + t d) = sigma
    const double qa = bilinear(g, d, d);
    const double qb = bilinear(g, x0, d);
    const double qc = bilinear(g, x0, x0) - sigma(g);

    const auto push = [&](double t) {
        const Vec3 x = x0 + t * d;
        if (g == Geometry::Hyperbolic && x.z <= 0) return;  // lower sheet
        out.points.emplace_back(g, x);
    };

    // rounding floor of the discriminant: built from coefficient magnitudes,
    // not the (possibly cancelled) coefficients themselves
    const double scale = qb * qb + dot(d, d) * (dot(x0, x0) + 1.0) + 1e-300;
    if (qa * qa < 1e-28 * (dot(d, d) * dot(d, d))) {
        // lightlike section-line direction (shared ideal point): linear case
        if (std::abs(qb) < 1e-14 * (norm(x0) * norm(d) + 1e-300)) return out;
        push(-qc / (2 * qb));
        return out;
    }
    const double disc = qb * qb - qa * qc;
    if (std::abs(disc) <= tol::tangency * scale) {
        out.tangential = true;
        push(-qb / qa);
        return out;
    }
    if (disc < 0) return out;
    const double root = std::sqrt(disc);
    const double q = -(qb + (qb >= 0 ? root : -root));
    if (std::abs(q) < 1e-300) {
        push(0.0);
        return out;
    }
    push(q / qa);
    push(qc / q);
    return out;
}

double geodesic_distance(const Cycle& g1, const Cycle& g2) {
    require_same_geometry(g1.geometry(), g2.geometry(), "geodesic_distance");
    if (!g1.is_geodesic() || !g2.is_geodesic())
        throw KindError("geodesic_distance: both arguments must be geodesics");
    switch (g1.geometry()) {
        case Geometry::Sphere:
            return 0.0;  // great circles always meet
        case Geometry::Hyperbolic: {
            const double k = std::abs(bilinear(g1.geometry(), g1.normal(), g2.normal()));
            return k <= 1.0 ? 0.0 : std::acosh(k);
        }
        case Geometry::Euclidean: {
            const Vec3 &n1 = g1.normal(), &n2 = g2.normal();
            const double c = n1.x * n2.x + n1.y * n2.y;
            if (std::abs(std::abs(c) - 1.0) > 1e-12) return 0.0;  // they cross
            return std::abs(g1.offset() - (c > 0 ? g2.offset() : -g2.offset()));
        }
    }
    throw DomainError("geodesic_distance: bad geometry");
}

double signed_distance_to_geodesic(const Point& p, const Cycle& geod) {
    require_same_geometry(p.geometry(), geod.geometry(), "signed_distance_to_geodesic");
    if (!geod.is_geodesic()) throw KindError("signed_distance_to_geodesic: not a geodesic");
    const double s = geod.side(p);
    switch (p.geometry()) {
        case Geometry::Sphere: return std::asin(std::clamp(s, -1.0, 1.0));
        case Geometry::Hyperbolic: return std::asinh(s);
        case Geometry::Euclidean: return s;
    }
    throw DomainError("signed_distance_to_geodesic: bad geometry");
}

}  // namespace curvedkit
