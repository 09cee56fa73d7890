#pragma once

#include <optional>
#include <vector>

#include "curvedkit/geometry.hpp"
#include "curvedkit/isometry.hpp"

namespace curvedkit {

/// Classification of a constant-curvature curve.
enum class CycleType {
    Circle,      // compact; curvature cot r (S^2), coth r (H^2), 1/r (R^2)
    Paracycle,   // H^2 only; curvature 1
    Hypercycle,  // H^2 only; curvature tanh l
    Geodesic,    // great circle on S^2, straight line on H^2
    Line,        // straight line on R^2
};

struct CycleKind {
    CycleType type;
    double parameter = 0;  // radius for circles, distance l for hypercycles
};

std::string to_string(CycleType t);

/// Which side of the section is declared convex: the region
/// {x : side(x) <= 0} or {x : side(x) >= 0}.
enum class ConvexSide : int { NonPositive = -1, NonNegative = +1 };

/// One complete curve of constant geodesic curvature, stored as a plane
/// section {x : B(x, n) = h} of the model quadric for sigma = +-1. For
/// sigma = 0 a line is stored as a unit normal with n3 = 0 and a circle as
/// its center (n, with n3 = 1) plus radius h.
///
/// Normalization (sigma = -1): B(n,n) = 1 for the geodesic/hypercycle
/// family, B(n,n) = 0 and n3 = 1 for paracycles, B(n,n) = -1 and n3 > 0
/// for circles (n is then the center). For sigma = +1, |n| = 1 and h >= 0.
class Cycle {
  public:
    Geometry geometry() const { return geom_; }
    const Vec3& normal() const { return n_; }
    double offset() const { return h_; }
    ConvexSide convex_side() const { return side_; }

    CycleKind kind() const;
    bool is_geodesic() const;
    bool compact() const;  // circles and all S^2 sections

    /// Geodesic curvature; 0 for geodesics/lines.
    double curvature() const;

    /// Signed section residual B(p, n) - h (affine evaluation for sigma=0:
    /// signed line offset, or |p - center| - r for circles). Zero within
    /// tolerance iff p lies on the cycle.
    double side(const Point& p) const;

    /// Signed membership of the declared convex side: >= 0 inside.
    double convex_margin(const Point& p) const {
        return static_cast<int>(side_) * side(p);
    }

    Cycle with_convex_side(ConvexSide s) const;
    /// The same curve with the convex side flipped.
    Cycle complement() const { return with_convex_side(side_ == ConvexSide::NonPositive ? ConvexSide::NonNegative : ConvexSide::NonPositive); }

    /// Transport by an isometry; kind and curvature are invariant.
    Cycle transported(const Isometry& g) const;

    /// True when the two cycles are the same point set (section equality up
    /// to the sign ambiguity of the normal). Ignores convex_side.
    bool same_section(const Cycle& other, double eps = tol::metric) const;

    // -- constructors ------------------------------------------------------

    /// The circle of radius r about a center. On S^2 requires r <= pi/2;
    /// the convex side contains the center.
    static Cycle circle(const Point& center, double r);

    /// H^2 distance line at signed distance l from a base geodesic (l = 0
    /// returns the base itself). The convex side is the paper's convex
    /// domain {x : signed_dist(x, base) <= l}.
    static Cycle hypercycle(const Cycle& base, double l);

    /// H^2 paracycle with the given point at infinity, through a point.
    /// The convex side is the horodisk.
    static Cycle paracycle(const IdealPoint& at, const Point& through);

    /// Geodesic through two points (unique; antipodal S^2 pairs rejected).
    static Cycle geodesic_through(const Point& p, const Point& q);

    /// Geodesic through a point with the given unit tangent direction.
    static Cycle geodesic_with_tangent(const Point& p, const Vec3& unit_tangent);

    /// H^2 geodesic with the given two (distinct) points at infinity.
    static Cycle geodesic_between_ideals(const IdealPoint& a, const IdealPoint& b);

    /// The perpendicular bisector geodesic of two points.
    static Cycle perpendicular_bisector(const Point& p, const Point& q);

    /// R^2 line {n . x = h} with unit normal n.
    static Cycle euclidean_line(double nx, double ny, double h);

    /// Raw section; callers must pass normalized data (internal use and IO).
    static Cycle from_section(Geometry g, const Vec3& n, double h, ConvexSide side);

    // -- H^2 structure -----------------------------------------------------

    /// Base geodesic of a hypercycle (a geodesic is its own base line).
    Cycle base_line() const;

    /// Points at infinity: 2 for hypercycles/geodesics, 1 for paracycles,
    /// 0 for circles. Empty outside H^2.
    std::vector<IdealPoint> ideal_points() const;

    // -- parametrization ---------------------------------------------------
    // Every cycle carries a canonical parametrization: the angle in
    // [0, 2pi) for compact cycles, a monotone real parameter otherwise.

    Point point_at(double t) const;
    double param_of(const Point& p) const;
    /// Unit tangent of the parametrization at parameter t.
    Vec3 tangent_at(double t) const;
    /// Ideal endpoint reached as t -> +inf (dir > 0) or t -> -inf (H^2 only).
    IdealPoint ideal_end(int dir) const;

  private:
    Cycle(Geometry g, const Vec3& n, double h, ConvexSide side);
    void make_frame() const;

    Geometry geom_;
    Vec3 n_;
    double h_;
    ConvexSide side_;

    // lazily built parametrization frame
    mutable bool have_frame_ = false;
    mutable Vec3 base_, e1_, e2_;
    mutable double rho_ = 0;
};

struct CyclePoints {
    std::vector<Point> points;  // 0, 1 or 2
    bool tangential = false;
};

/// Intersection points of two distinct cycles: the two linear section
/// constraints against the surface quadric reduce to one quadratic.
/// Throws CoincidentCycleError when the sections coincide.
CyclePoints cycle_points(const Cycle& a, const Cycle& b);

/// Distance between two disjoint H^2 geodesics (0 if they meet or are
/// parallel); the common perpendicular length for ultraparallel pairs.
double geodesic_distance(const Cycle& g1, const Cycle& g2);

/// Signed distance of a point to a geodesic (positive on the side the
/// normal points to); arcsinh B(x, n) in H^2.
double signed_distance_to_geodesic(const Point& p, const Cycle& geodesic);

}  // namespace curvedkit
