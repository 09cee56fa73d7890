#pragma once

#include <limits>
#include <vector>

#include "curvedkit/cycle.hpp"

namespace curvedkit {

enum class Containment { Interior, Boundary, Exterior };

/// Ideal-point structure of an H^2 region boundary: one vertex per distinct
/// point at infinity, one edge per hypercycle/geodesic component. Paracycle
/// components contribute a single vertex with a self-loop (v1 == v2).
struct IdealGraph {
    struct Edge {
        int v1, v2;
        int component;
    };
    std::vector<IdealPoint> vertices;
    std::vector<Edge> edges;

    /// True when the graph is a union of vertex-disjoint paths or one
    /// single cycle (the 2-cycle included).
    bool is_paths_or_single_cycle() const;
};

/// A closed convex set with interior: the intersection of the convex sides
/// of finitely many pairwise non-crossing cycles. A strictly interior
/// witness point is stored at construction.
class ConvexRegion {
  public:
    static constexpr std::size_t kDefaultMaxComponents = 64;

    Geometry geometry() const { return geom_; }
    const std::vector<Cycle>& components() const { return components_; }
    const Point& witness() const { return witness_; }

    Containment contains(const Point& p) const;

    /// Signed distance-like margin: min over components of convex_margin.
    double margin(const Point& p) const;

    IdealGraph ideal_graph() const;

    /// Minimum distance between two distinct boundary components, +inf for
    /// fewer than two components or outside H^2. Computed from the common
    /// perpendicular of the base lines minus the two signed offsets.
    double min_component_distance() const;

    ConvexRegion transported(const Isometry& g) const;

    /// Validates invariants (non-crossing components, interior witness).
    static ConvexRegion from_components(std::vector<Cycle> components, const Point& witness,
                                        std::size_t max_components = kDefaultMaxComponents);

    // -- the constructors of the catalog -----------------------------------

    static ConvexRegion ball(const Point& center, double r);
    static ConvexRegion paraball(const IdealPoint& at, const Point& through);
    /// {x : signed_dist(x, base) <= l}; the convex domain bounded by a
    /// hypercycle (a half-plane when l = 0).
    static ConvexRegion hyperdomain(const Cycle& base, double l);
    static ConvexRegion half_plane(const Cycle& geodesic, ConvexSide side);
    /// R^2 strip of total width w, symmetric about the given line.
    static ConvexRegion strip(const Cycle& line, double width);
    /// {x : |signed_dist(x, base)| <= l}: bounded by two hypercycles with a
    /// common base line.
    static ConvexRegion parallel_domain(const Cycle& base, double l);
    /// H^2 band between two hypercycles over one base line, with separate
    /// distances toward each side (l_pos, l_neg >= 0, l_neg may be 0 so the
    /// base line itself bounds).
    static ConvexRegion hyperband(const Cycle& base, double l_pos, double l_neg);

    /// A chord of the Klein disk, directed from boundary angle theta1 to
    /// theta2; the region lies on the left. The boundary component is the
    /// hypercycle at distance l >= 0 outward from the chord.
    struct Chord {
        double theta1, theta2;
        double l = 0;
    };
    static ConvexRegion chord_assembly(const std::vector<Chord>& chords);

  private:
    ConvexRegion(Geometry g, std::vector<Cycle> components, const Point& witness);

    Geometry geom_;
    std::vector<Cycle> components_;
    Point witness_;
};

}  // namespace curvedkit
