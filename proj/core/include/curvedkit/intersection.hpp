#pragma once

#include <optional>
#include <vector>

#include "curvedkit/region.hpp"

namespace curvedkit {

/// How a boundary arc terminates.
enum class EndKind {
    Finite,  // a transversal vertex (two supporting cycles cross)
    Ideal,   // a point at infinity of H^2
    Open,    // runs off to infinity in R^2 (no ideal-point model)
};

struct ArcEnd {
    EndKind kind = EndKind::Finite;
    int vertex = -1;  // index into IntersectionRegion::finite_vertices
    Vec3 coords;      // point coordinates / ideal direction / R^2 direction
};

/// One maximal boundary piece on a single supporting cycle, traversed with
/// the intersection region on its left.
struct Arc {
    Cycle support;
    double t0 = 0, t1 = 0;  // parameter range on the support (t0 < t1)
    bool reversed = false;  // traversal runs t1 -> t0
    bool whole = false;     // the full cycle (start/end not meaningful if compact)
    ArcEnd start, end;
    int source = 0;  // 0: phi K, 1: psi L, 2: shared component of both

    double t_begin() const { return reversed ? t1 : t0; }
    double t_finish() const { return reversed ? t0 : t1; }
    Point midpoint() const { return support.point_at((t0 + t1) / 2); }
};

struct Chain {
    std::vector<Arc> arcs;
    bool closed = false;  // all vertices finite and the walk returns to the start
};

/// (phi K) cap (psi L) as a traced arc structure, with the transported
/// source regions recorded.
class IntersectionRegion {
  public:
    Geometry geometry;
    std::vector<Chain> chains;
    std::vector<Arc> whole_components;
    std::vector<Point> finite_vertices;  // transversal vertices, deduplicated

    // source (already transported by phi / psi)
    ConvexRegion region_a, region_b;
    Isometry phi, psi;

    IntersectionRegion(ConvexRegion a, ConvexRegion b, Isometry f, Isometry g)
        : geometry(a.geometry()), region_a(std::move(a)), region_b(std::move(b)),
          phi(std::move(f)), psi(std::move(g)) {}

    /// Closed-set membership through the source regions.
    bool member(const Point& p) const {
        return region_a.contains(p) != Containment::Exterior &&
               region_b.contains(p) != Containment::Exterior;
    }

    bool bounded() const;

    /// All ideal chain endpoints, deduplicated (H^2).
    std::vector<IdealPoint> ideal_vertices() const;

    /// Supporting cycles of the boundary (arcs and whole components).
    std::vector<Cycle> supports() const;

    /// Representative finite centroid of the boundary.
    Point centroid() const;
};

enum class IntersectStatus {
    NonDegenerate,  // interior points exist, region populated
    NoInterior,     // a point or segment (the paper's degenerate case)
    Empty,
};

struct IntersectResult {
    IntersectStatus status;
    std::optional<IntersectionRegion> region;

    bool has_interior() const { return status == IntersectStatus::NonDegenerate; }
};

/// Boundary trace of (phi K) cap (psi L). Throws
/// UnstableConfigurationError when the configuration sits within tolerance
/// of a tangency that makes the chain structure ambiguous.
IntersectResult intersect(const ConvexRegion& K, const Isometry& phi, const ConvexRegion& L,
                          const Isometry& psi);

/// All transversal chain vertices, finite first, then ideal (as Points is
/// impossible; returned separately inside the pair).
struct VertexList {
    std::vector<Point> finite;
    std::vector<IdealPoint> ideal;
    std::size_t size() const { return finite.size() + ideal.size(); }
};
VertexList vertices(const IntersectionRegion& I);

/// Supremum of pairwise distances over the vertices plus `samples` boundary
/// points per arc; +inf when the region is unbounded. Monotone
/// non-decreasing in `samples` (dyadic refinement).
double diameter(const IntersectionRegion& I, int samples);

/// Membership decided from the arc structure alone (nearest boundary arc,
/// then the side of its support). Independent of ConvexRegion::contains.
bool member_from_arcs(const IntersectionRegion& I, const Point& p);

}  // namespace curvedkit
