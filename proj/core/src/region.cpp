#include "curvedkit/region.hpp"

#include <algorithm>
#include <cmath>

namespace curvedkit {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool IdealGraph::is_paths_or_single_cycle() const {
    std::vector<int> degree(vertices.size(), 0);
    bool has_loop = false;
    for (const auto& e : edges) {
        if (e.v1 == e.v2) {
            has_loop = true;
            continue;
        }
        ++degree[e.v1];
        ++degree[e.v2];
    }
    if (has_loop) return edges.size() == 1;  // a paracycle stands alone
    for (int d : degree)
        if (d > 2) return false;
    const bool all_two = !vertices.empty() &&
                         std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; });
    if (!all_two) return true;  // paths (some endpoint has degree <= 1)
    // every vertex has degree 2: must be one connected cycle
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[e.v1].push_back(e.v2);
        adj[e.v2].push_back(e.v1);
    }
    std::vector<bool> seen(vertices.size(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t count = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return count == vertices.size();
}

ConvexRegion::ConvexRegion(Geometry g, std::vector<Cycle> components, const Point& witness)
    : geom_(g), components_(std::move(components)), witness_(witness) {}

ConvexRegion ConvexRegion::from_components(std::vector<Cycle> components, const Point& witness,
                                           std::size_t max_components) {
    if (components.empty()) throw InvalidSpecError("region: needs at least one component");
    if (components.size() > max_components)
        throw InvalidSpecError("region: component count exceeds the cap");
    const Geometry g = components.front().geometry();
    for (const auto& c : components)
        require_same_geometry(g, c.geometry(), "region");
    require_same_geometry(g, witness.geometry(), "region witness");

    for (std::size_t i = 0; i < components.size(); ++i)
        for (std::size_t j = i + 1; j < components.size(); ++j) {
            CyclePoints cp;
            try {
                cp = cycle_points(components[i], components[j]);
            } catch (const CoincidentCycleError&) {
                throw InvalidSpecError("region: two components coincide");
            }
            if (!cp.points.empty())
                throw InvalidSpecError("region: boundary components cross or touch");
        }

    for (const auto& c : components)
        if (c.convex_margin(witness) <= tol::side)
            throw DegenerateSpecError("region: witness point is not strictly interior");
    return ConvexRegion(g, std::move(components), witness);
}

double ConvexRegion::margin(const Point& p) const {
    double m = kInf;
    for (const auto& c : components_) m = std::min(m, c.convex_margin(p));
    return m;
}

Containment ConvexRegion::contains(const Point& p) const {
    require_same_geometry(geom_, p.geometry(), "contains");
    const double m = margin(p);
    if (m < -tol::side) return Containment::Exterior;
    if (m <= tol::side) return Containment::Boundary;
    return Containment::Interior;
}

IdealGraph ConvexRegion::ideal_graph() const {
    if (geom_ != Geometry::Hyperbolic)
        throw UnsupportedGeometryError("ideal_graph: only defined on H2");
    IdealGraph graph;
    const auto vertex_id = [&](const IdealPoint& w) {
        for (std::size_t i = 0; i < graph.vertices.size(); ++i)
            if (ideal_distance(graph.vertices[i], w) < tol::ideal_dedup)
                return static_cast<int>(i);
        graph.vertices.push_back(w);
        return static_cast<int>(graph.vertices.size() - 1);
    };
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        switch (c.kind().type) {
            case CycleType::Circle:
                throw UnsupportedGeometryError("ideal_graph: circle components have no ideal points");
            case CycleType::Paracycle: {
                const int v = vertex_id(c.ideal_points().front());
                graph.edges.push_back({v, v, static_cast<int>(i)});
                break;
            }
            default: {
                const int v1 = vertex_id(c.ideal_end(+1));
                const int v2 = vertex_id(c.ideal_end(-1));
                graph.edges.push_back({v1, v2, static_cast<int>(i)});
                break;
            }
        }
    }
    return graph;
}

double ConvexRegion::min_component_distance() const {
    if (geom_ != Geometry::Hyperbolic || components_.size() < 2) return kInf;
    double best = kInf;
    for (std::size_t i = 0; i < components_.size(); ++i)
        for (std::size_t j = i + 1; j < components_.size(); ++j) {
            const auto &ci = components_[i], &cj = components_[j];
            const auto ti = ci.kind().type, tj = cj.kind().type;
            const bool oki = ti == CycleType::Hypercycle || ti == CycleType::Geodesic;
            const bool okj = tj == CycleType::Hypercycle || tj == CycleType::Geodesic;
            if (!oki || !okj)
                throw KindError("min_component_distance: needs hypercycle/geodesic components");
            const double k = bilinear(geom_, ci.normal(), cj.normal());
            if (std::abs(k) <= 1.0) {
                best = 0.0;  // crossing or parallel base lines
                continue;
            }
            const double base_dist = std::acosh(std::abs(k));
            // signed offsets, counted positive toward the other base line
            const double li = std::asinh(ci.offset());
            const double lj = std::asinh(cj.offset());
            const Point pj = cj.base_line().point_at(0);
            const Point pi = ci.base_line().point_at(0);
            const double side_ij = bilinear(geom_, pj.coords(), ci.normal()) >= 0 ? 1.0 : -1.0;
            const double side_ji = bilinear(geom_, pi.coords(), cj.normal()) >= 0 ? 1.0 : -1.0;
            const double d = base_dist - side_ij * li - side_ji * lj;
            best = std::min(best, std::max(0.0, d));
        }
    return best;
}

ConvexRegion ConvexRegion::transported(const Isometry& g) const {
    std::vector<Cycle> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_) comps.push_back(c.transported(g));
    return ConvexRegion(geom_, std::move(comps), g(witness_));
}

// ---------------------------------------------------------------------------
// Catalog constructors.
// ---------------------------------------------------------------------------

ConvexRegion ConvexRegion::ball(const Point& center, double r) {
    return from_components({Cycle::circle(center, r)}, center);
}

ConvexRegion ConvexRegion::paraball(const IdealPoint& at, const Point& through) {
    const Cycle c = Cycle::paracycle(at, through);
    const Point w = geodesic_walk(through, tangent_toward(through, at), 0.5);
    return from_components({c}, w);
}

ConvexRegion ConvexRegion::hyperdomain(const Cycle& base, double l) {
    const Cycle c = Cycle::hypercycle(base, l);
    const Point p0 = base.point_at(0);
    const Point w = geodesic_walk(p0, base.normal(), l - 1.0);
    return from_components({c}, w);
}

ConvexRegion ConvexRegion::half_plane(const Cycle& geodesic, ConvexSide side) {
    if (!geodesic.is_geodesic()) throw KindError("half_plane: boundary must be a geodesic");
    const Point p0 = geodesic.point_at(0);
    Vec3 inward = geodesic.normal();
    if (geodesic.geometry() == Geometry::Euclidean) inward.z = 0;
    const double dir = side == ConvexSide::NonNegative ? 1.0 : -1.0;
    const Point w = geodesic_walk(p0, inward, dir);
    return from_components({geodesic.with_convex_side(side)}, w);
}

ConvexRegion ConvexRegion::strip(const Cycle& line, double width) {
    if (line.geometry() != Geometry::Euclidean || !line.is_geodesic())
        throw UnsupportedGeometryError("strip: needs a Euclidean line");
    if (width <= 0) throw DomainError("strip: width must be positive");
    const Vec3& n = line.normal();
    const double h = line.offset();
    return from_components(
        {Cycle::euclidean_line(n.x, n.y, h + width / 2).with_convex_side(ConvexSide::NonPositive),
         Cycle::euclidean_line(n.x, n.y, h - width / 2).with_convex_side(ConvexSide::NonNegative)},
        Point(Geometry::Euclidean, {h * n.x, h * n.y, 1}));
}

ConvexRegion ConvexRegion::parallel_domain(const Cycle& base, double l) {
    if (l <= 0) throw DomainError("parallel_domain: distance must be positive");
    return hyperband(base, l, l);
}

ConvexRegion ConvexRegion::hyperband(const Cycle& base, double l_pos, double l_neg) {
    if (base.geometry() != Geometry::Hyperbolic || !base.is_geodesic())
        throw UnsupportedGeometryError("hyperband: needs an H2 geodesic base");
    if (l_pos <= 0 || l_neg < 0) throw DomainError("hyperband: bad distances");
    std::vector<Cycle> comps{Cycle::hypercycle(base, l_pos)};
    comps.push_back(Cycle::hypercycle(base, -l_neg).with_convex_side(ConvexSide::NonNegative));
    const Point w = geodesic_walk(base.point_at(0), base.normal(), (l_pos - l_neg) / 2);
    return from_components(std::move(comps), w);
}

ConvexRegion ConvexRegion::chord_assembly(const std::vector<Chord>& chords) {
    if (chords.empty()) throw InvalidSpecError("chord_assembly: no chords");
    struct Klein {
        double ax, ay, bx, by;  // endpoints on the unit circle
    };
    std::vector<Klein> kl;
    for (const auto& ch : chords) {
        if (ch.l < 0) throw InvalidSpecError("chord_assembly: negative distance");
        kl.push_back({std::cos(ch.theta1), std::sin(ch.theta1), std::cos(ch.theta2),
                      std::sin(ch.theta2)});
        if (std::hypot(kl.back().ax - kl.back().bx, kl.back().ay - kl.back().by) < 1e-9)
            throw InvalidSpecError("chord_assembly: chord endpoints coincide");
    }
    // left-of-chord test in the Klein disk (Euclidean)
    const auto left_of = [](const Klein& c, double x, double y) {
        return (c.bx - c.ax) * (y - c.ay) - (c.by - c.ay) * (x - c.ax);
    };
    // every chord must lie in the closed left half-plane of every other
    for (std::size_t i = 0; i < kl.size(); ++i)
        for (std::size_t j = 0; j < kl.size(); ++j) {
            if (i == j) continue;
            if (left_of(kl[j], kl[i].ax, kl[i].ay) < -1e-9 ||
                left_of(kl[j], kl[i].bx, kl[i].by) < -1e-9)
                throw InvalidSpecError("chord_assembly: chords cross or sides are inconsistent");
        }

    std::vector<Cycle> comps;
    for (std::size_t i = 0; i < kl.size(); ++i) {
        Cycle geod = Cycle::geodesic_between_ideals(IdealPoint::from_angle(chords[i].theta1),
                                                    IdealPoint::from_angle(chords[i].theta2));
        // orient the normal toward the right (non-region) side
        const double mx = (kl[i].ax + kl[i].bx) / 2, my = (kl[i].ay + kl[i].by) / 2;
        const double dx = kl[i].bx - kl[i].ax, dy = kl[i].by - kl[i].ay;
        const double len = std::hypot(dx, dy);
        const double lx = mx - dy / len * 0.05, ly = my + dx / len * 0.05;  // nudged left
        const Point probe(Geometry::Hyperbolic,
                          Vec3{lx, ly, 1} / std::sqrt(std::max(1e-12, 1 - lx * lx - ly * ly)));
        Cycle oriented = geod.side(probe) > 0
                             ? Cycle::from_section(Geometry::Hyperbolic, -geod.normal(), 0,
                                                   ConvexSide::NonPositive)
                             : geod;
        comps.push_back(Cycle::hypercycle(oriented, chords[i].l));
    }

    // witness: the first chord's midpoint nudged into the region
    const double dx = kl[0].bx - kl[0].ax, dy = kl[0].by - kl[0].ay;
    const double len = std::hypot(dx, dy);
    const double mx = (kl[0].ax + kl[0].bx) / 2, my = (kl[0].ay + kl[0].by) / 2;
    for (double eps : {0.2, 0.08, 0.03, 0.01, 0.003, 0.001}) {
        const double wx = mx - dy / len * eps, wy = my + dx / len * eps;
        const double rr = wx * wx + wy * wy;
        if (rr > 0.98) continue;
        const Point w(Geometry::Hyperbolic, Vec3{wx, wy, 1} / std::sqrt(1 - rr));
        bool ok = true;
        for (const auto& c : comps)
            if (c.convex_margin(w) <= tol::side) ok = false;
        if (ok) return from_components(std::move(comps), w);
    }
    throw DegenerateSpecError("chord_assembly: could not find an interior point");
}

}  // namespace curvedkit
