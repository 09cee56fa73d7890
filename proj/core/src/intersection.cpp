#include "curvedkit/intersection.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace curvedkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct TaggedCycle {
    Cycle cycle;
    int source;  // 0: region A, 1: region B, 2: shared
};

double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

// Ambient direction transverse to the surface at m, giving a consistent
// orientation in each geometry.
Vec3 surface_transverse(Geometry g, const Point& m) {
    if (g == Geometry::Euclidean) return {0, 0, 1};
    return m.coords();
}

// Inward normal direction (toward the convex side) of a cycle at m: the
// tangent-plane gradient of the convex margin. The Riemannian gradient of
// x -> B(x, n) is the tangent projection of n itself.
Vec3 inward_direction(const Cycle& c, const Point& m) {
    const int s = static_cast<int>(c.convex_side());
    const Geometry g = c.geometry();
    if (g == Geometry::Euclidean) {
        if (std::abs(c.normal().z) < 0.5) return {s * c.normal().x, s * c.normal().y, 0};
        Vec3 radial = m.coords() - Vec3{c.normal().x, c.normal().y, 1};
        radial.z = 0;
        return radial * static_cast<double>(s) / std::max(1e-300, norm(radial));
    }
    return project_to_tangent(m, c.normal()) * static_cast<double>(s);
}

// Segment of one cycle between consecutive split parameters.
struct Segment {
    double t0, t1;
    int v_start = -1, v_end = -1;  // vertex registry ids (-1: unbounded end)
    bool kept = false;
};

struct SplitCycle {
    int tagged_index;
    std::vector<double> ts;     // sorted split parameters
    std::vector<int> vids;      // vertex id per split parameter
    std::vector<Segment> segs;  // built from ts
    bool whole_kept = false;
};

}  // namespace

// ---------------------------------------------------------------------------
// IntersectionRegion queries.
// ---------------------------------------------------------------------------

bool IntersectionRegion::bounded() const {
    for (const auto& w : whole_components)
        if (!w.support.compact()) return false;
    for (const auto& ch : chains) {
        if (!ch.closed) return false;
        for (const auto& a : ch.arcs)
            if (a.whole && !a.support.compact()) return false;
    }
    return true;
}

std::vector<IdealPoint> IntersectionRegion::ideal_vertices() const {
    std::vector<IdealPoint> out;
    const auto add = [&](const ArcEnd& e) {
        if (e.kind != EndKind::Ideal) return;
        IdealPoint w(Geometry::Hyperbolic, e.coords);
        for (const auto& v : out)
            if (ideal_distance(v, w) < tol::ideal_dedup) return;
        out.push_back(w);
    };
    for (const auto& ch : chains)
        for (const auto& a : ch.arcs) {
            add(a.start);
            add(a.end);
        }
    for (const auto& w : whole_components)
        if (!w.support.compact() && w.support.geometry() == Geometry::Hyperbolic) {
            add(w.start);
            add(w.end);
        }
    return out;
}

std::vector<Cycle> IntersectionRegion::supports() const {
    std::vector<Cycle> out;
    const auto add = [&](const Cycle& c) {
        for (const auto& e : out)
            if (e.same_section(c)) return;
        out.push_back(c);
    };
    for (const auto& ch : chains)
        for (const auto& a : ch.arcs) add(a.support);
    for (const auto& w : whole_components) add(w.support);
    return out;
}

Point IntersectionRegion::centroid() const {
    Vec3 acc{0, 0, 0};
    int n = 0;
    for (const auto& p : finite_vertices) {
        acc += p.coords();
        ++n;
    }
    if (n == 0) {
        for (const auto& ch : chains)
            for (const auto& a : ch.arcs) {
                acc += a.midpoint().coords();
                ++n;
            }
        for (const auto& w : whole_components) {
            acc += w.support.point_at(0).coords();
            acc += w.support.point_at(w.support.compact() ? M_PI : 1.0).coords();
            n += 2;
        }
    }
    if (n == 0) return region_a.witness();
    if (geometry == Geometry::Euclidean) return Point(geometry, {acc.x / n, acc.y / n, 1});
    return Point(geometry, acc);  // renormalized onto the surface
}

// ---------------------------------------------------------------------------
// intersect().
// ---------------------------------------------------------------------------

namespace {

// margin of p against every tagged component except `self` and anything
// sharing its section
double margin_against_others(const std::vector<TaggedCycle>& all, int self, const Point& p) {
    double m = kInf;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
        if (i == self) continue;
        if (all[i].cycle.same_section(all[self].cycle)) continue;
        m = std::min(m, all[i].cycle.convex_margin(p));
    }
    return m;
}

ArcEnd unbounded_end(const Cycle& c, int dir) {
    ArcEnd e;
    if (c.geometry() == Geometry::Hyperbolic) {
        e.kind = EndKind::Ideal;
        e.coords = c.ideal_end(dir).direction();
    } else {
        e.kind = EndKind::Open;
        e.coords = dir > 0 ? c.tangent_at(0) : -c.tangent_at(0);
    }
    return e;
}

}  // namespace

IntersectResult intersect(const ConvexRegion& K, const Isometry& phi, const ConvexRegion& L,
                          const Isometry& psi) {
    require_same_geometry(K.geometry(), L.geometry(), "intersect");
    require_same_geometry(K.geometry(), phi.geometry(), "intersect");
    const Geometry geom = K.geometry();
    const ConvexRegion A = K.transported(phi);
    const ConvexRegion B = L.transported(psi);

    IntersectionRegion result(A, B, phi, psi);

    // Assemble the component list; components of B coinciding with a
    // component of A are folded into one shared entry (same convex side) or
    // force a degenerate intersection (opposite sides).
    std::vector<TaggedCycle> comps;
    std::vector<const Cycle*> degenerate_sections;
    std::vector<bool> b_skip(B.components().size(), false);
    for (const auto& ca : A.components()) comps.push_back({ca, 0});
    for (std::size_t j = 0; j < B.components().size(); ++j) {
        const Cycle& cb = B.components()[j];
        bool shared = false;
        for (auto& tc : comps) {
            if (tc.source != 0 && tc.source != 2) continue;
            if (!tc.cycle.same_section(cb)) continue;
            // same section: compare convex sides via an off-cycle probe
            const auto kind = tc.cycle.kind();
            const double step = kind.type == CycleType::Circle
                                    ? std::min(0.1, kind.parameter / 2)
                                    : 0.1;
            const Point on = tc.cycle.point_at(0.234);
            const Point probe = geodesic_walk(on, inward_direction(tc.cycle, on), step);
            const bool same_side = cb.convex_margin(probe) > 0;
            if (same_side) {
                tc.source = 2;
                shared = true;
            } else {
                degenerate_sections.push_back(&tc.cycle);
                shared = true;
            }
            break;
        }
        if (shared)
            b_skip[j] = true;
        else
            comps.push_back({cb, 1});
    }

    if (!degenerate_sections.empty()) {
        // the intersection is contained in a single cycle: a segment, a
        // point, or empty
        const Cycle& c = *degenerate_sections.front();
        const double span = c.compact() ? 2 * M_PI : 40.0;
        for (int i = 0; i <= 400; ++i) {
            const Point p = c.point_at(-span / 2 + span * i / 400.0);
            if (A.contains(p) != Containment::Exterior && B.contains(p) != Containment::Exterior)
                return {IntersectStatus::NoInterior, std::nullopt};
        }
        return {IntersectStatus::Empty, std::nullopt};
    }

    // All pairwise crossings between A components and B components.
    struct Crossing {
        Point p;
        int ci, cj;
    };
    std::vector<Point> registry;
    std::vector<Crossing> crossings;
    bool touch_seen = false;
    Point touch_point(geom, {0, 0, 1});
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        if (comps[i].source != 0 && comps[i].source != 2) continue;
        for (int j = 0; j < static_cast<int>(comps.size()); ++j) {
            if (comps[j].source != 1) continue;
            CyclePoints cp = cycle_points(comps[i].cycle, comps[j].cycle);
            if (cp.tangential) {
                // smooth touching collapses to no vertex; remember it for
                // the point-contact case
                if (!cp.points.empty() &&
                    margin_against_others(comps, i, cp.points.front()) >= -tol::side &&
                    margin_against_others(comps, j, cp.points.front()) >= -tol::side) {
                    touch_seen = true;
                    touch_point = cp.points.front();
                }
                continue;
            }
            for (const auto& p : cp.points) crossings.push_back({p, i, j});
        }
    }

    // vertex registry with 1e-9 dedup
    std::vector<int> crossing_vid(crossings.size());
    for (std::size_t k = 0; k < crossings.size(); ++k) {
        int id = -1;
        for (std::size_t r = 0; r < registry.size(); ++r)
            if (distance(registry[r], crossings[k].p) < tol::metric) {
                id = static_cast<int>(r);
                break;
            }
        if (id < 0) {
            registry.push_back(crossings[k].p);
            id = static_cast<int>(registry.size()) - 1;
        }
        crossing_vid[k] = id;
    }

    // split every involved cycle at its crossing parameters
    std::vector<SplitCycle> splits;
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
        SplitCycle sc;
        sc.tagged_index = i;
        for (std::size_t k = 0; k < crossings.size(); ++k) {
            if (crossings[k].ci != i && crossings[k].cj != i) continue;
            sc.ts.push_back(comps[i].cycle.param_of(crossings[k].p));
            sc.vids.push_back(crossing_vid[k]);
        }
        // sort jointly
        std::vector<std::size_t> order(sc.ts.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return sc.ts[a] < sc.ts[b]; });
        std::vector<double> ts;
        std::vector<int> vids;
        for (std::size_t k : order) {
            if (!ts.empty() && sc.ts[k] - ts.back() < 1e-12 && vids.back() == sc.vids[k]) continue;
            ts.push_back(sc.ts[k]);
            vids.push_back(sc.vids[k]);
        }
        sc.ts = std::move(ts);
        sc.vids = std::move(vids);
        splits.push_back(std::move(sc));
    }

    // keep-test: a boundary piece survives iff a probe point on it is not
    // strictly outside any other constraint
    const auto keep_probe = [&](int ci, const Point& p) {
        return margin_against_others(comps, ci, p) >= -tol::side;
    };

    std::vector<Arc> kept_arcs;
    std::vector<int> vertex_degree(registry.size(), 0);

    for (auto& sc : splits) {
        const Cycle& c = comps[sc.tagged_index].cycle;
        const bool compact = c.compact();
        const int n = static_cast<int>(sc.ts.size());
        if (n == 0) {
            // whole-cycle candidate
            bool ok = true;
            const double lo = compact ? 0 : -3.0, span = compact ? 2 * M_PI : 6.0;
            for (int s = 0; s < 5 && ok; ++s)
                ok = keep_probe(sc.tagged_index, c.point_at(lo + span * (s + 0.13) / 5.0));
            if (ok) {
                Arc w{c};
                w.whole = true;
                w.source = comps[sc.tagged_index].source;
                if (compact) {
                    w.t0 = 0;
                    w.t1 = 2 * M_PI;
                } else {
                    w.t0 = -kInf;
                    w.t1 = kInf;
                    w.start = unbounded_end(c, -1);
                    w.end = unbounded_end(c, +1);
                }
                result.whole_components.push_back(w);
            }
            continue;
        }

        // segments between consecutive split points
        struct Piece {
            double t0, t1;
            int v0, v1;  // -1 for an unbounded end
        };
        std::vector<Piece> pieces;
        if (compact) {
            for (int k = 0; k < n; ++k) {
                const int k2 = (k + 1) % n;
                const double t0 = sc.ts[k];
                const double t1 = k2 == 0 ? sc.ts[k2] + 2 * M_PI : sc.ts[k2];
                pieces.push_back({t0, t1, sc.vids[k], sc.vids[k2]});
            }
        } else {
            pieces.push_back({-kInf, sc.ts[0], -1, sc.vids[0]});
            for (int k = 0; k + 1 < n; ++k)
                pieces.push_back({sc.ts[k], sc.ts[k + 1], sc.vids[k], sc.vids[k + 1]});
            pieces.push_back({sc.ts[n - 1], kInf, sc.vids[n - 1], -1});
        }

        std::vector<bool> keep(pieces.size());
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            double tp;
            if (std::isinf(pieces[k].t0))
                tp = pieces[k].t1 - 1.0;
            else if (std::isinf(pieces[k].t1))
                tp = pieces[k].t0 + 1.0;
            else
                tp = (pieces[k].t0 + pieces[k].t1) / 2;
            keep[k] = keep_probe(sc.tagged_index, c.point_at(tp));
        }

        // merge across vertices where both neighbours survive (tangential
        // grazing without a genuine crossing)
        for (std::size_t k = 0; k < pieces.size(); ++k) {
            const std::size_t k2 = (k + 1) % pieces.size();
            if (!compact && k2 == 0) break;
            if (keep[k] && keep[k2] && pieces[k].v1 >= 0 && pieces[k].v1 == pieces[k2].v0 &&
                pieces.size() > 1) {
                pieces[k].t1 = pieces[k2].t1 + (compact && k2 < k ? 2 * M_PI : 0);
                pieces[k].v1 = pieces[k2].v1;
                pieces.erase(pieces.begin() + k2);
                keep.erase(keep.begin() + k2);
                k = static_cast<std::size_t>(-1);  // restart scan
            }
        }

        for (std::size_t k = 0; k < pieces.size(); ++k) {
            if (!keep[k]) continue;
            Arc a{c};
            a.source = comps[sc.tagged_index].source;
            a.t0 = pieces[k].t0;
            a.t1 = pieces[k].t1;
            if (pieces[k].v0 >= 0) {
                a.start = {EndKind::Finite, pieces[k].v0, registry[pieces[k].v0].coords()};
                ++vertex_degree[pieces[k].v0];
            } else {
                a.start = unbounded_end(c, -1);
                a.t0 = pieces[k].t1 - 40.0;  // truncated representation of -inf
            }
            if (pieces[k].v1 >= 0) {
                a.end = {EndKind::Finite, pieces[k].v1, registry[pieces[k].v1].coords()};
                ++vertex_degree[pieces[k].v1];
            } else {
                a.end = unbounded_end(c, +1);
                a.t1 = pieces[k].t0 + 40.0;
            }
            kept_arcs.push_back(std::move(a));
        }
    }

    // no boundary at all: containment, point contact, or empty
    if (kept_arcs.empty() && result.whole_components.empty()) {
        if (touch_seen) return {IntersectStatus::NoInterior, std::nullopt};
        bool any_vertex_valid = false;
        for (std::size_t k = 0; k < crossings.size(); ++k)
            if (keep_probe(crossings[k].ci, crossings[k].p) &&
                keep_probe(crossings[k].cj, crossings[k].p))
                any_vertex_valid = true;
        return {any_vertex_valid ? IntersectStatus::NoInterior : IntersectStatus::Empty,
                std::nullopt};
    }

    // all arcs degenerate: a segment
    if (!kept_arcs.empty() && result.whole_components.empty()) {
        bool all_degenerate = true;
        for (const auto& a : kept_arcs)
            if (a.t1 - a.t0 > 1e-10) all_degenerate = false;
        if (all_degenerate) return {IntersectStatus::NoInterior, std::nullopt};
    }

    // orient every arc with the region on its left (for arcs running to
    // infinity, probe near the finite end where coordinates stay moderate)
    for (auto& a : kept_arcs) {
        double tm = (a.t0 + a.t1) / 2;
        if (a.start.kind != EndKind::Finite) tm = a.t1 - 1.0;
        if (a.end.kind != EndKind::Finite) tm = a.t0 + 1.0;
        const Point m = a.support.point_at(tm);
        const Vec3 tau = a.support.tangent_at(tm);
        const Vec3 nu = inward_direction(a.support, m);
        if (det3(tau, nu, surface_transverse(geom, m)) < 0) {
            a.reversed = true;
            std::swap(a.start, a.end);
        }
    }

    // vertex degrees must pair up
    for (std::size_t v = 0; v < registry.size(); ++v)
        if (vertex_degree[v] != 0 && vertex_degree[v] != 2)
            throw UnstableConfigurationError(
                "intersect: ambiguous chain structure near a tangency; perturb the configuration");

    // stitch chains
    std::vector<bool> used(kept_arcs.size(), false);
    const auto next_from = [&](int vid) -> int {
        for (std::size_t k = 0; k < kept_arcs.size(); ++k) {
            if (used[k]) continue;
            const ArcEnd& s = kept_arcs[k].start;
            if (s.kind == EndKind::Finite && s.vertex == vid) return static_cast<int>(k);
        }
        return -1;
    };
    // open chains first (starting at an ideal/open end)
    for (std::size_t k0 = 0; k0 < kept_arcs.size(); ++k0) {
        if (used[k0] || kept_arcs[k0].start.kind == EndKind::Finite) continue;
        Chain ch;
        ch.closed = false;
        int k = static_cast<int>(k0);
        while (k >= 0 && !used[k]) {
            used[k] = true;
            ch.arcs.push_back(kept_arcs[k]);
            if (kept_arcs[k].end.kind != EndKind::Finite) break;
            k = next_from(kept_arcs[k].end.vertex);
        }
        if (!ch.arcs.empty() && ch.arcs.back().end.kind == EndKind::Finite)
            throw UnstableConfigurationError("intersect: open chain failed to terminate");
        result.chains.push_back(std::move(ch));
    }
    // closed chains
    for (std::size_t k0 = 0; k0 < kept_arcs.size(); ++k0) {
        if (used[k0]) continue;
        Chain ch;
        ch.closed = true;
        int k = static_cast<int>(k0);
        const int start_vid = kept_arcs[k0].start.vertex;
        while (k >= 0 && !used[k]) {
            used[k] = true;
            ch.arcs.push_back(kept_arcs[k]);
            if (kept_arcs[k].end.kind != EndKind::Finite)
                throw UnstableConfigurationError("intersect: closed chain reached infinity");
            if (kept_arcs[k].end.vertex == start_vid) break;
            k = next_from(kept_arcs[k].end.vertex);
        }
        if (ch.arcs.empty() || ch.arcs.back().end.vertex != start_vid)
            throw UnstableConfigurationError("intersect: chain did not close");
        result.chains.push_back(std::move(ch));
    }

    // referenced vertices, in registry order
    std::vector<int> remap(registry.size(), -1);
    for (auto& ch : result.chains)
        for (auto& a : ch.arcs)
            for (ArcEnd* e : {&a.start, &a.end}) {
                if (e->kind != EndKind::Finite) continue;
                if (remap[e->vertex] < 0) {
                    remap[e->vertex] = static_cast<int>(result.finite_vertices.size());
                    result.finite_vertices.push_back(registry[e->vertex]);
                }
                e->vertex = remap[e->vertex];
            }

    return {IntersectStatus::NonDegenerate, std::move(result)};
}

VertexList vertices(const IntersectionRegion& I) {
    VertexList out;
    out.finite = I.finite_vertices;
    out.ideal = I.ideal_vertices();
    return out;
}

double diameter(const IntersectionRegion& I, int samples) {
    if (samples < 2) throw DomainError("diameter: samples must be >= 2");
    if (!I.bounded()) return kInf;
    int n = 2;
    while (n < samples) n *= 2;
    std::vector<Point> pts = I.finite_vertices;
    const auto sample_arc = [&](const Arc& a) {
        for (int k = 0; k <= n; ++k)
            pts.push_back(a.support.point_at(a.t0 + (a.t1 - a.t0) * k / n));
    };
    for (const auto& ch : I.chains)
        for (const auto& a : ch.arcs) sample_arc(a);
    for (const auto& w : I.whole_components) sample_arc(w);
    double best = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            best = std::max(best, distance(pts[i], pts[j]));
    return best;
}

bool member_from_arcs(const IntersectionRegion& I, const Point& p) {
    // nearest boundary point, coarse scan plus local refinement; then p is
    // inside iff it sits on the convex side of that arc's support
    double best = kInf;
    const Cycle* best_support = nullptr;
    const auto consider = [&](const Arc& a) {
        const int steps = 96;
        double bt = a.t0;
        double bd = kInf;
        for (int k = 0; k <= steps; ++k) {
            const double t = a.t0 + (a.t1 - a.t0) * k / steps;
            const double d = distance(p, a.support.point_at(t));
            if (d < bd) {
                bd = d;
                bt = t;
            }
        }
        double lo = std::max(a.t0, bt - (a.t1 - a.t0) / steps);
        double hi = std::min(a.t1, bt + (a.t1 - a.t0) / steps);
        for (int it = 0; it < 40; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (distance(p, a.support.point_at(m1)) < distance(p, a.support.point_at(m2)))
                hi = m2;
            else
                lo = m1;
        }
        const double d = distance(p, a.support.point_at((lo + hi) / 2));
        if (d < best) {
            best = d;
            best_support = &a.support;
        }
    };
    for (const auto& ch : I.chains)
        for (const auto& a : ch.arcs) consider(a);
    for (const auto& w : I.whole_components) consider(w);
    if (!best_support) return false;
    return best_support->convex_margin(p) >= -1e-9;
}

}  // namespace curvedkit
