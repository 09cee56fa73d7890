#include "curvedkit/symmetry.hpp"

#include <algorithm>
#include <cmath>

namespace curvedkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string kind_name(SymmetryKind k) {
    switch (k) {
        case SymmetryKind::Central: return "central";
        case SymmetryKind::Axial: return "axial";
        case SymmetryKind::Rotation: return "rotation";
    }
    return "?";
}

struct CandidateBuilder {
    Geometry geom;
    std::vector<SymmetryCandidate> out;

    void add(const Isometry& iso, bool family = false) {
        if (iso.is_identity()) return;
        for (auto& c : out)
            if (matrix_distance(c.iso.matrix(), iso.matrix()) < tol::matrix_dedup) {
                c.family = c.family || family;
                return;
            }
        out.push_back({iso, family});
    }

    // guarded constructions: skip degenerate inputs rather than fail
    void add_central(const Point& p, bool family = false) {
        try {
            add(point_reflection(p), family);
        } catch (const Error&) {}
    }
    void add_axis(const Cycle& axis, bool family = false) {
        try {
            add(reflection(axis), family);
        } catch (const Error&) {}
    }
    void pair_candidates(const Point& u, const Point& v) {
        try {
            add_central(midpoint(u, v));
        } catch (const Error&) {}
        try {
            add_axis(Cycle::geodesic_through(u, v));
        } catch (const Error&) {}
        try {
            add_axis(Cycle::perpendicular_bisector(u, v));
        } catch (const Error&) {}
    }
};

// Geodesic through p orthogonal to g (works when p lies on g as well).
Cycle perpendicular_through(const Point& p, const Cycle& g) {
    const Geometry geom = p.geometry();
    if (geom == Geometry::Euclidean)
        return Cycle::geodesic_with_tangent(p, {g.normal().x, g.normal().y, 0});
    const Vec3 v = cross(metric_apply(geom, p.coords()), metric_apply(geom, g.normal()));
    const double q = bilinear(geom, v, v);
    if (q < 1e-18) throw DomainError("perpendicular_through: degenerate");
    return Cycle::from_section(geom, v / std::sqrt(q), 0, ConvexSide::NonPositive);
}

// Geodesic through the ideal point w orthogonal to g; fails when w is an
// ideal point of g itself.
Cycle perpendicular_from_ideal(const IdealPoint& w, const Cycle& g) {
    const Geometry geom = Geometry::Hyperbolic;
    const Vec3 v = cross(metric_apply(geom, w.direction()), metric_apply(geom, g.normal()));
    const double q = bilinear(geom, v, v);
    if (q < 1e-12) throw DomainError("perpendicular_from_ideal: no common perpendicular");
    return Cycle::from_section(geom, v / std::sqrt(q), 0, ConvexSide::NonPositive);
}

// Axis through the shared ideal vertex w swapping the lightlike rays a1, a2.
Cycle swap_axis_at_ideal(const IdealPoint& w, const Vec3& a1, const Vec3& a2) {
    const Geometry geom = Geometry::Hyperbolic;
    const double lam = bilinear(geom, a1, w.direction()) / bilinear(geom, a2, w.direction());
    const Vec3 n = a1 - lam * a2;
    const double q = bilinear(geom, n, n);
    if (q < 1e-14) throw DomainError("swap_axis_at_ideal: degenerate");
    return Cycle::from_section(geom, n / std::sqrt(q), 0, ConvexSide::NonPositive);
}

// Travel tangent of an arc at one of its ends, pointing along the traversal.
Vec3 travel_tangent(const Arc& a, bool at_finish) {
    const double t = at_finish ? a.t_finish() : a.t_begin();
    Vec3 u = a.support.tangent_at(t);
    if (a.reversed) u = -u;
    return u;
}

// Source-component feature set: circle/paracycle centers and base lines.
struct Features {
    std::vector<Point> centers;
    std::vector<IdealPoint> ideal_centers;
    std::vector<Cycle> lines;  // base lines / geodesics
};

Features collect_features(const IntersectionRegion& I) {
    Features f;
    const auto add_comp = [&](const Cycle& c) {
        switch (c.kind().type) {
            case CycleType::Circle:
                if (c.geometry() == Geometry::Euclidean)
                    f.centers.emplace_back(c.geometry(), Vec3{c.normal().x, c.normal().y, 1});
                else
                    f.centers.emplace_back(c.geometry(), c.normal());
                break;
            case CycleType::Paracycle:
                f.ideal_centers.emplace_back(Geometry::Hyperbolic, c.normal());
                break;
            case CycleType::Hypercycle:
                f.lines.push_back(c.base_line());
                break;
            case CycleType::Geodesic:
            case CycleType::Line:
                f.lines.push_back(c.geometry() == Geometry::Hyperbolic ? c.base_line()
                                                                       : c.with_convex_side(ConvexSide::NonPositive));
                break;
        }
    };
    for (const auto& c : I.region_a.components()) add_comp(c);
    for (const auto& c : I.region_b.components()) add_comp(c);
    return f;
}

// Canonical tangent direction at p for collapsed rotational families.
Vec3 canonical_direction(const Point& p) {
    for (const Vec3 axis : {Vec3{1, 0, 0}, Vec3{0, 1, 0}}) {
        try {
            return project_to_tangent(p, axis);
        } catch (const Error&) {}
    }
    return project_to_tangent(p, {0, 0, 1});
}

void feature_candidates(const IntersectionRegion& I, CandidateBuilder& b) {
    const Features f = collect_features(I);
    const Geometry geom = I.geometry;

    for (std::size_t i = 0; i < f.centers.size(); ++i)
        for (std::size_t j = i + 1; j < f.centers.size(); ++j) {
            if (distance(f.centers[i], f.centers[j]) < tol::ideal_dedup) {
                // concentric: full rotation family, collapsed
                b.add_central(f.centers[i], true);
                try {
                    b.add_axis(Cycle::geodesic_with_tangent(f.centers[i],
                                                            canonical_direction(f.centers[i])),
                               true);
                } catch (const Error&) {}
            } else {
                b.pair_candidates(f.centers[i], f.centers[j]);
            }
        }

    for (const auto& c : f.centers)
        for (const auto& w : f.ideal_centers) {
            try {
                b.add_axis(Cycle::geodesic_with_tangent(c, tangent_toward(c, w)));
            } catch (const Error&) {}
        }

    for (std::size_t i = 0; i < f.ideal_centers.size(); ++i)
        for (std::size_t j = i + 1; j < f.ideal_centers.size(); ++j) {
            if (ideal_distance(f.ideal_centers[i], f.ideal_centers[j]) < tol::ideal_dedup) {
                // pencil of axes through the common ideal point
                const Point apex = [&] {
                    for (const auto& c : I.region_a.components())
                        if (c.kind().type == CycleType::Paracycle) return c.point_at(0);
                    return I.region_a.witness();
                }();
                try {
                    b.add_axis(Cycle::geodesic_with_tangent(
                                   apex, tangent_toward(apex, f.ideal_centers[i])),
                               true);
                } catch (const Error&) {}
            } else {
                try {
                    b.add_axis(Cycle::geodesic_between_ideals(f.ideal_centers[i],
                                                              f.ideal_centers[j]));
                } catch (const Error&) {}
            }
        }

    for (const auto& c : f.centers)
        for (const auto& g : f.lines) {
            try {
                b.add_axis(perpendicular_through(c, g));
            } catch (const Error&) {}
        }

    for (const auto& w : f.ideal_centers)
        for (const auto& g : f.lines) {
            try {
                b.add_axis(perpendicular_from_ideal(w, g));
            } catch (const Error&) {}
        }

    for (std::size_t i = 0; i < f.lines.size(); ++i)
        for (std::size_t j = i + 1; j < f.lines.size(); ++j) {
            const Cycle &g1 = f.lines[i], &g2 = f.lines[j];
            if (g1.same_section(g2)) {
                // coincident base lines: the line itself plus the pencil of
                // perpendiculars (canonical: through the witness projection)
                b.add_axis(g1);
                try {
                    const Point wfoot = I.region_a.witness();
                    b.add_axis(perpendicular_through(wfoot, g1), true);
                    b.add_central(g1.point_at(g1.param_of(wfoot)), true);
                } catch (const Error&) {}
                continue;
            }
            if (geom == Geometry::Euclidean) {
                const Vec3 &n1 = g1.normal(), &n2 = g2.normal();
                const double c = n1.x * n2.x + n1.y * n2.y;
                if (std::abs(std::abs(c) - 1.0) < 1e-9) {
                    // parallel lines: midline, plus collapsed family
                    const double h2 = c > 0 ? g2.offset() : -g2.offset();
                    const Cycle mid =
                        Cycle::euclidean_line(n1.x, n1.y, (g1.offset() + h2) / 2);
                    b.add_axis(mid);
                    try {
                        const Point wp = I.region_a.witness();
                        const Point foot = mid.point_at(mid.param_of(wp));
                        b.add_central(foot, true);
                        b.add_axis(perpendicular_through(foot, mid), true);
                    } catch (const Error&) {}
                } else {
                    try {
                        const auto cp = cycle_points(g1, g2);
                        if (!cp.points.empty()) {
                            const Point& p = cp.points.front();
                            b.add_central(p);
                            const Vec3 t1 = g1.tangent_at(g1.param_of(p));
                            const Vec3 t2 = g2.tangent_at(g2.param_of(p));
                            for (const Vec3& bis : {t1 + t2, t1 - t2}) {
                                if (std::hypot(bis.x, bis.y) < 1e-9) continue;
                                b.add_axis(Cycle::geodesic_with_tangent(
                                    p, bis / std::hypot(bis.x, bis.y)));
                            }
                        }
                    } catch (const Error&) {}
                }
                continue;
            }
            // S^2 or H^2 geodesic pair
            const double k = bilinear(geom, g1.normal(), g2.normal());
            for (const Vec3& nb : {g1.normal() + g2.normal(), g1.normal() - g2.normal()}) {
                const double q = bilinear(geom, nb, nb);
                if (q < 1e-12) continue;
                try {
                    b.add_axis(Cycle::from_section(geom, nb / std::sqrt(q), 0,
                                                   ConvexSide::NonPositive));
                } catch (const Error&) {}
            }
            if (geom == Geometry::Hyperbolic && std::abs(k) > 1.0) {
                // ultraparallel: the common perpendicular and the midpoint
                try {
                    const Vec3 v = cross(metric_apply(geom, g1.normal()),
                                         metric_apply(geom, g2.normal()));
                    const double q = bilinear(geom, v, v);
                    if (q > 1e-14) {
                        const Cycle perp = Cycle::from_section(geom, v / std::sqrt(q), 0,
                                                               ConvexSide::NonPositive);
                        b.add_axis(perp);
                        const auto f1 = cycle_points(g1, perp), f2 = cycle_points(g2, perp);
                        if (!f1.points.empty() && !f2.points.empty())
                            b.add_central(midpoint(f1.points.front(), f2.points.front()));
                    }
                } catch (const Error&) {}
            } else {
                try {
                    const auto cp = cycle_points(g1, g2);
                    for (const auto& p : cp.points) b.add_central(p);
                } catch (const Error&) {}
            }
        }
}

}  // namespace

std::string to_string(SymmetryKind k) { return kind_name(k); }

std::vector<SymmetryCandidate> candidate_symmetry_set(const IntersectionRegion& I) {
    CandidateBuilder b;
    b.geom = I.geometry;

    const std::vector<Point>& fv = I.finite_vertices;

    // (a) vertex pairs
    for (std::size_t i = 0; i < fv.size(); ++i)
        for (std::size_t j = i + 1; j < fv.size(); ++j) b.pair_candidates(fv[i], fv[j]);

    // (a') inner-angle bisector at every chain vertex
    for (const auto& ch : I.chains) {
        const std::size_t n = ch.arcs.size();
        if (n == 0) continue;
        const std::size_t last = ch.closed ? n : n - 1;
        for (std::size_t i = 0; i < last; ++i) {
            const Arc& a = ch.arcs[i];
            const Arc& nxt = ch.arcs[(i + 1) % n];
            if (a.end.kind != EndKind::Finite) continue;
            const Point v(I.geometry, a.end.coords);
            const Vec3 u_in = travel_tangent(a, true);
            const Vec3 u_out = travel_tangent(nxt, false);
            const Vec3 bis = u_out - u_in;
            const double q = std::abs(bilinear(I.geometry, bis, bis));
            if (q < 1e-12) continue;
            try {
                b.add_axis(Cycle::geodesic_with_tangent(v, bis / std::sqrt(q)));
            } catch (const Error&) {}
        }
    }

    // (b) swap axes at ideal vertices
    if (I.geometry == Geometry::Hyperbolic) {
        struct Incidence {
            Vec3 w;
            Cycle support;
        };
        std::vector<Incidence> ends;
        for (const auto& ch : I.chains) {
            if (ch.closed || ch.arcs.empty()) continue;
            if (ch.arcs.front().start.kind == EndKind::Ideal)
                ends.push_back({ch.arcs.front().start.coords, ch.arcs.front().support});
            if (ch.arcs.back().end.kind == EndKind::Ideal)
                ends.push_back({ch.arcs.back().end.coords, ch.arcs.back().support});
        }
        for (std::size_t i = 0; i < ends.size(); ++i)
            for (std::size_t j = i + 1; j < ends.size(); ++j) {
                if (std::hypot(ends[i].w.x - ends[j].w.x, ends[i].w.y - ends[j].w.y) >
                    tol::ideal_dedup)
                    continue;
                const IdealPoint w(Geometry::Hyperbolic, ends[i].w);
                const auto others = [&](const Cycle& c) -> std::optional<Vec3> {
                    const auto ip = c.ideal_points();
                    for (const auto& q : ip)
                        if (ideal_distance(q, w) > tol::ideal_dedup) return q.direction();
                    return std::nullopt;
                };
                const auto a1 = others(ends[i].support), a2 = others(ends[j].support);
                if (!a1 || !a2) continue;
                try {
                    b.add_axis(swap_axis_at_ideal(w, *a1, *a2));
                } catch (const Error&) {}
            }
    }

    // (c) source-feature candidates for regions with little vertex structure
    if (fv.size() <= 2) feature_candidates(I, b);

    return std::move(b.out);
}

std::vector<Isometry> candidate_symmetries(const IntersectionRegion& I) {
    std::vector<Isometry> out;
    for (auto& c : candidate_symmetry_set(I)) out.push_back(c.iso);
    return out;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

namespace {

double cycle_match_distance(const Cycle& a, const Cycle& b) {
    if (a.geometry() != b.geometry()) return kInf;
    const auto ka = a.kind(), kb = b.kind();
    if (ka.type != kb.type) return kInf;
    const Geometry g = a.geometry();
    const bool sides_equal = a.convex_side() == b.convex_side();
    const auto vecdist = [](const Vec3& u, const Vec3& v) { return norm(u - v); };

    switch (ka.type) {
        case CycleType::Circle: {
            double centers;
            if (g == Geometry::Euclidean)
                centers = std::hypot(a.normal().x - b.normal().x, a.normal().y - b.normal().y);
            else
                centers = distance(Point(g, a.normal()), Point(g, b.normal()));
            return sides_equal ? centers + std::abs(ka.parameter - kb.parameter) : kInf;
        }
        case CycleType::Paracycle:
            return sides_equal
                       ? vecdist(a.normal(), b.normal()) + std::abs(a.offset() - b.offset())
                       : kInf;
        default: {
            // sign-ambiguous families: (n, h, s) ~ (-n, -h, -s)
            const double direct =
                sides_equal ? vecdist(a.normal(), b.normal()) + std::abs(a.offset() - b.offset())
                            : kInf;
            const double flipped =
                !sides_equal
                    ? vecdist(a.normal(), -b.normal()) + std::abs(a.offset() + b.offset())
                    : kInf;
            return std::min(direct, flipped);
        }
    }
}

// min over assignments of the max matched distance (exact for n <= 8)
double assignment_residual(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    if (n == 0) return 0;
    if (n > 8) {
        // greedy: repeatedly match the globally closest unmatched pair
        std::vector<bool> ru(n, false), cu(n, false);
        double worst = 0;
        for (std::size_t k = 0; k < n; ++k) {
            double best = kInf;
            std::size_t bi = 0, bj = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (ru[i]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (cu[j]) continue;
                    if (cost[i][j] < best) {
                        best = cost[i][j];
                        bi = i;
                        bj = j;
                    }
                }
            }
            ru[bi] = cu[bj] = true;
            worst = std::max(worst, best);
        }
        return worst;
    }
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    double best = kInf;
    do {
        double worst = 0;
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, cost[i][perm[i]]);
        best = std::min(best, worst);
        if (best == 0) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

double verify(const IntersectionRegion& I, const Isometry& iso) {
    require_same_geometry(I.geometry, iso.geometry(), "verify");
    double residual = 0;

    // (i) supporting cycles map onto supporting cycles
    const std::vector<Cycle> sup = I.supports();
    for (const auto& c : sup) {
        const Cycle tc = c.transported(iso);
        double best = kInf;
        for (const auto& s : sup) best = std::min(best, cycle_match_distance(tc, s));
        residual = std::max(residual, best);
        if (residual == kInf) return kInf;
    }

    // (ii) vertex multisets map onto each other
    const auto vl = vertices(I);
    {
        const std::size_t n = vl.finite.size();
        if (n > 0) {
            std::vector<std::vector<double>> cost(n, std::vector<double>(n));
            for (std::size_t i = 0; i < n; ++i) {
                const Point ti = iso(vl.finite[i]);
                for (std::size_t j = 0; j < n; ++j) cost[i][j] = distance(ti, vl.finite[j]);
            }
            residual = std::max(residual, assignment_residual(cost));
        }
        const std::size_t m = vl.ideal.size();
        if (m > 0) {
            std::vector<std::vector<double>> cost(m, std::vector<double>(m));
            for (std::size_t i = 0; i < m; ++i) {
                const IdealPoint ti = iso(vl.ideal[i]);
                for (std::size_t j = 0; j < m; ++j) cost[i][j] = ideal_distance(ti, vl.ideal[j]);
            }
            residual = std::max(residual, assignment_residual(cost));
        }
    }

    // (iii) boundary samples stay on the boundary (covers arc adjacency)
    const auto sample_check = [&](const Arc& a) {
        for (double f : {0.25, 0.5, 0.75}) {
            double t;
            if (a.whole && !a.support.compact())
                t = -2.0 + 4.0 * f;
            else
                t = a.t0 + (a.t1 - a.t0) * f;
            const Point q = iso(a.support.point_at(t));
            const double ma = I.region_a.margin(q);
            const double mb = I.region_b.margin(q);
            const double viol = std::max({-ma, -mb, std::min(std::abs(ma), std::abs(mb))});
            residual = std::max(residual, std::max(0.0, viol));
        }
    };
    for (const auto& ch : I.chains)
        for (const auto& a : ch.arcs) sample_check(a);
    for (const auto& w : I.whole_components) sample_check(w);

    return residual;
}

SymmetryReport detect(const IntersectionRegion& I, double tolr) {
    if (tolr <= 0) throw DomainError("detect: tolerance must be positive");
    SymmetryReport report;
    report.tolerance = tolr;
    for (const auto& cand : candidate_symmetry_set(I)) {
        const double r = verify(I, cand.iso);
        if (r > tolr) continue;
        SymmetryKind kind;
        if (cand.iso.orientation() < 0) {
            kind = SymmetryKind::Axial;
            report.is_axially_symmetric = true;
        } else {
            const Mat3 sq = cand.iso.matrix() * cand.iso.matrix();
            if (matrix_distance(sq, Mat3::identity()) < tol::matrix_dedup) {
                kind = SymmetryKind::Central;
                report.is_centrally_symmetric = true;
            } else {
                kind = SymmetryKind::Rotation;
            }
        }
        if (cand.family) report.continuous_family = true;
        report.found.push_back({kind, cand.iso, r});
    }
    report.has_nontrivial = !report.found.empty();
    std::sort(report.found.begin(), report.found.end(),
              [](const FoundSymmetry& a, const FoundSymmetry& b) { return a.residual < b.residual; });
    return report;
}

double raster_oracle(const IntersectionRegion& I, const Isometry& iso, int grid) {
    if (grid < 2) throw DomainError("raster_oracle: grid too small");
    const Point center = I.centroid();
    double radius = 5.0;
    if (I.bounded()) {
        double r = 0;
        for (const auto& ch : I.chains)
            for (const auto& a : ch.arcs)
                for (int k = 0; k <= 16; ++k)
                    r = std::max(r, distance(center, a.support.point_at(
                                                 a.t0 + (a.t1 - a.t0) * k / 16.0)));
        for (const auto& w : I.whole_components)
            for (int k = 0; k <= 16; ++k)
                r = std::max(r, distance(center, w.support.point_at(2 * M_PI * k / 16.0)));
        for (const auto& p : I.finite_vertices) r = std::max(r, distance(center, p));
        radius = r * 1.05 + 1e-6;
    }
    if (I.geometry == Geometry::Sphere) radius = std::min(radius, M_PI - 1e-9);

    const Vec3 t1 = canonical_direction(center);
    Vec3 t2;
    if (I.geometry == Geometry::Euclidean)
        t2 = {-t1.y, t1.x, 0};
    else {
        t2 = cross(metric_apply(I.geometry, center.coords()), metric_apply(I.geometry, t1));
        t2 = t2 / std::sqrt(std::abs(bilinear(I.geometry, t2, t2)));
    }

    long long mismatch = 0;
    for (int i = 0; i < grid; ++i) {
        const double r = radius * (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            const double th = 2 * M_PI * (j + 0.5) / grid;
            const Vec3 dir = std::cos(th) * t1 + std::sin(th) * t2;
            const Point p = geodesic_walk(center, dir, r);
            if (I.member(p) != I.member(iso(p))) ++mismatch;
        }
    }
    return static_cast<double>(mismatch) / (static_cast<double>(grid) * grid);
}

}  // namespace curvedkit
