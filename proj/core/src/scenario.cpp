#include "curvedkit/scenario.hpp"

#include <algorithm>
#include <cmath>

namespace curvedkit {

namespace {

Point origin(Geometry g) { return Point(g, {0, 0, 1}); }

double param(const ScenarioSpec& s, const std::string& key, double fallback) {
    const auto it = s.params.find(key);
    return it == s.params.end() ? fallback : it->second;
}

// orient a cycle's convex side toward a point
Cycle toward(const Cycle& c, const Point& w) {
    return c.side(w) >= 0 ? c.with_convex_side(ConvexSide::NonNegative)
                          : c.with_convex_side(ConvexSide::NonPositive);
}

struct CatalogEntry {
    Geometry geometry;
    Expected expected;
    double scale;  // translation range for random congruences
    std::map<std::string, double> defaults;
};

const std::map<std::string, CatalogEntry>& catalog() {
    static const std::map<std::string, CatalogEntry> entries = {
        {"thm3_congruent_circles",
         {Geometry::Sphere, Expected::CentralAlways, 0.8, {{"r", 0.7}}}},
        {"thm3_incongruent_circles",
         {Geometry::Sphere, Expected::NotCentral, 0.8, {{"r1", 0.5}, {"r2", 0.9}}}},
        {"thm4_congruent_strips",
         {Geometry::Euclidean, Expected::CentralAlways, 1.2, {{"w", 1.0}}}},
        {"thm4_incongruent_strips",
         {Geometry::Euclidean, Expected::CentralAlways, 1.2, {{"w1", 1.0}, {"w2", 1.5}}}},
        {"thm4_circle_halfplane",
         {Geometry::Euclidean, Expected::AxialAlways, 1.0, {{"r", 0.8}}}},
        {"thm4_congruent_circles",
         {Geometry::Euclidean, Expected::CentralAlways, 1.0, {{"r", 0.8}}}},
        {"thm4_halfplanes", {Geometry::Euclidean, Expected::AxialAlways, 1.0, {}}},
        {"thm5_congruent_circles",
         {Geometry::Hyperbolic, Expected::CentralAlways, 1.0, {{"r", 0.8}}}},
        {"thm6A_congruent_hyperdomains",
         {Geometry::Hyperbolic, Expected::AxialAlways, 1.0, {{"l", 0.5}}}},
        {"thm6A_halfplanes", {Geometry::Hyperbolic, Expected::AxialAlways, 1.0, {}}},
        {"thm6A_circle_hyperdomain",
         {Geometry::Hyperbolic, Expected::AxialAlways, 1.0, {{"r", 0.6}, {"l", 0.5}}}},
        {"thm6A_circle_paracycle",
         {Geometry::Hyperbolic, Expected::AxialAlways, 1.0, {{"r", 0.7}}}},
        {"thm6A_paraballs", {Geometry::Hyperbolic, Expected::AxialAlways, 1.0, {}}},
        {"thm6B_circle_band",
         {Geometry::Hyperbolic, Expected::AxialAlways, 1.0,
          {{"r", 0.5}, {"l1", 0.4}, {"l2", 0.15}}}},
        {"thm6C_circle_chords",
         {Geometry::Hyperbolic, Expected::AxialAlways, 1.2,
          {{"r", 0.3}, {"c", 0.8}, {"l1", 0.3}, {"l2", 0.2}}}},
        {"thm6D_paraball_parallel_domain",
         {Geometry::Hyperbolic, Expected::AxialAlways, 1.0, {{"l", 0.5}}}},
        {"thm6E_parallel_domains",
         {Geometry::Hyperbolic, Expected::AxialAlways, 1.0, {{"l", 0.4}}}},
        {"paraball_pair_compact",
         {Geometry::Hyperbolic, Expected::CentralAlways, 1.0, {}}},
        {"cx_quadrangle", {Geometry::Hyperbolic, Expected::NoneGeneric, 0.0, {}}},
        {"cx_curvature_mismatch",
         {Geometry::Hyperbolic, Expected::NoneGeneric, 0.0, {}}},
        {"cx_paracycle_not_central",
         {Geometry::Hyperbolic, Expected::NotCentral, 0.0, {}}},
    };
    return entries;
}

Cycle x_axis_geodesic(Geometry g) {
    if (g == Geometry::Euclidean) return Cycle::euclidean_line(0, 1, 0);
    return Cycle::from_section(g, {0, 1, 0}, 0, ConvexSide::NonPositive);
}

}  // namespace

std::string to_string(Expected e) {
    switch (e) {
        case Expected::CentralAlways: return "central_always";
        case Expected::AxialAlways: return "axial_always";
        case Expected::NoneGeneric: return "none_generic";
        case Expected::NotCentral: return "not_central";
    }
    return "?";
}

Expected expected_from_string(const std::string& s) {
    if (s == "central_always") return Expected::CentralAlways;
    if (s == "axial_always") return Expected::AxialAlways;
    if (s == "none_generic") return Expected::NoneGeneric;
    if (s == "not_central") return Expected::NotCentral;
    throw InvalidSpecError("unknown expected pattern '" + s + "'");
}

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t stream) {
    Rng r(seed ^ (0xD1B54A32D192ED03ULL * (stream + 1)));
    return r.next_u64();
}

std::vector<std::string> scenario_names() {
    std::vector<std::string> out;
    for (const auto& [name, entry] : catalog()) out.push_back(name);
    return out;
}

bool is_counterexample(const std::string& name) { return name.rfind("cx_", 0) == 0; }

ScenarioSpec scenario_by_name(const std::string& name,
                              const std::map<std::string, double>& params) {
    const auto it = catalog().find(name);
    if (it == catalog().end()) throw InvalidSpecError("unknown scenario '" + name + "'");
    ScenarioSpec spec;
    spec.name = name;
    spec.geometry = it->second.geometry;
    spec.expected = it->second.expected;
    spec.params = it->second.defaults;
    for (const auto& [k, v] : params) {
        if (spec.params.find(k) == spec.params.end() && k != "delta" && k != "max_diameter")
            throw InvalidSpecError("scenario '" + name + "' has no parameter '" + k + "'");
        spec.params[k] = v;
    }
    return spec;
}

std::pair<ConvexRegion, ConvexRegion> build_case(const ScenarioSpec& s) {
    const Geometry g = s.geometry;
    const Point o = origin(g);
    const std::string& n = s.name;

    if (n == "thm3_congruent_circles" || n == "thm4_congruent_circles" ||
        n == "thm5_congruent_circles") {
        const double r = param(s, "r", 0.7);
        return {ConvexRegion::ball(o, r), ConvexRegion::ball(o, r)};
    }
    if (n == "thm3_incongruent_circles")
        return {ConvexRegion::ball(o, param(s, "r1", 0.5)),
                ConvexRegion::ball(o, param(s, "r2", 0.9))};
    if (n == "thm4_congruent_strips") {
        const double w = param(s, "w", 1.0);
        return {ConvexRegion::strip(x_axis_geodesic(g), w),
                ConvexRegion::strip(x_axis_geodesic(g), w)};
    }
    if (n == "thm4_incongruent_strips")
        return {ConvexRegion::strip(x_axis_geodesic(g), param(s, "w1", 1.0)),
                ConvexRegion::strip(x_axis_geodesic(g), param(s, "w2", 1.5))};
    if (n == "thm4_circle_halfplane")
        return {ConvexRegion::ball(o, param(s, "r", 0.8)),
                ConvexRegion::half_plane(x_axis_geodesic(g), ConvexSide::NonPositive)};
    if (n == "thm4_halfplanes" || n == "thm6A_halfplanes")
        return {ConvexRegion::half_plane(x_axis_geodesic(g), ConvexSide::NonPositive),
                ConvexRegion::half_plane(x_axis_geodesic(g), ConvexSide::NonPositive)};
    if (n == "thm6A_congruent_hyperdomains") {
        const double l = param(s, "l", 0.5);
        return {ConvexRegion::hyperdomain(x_axis_geodesic(g), l),
                ConvexRegion::hyperdomain(x_axis_geodesic(g), l)};
    }
    if (n == "thm6A_circle_hyperdomain")
        return {ConvexRegion::ball(o, param(s, "r", 0.6)),
                ConvexRegion::hyperdomain(x_axis_geodesic(g), param(s, "l", 0.5))};
    if (n == "thm6A_circle_paracycle")
        return {ConvexRegion::ball(o, param(s, "r", 0.7)),
                ConvexRegion::paraball(IdealPoint::from_angle(0), o)};
    if (n == "thm6A_paraballs" || n == "paraball_pair_compact")
        return {ConvexRegion::paraball(IdealPoint::from_angle(0), o),
                ConvexRegion::paraball(IdealPoint::from_angle(M_PI), o)};
    if (n == "thm6B_circle_band") {
        const auto K = ConvexRegion::ball(o, param(s, "r", 0.5));
        const auto L = ConvexRegion::hyperband(x_axis_geodesic(g), param(s, "l1", 0.4),
                                               param(s, "l2", 0.15));
        return {K, L};
    }
    if (n == "thm6C_circle_chords") {
        const double r = param(s, "r", 0.3);
        const double c = param(s, "c", 0.8);  // Klein abscissa of the chords
        const double l1 = param(s, "l1", 0.3), l2 = param(s, "l2", 0.2);
        const double a = std::acos(c);
        const ConvexRegion L = ConvexRegion::chord_assembly(
            {{-a, a, l1}, {M_PI - a, M_PI + a, l2}});
        const double d = L.min_component_distance();
        if (d < 2 * r)
            throw InvalidSpecError(
                "thm6C: mutual component distances must be at least 2r (got " +
                std::to_string(d) + " < " + std::to_string(2 * r) + ")");
        return {ConvexRegion::ball(o, r), L};
    }
    if (n == "thm6D_paraball_parallel_domain")
        return {ConvexRegion::paraball(IdealPoint::from_angle(M_PI / 2), o),
                ConvexRegion::parallel_domain(x_axis_geodesic(g), param(s, "l", 0.5))};
    if (n == "thm6E_parallel_domains") {
        const double l = param(s, "l", 0.4);
        return {ConvexRegion::parallel_domain(x_axis_geodesic(g), l),
                ConvexRegion::parallel_domain(x_axis_geodesic(g), l)};
    }
    throw InvalidSpecError("build_case: '" + n + "' is not a positive scenario");
}

// ---------------------------------------------------------------------------
// Counterexamples.
// ---------------------------------------------------------------------------

Counterexample build_counterexample(const std::string& name, double delta, Rng& rng) {
    const Geometry g = Geometry::Hyperbolic;
    const Isometry id = Isometry::identity(g);

    if (name == "cx_quadrangle") {
        // Two straight lines l1, l2 through a common ideal point, symmetric
        // about the x axis; the second region is bounded by the lines
        // through x_i, y_i on l_i. delta = 0 is the symmetric quadrangle.
        const double a = 2.4;
        const Cycle l1 = Cycle::geodesic_between_ideals(IdealPoint::from_angle(0),
                                                        IdealPoint::from_angle(a));
        const Cycle l2 = Cycle::geodesic_between_ideals(IdealPoint::from_angle(0),
                                                        IdealPoint::from_angle(-a));
        const Point wedge_witness(g, {0.3, 0, 1.0 / std::sqrt(1 - 0.09)});
        const ConvexRegion K = ConvexRegion::from_components(
            {toward(l1, wedge_witness), toward(l2, wedge_witness)}, wedge_witness);

        const Isometry mirror = reflection(x_axis_geodesic(g));
        const double q = 0.35;
        const double t0 = -q / 2;
        const auto jitter = [&] { return delta * rng.uniform(-1.0, 1.0); };
        const Point x1 = l1.point_at(t0 + jitter());
        const Point y1 = l1.point_at(t0 + q + jitter());
        const Point x2m = mirror(l1.point_at(t0));
        const Point y2m = mirror(l1.point_at(t0 + q));
        const Point x2 = l2.point_at(l2.param_of(x2m) + jitter());
        const Point y2 = l2.point_at(l2.param_of(y2m) + jitter());

        const Point inner = midpoint(midpoint(x1, y2), midpoint(x2, y1));
        const Cycle side_x = Cycle::geodesic_through(x1, x2);
        const Cycle side_y = Cycle::geodesic_through(y1, y2);
        const ConvexRegion L = ConvexRegion::from_components(
            {toward(side_x, inner), toward(side_y, inner)}, inner);
        return {K, L, id, id};
    }

    if (name == "cx_curvature_mismatch") {
        // Paraball whose ideal point is one endpoint of the hyperdomain's
        // base line: the boundaries meet at one finite point and one ideal
        // point, but have different curvatures.
        const double beta = 2.0 + 0.2 * rng.uniform(-1.0, 1.0);
        const double l = 0.45 + 0.1 * rng.uniform(-1.0, 1.0);
        const IdealPoint omega = IdealPoint::from_angle(0);
        const Cycle base =
            Cycle::geodesic_between_ideals(omega, IdealPoint::from_angle(beta));
        const ConvexRegion K = ConvexRegion::paraball(omega, origin(g));
        ConvexRegion L = ConvexRegion::hyperdomain(base, l);
        if (L.contains(K.witness()) == Containment::Exterior) {
            const Cycle flipped =
                Cycle::from_section(g, -base.normal(), 0, ConvexSide::NonPositive);
            L = ConvexRegion::hyperdomain(flipped, l);
        }
        return {K, L, id, id};
    }

    if (name == "cx_paracycle_not_central") {
        // identical copies of one paraball: the intersection is the
        // paraball itself, with exactly one point at infinity
        const double angle = rng.uniform(0, 2 * M_PI);
        const ConvexRegion K = ConvexRegion::paraball(IdealPoint::from_angle(angle), origin(g));
        const Isometry move = random_congruence(g, rng, 0.6);
        return {K, K, move, move};
    }

    throw InvalidSpecError("unknown counterexample '" + name + "'");
}

// ---------------------------------------------------------------------------
// Randomized trials.
// ---------------------------------------------------------------------------

Isometry random_congruence(Geometry g, Rng& rng, double scale) {
    const Point o = origin(g);
    const double theta = rng.uniform(0, 2 * M_PI);
    const double alpha = rng.uniform(0, 2 * M_PI);
    double len = rng.uniform(0, 2 * scale);
    if (g == Geometry::Sphere) len = std::min(len, M_PI - 1e-6);
    const Isometry spin = rotation(o, theta);
    if (len < 1e-12) return spin;
    const Point target = geodesic_walk(o, project_to_tangent(o, {std::cos(alpha), std::sin(alpha), 0}), len);
    const Cycle axis = Cycle::geodesic_through(o, target);
    const Isometry move = translation(axis, axis.param_of(target) - axis.param_of(o));
    return compose(move, spin);
}

bool matches_expected(const TrialStats& st, Expected expected) {
    if (st.trials_with_interior == 0) return false;
    switch (expected) {
        case Expected::CentralAlways: return st.count_central == st.trials_with_interior;
        case Expected::AxialAlways: return st.count_axial == st.trials_with_interior;
        case Expected::NoneGeneric: return st.count_none == st.trials_with_interior;
        case Expected::NotCentral:
            return st.count_axial == st.trials_with_interior && st.count_central == 0;
    }
    return false;
}

TrialStats run_trials(const ScenarioSpec& spec, std::int64_t n, std::uint64_t seed,
                      double tolr) {
    if (n < 1) throw DomainError("run_trials: n must be >= 1");
    TrialStats stats;
    stats.seed = seed;
    const bool counter = is_counterexample(spec.name);
    const double scale = catalog().at(spec.name).scale;
    const double max_diam = param(spec, "max_diameter",
                                  std::numeric_limits<double>::infinity());

    std::optional<std::pair<ConvexRegion, ConvexRegion>> fixed_case;
    if (!counter) fixed_case = build_case(spec);

    const std::int64_t max_attempts = 20 * n;
    for (std::int64_t attempt = 0;
         attempt < max_attempts && stats.trials_with_interior < n; ++attempt) {
        Rng rng(Rng::mix(seed, static_cast<std::uint64_t>(attempt)));
        ++stats.trials_attempted;
        try {
            IntersectResult res = [&] {
                if (counter) {
                    const double delta =
                        spec.params.count("delta")
                            ? spec.params.at("delta")
                            : (spec.name == "cx_quadrangle" ? rng.uniform(0.02, 0.1) : 0.0);
                    Counterexample cx = build_counterexample(spec.name, delta, rng);
                    return intersect(cx.K, cx.phi, cx.L, cx.psi);
                }
                const Isometry phi = random_congruence(spec.geometry, rng, scale);
                const Isometry psi = random_congruence(spec.geometry, rng, scale);
                return intersect(fixed_case->first, phi, fixed_case->second, psi);
            }();
            if (!res.has_interior()) continue;
            if (std::isfinite(max_diam) && diameter(*res.region, 64) > max_diam) continue;
            ++stats.trials_with_interior;
            const SymmetryReport rep = detect(*res.region, tolr);
            if (rep.is_centrally_symmetric) ++stats.count_central;
            if (rep.is_axially_symmetric) ++stats.count_axial;
            if (!rep.has_nontrivial) ++stats.count_none;
            for (const auto& f : rep.found)
                stats.max_residual = std::max(stats.max_residual, f.residual);
        } catch (const UnstableConfigurationError&) {
            continue;  // knife-edge draw; the next attempt perturbs it
        } catch (const InvalidSpecError&) {
            if (!counter) throw;
            continue;  // a perturbation drew crossing chords; redraw
        }
    }
    if (stats.trials_with_interior < n && stats.trials_with_interior < (n + 9) / 10)
        throw SamplingStarvedError("run_trials: fewer than n/10 usable trials for '" +
                                   spec.name + "'");
    return stats;
}

}  // namespace curvedkit
