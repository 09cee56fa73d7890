#include "curvedkit/suite.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

namespace curvedkit {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidSpecError(std::string("JSON parse error: ") + e.what());
    }
}

double require_number(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number())
        throw InvalidSpecError(std::string("missing or non-numeric field '") + field + "'");
    return j[field].get<double>();
}

}  // namespace

SuiteConfig parse_suite(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("scenarios") || !j["scenarios"].is_array())
        throw InvalidSpecError("suite: top level must be {\"scenarios\": [...]}");
    SuiteConfig config;
    int index = 0;
    for (const auto& e : j["scenarios"]) {
        const std::string where = "scenarios[" + std::to_string(index++) + "]";
        if (!e.is_object() || !e.contains("name") || !e["name"].is_string())
            throw InvalidSpecError(where + ": missing scenario name");
        std::map<std::string, double> params;
        if (e.contains("params")) {
            if (!e["params"].is_object())
                throw InvalidSpecError(where + ".params: must be an object of numbers");
            for (const auto& [k, v] : e["params"].items()) {
                if (!v.is_number())
                    throw InvalidSpecError(where + ".params." + k + ": must be a number");
                params[k] = v.get<double>();
            }
        }
        SuiteEntry entry;
        entry.spec = scenario_by_name(e["name"].get<std::string>(), params);
        if (e.contains("expected"))
            entry.spec.expected = expected_from_string(e["expected"].get<std::string>());
        if (e.contains("n")) entry.n = e["n"].get<std::int64_t>();
        if (e.contains("seed")) entry.seed = e["seed"].get<std::uint64_t>();
        if (e.contains("tol")) entry.tolr = require_number(e, "tol");
        if (entry.n < 1) throw InvalidSpecError(where + ".n: must be >= 1");
        if (entry.tolr <= 0) throw InvalidSpecError(where + ".tol: must be > 0");
        config.entries.push_back(std::move(entry));
    }
    return config;
}

RunReport run_suite(const SuiteConfig& config, std::optional<std::uint64_t> seed_override) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    for (const auto& entry : config.entries) {
        ScenarioOutcome outcome;
        outcome.entry = entry;
        if (seed_override) outcome.entry.seed = *seed_override;
        try {
            outcome.stats = run_trials(outcome.entry.spec, outcome.entry.n,
                                       outcome.entry.seed, outcome.entry.tolr);
            outcome.pass = matches_expected(outcome.stats, outcome.entry.spec.expected);
        } catch (const Error& e) {
            outcome.pass = false;
            outcome.error = e.what();
        }
        report.all_pass = report.all_pass && outcome.pass;
        report.scenarios.push_back(std::move(outcome));
    }
    std::stable_sort(report.scenarios.begin(), report.scenarios.end(),
                     [](const ScenarioOutcome& a, const ScenarioOutcome& b) {
                         return a.entry.spec.name < b.entry.spec.name;
                     });
    const auto t1 = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

std::string report_to_json(const RunReport& report, bool include_timing) {
    ordered j;
    j["tool"] = "curvedkit";
    j["version"] = "0.1.0";
    j["pass"] = report.all_pass;
    if (include_timing) j["wall_ms"] = report.wall_ms;
    j["scenarios"] = ordered::array();
    for (const auto& o : report.scenarios) {
        ordered s;
        s["name"] = o.entry.spec.name;
        s["expected"] = to_string(o.entry.spec.expected);
        s["n"] = o.entry.n;
        s["seed"] = o.entry.seed;
        s["tol"] = o.entry.tolr;
        s["pass"] = o.pass;
        if (!o.error.empty()) {
            s["error"] = o.error;
        } else {
            ordered st;
            st["trials_attempted"] = o.stats.trials_attempted;
            st["trials_with_interior"] = o.stats.trials_with_interior;
            st["count_central"] = o.stats.count_central;
            st["count_axial"] = o.stats.count_axial;
            st["count_none"] = o.stats.count_none;
            st["max_residual"] = o.stats.max_residual;
            st["seed"] = o.stats.seed;
            s["stats"] = std::move(st);
        }
        j["scenarios"].push_back(std::move(s));
    }
    return j.dump(2) + "\n";
}

std::string default_suite_json() {
    ordered j;
    j["scenarios"] = ordered::array();
    const auto add = [&](const std::string& name, int n, std::uint64_t seed) {
        ordered e;
        e["name"] = name;
        e["n"] = n;
        e["seed"] = seed;
        j["scenarios"].push_back(std::move(e));
    };
    add("thm3_congruent_circles", 200, 11);
    add("thm3_incongruent_circles", 200, 12);
    add("thm4_congruent_strips", 200, 13);
    add("thm4_incongruent_strips", 200, 14);
    add("thm4_circle_halfplane", 200, 15);
    add("thm4_congruent_circles", 200, 16);
    add("thm4_halfplanes", 200, 17);
    add("thm5_congruent_circles", 200, 18);
    add("thm6A_congruent_hyperdomains", 200, 19);
    add("thm6A_halfplanes", 200, 20);
    add("thm6A_circle_hyperdomain", 200, 21);
    add("thm6A_circle_paracycle", 200, 22);
    add("thm6A_paraballs", 200, 23);
    add("thm6B_circle_band", 200, 24);
    add("thm6C_circle_chords", 200, 25);
    add("thm6D_paraball_parallel_domain", 200, 26);
    add("thm6E_parallel_domains", 200, 27);
    add("paraball_pair_compact", 200, 28);
    add("cx_quadrangle", 100, 29);
    add("cx_curvature_mismatch", 100, 30);
    add("cx_paracycle_not_central", 100, 31);
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Region / isometry / intersection specs.
// ---------------------------------------------------------------------------

namespace {

Vec3 vec_from(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_array() || j[field].size() != 3)
        throw InvalidSpecError(std::string("field '") + field + "' must be [x, y, z]");
    return {j[field][0].get<double>(), j[field][1].get<double>(), j[field][2].get<double>()};
}

Cycle geodesic_from_json(Geometry g, const json& j) {
    if (j.contains("ideal_angles")) {
        if (g != Geometry::Hyperbolic)
            throw InvalidSpecError("ideal_angles: only meaningful on H2");
        const auto& a = j["ideal_angles"];
        return Cycle::geodesic_between_ideals(IdealPoint::from_angle(a[0].get<double>()),
                                              IdealPoint::from_angle(a[1].get<double>()));
    }
    if (j.contains("normal") && g == Geometry::Euclidean) {
        const auto& n = j["normal"];
        return Cycle::euclidean_line(n[0].get<double>(), n[1].get<double>(),
                                     j.value("offset", 0.0));
    }
    if (j.contains("pole") && g == Geometry::Sphere) {
        const Vec3 p = vec_from(j, "pole");
        return Cycle::from_section(g, p, 0.0, ConvexSide::NonPositive);
    }
    if (j.contains("through")) {
        const auto& t = j["through"];
        return Cycle::geodesic_through(
            Point(g, {t[0][0].get<double>(), t[0][1].get<double>(), t[0][2].get<double>()}),
            Point(g, {t[1][0].get<double>(), t[1][1].get<double>(), t[1][2].get<double>()}));
    }
    throw InvalidSpecError("geodesic spec: expected ideal_angles, normal, pole or through");
}

ConvexSide side_from_json(const json& j) {
    const std::string s = j.value("side", "nonpositive");
    if (s == "nonpositive" || s == "<=") return ConvexSide::NonPositive;
    if (s == "nonnegative" || s == ">=") return ConvexSide::NonNegative;
    throw InvalidSpecError("side: expected 'nonpositive' or 'nonnegative'");
}

ConvexRegion region_from(const json& j) {
    if (!j.is_object() || !j.contains("geometry") || !j.contains("kind"))
        throw InvalidSpecError("region spec: needs 'geometry' and 'kind'");
    const Geometry g = geometry_from_string(j["geometry"].get<std::string>());
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "ball")
        return ConvexRegion::ball(Point(g, vec_from(j, "center")), require_number(j, "r"));
    if (kind == "paraball")
        return ConvexRegion::paraball(IdealPoint::from_angle(require_number(j, "angle")),
                                      Point(g, vec_from(j, "through")));
    if (kind == "hyperdomain")
        return ConvexRegion::hyperdomain(geodesic_from_json(g, j["base"]),
                                         require_number(j, "l"));
    if (kind == "half_plane")
        return ConvexRegion::half_plane(geodesic_from_json(g, j["geodesic"]),
                                        side_from_json(j));
    if (kind == "strip")
        return ConvexRegion::strip(geodesic_from_json(g, j["line"]),
                                   require_number(j, "width"));
    if (kind == "parallel_domain")
        return ConvexRegion::parallel_domain(geodesic_from_json(g, j["base"]),
                                             require_number(j, "l"));
    if (kind == "hyperband")
        return ConvexRegion::hyperband(geodesic_from_json(g, j["base"]),
                                       require_number(j, "l_pos"), require_number(j, "l_neg"));
    if (kind == "chord_assembly") {
        if (!j.contains("chords") || !j["chords"].is_array())
            throw InvalidSpecError("chord_assembly: needs a 'chords' array");
        std::vector<ConvexRegion::Chord> chords;
        for (const auto& c : j["chords"])
            chords.push_back({require_number(c, "theta1"), require_number(c, "theta2"),
                              c.value("l", 0.0)});
        return ConvexRegion::chord_assembly(chords);
    }
    throw InvalidSpecError("region spec: unknown kind '" + kind + "'");
}

Isometry isometry_from(Geometry g, const json& j) {
    Isometry result = Isometry::identity(g);
    if (j.is_null()) return result;
    if (!j.is_array()) throw InvalidSpecError("isometry spec: expected a generator list");
    for (const auto& e : j) {
        const std::string kind = e.value("kind", "");
        Isometry step = Isometry::identity(g);
        if (kind == "identity") {
        } else if (kind == "rotation") {
            step = rotation(Point(g, vec_from(e, "center")), require_number(e, "angle"));
        } else if (kind == "point_reflection") {
            step = point_reflection(Point(g, vec_from(e, "center")));
        } else if (kind == "reflection") {
            step = reflection(geodesic_from_json(g, e["axis"]));
        } else if (kind == "translation") {
            step = translation(geodesic_from_json(g, e["axis"]), require_number(e, "length"));
        } else if (kind == "parabolic") {
            step = parabolic(IdealPoint::from_angle(require_number(e, "angle")),
                             require_number(e, "parameter"));
        } else {
            throw InvalidSpecError("isometry spec: unknown generator '" + kind + "'");
        }
        result = compose(step, result);  // listed first, applied first
    }
    return result;
}

}  // namespace

ConvexRegion region_from_json(const std::string& text) { return region_from(parse_json(text)); }

RenderEntity parse_render_entity(const std::string& text) {
    const json j = parse_json(text);
    RenderEntity entity;
    if (j.contains("K") && j.contains("L")) {
        const ConvexRegion K = region_from(j["K"]);
        const ConvexRegion L = region_from(j["L"]);
        const Isometry phi = isometry_from(K.geometry(), j.value("phi", json()));
        const Isometry psi = isometry_from(L.geometry(), j.value("psi", json()));
        IntersectResult res = intersect(K, phi, L, psi);
        if (!res.has_interior())
            throw DegenerateSpecError("render: the intersection has no interior");
        entity.intersection = std::move(res.region);
        return entity;
    }
    entity.region = region_from(j);
    return entity;
}

}  // namespace curvedkit
