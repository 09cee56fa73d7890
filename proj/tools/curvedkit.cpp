// curvedkit: scenario suite runner, chord-angle formula evaluator and
// static figure emitter for the three constant-curvature planes.
//
// Exit codes: 0 all pass, 1 scenario failures, 2 configuration errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvedkit/render.hpp"
#include "curvedkit/suite.hpp"
#include "curvedkit/trig.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw curvedkit::InvalidSpecError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw curvedkit::InvalidSpecError("cannot write '" + path + "'");
    out << content;
}

std::optional<std::uint64_t> seed_override_from_env() {
    const char* env = std::getenv("CURVEDKIT_SEED");
    if (!env || !*env) return std::nullopt;
    return std::strtoull(env, nullptr, 10);
}

std::map<std::string, double> parse_kv(const std::vector<std::string>& kvs) {
    std::map<std::string, double> params;
    for (const auto& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw curvedkit::InvalidSpecError("--param expects k=v, got '" + kv + "'");
        params[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    }
    return params;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace curvedkit;
    CLI::App app{"curvedkit: symmetric intersections of convex regions in S2, R2 and H2"};
    app.require_subcommand(1);

    // verify
    std::string suite_path;
    std::string report_path;
    bool no_timing = false;
    auto* verify_cmd = app.add_subcommand(
        "verify", "run a scenario suite (the bundled default when no file is given)");
    verify_cmd->add_option("suite", suite_path, "suite JSON file");
    verify_cmd->add_option("-o,--output", report_path, "write the report JSON here");
    verify_cmd->add_flag("--no-timing", no_timing, "omit wall time for byte-stable reports");

    // scenario
    std::string scenario_name;
    std::int64_t sc_n = 100;
    std::uint64_t sc_seed = 1;
    double sc_tol = tol::detect_default;
    std::vector<std::string> sc_params;
    auto* scenario_cmd = app.add_subcommand("scenario", "run one scenario and print its stats");
    scenario_cmd->add_option("name", scenario_name, "scenario name")->required();
    scenario_cmd->add_option("--n", sc_n, "trial count");
    scenario_cmd->add_option("--seed", sc_seed, "RNG seed");
    scenario_cmd->add_option("--tol", sc_tol, "symmetry acceptance tolerance");
    scenario_cmd->add_option("--param", sc_params, "override a parameter, k=v");

    // formula
    double f_r = 0, f_c = 0, f_l = 0;
    auto* formula_cmd =
        app.add_subcommand("formula", "evaluate the chord-angle relations");
    auto* rcl = formula_cmd->add_subcommand("rcl", "half central angle for (r, c, l)");
    rcl->add_option("r", f_r, "circle radius")->required();
    rcl->add_option("c", f_c, "signed distance of the centre to the base line")->required();
    rcl->add_option("l", f_l, "signed distance of the hypercycle to its base line")->required();

    // render
    std::string spec_path, model_name = "klein", out_path = "out.svg";
    auto* render_cmd = app.add_subcommand("render", "emit an SVG figure for a spec");
    render_cmd->add_option("spec", spec_path, "region or intersection JSON")->required();
    render_cmd->add_option("--model", model_name, "klein | poincare | stereographic | planar");
    render_cmd->add_option("-o,--output", out_path, "output SVG path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*verify_cmd) {
            const std::string text =
                suite_path.empty() ? default_suite_json() : read_file(suite_path);
            const SuiteConfig config = parse_suite(text);
            const RunReport report = run_suite(config, seed_override_from_env());
            const std::string json = report_to_json(report, !no_timing);
            if (report_path.empty())
                std::cout << json;
            else
                write_file(report_path, json);
            for (const auto& o : report.scenarios)
                std::cerr << (o.pass ? "[pass] " : "[FAIL] ") << o.entry.spec.name
                          << (o.error.empty() ? "" : ": " + o.error) << "\n";
            return report.all_pass ? 0 : 1;
        }
        if (*scenario_cmd) {
            const ScenarioSpec spec = scenario_by_name(scenario_name, parse_kv(sc_params));
            const std::optional<std::uint64_t> env_seed = seed_override_from_env();
            const TrialStats st = run_trials(spec, sc_n, env_seed.value_or(sc_seed), sc_tol);
            nlohmann::ordered_json j;
            j["name"] = spec.name;
            j["expected"] = to_string(spec.expected);
            j["pass"] = matches_expected(st, spec.expected);
            j["trials_attempted"] = st.trials_attempted;
            j["trials_with_interior"] = st.trials_with_interior;
            j["count_central"] = st.count_central;
            j["count_axial"] = st.count_axial;
            j["count_none"] = st.count_none;
            j["max_residual"] = st.max_residual;
            j["seed"] = st.seed;
            std::cout << j.dump(2) << "\n";
            return matches_expected(st, spec.expected) ? 0 : 1;
        }
        if (*formula_cmd) {
            nlohmann::ordered_json j;
            j["r"] = f_r;
            j["c"] = f_c;
            j["l"] = f_l;
            const bool exists = trig::chord_exists(f_r, f_c, f_l);
            j["exists"] = exists;
            if (exists) {
                const double omega = trig::half_central_angle(f_r, f_c, f_l);
                j["omega"] = omega;
                j["d"] = trig::law_of_cosines_d(f_r, f_c, omega);
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*render_cmd) {
            const RenderModel model = render_model_from_string(model_name);
            const RenderEntity entity = parse_render_entity(read_file(spec_path));
            const std::string svg = entity.intersection
                                        ? render_intersection_svg(*entity.intersection, model)
                                        : render_region_svg(*entity.region, model);
            write_file(out_path, svg);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
