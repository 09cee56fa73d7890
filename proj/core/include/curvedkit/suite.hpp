#pragma once

#include <optional>

#include "curvedkit/scenario.hpp"

namespace curvedkit {

struct SuiteEntry {
    ScenarioSpec spec;
    std::int64_t n = 100;
    std::uint64_t seed = 1;
    double tolr = tol::detect_default;
};

struct SuiteConfig {
    std::vector<SuiteEntry> entries;
};

/// Parses {"scenarios":[{"name","params","n","seed","tol","expected"}]}.
/// Unknown scenario names and malformed fields are rejected with
/// diagnostics. Throws InvalidSpecError.
SuiteConfig parse_suite(const std::string& json_text);

struct ScenarioOutcome {
    SuiteEntry entry;
    TrialStats stats;
    bool pass = false;
    std::string error;  // non-empty when the scenario failed to run
};

struct RunReport {
    std::vector<ScenarioOutcome> scenarios;  // sorted by scenario name
    bool all_pass = true;
    double wall_ms = 0;
};

/// Runs every entry; outcomes are order-stable (sorted by name). The seed
/// override replaces every entry's seed (CURVEDKIT_SEED support).
RunReport run_suite(const SuiteConfig& config,
                    std::optional<std::uint64_t> seed_override = std::nullopt);

/// Schema-stable JSON serialization; timing is omitted when
/// include_timing is false so the bytes are reproducible.
std::string report_to_json(const RunReport& report, bool include_timing = true);

/// The bundled default suite (all theorem positives plus the
/// counterexamples).
std::string default_suite_json();

// -- render entity JSON -----------------------------------------------------

struct RenderEntity {
    std::optional<ConvexRegion> region;
    std::optional<IntersectionRegion> intersection;
};

/// Parses a region spec (kind-tagged, mirroring the make_region grammar) or
/// an intersection spec {"K":region,"phi":[generators],"L":...,"psi":...}.
RenderEntity parse_render_entity(const std::string& json_text);

/// Region spec parser, exposed for file-based workflows.
ConvexRegion region_from_json(const std::string& json_text);

}  // namespace curvedkit
