#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "curvedkit/intersection.hpp"
#include "curvedkit/symmetry.hpp"

namespace curvedkit {

/// What the theorems claim for the intersections of a configuration.
enum class Expected {
    CentralAlways,  // every interior-nonempty intersection centrally symmetric
    AxialAlways,    // every such intersection axially symmetric
    NoneGeneric,    // generically no non-trivial symmetry
    NotCentral,     // axially symmetric, never centrally
};

std::string to_string(Expected e);
Expected expected_from_string(const std::string& s);

struct ScenarioSpec {
    std::string name;
    Geometry geometry;
    std::map<std::string, double> params;
    Expected expected;
};

struct TrialStats {
    std::int64_t trials_attempted = 0;
    std::int64_t trials_with_interior = 0;
    std::int64_t count_central = 0;
    std::int64_t count_axial = 0;
    std::int64_t count_none = 0;
    double max_residual = 0;
    std::uint64_t seed = 0;
};

/// Portable deterministic generator (splitmix64).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double uniform();                      // [0, 1)
    double uniform(double a, double b);    // [a, b)
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream);

  private:
    std::uint64_t state_;
};

/// Catalog lookup; unknown names are rejected, params override the
/// defaults. Throws InvalidSpecError for unknown names or bad parameters.
ScenarioSpec scenario_by_name(const std::string& name,
                              const std::map<std::string, double>& params = {});
std::vector<std::string> scenario_names();

/// The two sets of a positive theorem case; constraints re-validated.
std::pair<ConvexRegion, ConvexRegion> build_case(const ScenarioSpec& spec);

struct Counterexample {
    ConvexRegion K, L;
    Isometry phi, psi;
};

/// Counterexample configurations (already positioned; phi/psi recorded).
/// delta is the perturbation magnitude where applicable; delta = 0 selects
/// the symmetric, unperturbed configuration.
Counterexample build_counterexample(const std::string& name, double delta, Rng& rng);

bool is_counterexample(const std::string& name);

/// A random orientation-preserving congruence: rotation by a uniform angle
/// composed with a translation of uniform length in [0, 2*scale].
Isometry random_congruence(Geometry g, Rng& rng, double scale);

/// Seeded randomized verification of one scenario: draws congruence pairs,
/// discards empty / no-interior intersections, runs detect and tallies.
/// Deterministic given (spec, n, seed, tol).
TrialStats run_trials(const ScenarioSpec& spec, std::int64_t n, std::uint64_t seed,
                      double tolr = tol::detect_default);

/// True when the tallies match the expected pattern exactly.
bool matches_expected(const TrialStats& stats, Expected expected);

}  // namespace curvedkit
