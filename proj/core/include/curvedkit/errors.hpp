#pragma once

#include <stdexcept>
#include <string>

namespace curvedkit {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values with different geometry tags were combined.
struct TagMismatchError : Error {
    using Error::Error;
};

/// A numeric argument is outside its admissible range.
struct DomainError : Error {
    using Error::Error;
};

/// The requested construction does not exist in this geometry
/// (e.g. a paracycle outside the hyperbolic plane).
struct UnsupportedGeometryError : Error {
    using Error::Error;
};

/// An operation was applied to the wrong kind of cycle.
struct KindError : Error {
    using Error::Error;
};

/// Two cycles describe the same plane section.
struct CoincidentCycleError : Error {
    using Error::Error;
};

/// A region or scenario specification violates its constraints.
struct InvalidSpecError : Error {
    using Error::Error;
};

/// A specification produced a set with empty interior.
struct DegenerateSpecError : Error {
    using Error::Error;
};

/// The configuration is within tolerance of a tangency or other
/// knife-edge; the caller should perturb and retry.
struct UnstableConfigurationError : Error {
    using Error::Error;
};

/// A randomized run failed to produce enough usable trials.
struct SamplingStarvedError : Error {
    using Error::Error;
};

/// The chord/angle query has no solution (existence predicate fails).
struct NoIntersectionError : Error {
    using Error::Error;
};

}  // namespace curvedkit
