#pragma once

#include "curvedkit/intersection.hpp"

namespace curvedkit {

enum class SymmetryKind { Central, Axial, Rotation };

std::string to_string(SymmetryKind k);

struct FoundSymmetry {
    SymmetryKind kind;
    Isometry iso;
    double residual;
};

struct SymmetryReport {
    std::vector<FoundSymmetry> found;
    bool is_centrally_symmetric = false;
    bool is_axially_symmetric = false;
    bool has_nontrivial = false;
    /// A continuous family (rotations about a common center, reflections
    /// through a pencil of axes) was collapsed to one canonical entry.
    bool continuous_family = false;
    double tolerance = tol::detect_default;
};

struct SymmetryCandidate {
    Isometry iso;
    bool family = false;  // canonical representative of a continuous family
};

/// Candidate non-trivial symmetries enumerated from the combinatorial
/// structure: vertex pairs (midpoint centers, axes through and between
/// them), per-vertex inner-angle bisectors, ideal-vertex swap axes, and,
/// for regions with at most two vertices, axes and centers built from the
/// source components' centers, base lines and common perpendiculars.
/// Parabolic candidates are never generated. Finite and deduplicated.
std::vector<SymmetryCandidate> candidate_symmetry_set(const IntersectionRegion& I);

/// Spec-facing wrapper without the family tags.
std::vector<Isometry> candidate_symmetries(const IntersectionRegion& I);

/// Exactness residual of a claimed symmetry on the arc data: max over the
/// supporting-cycle matching, the vertex-multiset assignment, and boundary
/// sample transport. 0 for an exact symmetry; +inf on combinatorial
/// mismatch.
double verify(const IntersectionRegion& I, const Isometry& iso);

/// Runs the candidate enumeration, keeps isometries with residual <= tol,
/// and classifies them.
SymmetryReport detect(const IntersectionRegion& I, double tolr = tol::detect_default);

/// Independent sampling check; fraction of grid points whose membership
/// (via the source regions) disagrees with the membership of the image
/// point. Pure sampling, no arc data used.
double raster_oracle(const IntersectionRegion& I, const Isometry& iso, int grid);

}  // namespace curvedkit
