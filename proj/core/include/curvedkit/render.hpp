#pragma once

#include <string>

#include "curvedkit/intersection.hpp"

namespace curvedkit {

/// Flat model used for drawing.
enum class RenderModel {
    Klein,          // H2 collinear model: geodesics are chords
    Poincare,       // H2 conformal model: cycles are circles/arcs
    Stereographic,  // S2 from the north pole onto the south tangent plane
    Planar,         // R2 identity chart
};

RenderModel render_model_from_string(const std::string& s);

/// Deterministic SVG 1.1 document (byte-stable for identical input).
/// Throws UnsupportedGeometryError for an incompatible model/geometry pair.
std::string render_region_svg(const ConvexRegion& region, RenderModel model);
std::string render_intersection_svg(const IntersectionRegion& I, RenderModel model);

}  // namespace curvedkit
