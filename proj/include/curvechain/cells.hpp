#pragma once

#include <vector>

#include "curvechain/normal.hpp"

namespace curvechain {

// Cuts the surface along every component of the system (which must be
// disjointly realizable) and returns the homeomorphism types of the
// pieces, with punctures and boundary circles folded together, sorted.
std::vector<Surface> cut_system(const NormalCurveSystem& sys);

// Boundary circles of a regular neighborhood of the system together with
// the punctures it touches, one crossing-coordinate vector per circle.
std::vector<NormalCoordinates> neighborhood_boundary(const NormalCurveSystem& sys);

}  // namespace curvechain
