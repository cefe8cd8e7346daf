#pragma once

#include "curvechain/normal.hpp"
#include "curvechain/triangulation.hpp"

namespace curvechain {

// Geometric (minimal) intersection number of two components of valid
// systems over the same triangulation.  Isotopic components give 0.
long long geometric_intersection(const Triangulation& tri, const Component& a,
                                 const Component& b);

// Independent zero-test: a and b can be realized disjointly exactly when
// their coordinate sum is a valid system splitting back into the two of
// them.
bool disjointly_realizable(const Triangulation& tri, const Component& a, const Component& b);

}  // namespace curvechain
