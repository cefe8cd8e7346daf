#pragma once

#include <vector>

#include "curvechain/normal.hpp"
#include "curvechain/triangulation.hpp"

namespace curvechain {

// Strand-level traversal of one connected component.  Step k records one
// edge crossing: the side through which the strand enters the next
// triangle, and the side through which it leaves it (-1 when it
// terminates at the vertex opposite the entering side).  For closed
// components the steps are cyclic.
struct TraceStep {
  SideRef enter;
  int exit_side = -1;
};

struct Trace {
  bool closed = false;
  std::vector<TraceStep> steps;
};

struct TracedComponent {
  Trace trace;
  NormalCoordinates coords;
};

// Traces every connected piece of a valid coordinate vector.
std::vector<TracedComponent> trace_components(const Triangulation& tri,
                                              const NormalCoordinates& c);

// The same strand traversed the other way.
Trace reverse_trace(const Triangulation& tri, const Trace& tr);

}  // namespace curvechain
