#pragma once

#include <optional>
#include <string>

#include "curvechain/surface.hpp"

namespace curvechain {

// How much a closed-form table row actually claims.
enum class BoundKind {
  Exact,           // the value is attained and maximal
  UpperOnly,       // only "at most" is known
  NoneExists,      // no configuration of the requested shape exists at all
  OutOfTableRange, // the tables are silent for this surface
  ImportedUpper,   // an upper bound quoted from outside this development
};

struct Bound {
  BoundKind kind = BoundKind::OutOfTableRange;
  std::optional<int> value;  // present for Exact/UpperOnly/ImportedUpper
  std::string citation;
};

// All bound functions take the surface in curve-graph normal form
// (boundary folded into p); they fold internally for convenience.

// Longest m with the complement of an m-cycle fully embedded in the curve
// graph, i.e. a cyclic chain of m curves.  Exact where defined; the shape
// needs m >= 3.
Bound max_cyclic_chain(const Surface& s);

// Same with one extra curve disjoint from the whole chain (cycle
// complement joined with one apex vertex).
Bound max_cyclic_join_k1(const Surface& s);

enum class TripleVariant { Plain, Star, RecursiveEnd };

// Longest middle chain of a chained triple (two arcs plus a linear chain
// of curves with the prescribed crossing pattern).  The tables only prove
// upper bounds here.
Bound max_chained_triple(const Surface& s, TripleVariant variant);

// Longest middle chain of a Y-chained quadruple (three arcs).
Bound max_y_quadruple(const Surface& s);

enum class PathJoinMode {
  K2Fixed,    // bound on the path length m in P_m^c * K_2
  Path2gp1,   // bound on the clique size joined to P_{2g+p+1}^c
  Path2gp,    // bound on the clique size joined to P_{2g+p}^c
};

Bound max_clique_joined_to_path(const Surface& s, PathJoinMode mode);

// Longest linear chain (path complement), quoted from the imported
// full-subgraph classification.
Bound max_linear_chain(const Surface& s);

// Minimal ambient genus forced by a cyclic chain of length m whose
// consecutive intersection numbers are all one: ceil(m/2) - 1.
int min_genus_unit_chain(int m);

}  // namespace curvechain
