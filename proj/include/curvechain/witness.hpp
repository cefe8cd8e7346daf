#pragma once

#include <string>
#include <vector>

#include "curvechain/bounds.hpp"
#include "curvechain/normal.hpp"
#include "curvechain/surface.hpp"

namespace curvechain {

enum class ChainKind {
  CyclicChain,
  SemiCyclic,
  LinearChain,
  ChainedTriple,
  YQuadruple,
  CyclicJoinK1,
  Unverified,
};

// Verified properties of a curve-and-arc system, together with the full
// pairwise geometric intersection matrix.  A failed property is reported
// through the flags, never by throwing.
struct ChainCertificate {
  ChainKind kind = ChainKind::Unverified;
  int length = 0;  // chain curves only (arcs and apex not counted)
  std::vector<std::string> names;
  std::vector<std::vector<long long>> matrix;
  bool all_essential = false;
  bool pairwise_non_isotopic = false;
  bool consecutive_positive = false;
  bool chord_free = false;
  bool condition_star = false;            // triples: no puncture meets both end arcs
  std::vector<std::string> arc_kinds;     // per arc: "recursive" or "plain"
  std::pair<int, int> offending_chord{-1, -1};
  std::string caveat;  // e.g. closed surfaces verified on the punctured model
};

std::string write_certificate(const ChainCertificate& cert);

// Cyclic chain of length m: consecutive curves cross, non-consecutive are
// disjoint, all essential and pairwise non-isotopic.  Closed surfaces
// (p = 0) are modeled on the once-punctured surface.
NormalCurveSystem build_cyclic_witness(const Surface& s, int m);

// Cyclic chain of length m plus one last component (the apex) disjoint
// from and non-isotopic to every chain curve.
NormalCurveSystem build_cyclic_join_k1_witness(const Surface& s, int m);

// Certifiers.  Component order matters: chain curves in cyclic order; the
// apex last; triples have the end arcs first and last; quadruples start
// with delta_1 and end with delta_2, delta_3.
ChainCertificate verify_cyclic_chain(const NormalCurveSystem& sys);
ChainCertificate verify_linear_chain(const NormalCurveSystem& sys);
ChainCertificate verify_cyclic_join_k1(const NormalCurveSystem& sys);
ChainCertificate verify_chained_triple(const NormalCurveSystem& sys, TripleVariant variant);
ChainCertificate verify_y_quadruple(const NormalCurveSystem& sys);

// Marks the closed-surface caveat when the requested surface was modeled
// on a punctured one.
ChainCertificate certify_for(const Surface& requested, ChainCertificate cert);

// Polygon-model construction devices on standard_triangulation(g, p).
// Chord arc from polygon vertex P_u to P_v (1 <= u, v - 2; v <= N - 1).
NormalCoordinates polygon_chord(const Triangulation& tri, int g, int p, int u, int v);
// Closed curve crossing the listed polygon sides in cyclic order; between
// two crossings the strand runs straight across the fan.
NormalCoordinates polygon_closed(const Triangulation& tri, int g, int p,
                                 const std::vector<int>& exit_sides);

// All connected reduced components with every edge weight <= max_weight,
// including arcs; optionally also the edge-parallel arcs.  Deterministic
// order.  Used by the search harnesses.
std::vector<Component> enumerate_components(const Triangulation& tri, int max_weight,
                                            bool include_edge_arcs);

}  // namespace curvechain
