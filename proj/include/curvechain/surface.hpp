#pragma once

#include <compare>
#include <string>
#include <vector>

namespace curvechain {

// Orientable surface of finite type: genus, punctures and boundary
// components.  Values are immutable and compare componentwise.
struct Surface {
  int genus = 0;
  int punctures = 0;
  int boundary = 0;

  friend auto operator<=>(const Surface&, const Surface&) = default;
};

int euler_char(const Surface& s);

// 3g - 3 + p + b: the maximal rank of a free abelian group generated by
// multitwists, i.e. the size of a pants decomposition.  The convention is
// not spelled out by the source tables; this one reproduces the quoted
// value 2 for the twice-punctured torus.
int complexity(const Surface& s);

// Fill punctures back in as boundary circles: (g, p, b) -> (g, 0, p + b).
Surface compactify(const Surface& s);

// Forget the puncture/boundary distinction: (g, p, b) -> (g, p + b, 0).
// Curve-graph level statements are insensitive to it.
Surface as_curve_graph_surface(const Surface& s);

// Token form used across CLI and serializers: "S{g},{p},{b}".
std::string to_token(const Surface& s);
Surface surface_from_token(const std::string& token);

enum class CutKind { NonSeparating, Separating };

// Result of cutting a surface along an arc or a closed curve: the
// multiset of complementary piece types, canonically sorted.
struct CutOutcome {
  std::vector<Surface> pieces;
  std::string constraint_note;
};

// Optional two-sided partition for separating cuts.
struct CutPartition {
  int g1 = 0, p1 = 0, g2 = 0, p2 = 0;
};

// Cutting a surface with boundary along a properly embedded essential arc.
// Here the surface is written in the boundary convention (g, 0, b);
// punctures of s are first folded into boundary.  Non-separating arcs need
// genus; separating cuts obey g1 + g2 = g, b1 + b2 = b + 1, each bi >= 1
// and bi >= 2 whenever gi = 0.  With no partition given, the separating
// form enumerates every admissible partition (one outcome per partition).
CutOutcome cut_along_arc(const Surface& s, CutKind kind);
CutOutcome cut_along_arc(const Surface& s, CutKind kind, const CutPartition& part);
std::vector<CutPartition> enumerate_arc_partitions(const Surface& s);

// Cutting along an essential simple closed curve, in the same boundary
// convention: non-separating opens one handle into two boundary circles;
// separating splits into two pieces with g1 + g2 = g, b1 + b2 = b + 2,
// neither piece a disk.
CutOutcome cut_along_closed_curve(const Surface& s, CutKind kind);
CutOutcome cut_along_closed_curve(const Surface& s, CutKind kind, const CutPartition& part);
std::vector<CutPartition> enumerate_curve_partitions(const Surface& s);

}  // namespace curvechain
