#pragma once

#include <array>
#include <utility>
#include <vector>

#include "curvechain/surface.hpp"

namespace curvechain {

// One side incidence of a triangle.  Conventions used throughout the
// engine: corners of a triangle are 0,1,2 in counterclockwise order, side
// s is the side opposite corner s, running from corner s+1 (the "lo" end)
// to corner s+2 (the "hi" end).  Gluing two sides reverses positions:
// p <-> x-1-p for x strands on the edge.
struct SideRef {
  int tri = -1;
  int side = -1;
  friend bool operator==(const SideRef&, const SideRef&) = default;
  friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

// Triangulation of a punctured surface without boundary (every side is
// glued; the vertices are the punctures).
class Triangulation {
 public:
  int triangles() const { return int(glued_.size()); }
  int edges() const { return int(edge_sides_.size()); }
  int vertices() const { return vertex_count_; }

  SideRef glued(int t, int s) const { return glued_[t][s]; }
  SideRef glued(SideRef r) const { return glued_[r.tri][r.side]; }
  int edge_at(int t, int s) const { return edge_of_[t][s]; }
  int edge_at(SideRef r) const { return edge_of_[r.tri][r.side]; }
  const std::pair<SideRef, SideRef>& edge_sides(int e) const { return edge_sides_[e]; }
  int vertex_at(int t, int corner) const { return vertex_of_[t][corner]; }
  Surface surface() const { return surface_; }

  friend Triangulation build_triangulation(
      int triangle_count, const std::vector<std::pair<SideRef, SideRef>>& gluings);

 private:
  std::vector<std::array<SideRef, 3>> glued_;
  std::vector<std::array<int, 3>> edge_of_;
  std::vector<std::pair<SideRef, SideRef>> edge_sides_;  // index = edge id
  std::vector<std::array<int, 3>> vertex_of_;
  int vertex_count_ = 0;
  Surface surface_;
};

// Builds and checks a triangulation from a perfect matching of the sides.
// Edge ids are assigned in scan order (triangle, then side) of the first
// incidence.  Throws BadParameter when the matching is not a matching and
// MalformedSystem when the quotient is not a punctured hyperbolic surface.
Triangulation build_triangulation(int triangle_count,
                                  const std::vector<std::pair<SideRef, SideRef>>& gluings);

// Fan triangulation of the standard polygon model of S_{g,p} (p >= 1,
// negative Euler characteristic): the N-gon with N = 4g + 2(p-1) carrying
// the word a1 b1 a1' b1' ... ag bg ag' bg' c1 c1' ... c_{p-1} c_{p-1}',
// coned from the base vertex.  Triangle i has corners (P_0, P_{i+1},
// P_{i+2}).
Triangulation standard_triangulation(int g, int p);

}  // namespace curvechain
