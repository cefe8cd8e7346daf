#pragma once

#include <array>
#include <string>
#include <vector>

#include "curvechain/triangulation.hpp"

namespace curvechain {

// Normal coordinates of a curve-and-arc system with respect to a fixed
// triangulation: one crossing weight per edge, plus per triangle corner
// the number of strands that terminate at the corner's vertex (such a
// strand enters through the opposite side).  Inside a triangle the strands
// decompose into corner arcs (c_i of them cutting off corner i) and
// terminal strands; writing x_i for the weight on side i and v_i for the
// terminals at corner i, c_i = (y_{i+1} + y_{i+2} - y_i) / 2 with
// y_i = x_i - v_i.
struct NormalCoordinates {
  std::vector<int> weights;               // per edge
  std::vector<std::array<int, 3>> ends;   // per triangle, per corner

  friend bool operator==(const NormalCoordinates&, const NormalCoordinates&) = default;
};

NormalCoordinates zero_coordinates(const Triangulation& tri);
NormalCoordinates add(const NormalCoordinates& a, const NormalCoordinates& b);
bool is_zero(const NormalCoordinates& c);

// Corner arc counts of triangle t, or throws MalformedSystem when the
// matching constraints fail.
std::array<int, 3> corner_counts(const Triangulation& tri, const NormalCoordinates& c, int t);

// Full reduced-position validity: sizes, nonnegativity, the matching
// constraints in every triangle, and the reducedness constraints (at most
// one corner of a triangle carries terminals, and no corner carries both
// terminals and corner arcs).  Throws MalformedSystem.
void validate_coordinates(const Triangulation& tri, const NormalCoordinates& c);

// Connected pieces of a coordinate vector, traced strand by strand.
std::vector<NormalCoordinates> split_components(const Triangulation& tri,
                                                const NormalCoordinates& c);

// Coordinates of the link of a vertex (a small circle around the
// puncture).
NormalCoordinates vertex_link(const Triangulation& tri, int vertex);

enum class ComponentClass { EssentialClosed, Peripheral, Arc };

// The coordinates must be valid and connected.
ComponentClass classify_component(const Triangulation& tri, const NormalCoordinates& c);

// One named component of a system: either normal coordinates or an arc
// that runs parallel to a triangulation edge (which normal coordinates
// cannot express).
struct Component {
  std::string name;
  bool edge_arc = false;
  int edge = -1;
  NormalCoordinates coords;
};

struct NormalCurveSystem {
  Triangulation tri;
  std::vector<Component> components;
};

// Every component valid, connected and nonempty, names unique.
void validate_system(const NormalCurveSystem& sys);

// Valid components are in reduced position, where the isotopy class is
// determined by the coordinates.
bool is_isotopic(const Triangulation& tri, const Component& a, const Component& b);

// System serialization ("ncs" text format).  Canonical writer output:
// components sorted by name, zero entries omitted.
std::string write_system(const NormalCurveSystem& sys);
NormalCurveSystem read_system(const std::string& text);

}  // namespace curvechain
