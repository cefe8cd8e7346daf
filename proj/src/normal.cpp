#include "curvechain/normal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "curvechain/errors.hpp"
#include "curvechain/trace.hpp"

namespace curvechain {

NormalCoordinates zero_coordinates(const Triangulation& tri) {
  NormalCoordinates c;
  c.weights.assign(size_t(tri.edges()), 0);
  c.ends.assign(size_t(tri.triangles()), {0, 0, 0});
  return c;
}

NormalCoordinates add(const NormalCoordinates& a, const NormalCoordinates& b) {
  if (a.weights.size() != b.weights.size() || a.ends.size() != b.ends.size())
    throw IncompatibleTriangulation("cannot add coordinates over different triangulations");
  NormalCoordinates out = a;
  for (size_t e = 0; e < out.weights.size(); ++e) out.weights[e] += b.weights[e];
  for (size_t t = 0; t < out.ends.size(); ++t)
    for (int i = 0; i < 3; ++i) out.ends[t][i] += b.ends[t][i];
  return out;
}

bool is_zero(const NormalCoordinates& c) {
  for (int w : c.weights)
    if (w != 0) return false;
  for (const auto& e : c.ends)
    if (e[0] || e[1] || e[2]) return false;
  return true;
}

namespace {

void check_sizes(const Triangulation& tri, const NormalCoordinates& c) {
  if (int(c.weights.size()) != tri.edges() || int(c.ends.size()) != tri.triangles())
    throw MalformedSystem("coordinate vector does not fit the triangulation");
}

int side_weight(const Triangulation& tri, const NormalCoordinates& c, int t, int s) {
  return c.weights[size_t(tri.edge_at(t, s))];
}

}  // namespace

std::array<int, 3> corner_counts(const Triangulation& tri, const NormalCoordinates& c, int t) {
  check_sizes(tri, c);
  int y[3];
  for (int i = 0; i < 3; ++i) {
    const int x = side_weight(tri, c, t, i);
    const int v = c.ends[size_t(t)][i];
    if (x < 0 || v < 0) throw MalformedSystem("negative coordinate entry");
    y[i] = x - v;
    if (y[i] < 0)
      throw MalformedSystem("more terminals than strands on a side of triangle " +
                            std::to_string(t));
  }
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) {
    const int twice = y[(i + 1) % 3] + y[(i + 2) % 3] - y[i];
    if (twice < 0 || twice % 2 != 0)
      throw MalformedSystem("strands do not match up inside triangle " + std::to_string(t));
    out[size_t(i)] = twice / 2;
  }
  return out;
}

void validate_coordinates(const Triangulation& tri, const NormalCoordinates& c) {
  check_sizes(tri, c);
  for (int t = 0; t < tri.triangles(); ++t) {
    const auto corners = corner_counts(tri, c, t);
    int terminal_corners = 0;
    for (int i = 0; i < 3; ++i) {
      const int v = c.ends[size_t(t)][i];
      if (v > 0) {
        ++terminal_corners;
        if (corners[size_t(i)] > 0)
          throw MalformedSystem("corner " + std::to_string(i) + " of triangle " +
                                std::to_string(t) +
                                " carries both terminals and corner arcs");
      }
    }
    if (terminal_corners > 1)
      throw MalformedSystem("triangle " + std::to_string(t) +
                            " carries terminals at more than one corner");
  }
}

// --- strand tracing ----------------------------------------------------------

namespace {

// in-triangle structure of the strands crossing side s at position q
// (positions run from the lo end, corner s+1)
struct Connection {
  bool terminal = false;  // strand dies at the vertex at corner s
  int side = -1;          // otherwise the other side slot of the corner arc
  int pos = -1;
};

struct SlotTable {
  const Triangulation& tri;
  const NormalCoordinates& c;
  std::vector<std::array<int, 3>> corner;  // corner arc counts per triangle
  std::vector<std::array<int, 3>> x;       // side weights per triangle

  explicit SlotTable(const Triangulation& tri_, const NormalCoordinates& c_)
      : tri(tri_), c(c_) {
    corner.reserve(size_t(tri.triangles()));
    x.assign(size_t(tri.triangles()), {0, 0, 0});
    for (int t = 0; t < tri.triangles(); ++t) {
      corner.push_back(corner_counts(tri, c, t));
      for (int s = 0; s < 3; ++s) x[size_t(t)][s] = side_weight(tri, c, t, s);
    }
  }

  Connection connection(int t, int s, int q) const {
    const int lo_arcs = corner[size_t(t)][(s + 1) % 3];
    const int terminals = c.ends[size_t(t)][s];
    if (q < lo_arcs)  // corner arc at corner s+1, q-th innermost
      return Connection{false, (s + 2) % 3, x[size_t(t)][(s + 2) % 3] - 1 - q};
    if (q < lo_arcs + terminals) return Connection{true, -1, -1};
    // corner arc at corner s+2, which sits at the lo end of side s+1
    const int k = x[size_t(t)][s] - 1 - q;
    return Connection{false, (s + 1) % 3, k};
  }

  // slot reached after crossing the edge from (t, s, q)
  void cross(int& t, int& s, int& q) const {
    SideRef other = tri.glued(t, s);
    q = x[size_t(t)][s] - 1 - q;
    t = other.tri;
    s = other.side;
  }
};

}  // namespace

std::vector<TracedComponent> trace_components(const Triangulation& tri,
                                              const NormalCoordinates& c) {
  validate_coordinates(tri, c);
  SlotTable table(tri, c);

  std::vector<std::array<std::vector<char>, 3>> seen(size_t(tri.triangles()));
  for (int t = 0; t < tri.triangles(); ++t)
    for (int s = 0; s < 3; ++s)
      seen[size_t(t)][s].assign(size_t(table.x[size_t(t)][s]), 0);

  std::vector<TracedComponent> out;

  // walks from the slot (t, s, q), which is about to cross its edge, until
  // a terminal or until the walk closes up
  auto walk = [&](int t, int s, int q, bool from_terminal) {
    TracedComponent comp;
    comp.trace.closed = !from_terminal;
    comp.coords = zero_coordinates(tri);
    if (from_terminal) comp.coords.ends[size_t(t)][s] += 1;
    const int t0 = t, s0 = s, q0 = q;
    while (true) {
      seen[size_t(t)][s][size_t(q)] = 1;
      table.cross(t, s, q);
      seen[size_t(t)][s][size_t(q)] = 1;
      comp.coords.weights[size_t(tri.edge_at(t, s))] += 1;
      TraceStep step;
      step.enter = SideRef{t, s};
      Connection conn = table.connection(t, s, q);
      if (conn.terminal) {
        step.exit_side = -1;
        comp.trace.steps.push_back(step);
        comp.coords.ends[size_t(t)][s] += 1;
        break;
      }
      step.exit_side = conn.side;
      comp.trace.steps.push_back(step);
      s = conn.side;
      q = conn.pos;
      if (!from_terminal && t == t0 && s == s0 && q == q0) break;
    }
    out.push_back(std::move(comp));
  };

  // arcs first: start from each unvisited terminal slot
  for (int t = 0; t < tri.triangles(); ++t)
    for (int s = 0; s < 3; ++s) {
      const int lo = table.corner[size_t(t)][(s + 1) % 3];
      for (int k = 0; k < c.ends[size_t(t)][s]; ++k)
        if (!seen[size_t(t)][s][size_t(lo + k)]) walk(t, s, lo + k, true);
    }
  // then closed strands
  for (int t = 0; t < tri.triangles(); ++t)
    for (int s = 0; s < 3; ++s)
      for (int q = 0; q < table.x[size_t(t)][s]; ++q)
        if (!seen[size_t(t)][s][size_t(q)]) walk(t, s, q, false);

  return out;
}

Trace reverse_trace(const Triangulation& tri, const Trace& tr) {
  Trace rev;
  rev.closed = tr.closed;
  const int m = int(tr.steps.size());
  rev.steps.resize(size_t(m));
  for (int j = 0; j < m; ++j) {
    const int jr = m - 1 - j;
    rev.steps[size_t(jr)].enter = tri.glued(tr.steps[size_t(j)].enter);
    if (j == 0 && !tr.closed) {
      rev.steps[size_t(jr)].exit_side = -1;  // the original start terminal
    } else {
      const TraceStep& prev = tr.steps[size_t((j - 1 + m) % m)];
      rev.steps[size_t(jr)].exit_side = prev.enter.side;
    }
  }
  return rev;
}

std::vector<NormalCoordinates> split_components(const Triangulation& tri,
                                                const NormalCoordinates& c) {
  std::vector<NormalCoordinates> out;
  for (auto& tc : trace_components(tri, c)) out.push_back(std::move(tc.coords));
  return out;
}

NormalCoordinates vertex_link(const Triangulation& tri, int vertex) {
  if (vertex < 0 || vertex >= tri.vertices()) throw BadParameter("vertex out of range");
  NormalCoordinates link = zero_coordinates(tri);
  for (int t = 0; t < tri.triangles(); ++t)
    for (int i = 0; i < 3; ++i)
      if (tri.vertex_at(t, i) == vertex)
        link.weights[size_t(tri.edge_at(t, (i + 2) % 3))] += 1;
  return link;
}

ComponentClass classify_component(const Triangulation& tri, const NormalCoordinates& c) {
  validate_coordinates(tri, c);
  if (is_zero(c)) throw MalformedSystem("empty coordinates cannot be classified");
  for (const auto& e : c.ends)
    if (e[0] || e[1] || e[2]) return ComponentClass::Arc;
  for (int v = 0; v < tri.vertices(); ++v)
    if (c == vertex_link(tri, v)) return ComponentClass::Peripheral;
  return ComponentClass::EssentialClosed;
}

void validate_system(const NormalCurveSystem& sys) {
  std::set<std::string> names;
  for (const Component& comp : sys.components) {
    if (comp.name.empty() || comp.name.find_first_of(" \t\n") != std::string::npos)
      throw MalformedSystem("component names must be nonempty without whitespace");
    if (!names.insert(comp.name).second)
      throw MalformedSystem("duplicate component name: " + comp.name);
    if (comp.edge_arc) {
      if (comp.edge < 0 || comp.edge >= sys.tri.edges())
        throw MalformedSystem("edge arc " + comp.name + " references a bad edge");
      if (!comp.coords.weights.empty() && !is_zero(comp.coords))
        throw MalformedSystem("edge arc " + comp.name + " cannot carry coordinates");
      continue;
    }
    validate_coordinates(sys.tri, comp.coords);
    if (is_zero(comp.coords)) throw MalformedSystem("component " + comp.name + " is empty");
    if (split_components(sys.tri, comp.coords).size() != 1)
      throw MalformedSystem("component " + comp.name + " is not connected");
  }
}

bool is_isotopic(const Triangulation& tri, const Component& a, const Component& b) {
  (void)tri;
  if (a.edge_arc != b.edge_arc) return false;
  if (a.edge_arc) return a.edge == b.edge;
  return a.coords == b.coords;
}

// --- serialization -----------------------------------------------------------

std::string write_system(const NormalCurveSystem& sys) {
  std::ostringstream out;
  const Surface s = sys.tri.surface();
  out << "ncs 1\n";
  out << "surface " << s.genus << " " << s.punctures << "\n";
  for (int t = 0; t < sys.tri.triangles(); ++t) {
    out << "tri " << t;
    for (int side = 0; side < 3; ++side) {
      SideRef r = sys.tri.glued(t, side);
      out << " " << r.tri << ":" << r.side;
    }
    out << "\n";
  }
  std::vector<const Component*> order;
  for (const Component& comp : sys.components) order.push_back(&comp);
  std::sort(order.begin(), order.end(),
            [](const Component* a, const Component* b) { return a->name < b->name; });
  for (const Component* comp : order) {
    if (comp->edge_arc) {
      out << "edge " << comp->name << " " << comp->edge << "\n";
      continue;
    }
    out << "curve " << comp->name;
    for (int w : comp->coords.weights) out << " " << w;
    out << "\n";
    for (size_t t = 0; t < comp->coords.ends.size(); ++t)
      for (int i = 0; i < 3; ++i)
        if (comp->coords.ends[t][i] != 0)
          out << "ends " << t << "." << i << ":" << comp->coords.ends[t][i] << "\n";
  }
  return out.str();
}

NormalCurveSystem read_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto fail = [](const std::string& why) -> void { throw ParseError("ncs: " + why); };

  if (!std::getline(in, line) || line != "ncs 1") fail("missing 'ncs 1' header");
  int g = -1, p = -1;
  {
    if (!std::getline(in, line)) fail("missing surface line");
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word != "surface" || !(ls >> g >> p)) fail("bad surface line");
  }

  std::vector<std::pair<SideRef, SideRef>> gluings;
  std::vector<std::array<SideRef, 3>> rows;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "tri") {
      int t;
      if (!(ls >> t) || t != int(rows.size())) fail("triangle lines must be in order");
      std::array<SideRef, 3> row;
      for (int s = 0; s < 3; ++s) {
        std::string ref;
        if (!(ls >> ref)) fail("short triangle line");
        size_t colon = ref.find(':');
        if (colon == std::string::npos) fail("bad side reference " + ref);
        try {
          row[size_t(s)] = SideRef{std::stoi(ref.substr(0, colon)),
                                   std::stoi(ref.substr(colon + 1))};
        } catch (const std::exception&) {
          fail("bad side reference " + ref);
        }
      }
      rows.push_back(row);
    } else {
      body.push_back(line);
    }
  }
  if (rows.empty()) fail("no triangles");
  for (int t = 0; t < int(rows.size()); ++t)
    for (int s = 0; s < 3; ++s) {
      SideRef other = rows[size_t(t)][s];
      if (std::make_pair(t, s) < std::make_pair(other.tri, other.side))
        gluings.push_back({SideRef{t, s}, other});
      else if (other.tri < 0 || other.tri >= int(rows.size()) || other.side < 0 ||
               other.side >= 3 || rows[size_t(other.tri)][size_t(other.side)] != SideRef{t, s})
        fail("gluing table is not symmetric");
    }

  NormalCurveSystem sys;
  try {
    sys.tri = build_triangulation(int(rows.size()), gluings);
  } catch (const Error& err) {
    fail(std::string("bad triangulation: ") + err.what());
  }
  if (sys.tri.surface() != Surface{g, p, 0}) fail("surface line does not match the gluing");

  Component* current = nullptr;
  for (const std::string& raw : body) {
    std::istringstream ls(raw);
    std::string word;
    ls >> word;
    if (word == "curve") {
      Component comp;
      if (!(ls >> comp.name)) fail("curve line without a name");
      comp.coords = zero_coordinates(sys.tri);
      for (int e = 0; e < sys.tri.edges(); ++e)
        if (!(ls >> comp.coords.weights[size_t(e)])) fail("short weight list for " + comp.name);
      int extra;
      if (ls >> extra) fail("too many weights for " + comp.name);
      sys.components.push_back(std::move(comp));
      current = &sys.components.back();
    } else if (word == "edge") {
      Component comp;
      comp.edge_arc = true;
      if (!(ls >> comp.name >> comp.edge)) fail("bad edge line");
      sys.components.push_back(std::move(comp));
      current = nullptr;
    } else if (word == "ends") {
      if (current == nullptr) fail("ends line without a preceding curve line");
      std::string spec;
      if (!(ls >> spec)) fail("bad ends line");
      size_t dot = spec.find('.'), colon = spec.find(':');
      if (dot == std::string::npos || colon == std::string::npos || colon < dot)
        fail("bad ends entry " + spec);
      int t = -1, corner = -1, count = -1;
      try {
        t = std::stoi(spec.substr(0, dot));
        corner = std::stoi(spec.substr(dot + 1, colon - dot - 1));
        count = std::stoi(spec.substr(colon + 1));
      } catch (const std::exception&) {
        fail("bad ends entry " + spec);
      }
      if (t < 0 || t >= sys.tri.triangles() || corner < 0 || corner >= 3 || count <= 0)
        fail("ends entry out of range: " + spec);
      current->coords.ends[size_t(t)][corner] += count;
    } else {
      fail("unknown line: " + raw);
    }
  }
  try {
    validate_system(sys);
  } catch (const Error& err) {
    fail(std::string("invalid system: ") + err.what());
  }
  return sys;
}

}  // namespace curvechain
