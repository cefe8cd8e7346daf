#include "curvechain/witness.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "curvechain/bounds.hpp"
#include "curvechain/cells.hpp"
#include "curvechain/errors.hpp"
#include "curvechain/intersect.hpp"
#include "curvechain/triangulation.hpp"

namespace curvechain {

namespace {

// Fan polygon bookkeeping for standard_triangulation(g, p): an N-gon with
// N = 4g + 2(p-1) sides triangulated by the diagonals (P_0, P_k).
struct PolygonModel {
  const Triangulation& tri;
  int g, p, N;

  PolygonModel(const Triangulation& t, int g_, int p_) : tri(t), g(g_), p(p_) {
    if (p_ < 1 || (g_ == 0 && p_ < 3)) throw BadParameter("no polygon model for this surface");
    N = 4 * g_ + 2 * (p_ - 1);
    if (tri.triangles() != N - 2) throw IncompatibleTriangulation("not the standard fan model");
  }

  int mate(int m) const {
    if (m < 4 * g) {
      const int r = m % 4;
      return m + (r < 2 ? 2 : -2);
    }
    return ((m - 4 * g) % 2 == 0) ? m + 1 : m - 1;
  }

  // (triangle, side) carrying polygon side m
  SideRef side_ref(int m) const {
    if (m == 0) return SideRef{0, 2};
    if (m == N - 1) return SideRef{N - 3, 1};
    return SideRef{m - 1, 0};
  }

  int side_edge(int m) const {
    const SideRef r = side_ref(m);
    return tri.edge_at(r.tri, r.side);
  }

  // diagonal (P_0, P_k), 2 <= k <= N - 2
  int diag_edge(int k) const { return tri.edge_at(k - 2, 1); }
};

void add_fan_segment(const PolygonModel& pm, NormalCoordinates& c, SideRef from, SideRef to) {
  if (from.tri == to.tri && from.side == to.side)
    throw BadParameter("closed-curve segment enters and leaves the same side");
  const int a = std::min(from.tri, to.tri);
  const int b = std::max(from.tri, to.tri);
  for (int t = a; t < b; ++t) c.weights[size_t(pm.diag_edge(t + 2))] += 1;
}

long long pair_intersection(const Triangulation& tri, const Component& a, const Component& b,
                            std::vector<std::vector<long long>>& cache, int i, int j) {
  if (cache[size_t(i)][size_t(j)] < 0)
    cache[size_t(i)][size_t(j)] = cache[size_t(j)][size_t(i)] = geometric_intersection(tri, a, b);
  return cache[size_t(i)][size_t(j)];
}

bool component_essential(const Triangulation& tri, const Component& c, bool& is_arc) {
  if (c.edge_arc) {
    is_arc = true;
    return true;  // triangulation edges never bound disks or cusps
  }
  const ComponentClass cls = classify_component(tri, c.coords);
  is_arc = (cls == ComponentClass::Arc);
  return cls != ComponentClass::Peripheral;
}

// punctures an arc ends on (by vertex orbit id); size 1 or 2
std::vector<int> arc_endpoints(const Triangulation& tri, const Component& c) {
  std::set<int> verts;
  if (c.edge_arc) {
    const auto sides = tri.edge_sides(c.edge);
    const SideRef r = sides.first;
    verts.insert(tri.vertex_at(r.tri, (r.side + 1) % 3));
    verts.insert(tri.vertex_at(r.tri, (r.side + 2) % 3));
  } else {
    for (int t = 0; t < tri.triangles(); ++t)
      for (int i = 0; i < 3; ++i)
        if (c.coords.ends[size_t(t)][size_t(i)] > 0) verts.insert(tri.vertex_at(t, i));
  }
  return std::vector<int>(verts.begin(), verts.end());
}

// Arc disjointness as seen after blowing the punctures up to boundary
// circles.  Two arcs that both run from one puncture back to itself can be
// interior-disjoint and still have their four ends interleaved around that
// puncture, in which case no disjoint realization survives the blow-up.
// The joint regular neighborhood detects this: unlinked ends give a planar
// neighborhood with three boundary circles, linked ends a one-holed torus.
bool arc_pair_blowup_disjoint(const Triangulation& tri, const Component& a, const Component& b) {
  if (geometric_intersection(tri, a, b) != 0) return false;
  const auto ends_a = arc_endpoints(tri, a);
  const auto ends_b = arc_endpoints(tri, b);
  if (ends_a.size() != 1 || ends_a != ends_b) return true;
  NormalCurveSystem pair;
  pair.tri = tri;
  pair.components.push_back(a);
  pair.components.push_back(b);
  pair.components[0].name = "a";
  pair.components[1].name = "b";
  return neighborhood_boundary(pair).size() == 3;
}

struct SystemScan {
  std::vector<std::vector<long long>> matrix;
  bool all_essential = true;
  bool pairwise_non_isotopic = true;
  std::vector<bool> is_arc;
};

SystemScan scan_system(const NormalCurveSystem& sys) {
  const int n = int(sys.components.size());
  SystemScan out;
  out.matrix.assign(size_t(n), std::vector<long long>(size_t(n), 0));
  out.is_arc.assign(size_t(n), false);
  for (int i = 0; i < n; ++i) {
    bool arc = false;
    if (!component_essential(sys.tri, sys.components[size_t(i)], arc)) out.all_essential = false;
    out.is_arc[size_t(i)] = arc;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.matrix[size_t(i)][size_t(j)] = out.matrix[size_t(j)][size_t(i)] =
          geometric_intersection(sys.tri, sys.components[size_t(i)], sys.components[size_t(j)]);
      if (is_isotopic(sys.tri, sys.components[size_t(i)], sys.components[size_t(j)]))
        out.pairwise_non_isotopic = false;
    }
  for (int i = 0; i < n; ++i) out.matrix[size_t(i)][size_t(i)] = 0;
  return out;
}

void fill_names(ChainCertificate& cert, const NormalCurveSystem& sys) {
  for (const auto& c : sys.components) cert.names.push_back(c.name);
}

}  // namespace

NormalCoordinates polygon_chord(const Triangulation& tri, int g, int p, int u, int v) {
  const PolygonModel pm(tri, g, p);
  if (u < 1 || v > pm.N - 1 || v < u + 2) throw BadParameter("chord endpoints out of order");
  NormalCoordinates c = zero_coordinates(tri);
  for (int k = u + 1; k < v; ++k) c.weights[size_t(pm.diag_edge(k))] += 1;
  c.ends[size_t(u - 1)][1] = 1;
  c.ends[size_t(v - 2)][2] = 1;
  validate_coordinates(tri, c);
  if (split_components(tri, c).size() != 1) throw BadParameter("chord is not a single arc");
  return c;
}

NormalCoordinates polygon_closed(const Triangulation& tri, int g, int p,
                                 const std::vector<int>& exit_sides) {
  const PolygonModel pm(tri, g, p);
  const int r = int(exit_sides.size());
  if (r == 0) throw BadParameter("empty exit list");
  NormalCoordinates c = zero_coordinates(tri);
  for (int i = 0; i < r; ++i) {
    const int m = exit_sides[size_t(i)];
    if (m < 0 || m >= pm.N) throw BadParameter("exit side out of range");
    c.weights[size_t(pm.side_edge(m))] += 1;
    const SideRef from = pm.side_ref(pm.mate(m));
    const SideRef to = pm.side_ref(exit_sides[size_t((i + 1) % r)]);
    add_fan_segment(pm, c, from, to);
  }
  validate_coordinates(tri, c);
  if (split_components(tri, c).size() != 1)
    throw BadParameter("exit list does not cut out a single embedded curve");
  return c;
}

std::vector<Component> enumerate_components(const Triangulation& tri, int max_weight,
                                            bool include_edge_arcs) {
  const int E = tri.edges();
  const int T = tri.triangles();

  // triangles become fully determined once their highest edge is assigned
  std::vector<int> last_edge(size_t(T), 0);
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < 3; ++s) last_edge[size_t(t)] = std::max(last_edge[size_t(t)], tri.edge_at(t, s));
  std::vector<std::vector<int>> complete_at{size_t(E)};
  for (int t = 0; t < T; ++t) complete_at[size_t(last_edge[size_t(t)])].push_back(t);

  // a connected component has zero terminals (closed curve) or exactly two
  std::vector<std::vector<std::array<int, 3>>> ends_configs;
  {
    std::vector<std::array<int, 3>> zero(size_t(T), {0, 0, 0});
    ends_configs.push_back(zero);
    for (int t = 0; t < T; ++t)
      for (int i = 0; i < 3; ++i) {
        auto cfg = zero;
        cfg[size_t(t)][size_t(i)] = 2;
        ends_configs.push_back(cfg);
      }
    for (int t1 = 0; t1 < T; ++t1)
      for (int i1 = 0; i1 < 3; ++i1)
        for (int t2 = t1 + 1; t2 < T; ++t2)
          for (int i2 = 0; i2 < 3; ++i2) {
            auto cfg = zero;
            cfg[size_t(t1)][size_t(i1)] = 1;
            cfg[size_t(t2)][size_t(i2)] = 1;
            ends_configs.push_back(cfg);
          }
  }

  std::vector<Component> out;
  std::vector<int> w(size_t(E), 0);
  for (const auto& ends : ends_configs) {
    auto triangle_ok = [&](int t) {
      int y[3];
      for (int i = 0; i < 3; ++i) {
        y[i] = w[size_t(tri.edge_at(t, i))] - ends[size_t(t)][size_t(i)];
        if (y[i] < 0) return false;
      }
      for (int i = 0; i < 3; ++i) {
        const int twice = y[(i + 1) % 3] + y[(i + 2) % 3] - y[i];
        if (twice < 0 || twice % 2 != 0) return false;
        if (ends[size_t(t)][size_t(i)] > 0 && twice != 0) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int e) -> void {
      if (e == E) {
        NormalCoordinates c = zero_coordinates(tri);
        c.weights = w;
        for (int t = 0; t < T; ++t) c.ends[size_t(t)] = ends[size_t(t)];
        if (is_zero(c)) return;
        if (split_components(tri, c).size() != 1) return;
        Component comp;
        comp.name = "s" + std::to_string(out.size());
        comp.coords = std::move(c);
        out.push_back(std::move(comp));
        return;
      }
      for (int v = 0; v <= max_weight; ++v) {
        w[size_t(e)] = v;
        bool ok = true;
        for (int t : complete_at[size_t(e)])
          if (!triangle_ok(t)) {
            ok = false;
            break;
          }
        if (ok) self(self, e + 1);
      }
      w[size_t(e)] = 0;
    };
    rec(rec, 0);
  }
  if (include_edge_arcs)
    for (int e = 0; e < E; ++e) {
      Component comp;
      comp.name = "s" + std::to_string(out.size());
      comp.edge_arc = true;
      comp.edge = e;
      comp.coords = zero_coordinates(tri);
      out.push_back(std::move(comp));
    }
  return out;
}

namespace {

Component exit_curve(const Triangulation& tri, int g, int p, const std::string& name,
                     const std::vector<int>& exits) {
  Component c;
  c.name = name;
  c.coords = polygon_closed(tri, g, p, exits);
  return c;
}

// boundary circle of a neighborhood of an arc between two punctures
Component arc_circle(const Triangulation& tri, const std::string& name, Component arc) {
  NormalCurveSystem sys;
  sys.tri = tri;
  arc.name = "arc";
  sys.components.push_back(std::move(arc));
  const auto circles = neighborhood_boundary(sys);
  for (const auto& c : circles)
    if (classify_component(tri, c) == ComponentClass::EssentialClosed) {
      Component out;
      out.name = name;
      out.coords = c;
      return out;
    }
  throw BadParameter("arc neighborhood has no essential boundary circle");
}

Component side_arc_circle(const Triangulation& tri, int g, int p, const std::string& name,
                          int side) {
  const PolygonModel pm(tri, g, p);
  Component arc;
  arc.edge_arc = true;
  arc.edge = pm.side_edge(side);
  arc.coords = zero_coordinates(tri);
  return arc_circle(tri, name, std::move(arc));
}

Component chord_circle(const Triangulation& tri, int g, int p, const std::string& name, int u,
                       int v) {
  Component arc;
  arc.coords = polygon_chord(tri, g, p, u, v);
  return arc_circle(tri, name, std::move(arc));
}

// necklace of circles around consecutive puncture pairs on the sphere
std::vector<Component> sphere_necklace(const Triangulation& tri, int p, int m) {
  std::vector<Component> out;
  out.push_back(side_arc_circle(tri, 0, p, "r0", 0));
  for (int i = 2; i < m; ++i)
    out.push_back(chord_circle(tri, 0, p, "r" + std::to_string(i - 1), 2 * i - 3, 2 * i - 1));
  out.push_back(side_arc_circle(tri, 0, p, "r" + std::to_string(m - 1), 2 * m - 3));
  return out;
}

}  // namespace

NormalCurveSystem build_cyclic_witness(const Surface& s, int m) {
  const int g = s.genus;
  const int p = std::max(s.punctures + s.boundary, 1);
  NormalCurveSystem sys;
  sys.tri = standard_triangulation(g, p);
  const Triangulation& tri = sys.tri;
  auto ex = [&](const std::string& name, const std::vector<int>& exits) {
    sys.components.push_back(exit_curve(tri, g, p, name, exits));
  };

  if (g == 0) {
    if (p < 5 || m < 3 || m > p) throw OutOfRange("no cyclic chain of this length here");
    sys.components = sphere_necklace(tri, p, m);
    return sys;
  }
  if (m < 3) throw OutOfRange("cyclic chains start at length three");
  if (m == 3) {
    ex("a", {0});
    ex("b", {1});
    ex("c", {0, 1});
    return sys;
  }
  if (m == 4) {
    if (p >= 2) {
      ex("a", {0});
      ex("b", {1});
      ex("c", {0, 4 * g});
      ex("d", {1, 4 * g});
    } else if (g >= 2) {
      ex("a", {0});
      ex("b", {1});
      ex("c", {0, 4});
      ex("d", {1, 5});
    } else {
      throw OutOfRange("no cyclic chain of this length here");
    }
    return sys;
  }
  if (g == 1 && p == 2 && m == 5) {
    ex("a", {0});
    ex("b", {0, 0, 0, 0, 3});
    ex("c", {0, 0, 4, 1, 4, 3});
    ex("d", {0, 0, 3, 3});
    ex("e", {0, 0, 0, 0, 4, 3});
    return sys;
  }
  // m >= 5 from here on
  if (p >= 3 && m <= 2 * g + p) {
    // beads around punctures, then a ladder across the handles
    const int h = std::min(g, (m - 2) / 2);
    const int k = m - 1 - 2 * h;
    if (k < 1 || k > p - 1) throw OutOfRange("no cyclic chain of this length here");
    sys.components.push_back(side_arc_circle(tri, g, p, "r0", 4 * g));
    for (int i = 1; i < k; ++i)
      sys.components.push_back(chord_circle(tri, g, p, "r" + std::to_string(i),
                                            4 * g + 2 * i - 1, 4 * g + 2 * i + 1));
    const int ck = 4 * g + 2 * (k - 1);
    if (h == 1) {
      ex("va", {1, ck});
      ex("a1", {0});
      std::vector<int> vb{1};
      for (int i = 0; i < k; ++i) vb.push_back(4 * g + 2 * i);
      ex("vb", vb);
    } else {
      std::vector<int> va{0, 1};
      for (int j = 1; j < h; ++j) va.push_back(4 * j);
      va.push_back(ck);
      ex("va", va);
      for (int j = 1; j <= h; ++j) {
        ex("a" + std::to_string(j), {4 * (j - 1)});
        if (j < h)
          ex("n" + std::to_string(j), {4 * (j - 1) + 1, 4 * j, 4 * j + 1, 4 * j + 2});
      }
      std::vector<int> vb;
      for (int j = 0; j < h; ++j) vb.push_back(4 * j);
      vb.push_back(4 * (h - 1) + 1);
      for (int i = 0; i < k; ++i) vb.push_back(4 * g + 2 * i);
      ex("vb", vb);
    }
    return sys;
  }
  if (g >= 2 && p == 2 && m == 2 * g + 3) {
    // full-length chain through both punctures: bead circles at two corners,
    // a ladder across the handles, and two chord circles closing the loop
    sys.components.push_back(side_arc_circle(tri, g, p, "s0", 0));
    sys.components.push_back(side_arc_circle(tri, g, p, "s1", 1));
    if (g == 2) {
      ex("w", {1, 4, 8});
      ex("u", {4, 7});
      ex("v", {4, 8});
    } else {
      std::vector<int> w{1, 4, 5};
      for (int j = 2; j < g; ++j) w.push_back(4 * j);
      w.push_back(4 * g);
      ex("w", w);
      ex("a2", {5});
      sys.components.push_back(chord_circle(tri, g, p, "c2", 5, 7));
      ex("n2", {5, 8, 11});
      for (int j = 3; j < g; ++j) {
        ex("a" + std::to_string(j), {4 * (j - 1)});
        ex("n" + std::to_string(j), {4 * (j - 1), 4 * j, 4 * j + 3, 4 * j - 1});
      }
      ex("y", {4 * (g - 1), 4 * g});
    }
    sys.components.push_back(chord_circle(tri, g, p, "c0", 3, 4 * g + 1));
    sys.components.push_back(chord_circle(tri, g, p, "c1", 4 * g - 2, 4 * g + 1));
    return sys;
  }
  if (g >= 2 && p <= 2 && m <= 2 * g + 2) {
    // chain over the handles, closed off away from the punctures
    const int h = (m - 1) / 2;
    for (int j = 1; j <= h; ++j) {
      ex("a" + std::to_string(j), {4 * (j - 1)});
      if (j < h)
        ex("n" + std::to_string(j), {4 * (j - 1) + 1, 4 * j, 4 * j + 1, 4 * j + 2});
    }
    ex("b" + std::to_string(h), {4 * (h - 1) + 1});
    if (m % 2 == 0) {
      std::vector<int> y;
      for (int j = 0; j < h; ++j) y.push_back(4 * j);
      ex("y", y);
      ex("b1", {1});
    } else {
      std::vector<int> w{0, 1};
      for (int j = 1; j < h; ++j) w.push_back(4 * j);
      ex("w", w);
    }
    return sys;
  }
  throw OutOfRange("no cyclic chain of this length here");
}

NormalCurveSystem build_cyclic_join_k1_witness(const Surface& s, int m) {
  const int g = s.genus;
  const int p = std::max(s.punctures + s.boundary, 1);
  const Bound bound = max_cyclic_join_k1(s);
  if (!bound.value.has_value()) throw OutOfRange("no chain-plus-apex family on this surface");
  if (m < 3 || m > *bound.value) throw OutOfRange("no chain plus disjoint curve of this length here");

  NormalCurveSystem sys;
  sys.tri = standard_triangulation(g, p);
  const Triangulation& tri = sys.tri;
  const int N = 4 * g + 2 * (p - 1);
  auto ex = [&](const std::string& name, const std::vector<int>& exits) {
    sys.components.push_back(exit_curve(tri, g, p, name, exits));
  };
  auto side_bead = [&](const std::string& name, int side) {
    sys.components.push_back(side_arc_circle(tri, g, p, name, side));
  };
  auto chord_bead = [&](const std::string& name, int u, int v) {
    sys.components.push_back(chord_circle(tri, g, p, name, u, v));
  };

  if (g == 0) {
    // chain on the first punctures, apex around the next two
    if (m <= p - 2) {
      sys.components = sphere_necklace(tri, p, m);
      chord_bead("apex", 2 * m - 1, 2 * m + 1);
      return sys;
    }
    // m == p - 1: two detours close the necklace around the apex region
    sys.components.push_back(side_arc_circle(tri, 0, p, "r0", 0));
    for (int i = 1; i <= m - 3; ++i)
      chord_bead("r" + std::to_string(i), 2 * i - 1, 2 * i + 1);
    ex("x", {2 * m - 6, 2 * m - 4, 2 * m - 2});
    std::vector<int> y;
    for (int e = 0; e <= 2 * m - 6; e += 2) y.push_back(e);
    ex("y", y);
    chord_bead("apex", 2 * m - 3, 2 * m - 1);
    return sys;
  }

  // the longest chains sit in the complement of the meridian of the first
  // handle; shorter ones leave a handle or a puncture free for the apex
  const bool meridian_chain = (p >= 2 && m >= 2 * g + 3 && g >= 1) ||
                              (g >= 2 && p <= 1 && (m == 2 * g + 1 || (g == 2 && m >= 4)));
  if (!meridian_chain) {
    if (g >= 2 && (m <= 4 || (p <= 1 ? m <= 2 * g : m <= 2 * g + 2))) {
      // chain routed through the handles only
      if (m == 3) {
        ex("a", {0});
        ex("b", {1});
        ex("c", {0, 1});
      } else if (m == 4) {
        ex("a", {0});
        ex("b", {1});
        ex("c", {0, 4});
        ex("d", {1, 5});
      } else {
        const int h = (m - 1) / 2;
        for (int j = 1; j <= h; ++j) {
          ex("a" + std::to_string(j), {4 * (j - 1)});
          if (j < h)
            ex("n" + std::to_string(j), {4 * (j - 1) + 1, 4 * j, 4 * j + 1, 4 * j + 2});
        }
        ex("b" + std::to_string(h), {4 * (h - 1) + 1});
        if (m % 2 == 0) {
          std::vector<int> y;
          for (int j = 0; j < h; ++j) y.push_back(4 * j);
          ex("y", y);
          ex("b1", {1});
        } else {
          std::vector<int> w{0, 1};
          for (int j = 1; j < h; ++j) w.push_back(4 * j);
          ex("w", w);
        }
      }
      side_bead("apex", p <= 1 ? 4 * (g - 1) : 4 * g);
      return sys;
    }
    if (g == 1 && m == 3) {
      ex("a", {0});
      ex("b", {1});
      ex("c", {0, 1});
      side_bead("apex", 4);
      return sys;
    }
    // beads around some punctures, a free one left for the apex
    NormalCurveSystem chain = build_cyclic_witness(s, m);
    sys.components = std::move(chain.components);
    const int k = m - 1 - 2 * g;
    side_bead("apex", 4 * g + 2 * k);
    return sys;
  }

  // chain disjoint from the meridian, shaped as if only q punctures were there
  const int q = m - 2 * g;
  const int Nq = 4 * g + 2 * (q - 1);
  if (g == 1) {
    // 5 <= m <= p + 2, so 3 <= q <= p
    side_bead("v0", 4);
    side_bead("v1", 6);
    for (int u = 7; u + 2 <= Nq - 1; u += 2)
      chord_bead("r" + std::to_string(u), u, u + 2);
    chord_bead("c", 3, Nq - 2);
    ex("h1", {0, 0, 3, 3});
    ex("h2", {0, 1, 4, 3});
    ex("apex", {0});
    return sys;
  }
  if (g == 2 && p <= 1) {
    side_bead("v0", 4);
    side_bead("v1", 5);
    if (m == 4) {
      ex("h1", {0, 1, 5, 3});
      ex("h2", {0, 1, 4, 3});
    } else {
      chord_bead("c", 3, 5);
      ex("h1", {0, 0, 3, 3});
      ex("h2", {0, 4, 4, 7, 7});
    }
    ex("apex", {0});
    return sys;
  }
  side_bead("v0", 4);
  side_bead("v1", 5);
  ex("h1", {0, 1, 5, 3});
  ex("h2", {0, 0, 3, 3});
  if (p <= 1) {
    // m == 2g + 1, g >= 3
    chord_bead("c", 3, 4 * g - 3);
    ex("q" + std::to_string(g), {4 * (g - 1), 4 * (g - 1), 4 * (g - 1) + 1});
    for (int j = g - 1; j >= 3; --j) {
      ex("r" + std::to_string(j), {4 * (j - 1) + 1, 4 * j, 4 * j + 1, 4 * j + 2});
      ex("q" + std::to_string(j), {4 * (j - 1), 4 * (j - 1), 4 * (j - 1) + 1});
    }
  } else {
    // 2g + 3 <= m <= 2g + p, so 3 <= q <= p
    chord_bead("c", 3, Nq - 2);
    for (int i = q - 2; i >= 1; --i)
      chord_bead("r" + std::to_string(i), 4 * g + 2 * i - 1, 4 * g + 2 * i + 1);
    for (int j = g; j >= 3; --j) {
      if (j == 3)
        ex("r3", {9, 12});
      else
        ex("r" + std::to_string(j), {4 * (j - 1), 4 * (j - 1) + 1, 4 * j, 4 * j - 1});
      ex("q" + std::to_string(j), {4 * (j - 1), 4 * (j - 1), 4 * (j - 1) + 1});
    }
  }
  side_bead("b", 8);
  ex("apex", {0});
  return sys;
}

ChainCertificate verify_cyclic_chain(const NormalCurveSystem& sys) {
  const int m = int(sys.components.size());
  if (m < 3) throw MalformedSystem("a cyclic chain needs at least three curves");
  const SystemScan scan = scan_system(sys);
  for (int i = 0; i < m; ++i)
    if (scan.is_arc[size_t(i)]) throw MalformedSystem("cyclic chains consist of closed curves");

  ChainCertificate cert;
  cert.length = m;
  fill_names(cert, sys);
  cert.matrix = scan.matrix;
  cert.all_essential = scan.all_essential;
  cert.pairwise_non_isotopic = scan.pairwise_non_isotopic;
  cert.consecutive_positive = true;
  cert.chord_free = true;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
      const long long v = scan.matrix[size_t(i)][size_t(j)];
      if (consecutive && v == 0) cert.consecutive_positive = false;
      if (!consecutive && v != 0 && cert.chord_free) {
        cert.chord_free = false;
        cert.offending_chord = {i, j};
      }
    }
  if (cert.consecutive_positive && cert.all_essential && cert.pairwise_non_isotopic)
    cert.kind = cert.chord_free ? ChainKind::CyclicChain : ChainKind::SemiCyclic;
  return cert;
}

ChainCertificate verify_linear_chain(const NormalCurveSystem& sys) {
  const int m = int(sys.components.size());
  if (m < 1) throw MalformedSystem("empty system");
  const SystemScan scan = scan_system(sys);
  for (int i = 0; i < m; ++i)
    if (scan.is_arc[size_t(i)]) throw MalformedSystem("linear chains consist of closed curves");

  ChainCertificate cert;
  cert.length = m;
  fill_names(cert, sys);
  cert.matrix = scan.matrix;
  cert.all_essential = scan.all_essential;
  cert.pairwise_non_isotopic = scan.pairwise_non_isotopic;
  cert.consecutive_positive = true;
  cert.chord_free = true;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const long long v = scan.matrix[size_t(i)][size_t(j)];
      if (j == i + 1 && v == 0) cert.consecutive_positive = false;
      if (j > i + 1 && v != 0 && cert.chord_free) {
        cert.chord_free = false;
        cert.offending_chord = {i, j};
      }
    }
  if (cert.consecutive_positive && cert.chord_free && cert.all_essential &&
      cert.pairwise_non_isotopic)
    cert.kind = ChainKind::LinearChain;
  return cert;
}

ChainCertificate verify_cyclic_join_k1(const NormalCurveSystem& sys) {
  const int n = int(sys.components.size());
  if (n < 4) throw MalformedSystem("a join system needs a chain of three plus an apex");
  NormalCurveSystem chain;
  chain.tri = sys.tri;
  chain.components.assign(sys.components.begin(), sys.components.end() - 1);
  ChainCertificate cert = verify_cyclic_chain(chain);
  cert.names.push_back(sys.components.back().name);

  const Component& apex = sys.components.back();
  bool apex_arc = false;
  if (!component_essential(sys.tri, apex, apex_arc)) cert.all_essential = false;
  if (apex_arc) throw MalformedSystem("the apex must be a closed curve");
  std::vector<long long> apex_row;
  for (int i = 0; i + 1 < n; ++i) {
    const long long v = geometric_intersection(sys.tri, sys.components[size_t(i)], apex);
    if (v != 0 && cert.chord_free) {
      cert.chord_free = false;
      cert.offending_chord = {i, n - 1};
    }
    if (is_isotopic(sys.tri, sys.components[size_t(i)], apex)) cert.pairwise_non_isotopic = false;
    apex_row.push_back(v);
  }
  for (int i = 0; i + 1 < n; ++i) cert.matrix[size_t(i)].push_back(apex_row[size_t(i)]);
  apex_row.push_back(0);
  cert.matrix.push_back(apex_row);
  cert.kind = (cert.kind == ChainKind::CyclicChain && cert.chord_free && cert.all_essential &&
               cert.pairwise_non_isotopic)
                  ? ChainKind::CyclicJoinK1
                  : ChainKind::Unverified;
  return cert;
}

ChainCertificate verify_chained_triple(const NormalCurveSystem& sys, TripleVariant variant) {
  const int n = int(sys.components.size());
  if (n < 3) throw MalformedSystem("a chained triple needs two arcs and at least one curve");
  const SystemScan scan = scan_system(sys);
  if (!scan.is_arc[0] || !scan.is_arc[size_t(n - 1)])
    throw MalformedSystem("the first and last components must be arcs");
  for (int i = 1; i + 1 < n; ++i)
    if (scan.is_arc[size_t(i)]) throw MalformedSystem("interior components must be closed curves");
  const int m = n - 2;

  ChainCertificate cert;
  cert.length = m;
  fill_names(cert, sys);
  cert.matrix = scan.matrix;
  cert.all_essential = scan.all_essential;
  cert.pairwise_non_isotopic = scan.pairwise_non_isotopic;
  cert.consecutive_positive = true;
  cert.chord_free = true;
  // required positives: arc a with curve 1, arc b with curve m, the chain
  // consecutives; everything else must vanish
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool positive = (i == 0 && j == 1) || (i == n - 2 && j == n - 1) ||
                            (i >= 1 && j + 1 <= n - 1 && j == i + 1);
      const long long v = scan.matrix[size_t(i)][size_t(j)];
      if (positive && v == 0) cert.consecutive_positive = false;
      if (!positive && v != 0 && cert.chord_free) {
        cert.chord_free = false;
        cert.offending_chord = {i, j};
      }
    }

  if (cert.chord_free &&
      !arc_pair_blowup_disjoint(sys.tri, sys.components[0], sys.components[size_t(n - 1)])) {
    cert.chord_free = false;
    cert.offending_chord = {0, n - 1};
  }

  const auto ends_a = arc_endpoints(sys.tri, sys.components[0]);
  const auto ends_b = arc_endpoints(sys.tri, sys.components[size_t(n - 1)]);
  cert.arc_kinds.push_back(ends_a.size() == 1 ? "recursive" : "plain");
  cert.arc_kinds.push_back(ends_b.size() == 1 ? "recursive" : "plain");
  cert.condition_star = true;
  for (int va : ends_a)
    for (int vb : ends_b)
      if (va == vb) cert.condition_star = false;

  bool ok = cert.consecutive_positive && cert.chord_free && cert.all_essential &&
            cert.pairwise_non_isotopic;
  if (variant == TripleVariant::Star) ok = ok && cert.condition_star;
  if (variant == TripleVariant::RecursiveEnd) ok = ok && cert.arc_kinds[1] == "recursive";
  cert.kind = ok ? ChainKind::ChainedTriple : ChainKind::Unverified;
  return cert;
}

ChainCertificate verify_y_quadruple(const NormalCurveSystem& sys) {
  const int n = int(sys.components.size());
  if (n < 4) throw MalformedSystem("a Y-quadruple needs three arcs and at least one curve");
  const SystemScan scan = scan_system(sys);
  if (!scan.is_arc[0] || !scan.is_arc[size_t(n - 2)] || !scan.is_arc[size_t(n - 1)])
    throw MalformedSystem("components must run delta_1, curves, delta_2, delta_3");
  for (int i = 1; i + 2 < n; ++i)
    if (scan.is_arc[size_t(i)]) throw MalformedSystem("interior components must be closed curves");
  const int m = n - 3;

  ChainCertificate cert;
  cert.length = m;
  fill_names(cert, sys);
  cert.matrix = scan.matrix;
  cert.all_essential = scan.all_essential;
  cert.pairwise_non_isotopic = scan.pairwise_non_isotopic;
  cert.consecutive_positive = true;
  cert.chord_free = true;
  // delta_1 meets curve 1; both delta_2 and delta_3 meet curve m; the chain
  // consecutives are positive; all other pairs vanish
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool positive = (i == 0 && j == 1) || (i == m && (j == n - 2 || j == n - 1)) ||
                            (i >= 1 && j <= m && j == i + 1);
      const long long v = scan.matrix[size_t(i)][size_t(j)];
      if (positive && v == 0) cert.consecutive_positive = false;
      if (!positive && v != 0 && cert.chord_free) {
        cert.chord_free = false;
        cert.offending_chord = {i, j};
      }
    }

  const std::array<std::pair<int, int>, 3> arc_pairs = {
      std::pair<int, int>{0, n - 2}, {0, n - 1}, {n - 2, n - 1}};
  for (const auto& [i, j] : arc_pairs) {
    if (!cert.chord_free) break;
    if (!arc_pair_blowup_disjoint(sys.tri, sys.components[size_t(i)],
                                  sys.components[size_t(j)])) {
      cert.chord_free = false;
      cert.offending_chord = {i, j};
    }
  }

  const auto ends_1 = arc_endpoints(sys.tri, sys.components[0]);
  const auto ends_2 = arc_endpoints(sys.tri, sys.components[size_t(n - 2)]);
  const auto ends_3 = arc_endpoints(sys.tri, sys.components[size_t(n - 1)]);
  cert.arc_kinds.push_back(ends_1.size() == 1 ? "recursive" : "plain");
  cert.arc_kinds.push_back(ends_2.size() == 1 ? "recursive" : "plain");
  cert.arc_kinds.push_back(ends_3.size() == 1 ? "recursive" : "plain");
  // the forked ends must all land on one shared puncture
  const bool fork_shared = ends_2.size() == 1 && ends_2 == ends_3;
  cert.condition_star = fork_shared;

  const bool ok = cert.consecutive_positive && cert.chord_free && cert.all_essential &&
                  cert.pairwise_non_isotopic && fork_shared;
  cert.kind = ok ? ChainKind::YQuadruple : ChainKind::Unverified;
  return cert;
}

ChainCertificate certify_for(const Surface& requested, ChainCertificate cert) {
  if (requested.punctures == 0 && requested.boundary == 0)
    cert.caveat = "closed surface verified on the once-punctured model";
  return cert;
}

namespace {

const char* kind_name(ChainKind k) {
  switch (k) {
    case ChainKind::CyclicChain: return "cyclic-chain";
    case ChainKind::SemiCyclic: return "semi-cyclic";
    case ChainKind::LinearChain: return "linear-chain";
    case ChainKind::ChainedTriple: return "chained-triple";
    case ChainKind::YQuadruple: return "y-quadruple";
    case ChainKind::CyclicJoinK1: return "cyclic-join-k1";
    case ChainKind::Unverified: return "unverified";
  }
  return "unverified";
}

}  // namespace

std::string write_certificate(const ChainCertificate& cert) {
  std::ostringstream out;
  out << "certificate " << kind_name(cert.kind) << " length " << cert.length << "\n";
  for (size_t i = 0; i < cert.matrix.size(); ++i) {
    out << cert.names[i] << ":";
    for (long long v : cert.matrix[i]) out << " " << v;
    out << "\n";
  }
  out << "all-essential " << (cert.all_essential ? "yes" : "no") << "\n";
  out << "pairwise-non-isotopic " << (cert.pairwise_non_isotopic ? "yes" : "no") << "\n";
  out << "consecutive-positive " << (cert.consecutive_positive ? "yes" : "no") << "\n";
  out << "chord-free " << (cert.chord_free ? "yes" : "no");
  if (!cert.chord_free)
    out << " (pair " << cert.offending_chord.first << "," << cert.offending_chord.second << ")";
  out << "\n";
  if (!cert.arc_kinds.empty()) {
    out << "arcs";
    for (const auto& k : cert.arc_kinds) out << " " << k;
    out << "\n";
    out << "condition-star " << (cert.condition_star ? "yes" : "no") << "\n";
  }
  if (!cert.caveat.empty()) out << "note " << cert.caveat << "\n";
  return out.str();
}

}  // namespace curvechain
