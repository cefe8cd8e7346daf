#include "curvechain/cells.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "curvechain/errors.hpp"

namespace curvechain {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(size_t(n)) { std::iota(up.begin(), up.end(), 0); }
  int find(int a) {
    while (up[size_t(a)] != a) a = up[size_t(a)] = up[size_t(up[size_t(a)])];
    return a;
  }
  void unite(int a, int b) { up[size_t(find(a))] = find(b); }
};

// Strand endpoints on the boundary circle of one triangle, in ccw order:
// the corner-c tips (the terminal strands dying at corner c, ordered so
// that the one landing closest to side c+1 comes first), then the crossing
// slots of side (c+2), for c = 0, 1, 2.
struct Item {
  bool tip = false;
  int a = -1;  // side for slots, corner for tips
  int b = -1;  // position for slots, tip index k (by landing order) for tips
};

struct TriCells {
  std::array<int, 3> x{}, v{}, cc{};
  std::vector<Item> items;
  std::array<int, 3> first_slot{};  // circle index of slot (s, 0)
  std::array<int, 3> first_tip{};   // circle index of tip (c, v_c - 1)
  std::vector<int> partner;
  std::vector<int> face_of_gap;  // gap i runs from item i to item i+1
  int faces = 0;

  int slot_index(int s, int q) const { return first_slot[size_t(s)] + q; }
  int tip_index(int c, int k) const { return first_tip[size_t(c)] + (v[size_t(c)] - 1 - k); }

  // circle gap containing the k-th portion of side s (the stretch of the
  // side between crossing points k-1 and k)
  int portion_gap(int s, int k) const {
    const int n = int(items.size());
    if (k == 0) return (first_slot[size_t(s)] - 1 + n) % n;
    return (first_slot[size_t(s)] + k - 1) % n;
  }
};

struct Cells {
  const Triangulation& tri;
  NormalCoordinates c;
  std::vector<char> cut;  // per edge
  std::vector<TriCells> tris;
  std::vector<int> face_offset;
  int total_faces = 0;
  UnionFind regions{0};

  explicit Cells(const Triangulation& t) : tri(t) {}
};

void build_triangle_cells(const Triangulation& tri, const NormalCoordinates& c, int t,
                          TriCells& out) {
  out.cc = corner_counts(tri, c, t);
  for (int s = 0; s < 3; ++s) {
    out.v[size_t(s)] = c.ends[size_t(t)][s];
    out.x[size_t(s)] =
        out.cc[size_t((s + 1) % 3)] + out.cc[size_t((s + 2) % 3)] + out.v[size_t(s)];
  }
  for (int corner = 0; corner < 3; ++corner) {
    out.first_tip[size_t(corner)] = int(out.items.size());
    for (int k = out.v[size_t(corner)] - 1; k >= 0; --k)
      out.items.push_back(Item{true, corner, k});
    const int side = (corner + 2) % 3;
    out.first_slot[size_t(side)] = int(out.items.size());
    for (int q = 0; q < out.x[size_t(side)]; ++q) out.items.push_back(Item{false, side, q});
  }

  const int n = int(out.items.size());
  out.partner.assign(size_t(n), -1);
  for (int idx = 0; idx < n; ++idx) {
    const Item& it = out.items[size_t(idx)];
    if (it.tip) {
      out.partner[size_t(idx)] =
          out.slot_index(it.a, out.cc[size_t((it.a + 1) % 3)] + it.b);
      continue;
    }
    const int s = it.a, q = it.b;
    const int lo = out.cc[size_t((s + 1) % 3)];
    if (q < lo) {
      out.partner[size_t(idx)] =
          out.slot_index((s + 2) % 3, out.x[size_t((s + 2) % 3)] - 1 - q);
    } else if (q < lo + out.v[size_t(s)]) {
      out.partner[size_t(idx)] = out.tip_index(s, q - lo);
    } else {
      out.partner[size_t(idx)] = out.slot_index((s + 1) % 3, out.x[size_t(s)] - 1 - q);
    }
  }
  for (int idx = 0; idx < n; ++idx)
    if (out.partner[size_t(out.partner[size_t(idx)])] != idx)
      throw MalformedSystem("internal error: strand pairing is not an involution");

  // faces: walk gap cycles, hopping along each chord
  if (n == 0) {
    out.faces = 1;
    return;
  }
  out.face_of_gap.assign(size_t(n), -1);
  for (int g = 0; g < n; ++g) {
    if (out.face_of_gap[size_t(g)] != -1) continue;
    const int f = out.faces++;
    int cur = g;
    do {
      out.face_of_gap[size_t(cur)] = f;
      cur = out.partner[size_t((cur + 1) % n)];
    } while (cur != g);
  }
}

int face_of_portion(const Cells& cells, int t, int s, int k) {
  const TriCells& tc = cells.tris[size_t(t)];
  if (tc.items.empty()) return cells.face_offset[size_t(t)];
  return cells.face_offset[size_t(t)] + tc.face_of_gap[size_t(tc.portion_gap(s, k))];
}

int face_of_gap_global(const Cells& cells, int t, int gap) {
  const TriCells& tc = cells.tris[size_t(t)];
  if (tc.items.empty()) return cells.face_offset[size_t(t)];
  return cells.face_offset[size_t(t)] + tc.face_of_gap[size_t(gap)];
}

// germ universe: both ends of every edge portion
struct Germs {
  const Cells& cells;
  std::vector<std::array<int, 3>> base;
  int total = 0;

  explicit Germs(const Cells& cs) : cells(cs) {
    base.assign(size_t(cs.tri.triangles()), {0, 0, 0});
    for (int t = 0; t < cs.tri.triangles(); ++t)
      for (int s = 0; s < 3; ++s) {
        base[size_t(t)][s] = total;
        total += 2 * (cs.tris[size_t(t)].x[size_t(s)] + 1);
      }
  }
  // end: 0 = lo, 1 = hi
  int id(int t, int s, int k, int end) const { return base[size_t(t)][s] + 2 * k + end; }
};

// One directed element of a boundary walk: either a strand chord traversed
// away from item `from` (the region lies on the traversal's left), or the
// lo-to-hi traversal of one side of a slit cut open along an edge.
struct BoundaryToken {
  bool slit = false;
  int t = -1;
  int a = -1;  // item index for chords, side for slits
  friend bool operator==(const BoundaryToken&, const BoundaryToken&) = default;
};

struct BoundaryWalker {
  const Cells& cells;
  std::vector<SideRef> seq;  // directed edge crossings, in walk order
  explicit BoundaryWalker(const Cells& cs) : cells(cs) {}

  // The raw walk hugs slits and strand terminals, so it may cross an edge
  // and come straight back (a clean bigon against that edge).  Cancel such
  // pairs until the crossing sequence is taut, then count weights.
  NormalCoordinates taut_coords() const {
    std::vector<SideRef> w = seq;
    bool changed = true;
    while (changed && w.size() >= 2) {
      changed = false;
      for (size_t k = 0; k < w.size(); ++k) {
        const size_t k1 = (k + 1) % w.size();
        const SideRef arrive = cells.tri.glued(w[k].tri, w[k].side);
        if (arrive == w[k1]) {
          w.erase(w.begin() + long(std::max(k, k1)));
          w.erase(w.begin() + long(std::min(k, k1)));
          changed = true;
          break;
        }
      }
    }
    NormalCoordinates out = zero_coordinates(cells.tri);
    for (const SideRef& r : w) out.weights[size_t(cells.tri.edge_at(r.tri, r.side))] += 1;
    return out;
  }

  // walks ccw around the vertex at corner i of triangle t until the next
  // obstruction, recording the edges crossed on the way
  BoundaryToken around_vertex(int t, int i, bool check_tips) {
    while (true) {
      const TriCells& tc = cells.tris[size_t(t)];
      if (check_tips && tc.v[size_t(i)] > 0)
        return BoundaryToken{false, t, tc.tip_index(i, tc.v[size_t(i)] - 1)};
      check_tips = true;
      const int s = (i + 2) % 3;
      const int e = cells.tri.edge_at(t, s);
      if (cells.cut[size_t(e)]) return BoundaryToken{true, t, s};
      seq.push_back(SideRef{t, s});
      const SideRef other = cells.tri.glued(t, s);
      t = other.tri;
      i = (other.side + 2) % 3;
    }
  }

  BoundaryToken next(const BoundaryToken& cur) {
    if (cur.slit) {
      // lo to hi along the slit, then on around the vertex at the hi end
      return around_vertex(cur.t, (cur.a + 2) % 3, true);
    }
    const TriCells& tc = cells.tris[size_t(cur.t)];
    const int w = tc.partner[size_t(cur.a)];
    const Item& item = tc.items[size_t(w)];
    if (!item.tip) {
      seq.push_back(SideRef{cur.t, item.a});
      const SideRef other = cells.tri.glued(cur.t, item.a);
      const int q2 = tc.x[size_t(item.a)] - 1 - item.b;
      return BoundaryToken{false, other.tri,
                           cells.tris[size_t(other.tri)].slot_index(other.side, q2)};
    }
    // the strand dies at a vertex; keep turning left around it
    if (item.b > 0) return BoundaryToken{false, cur.t, tc.tip_index(item.a, item.b - 1)};
    return around_vertex(cur.t, item.a, false);
  }

  int region_face(const BoundaryToken& tok) const {
    if (tok.slit) return face_of_portion(cells, tok.t, tok.a, 0);
    const TriCells& tc = cells.tris[size_t(tok.t)];
    const int w = tc.partner[size_t(tok.a)];
    return face_of_gap_global(cells, tok.t, w);
  }
};

struct ComputedCut {
  std::vector<Surface> pieces;
  std::vector<NormalCoordinates> circles;
};

ComputedCut compute_cut(const NormalCurveSystem& sys) {
  validate_system(sys);
  const Triangulation& tri = sys.tri;

  Cells cells(tri);
  cells.c = zero_coordinates(tri);
  cells.cut.assign(size_t(tri.edges()), 0);
  std::vector<NormalCoordinates> expected;
  for (const Component& comp : sys.components) {
    if (comp.edge_arc) {
      if (cells.cut[size_t(comp.edge)])
        throw MalformedSystem("two edge arcs on edge " + std::to_string(comp.edge));
      cells.cut[size_t(comp.edge)] = 1;
    } else {
      cells.c = add(cells.c, comp.coords);
      expected.push_back(comp.coords);
    }
  }
  try {
    validate_coordinates(tri, cells.c);
  } catch (const MalformedSystem&) {
    throw MalformedSystem("system components are not disjoint");
  }
  for (int e = 0; e < tri.edges(); ++e)
    if (cells.cut[size_t(e)] && cells.c.weights[size_t(e)] != 0)
      throw MalformedSystem("system components are not disjoint");
  {
    auto split = is_zero(cells.c) ? std::vector<NormalCoordinates>{}
                                  : split_components(tri, cells.c);
    auto key = [](const NormalCoordinates& nc) { return std::make_pair(nc.weights, nc.ends); };
    auto by_key = [&](const NormalCoordinates& a, const NormalCoordinates& b) {
      return key(a) < key(b);
    };
    std::sort(split.begin(), split.end(), by_key);
    std::sort(expected.begin(), expected.end(), by_key);
    if (split != expected) throw MalformedSystem("system components are not disjoint");
  }

  const int T = tri.triangles();
  cells.tris.resize(size_t(T));
  cells.face_offset.resize(size_t(T));
  for (int t = 0; t < T; ++t) {
    build_triangle_cells(tri, cells.c, t, cells.tris[size_t(t)]);
    cells.face_offset[size_t(t)] = cells.total_faces;
    cells.total_faces += cells.tris[size_t(t)].faces;
  }

  // regions: faces merged across every portion of every uncut edge
  cells.regions = UnionFind(cells.total_faces);
  for (int e = 0; e < tri.edges(); ++e) {
    if (cells.cut[size_t(e)]) continue;
    const auto [sa, sb] = tri.edge_sides(e);
    const int x = cells.tris[size_t(sa.tri)].x[size_t(sa.side)];
    for (int k = 0; k <= x; ++k)
      cells.regions.unite(face_of_portion(cells, sa.tri, sa.side, k),
                          face_of_portion(cells, sb.tri, sb.side, x - k));
  }

  std::map<int, std::array<long long, 5>> tally;  // region -> F, E, V, circles, punctures
  auto slot = [&](int region) -> std::array<long long, 5>& { return tally[region]; };

  for (int f = 0; f < cells.total_faces; ++f) slot(cells.regions.find(f))[0] += 1;

  // one-cells: edge portions and the two sides of every strand chord
  for (int e = 0; e < tri.edges(); ++e) {
    const auto [sa, sb] = tri.edge_sides(e);
    if (cells.cut[size_t(e)]) {
      slot(cells.regions.find(face_of_portion(cells, sa.tri, sa.side, 0)))[1] += 1;
      slot(cells.regions.find(face_of_portion(cells, sb.tri, sb.side, 0)))[1] += 1;
      continue;
    }
    const int x = cells.tris[size_t(sa.tri)].x[size_t(sa.side)];
    for (int k = 0; k <= x; ++k)
      slot(cells.regions.find(face_of_portion(cells, sa.tri, sa.side, k)))[1] += 1;
  }
  for (int t = 0; t < T; ++t) {
    const TriCells& tc = cells.tris[size_t(t)];
    const int n = int(tc.items.size());
    for (int u = 0; u < n; ++u) {
      const int w = tc.partner[size_t(u)];
      if (w < u) continue;
      slot(cells.regions.find(face_of_gap_global(cells, t, (u - 1 + n) % n)))[1] += 1;
      slot(cells.regions.find(face_of_gap_global(cells, t, (w - 1 + n) % n)))[1] += 1;
    }
  }

  // zero-cells on the edges and at the vertices: classes of portion-end
  // germs, glued across uncut edges and across tip-free corners
  Germs germs(cells);
  UnionFind classes(germs.total);
  for (int e = 0; e < tri.edges(); ++e) {
    if (cells.cut[size_t(e)]) continue;
    const auto [sa, sb] = tri.edge_sides(e);
    const int x = cells.tris[size_t(sa.tri)].x[size_t(sa.side)];
    for (int k = 0; k <= x; ++k) {
      classes.unite(germs.id(sa.tri, sa.side, k, 1), germs.id(sb.tri, sb.side, x - k, 0));
      classes.unite(germs.id(sb.tri, sb.side, k, 1), germs.id(sa.tri, sa.side, x - k, 0));
    }
  }
  for (int t = 0; t < T; ++t) {
    const TriCells& tc = cells.tris[size_t(t)];
    for (int i = 0; i < 3; ++i)
      if (tc.v[size_t(i)] == 0)
        classes.unite(germs.id(t, (i + 1) % 3, tc.x[size_t((i + 1) % 3)], 1),
                      germs.id(t, (i + 2) % 3, 0, 0));
  }
  std::vector<char> counted(size_t(germs.total), 0);
  std::vector<int> class_region(size_t(germs.total), -1);
  for (int t = 0; t < T; ++t)
    for (int s = 0; s < 3; ++s) {
      const int x = cells.tris[size_t(t)].x[size_t(s)];
      for (int k = 0; k <= x; ++k)
        for (int end = 0; end < 2; ++end) {
          const int root = classes.find(germs.id(t, s, k, end));
          if (counted[size_t(root)]) continue;
          counted[size_t(root)] = 1;
          const int region = cells.regions.find(face_of_portion(cells, t, s, k));
          class_region[size_t(root)] = region;
          slot(region)[2] += 1;
        }
    }
  // sectors between consecutive tips at one corner
  for (int t = 0; t < T; ++t) {
    const TriCells& tc = cells.tris[size_t(t)];
    const int n = int(tc.items.size());
    for (int i = 0; i < 3; ++i)
      for (int k = 1; k < tc.v[size_t(i)]; ++k) {
        const int gap = tc.tip_index(i, k);  // gap from tip k to tip k-1
        slot(cells.regions.find(face_of_gap_global(cells, t, gap)))[2] += 1;
      }
  }

  // untouched vertices stay as marked interior points of their region
  std::vector<char> touched(size_t(tri.vertices()), 0);
  for (int t = 0; t < T; ++t)
    for (int i = 0; i < 3; ++i) {
      if (cells.tris[size_t(t)].v[size_t(i)] > 0) touched[size_t(tri.vertex_at(t, i))] = 1;
      const int e = cells.tri.edge_at(t, i);
      if (cells.cut[size_t(e)]) {
        touched[size_t(tri.vertex_at(t, (i + 1) % 3))] = 1;
        touched[size_t(tri.vertex_at(t, (i + 2) % 3))] = 1;
      }
    }
  std::vector<char> vertex_done(size_t(tri.vertices()), 0);
  for (int t = 0; t < T; ++t)
    for (int i = 0; i < 3; ++i) {
      const int v = tri.vertex_at(t, i);
      if (touched[size_t(v)] || vertex_done[size_t(v)]) continue;
      vertex_done[size_t(v)] = 1;
      const int root = classes.find(germs.id(t, (i + 2) % 3, 0, 0));
      slot(class_region[size_t(root)])[4] += 1;
    }

  // boundary circles
  ComputedCut out;
  std::vector<std::vector<char>> chord_seen{size_t(T)};
  for (int t = 0; t < T; ++t)
    chord_seen[size_t(t)].assign(cells.tris[size_t(t)].items.size(), 0);
  std::vector<char> slit_seen(size_t(2 * tri.edges()), 0);
  auto slit_key = [&](int t, int s) {
    const int e = tri.edge_at(t, s);
    const auto [sa, sb] = tri.edge_sides(e);
    return 2 * e + (sa == SideRef{t, s} ? 0 : 1);
  };
  auto trace_from = [&](BoundaryToken start) {
    BoundaryWalker walker(cells);
    const int region = cells.regions.find(walker.region_face(start));
    BoundaryToken cur = start;
    do {
      if (cur.slit)
        slit_seen[size_t(slit_key(cur.t, cur.a))] = 1;
      else
        chord_seen[size_t(cur.t)][size_t(cur.a)] = 1;
      cur = walker.next(cur);
    } while (!(cur == start));
    slot(region)[3] += 1;
    out.circles.push_back(walker.taut_coords());
  };
  for (int t = 0; t < T; ++t)
    for (int u = 0; u < int(cells.tris[size_t(t)].items.size()); ++u)
      if (!chord_seen[size_t(t)][size_t(u)]) trace_from(BoundaryToken{false, t, u});
  for (int e = 0; e < tri.edges(); ++e)
    if (cells.cut[size_t(e)]) {
      const auto [sa, sb] = tri.edge_sides(e);
      if (!slit_seen[size_t(slit_key(sa.tri, sa.side))])
        trace_from(BoundaryToken{true, sa.tri, sa.side});
      if (!slit_seen[size_t(slit_key(sb.tri, sb.side))])
        trace_from(BoundaryToken{true, sb.tri, sb.side});
    }

  for (const auto& [region, counts] : tally) {
    const long long chi = counts[2] - counts[1] + counts[0];
    const long long b = counts[3];
    const long long p = counts[4];
    const long long doubled_genus = 2 - chi - b;
    if (doubled_genus < 0 || doubled_genus % 2 != 0)
      throw MalformedSystem("internal error: bad piece bookkeeping");
    out.pieces.push_back(Surface{int(doubled_genus / 2), int(p + b), 0});
  }
  std::sort(out.pieces.begin(), out.pieces.end());
  return out;
}

}  // namespace

std::vector<Surface> cut_system(const NormalCurveSystem& sys) {
  return compute_cut(sys).pieces;
}

std::vector<NormalCoordinates> neighborhood_boundary(const NormalCurveSystem& sys) {
  return compute_cut(sys).circles;
}

}  // namespace curvechain
