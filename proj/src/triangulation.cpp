#include "curvechain/triangulation.hpp"

#include <string>

#include "curvechain/errors.hpp"

namespace curvechain {

Triangulation build_triangulation(int triangle_count,
                                  const std::vector<std::pair<SideRef, SideRef>>& gluings) {
  if (triangle_count < 1) throw BadParameter("need at least one triangle");
  if (int(gluings.size()) * 2 != triangle_count * 3)
    throw BadParameter("every side must be glued exactly once");

  Triangulation tri;
  tri.glued_.assign(size_t(triangle_count), {SideRef{}, SideRef{}, SideRef{}});
  tri.edge_of_.assign(size_t(triangle_count), {-1, -1, -1});
  auto in_range = [&](SideRef r) {
    return r.tri >= 0 && r.tri < triangle_count && r.side >= 0 && r.side < 3;
  };
  for (const auto& [a, b] : gluings) {
    if (!in_range(a) || !in_range(b)) throw BadParameter("side reference out of range");
    if (a == b) throw BadParameter("a side cannot be glued to itself");
    if (tri.glued_[a.tri][a.side].tri != -1 || tri.glued_[b.tri][b.side].tri != -1)
      throw BadParameter("side glued twice");
    tri.glued_[a.tri][a.side] = b;
    tri.glued_[b.tri][b.side] = a;
  }

  // canonical edge ids: scan order of the first incidence
  for (int t = 0; t < triangle_count; ++t)
    for (int s = 0; s < 3; ++s) {
      if (tri.edge_of_[t][s] != -1) continue;
      SideRef other = tri.glued_[t][s];
      int id = int(tri.edge_sides_.size());
      tri.edge_of_[t][s] = id;
      tri.edge_of_[other.tri][other.side] = id;
      tri.edge_sides_.emplace_back(SideRef{t, s}, other);
    }

  // vertex orbits: from corner i, the next corner around the vertex is
  // reached through side i+2 (corner i is its lo end)
  tri.vertex_of_.assign(size_t(triangle_count), {-1, -1, -1});
  int orbits = 0;
  for (int t = 0; t < triangle_count; ++t)
    for (int c = 0; c < 3; ++c) {
      if (tri.vertex_of_[t][c] != -1) continue;
      int id = orbits++;
      int ct = t, cc = c;
      while (tri.vertex_of_[ct][cc] == -1) {
        tri.vertex_of_[ct][cc] = id;
        SideRef next = tri.glued_[ct][(cc + 2) % 3];
        ct = next.tri;
        cc = (next.side + 2) % 3;
      }
      if (tri.vertex_of_[ct][cc] != id)
        throw MalformedSystem("vertex orbit walk is inconsistent");
    }
  tri.vertex_count_ = orbits;

  // connectivity
  {
    std::vector<char> seen(size_t(triangle_count), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int s = 0; s < 3; ++s) {
        int u = tri.glued_[t][s].tri;
        if (!seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    if (count != triangle_count) throw MalformedSystem("triangulation is not connected");
  }

  // type from the Euler characteristic of the closed surface with the
  // vertices as marked points: chi = V - E + F = p - T/2
  const int p = orbits;
  const int chi_closed = p - triangle_count * 3 / 2 + triangle_count;
  if ((2 - chi_closed) % 2 != 0 || chi_closed > 2)
    throw MalformedSystem("gluing does not produce an orientable surface type");
  const int g = (2 - chi_closed) / 2;
  if (2 - 2 * g - p >= 0)
    throw MalformedSystem("triangulated surface must have negative Euler characteristic");
  tri.surface_ = Surface{g, p, 0};
  return tri;
}

Triangulation standard_triangulation(int g, int p) {
  if (g < 0 || p < 1) throw BadParameter("need g >= 0 and p >= 1");
  if (2 - 2 * g - p >= 0)
    throw BadParameter("standard triangulation needs negative Euler characteristic");
  const int N = 4 * g + 2 * (p - 1);

  // polygon boundary side m; pair each letter with its inverse
  std::vector<int> mate(size_t(N), -1);
  for (int j = 0; j < g; ++j) {
    mate[4 * j] = 4 * j + 2;      // a_j with a_j'
    mate[4 * j + 2] = 4 * j;
    mate[4 * j + 1] = 4 * j + 3;  // b_j with b_j'
    mate[4 * j + 3] = 4 * j + 1;
  }
  for (int j = 0; j < p - 1; ++j) {
    mate[4 * g + 2 * j] = 4 * g + 2 * j + 1;  // c_j with c_j'
    mate[4 * g + 2 * j + 1] = 4 * g + 2 * j;
  }

  // fan triangle i = (P_0, P_{i+1}, P_{i+2}); its side 0 is polygon side
  // i+1, side 1 the diagonal (P_{i+2}, P_0), side 2 the diagonal (P_0,
  // P_{i+1}); polygon side 0 is side 2 of triangle 0 and polygon side N-1
  // is side 1 of triangle N-3
  auto polygon_side = [&](int m) -> SideRef {
    if (m == 0) return SideRef{0, 2};
    if (m == N - 1) return SideRef{N - 3, 1};
    return SideRef{m - 1, 0};
  };

  std::vector<std::pair<SideRef, SideRef>> gluings;
  for (int k = 2; k <= N - 2; ++k)  // fan diagonals (P_0, P_k)
    gluings.push_back({SideRef{k - 2, 1}, SideRef{k - 1, 2}});
  for (int m = 0; m < N; ++m)
    if (mate[m] > m) gluings.push_back({polygon_side(m), polygon_side(mate[m])});

  Triangulation tri = build_triangulation(N - 2, gluings);
  if (tri.surface() != Surface{g, p, 0})
    throw MalformedSystem("standard triangulation produced the wrong surface type");
  return tri;
}

}  // namespace curvechain
