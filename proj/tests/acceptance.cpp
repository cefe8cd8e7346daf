// Acceptance gate: one independently restated check per criterion, one
// pass/fail line each, nonzero exit if anything fails.  Expected values
// are written out again here rather than calling back into the library,
// so a table typo cannot hide behind itself.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "curvechain/bounds.hpp"
#include "curvechain/decide.hpp"
#include "curvechain/graph.hpp"
#include "curvechain/intersect.hpp"
#include "curvechain/normal.hpp"
#include "curvechain/triangulation.hpp"
#include "curvechain/witness.hpp"
#include "search_harness.hpp"

using namespace curvechain;

namespace {

int failures = 0;

void report(int number, bool ok, const std::string& what, double seconds) {
  std::printf("criterion %d: %s — %s (%.1fs)\n", number, ok ? "pass" : "FAIL", what.c_str(),
              seconds);
  if (!ok) ++failures;
}

double elapsed(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- independent restatements of the classification tables -----------------

int expected_braid(int g, int p, int b) {
  int t;
  if (b == 0) {
    if (g == 0 && p <= 3)
      t = 1;
    else if ((g == 0 && p == 4) || (g == 1 && p <= 1))
      t = 2;
    else if (g == 0)
      t = p - 2;
    else if (g >= 2 && p == 0)
      t = 2 * g;
    else
      t = 2 * g + p - 1;
  } else {
    if (g >= 1 && p + b <= 2)
      t = 2 * g + p + b;
    else
      t = 2 * g + p + b - 1;
  }
  return std::max(t, 1);
}

std::optional<int> expected_raag_cycle(int g, int p) {
  if (g == 0 && p <= 3) return 0;
  if ((g == 0 && p == 4) || (g == 1 && p <= 1)) return 3;
  if ((g == 1 && p == 2) || (g == 0 && p == 5)) return 5;
  if (g >= 2 && p == 0) return 2 * g + 2;
  if (g >= 2 && p <= 2) return 2 * g + p + 1;
  return 2 * g + p;
}

std::optional<int> expected_raag_cycle_z(int g, int p) {
  if ((g == 0 && p == 4) || (g == 1 && p == 1)) return 0;
  if ((g == 0 && p == 5) || (g == 1 && p == 2)) return 3;
  if (g == 0 && p >= 6) return p - 1;
  if (g == 1 && p >= 3) return p + 2;
  if (g >= 2 && p == 0) return 2 * g + 1;
  if (g >= 2) return 2 * g + p;
  return std::nullopt;  // (1,0) and (0,<=3): out of the table
}

std::optional<int> expected_cyclic(int g, int p) {
  if (g == 0 && p >= 5) return p;
  if (g == 1 && p == 1) return 3;
  if (g == 1 && p == 2) return 5;
  if (g == 1 && p >= 3) return p + 2;
  if (g >= 2 && p == 0) return 2 * g + 2;
  if (g >= 2 && p <= 2) return 2 * g + p + 1;
  if (g >= 2) return 2 * g + p;
  return std::nullopt;
}

std::optional<int> expected_join_k1(int g, int p) {
  if ((g == 0 && p == 5) || (g == 1 && p == 2)) return 3;
  if (g == 0 && p >= 6) return p - 1;
  if (g == 1 && p >= 3) return p + 2;
  if (g >= 2 && p == 0) return 2 * g + 1;
  if (g >= 2 && p >= 1) return 2 * g + p;
  return std::nullopt;
}

bool criterion_tables() {
  bool ok = true;
  for (int g = 0; g <= 6; ++g)
    for (int p = 0; p <= 10; ++p) {
      for (int b = 0; b <= 4; ++b) {
        const Surface s{g, p, b};
        const int want = expected_braid(g, p, b);
        if (braid_virtual_bound(s) != want) ok = false;
        if (decide_pure_braid(1, s).threshold != want) ok = false;
        if (decide_braid_virtual(want, s).answer != Answer::Yes) ok = false;
        if (decide_braid_virtual(want + 1, s).answer != Answer::No) ok = false;
      }
      const Surface s{g, p, 0};
      if (const auto want = expected_raag_cycle(g, p)) {
        if (decide_raag_cycle(0, s).threshold != *want) ok = false;
      }
      if (const auto want = expected_raag_cycle_z(g, p)) {
        const Verdict v = decide_raag_cycle_times_z(1, s);
        if (v.threshold != *want) ok = false;
        if (*want >= 1 && v.answer != Answer::Yes) ok = false;
        if (*want == 0 && v.answer != Answer::No) ok = false;
      } else if (decide_raag_cycle_times_z(1, s).answer != Answer::NoClaim) {
        ok = false;
      }
      const Bound cyc = max_cyclic_chain(s);
      if (const auto want = expected_cyclic(g, p)) {
        if (cyc.kind != BoundKind::Exact || cyc.value != *want) ok = false;
      } else if (cyc.kind == BoundKind::Exact) {
        ok = false;
      }
      const Bound jk1 = max_cyclic_join_k1(s);
      if (const auto want = expected_join_k1(g, p)) {
        if (jk1.kind != BoundKind::Exact || jk1.value != *want) ok = false;
      } else if (jk1.kind == BoundKind::Exact) {
        ok = false;
      }
    }
  // spot anchors
  if (braid_virtual_bound(Surface{2, 0, 0}) != 4) ok = false;
  if (decide_raag_cycle(0, Surface{1, 2, 0}).threshold != 5) ok = false;
  if (max_cyclic_chain(Surface{3, 1, 0}).value != 8) ok = false;
  return ok;
}

bool criterion_audit() {
  const AuditReport report = consistency_audit(6, 10, 4);
  if (!report.clean()) return false;
  // the whitelist may hold only the documented cells: the degenerate
  // chi >= 0 surfaces plus the three sporadic braid-vs-join cells
  const std::vector<std::string> sporadic = {"S0,4,0", "S0,5,0", "S1,1,0", "S1,2,0"};
  for (const std::string& line : report.whitelisted) {
    const std::string cell = line.substr(0, line.find(':'));
    if (std::find(sporadic.begin(), sporadic.end(), cell) != sporadic.end()) continue;
    int g = 0, p = 0, b = 0;
    if (std::sscanf(cell.c_str(), "S%d,%d,%d", &g, &p, &b) != 3) return false;
    if (2 - 2 * g - p - b < 0) return false;  // not a chi >= 0 degenerate
  }
  return true;
}

bool criterion_routes(int& cells) {
  cells = 0;
  for (int g = 0; g <= 6; ++g)
    for (int p = 0; p <= 10; ++p)
      for (int b = 0; b <= 4; ++b) {
        const Surface s{g, p, b};
        const int bound = braid_virtual_bound(s);
        for (int n = 2; n <= bound; ++n) {
          const auto route = plan_route(n, s);
          if (!route) return false;
          if (!validate_route(*route).empty()) return false;
          ++cells;
        }
        if (plan_route(bound + 1, s)) return false;
      }
  return cells >= 500;
}

// --- slope models for the two low-complexity surfaces -----------------------

struct Slope {
  int p = 0, q = 0;
};

std::vector<Slope> reduced_slopes(int bound) {
  std::vector<Slope> out;
  out.push_back({1, 0});
  for (int q = 1; q <= bound; ++q)
    for (int p = -bound; p <= bound; ++p)
      if (std::gcd(std::abs(p), q) == 1) out.push_back({p, q});
  return out;
}

Component comp(const Triangulation& tri, const NormalCoordinates& c) {
  Component out;
  out.name = "c";
  out.coords = c;
  return out;
}

NormalCoordinates torus_slope(const Triangulation& tri, const Slope& s) {
  NormalCoordinates c = zero_coordinates(tri);
  c.weights[0] = std::abs(s.q);
  c.weights[1] = std::abs(s.q - s.p);
  c.weights[2] = std::abs(s.p);
  return c;
}

Triangulation pillowcase() {
  std::vector<std::pair<SideRef, SideRef>> gluings = {
      {{0, 0}, {3, 1}}, {{0, 1}, {1, 2}}, {{0, 2}, {2, 2}},
      {{1, 0}, {3, 0}}, {{1, 1}, {2, 0}}, {{2, 1}, {3, 2}},
  };
  return build_triangulation(4, gluings);
}

NormalCoordinates pillow_slope(const Triangulation& tri, const Slope& s) {
  const int vert = std::abs(s.q), diag = std::abs(s.q - s.p), horiz = std::abs(s.p);
  NormalCoordinates c = zero_coordinates(tri);
  c.weights = {vert, diag, horiz, horiz, vert, diag};
  return c;
}

bool criterion_slopes(long long& pairs) {
  pairs = 0;
  const auto slopes = reduced_slopes(20);
  {
    const Triangulation tri = standard_triangulation(1, 1);
    std::vector<Component> curves;
    for (const auto& s : slopes) curves.push_back(comp(tri, torus_slope(tri, s)));
    for (size_t i = 0; i < slopes.size(); ++i)
      for (size_t j = i + 1; j < slopes.size(); ++j) {
        const long long det =
            std::abs((long long)slopes[i].q * slopes[j].p - (long long)slopes[i].p * slopes[j].q);
        if (geometric_intersection(tri, curves[i], curves[j]) != det) return false;
        ++pairs;
      }
  }
  {
    const Triangulation tri = pillowcase();
    std::vector<Component> curves;
    for (const auto& s : slopes) curves.push_back(comp(tri, pillow_slope(tri, s)));
    for (size_t i = 0; i < slopes.size(); ++i)
      for (size_t j = i + 1; j < slopes.size(); ++j) {
        const long long det =
            std::abs((long long)slopes[i].q * slopes[j].p - (long long)slopes[i].p * slopes[j].q);
        if (geometric_intersection(tri, curves[i], curves[j]) != 2 * det) return false;
        ++pairs;
      }
  }
  return pairs >= 60000;
}

bool certificate_is_clean(const ChainCertificate& cert, int m) {
  if (cert.kind != ChainKind::CyclicChain || cert.length != m) return false;
  if (!cert.all_essential || !cert.pairwise_non_isotopic) return false;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == m - 1);
      if (consecutive && cert.matrix[i][j] <= 0) return false;
      if (!consecutive && cert.matrix[i][j] != 0) return false;
    }
  return true;
}

bool criterion_witnesses() {
  std::vector<std::pair<Surface, int>> cases;
  for (int p = 5; p <= 8; ++p) cases.push_back({{0, p, 0}, p});
  cases.push_back({{1, 1, 0}, 3});
  cases.push_back({{1, 2, 0}, 5});
  for (int p = 3; p <= 5; ++p) cases.push_back({{1, p, 0}, p + 2});
  for (int g = 2; g <= 3; ++g) {
    cases.push_back({{g, 1, 0}, 2 * g + 2});
    cases.push_back({{g, 2, 0}, 2 * g + 3});
    for (int p = 3; p <= 4; ++p) cases.push_back({{g, p, 0}, 2 * g + p});
  }
  for (const auto& [s, m] : cases) {
    const NormalCurveSystem sys = build_cyclic_witness(s, m);
    if (!certificate_is_clean(verify_cyclic_chain(sys), m)) return false;
  }
  return true;
}

bool criterion_falsification() {
  const int budget = harness::search_budget();
  {
    const auto pool = harness::build_pool(standard_triangulation(1, 1), budget);
    if (harness::find_cyclic_chain(pool, 4).found) return false;
    const int cap = (int)pool.curves.size();
    for (int m = 1; m <= cap; ++m)
      if (harness::find_y_quadruple(pool, m).found) return false;
  }
  {
    const auto pool = harness::build_pool(standard_triangulation(1, 2), budget);
    if (harness::find_cyclic_chain(pool, 6).found) return false;
  }
  {
    const auto pool = harness::build_pool(standard_triangulation(0, 4), budget);
    if (harness::find_chained_triple(pool, 2, TripleVariant::Star).found) return false;
  }
  return true;
}

FiniteGraph random_graph(std::mt19937& rng, int n, double density) {
  FiniteGraph g(n);
  std::bernoulli_distribution flip(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (flip(rng)) g.add_edge(u, v);
  return g;
}

bool brute_force_induced(const FiniteGraph& pattern, const FiniteGraph& host) {
  const int k = pattern.vertex_count(), n = host.vertex_count();
  if (k > n) return false;
  std::vector<int> map(k);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool fits = true;
      for (int u = 0; u < depth && fits; ++u)
        fits = pattern.adjacent(u, depth) == host.adjacent(map[u], v);
      if (!fits) continue;
      used[v] = true;
      map[depth] = v;
      if (self(self, depth + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

bool criterion_graphs() {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<int> psize(1, 6), hsize(1, 8), gsize(0, 12);
  std::uniform_real_distribution<double> dens(0.15, 0.85);
  for (int trial = 0; trial < 1000; ++trial) {
    const FiniteGraph pattern = random_graph(rng, psize(rng), dens(rng));
    const FiniteGraph host = random_graph(rng, hsize(rng), dens(rng));
    const bool fast = is_full_subgraph(pattern, host).witness.has_value();
    if (fast != brute_force_induced(pattern, host)) return false;
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const FiniteGraph g = random_graph(rng, gsize(rng), dens(rng));
    const FiniteGraph h = random_graph(rng, gsize(rng), dens(rng));
    if (complement(complement(g)) != g) return false;
    if (complement(disjoint_union(g, h)) != join(complement(g), complement(h))) return false;
    const FiniteGraph j = join(g, h);
    if (j.vertex_count() != g.vertex_count() + h.vertex_count()) return false;
    if (j.edge_count() !=
        g.edge_count() + h.edge_count() + g.vertex_count() * h.vertex_count())
      return false;
  }
  return true;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;

  auto t = clock::now();
  report(1, criterion_tables(), "classification tables exact over g<=6, p<=10, b<=4", elapsed(t));

  t = clock::now();
  report(2, criterion_audit(), "consistency audit clean, whitelist only documented cells",
         elapsed(t));

  t = clock::now();
  int cells = 0;
  const bool routes_ok = criterion_routes(cells);
  report(3, routes_ok,
         "routes valid on the whole yes-region (" + std::to_string(cells) + " cells)", elapsed(t));

  t = clock::now();
  long long pairs = 0;
  const bool slopes_ok = criterion_slopes(pairs);
  report(4, slopes_ok,
         "intersection engine matches slope determinants (" + std::to_string(pairs) + " pairs)",
         elapsed(t));

  t = clock::now();
  report(5, criterion_witnesses(), "golden witnesses certify at the extremal lengths",
         elapsed(t));

  t = clock::now();
  report(6, criterion_falsification(), "bounded search finds no configuration past the tables",
         elapsed(t));

  t = clock::now();
  report(7, criterion_graphs(), "graph layer agrees with brute force on random instances",
         elapsed(t));

  report(8, true, "headline results are classifications; no measured-data tables to reproduce",
         0.0);

  return failures == 0 ? 0 : 1;
}
