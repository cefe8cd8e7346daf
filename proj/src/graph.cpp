#include "curvechain/graph.hpp"

#include <algorithm>
#include <sstream>

#include "curvechain/errors.hpp"

namespace curvechain {

FiniteGraph::FiniteGraph(int n) : n_(n), words_((n + 63) / 64), rows_(size_t(n) * words_, 0) {
  if (n < 0) throw BadParameter("vertex count must be nonnegative");
}

void FiniteGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw BadParameter("vertex index out of range");
}

void FiniteGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw BadParameter("loops are not allowed");
  rows_[size_t(u) * words_ + v / 64] |= uint64_t(1) << (v % 64);
  rows_[size_t(v) * words_ + u / 64] |= uint64_t(1) << (u % 64);
}

bool FiniteGraph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (rows_[size_t(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int FiniteGraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < words_; ++w) d += __builtin_popcountll(rows_[size_t(v) * words_ + w]);
  return d;
}

int FiniteGraph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n_; ++v) total += degree(v);
  return int(total / 2);
}

std::vector<std::pair<int, int>> FiniteGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

FiniteGraph complement(const FiniteGraph& g) {
  const int n = g.vertex_count();
  FiniteGraph c(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  c.labels = g.labels;
  return c;
}

FiniteGraph disjoint_union(const FiniteGraph& a, const FiniteGraph& b) {
  const int na = a.vertex_count();
  FiniteGraph g(na + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
  if (!a.labels.empty() || !b.labels.empty()) {
    g.labels.assign(size_t(g.vertex_count()), "");
    for (int v = 0; v < na && v < int(a.labels.size()); ++v) g.labels[v] = a.labels[v];
    for (int v = 0; v < b.vertex_count() && v < int(b.labels.size()); ++v)
      g.labels[size_t(na) + v] = b.labels[v];
  }
  return g;
}

FiniteGraph join(const FiniteGraph& a, const FiniteGraph& b) {
  FiniteGraph g = disjoint_union(a, b);
  const int na = a.vertex_count();
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < b.vertex_count(); ++v) g.add_edge(u, na + v);
  return g;
}

FiniteGraph family(GraphFamily kind, int m) {
  if (m < 0) throw BadParameter("family size must be nonnegative");
  switch (kind) {
    case GraphFamily::Path: {
      FiniteGraph g(m);
      for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case GraphFamily::Cycle: {
      if (m < 3) throw BadParameter("cycles need at least three vertices");
      FiniteGraph g(m);
      for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
      return g;
    }
    case GraphFamily::Complete: {
      FiniteGraph g(m);
      for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
      return g;
    }
  }
  throw BadParameter("unknown graph family");
}

namespace {

struct SearchState {
  const FiniteGraph& pattern;
  const FiniteGraph& host;
  long long budget;
  long long nodes = 0;
  bool exhausted = false;
  std::vector<int> map;        // pattern vertex -> host vertex or -1
  std::vector<char> used;      // host vertex used?

  bool extend(int pv) {
    if (pv == pattern.vertex_count()) return true;
    for (int hv = 0; hv < host.vertex_count(); ++hv) {
      if (used[hv]) continue;
      if (budget >= 0 && ++nodes > budget) {
        exhausted = true;
        return false;
      }
      if (host.degree(hv) < pattern.degree(pv)) continue;
      bool ok = true;
      for (int pu = 0; pu < pv; ++pu) {
        if (pattern.adjacent(pu, pv) != host.adjacent(map[pu], hv)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[pv] = hv;
      used[hv] = 1;
      if (extend(pv + 1)) return true;
      used[hv] = 0;
      map[pv] = -1;
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

FullSubgraphResult is_full_subgraph(const FiniteGraph& pattern, const FiniteGraph& host,
                                    long long node_budget) {
  FullSubgraphResult res;
  if (pattern.vertex_count() > host.vertex_count()) return res;
  SearchState st{pattern, host, node_budget};
  st.map.assign(size_t(pattern.vertex_count()), -1);
  st.used.assign(size_t(host.vertex_count()), 0);
  const bool found = st.extend(0);
  res.nodes_visited = st.nodes;
  if (found) {
    res.witness = FullEmbeddingWitness{st.map};
  } else if (st.exhausted) {
    res.exhausted = true;
  }
  return res;
}

std::vector<int> raag_center_support(const FiniteGraph& g) {
  std::vector<int> cone;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) cone.push_back(v);
  return cone;
}

std::string write_graph(const FiniteGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

FiniteGraph read_graph(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  if (!(in >> word) || word != "graph") throw ParseError("expected 'graph <n>' header");
  int n = -1;
  if (!(in >> n) || n < 0) throw ParseError("bad vertex count");
  FiniteGraph g(n);
  while (in >> word) {
    if (word != "e") throw ParseError("expected edge line 'e <i> <j>'");
    int u, v;
    if (!(in >> u >> v)) throw ParseError("bad edge line");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge index out of range");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace curvechain
