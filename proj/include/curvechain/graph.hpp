#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvechain {

// Finite simple graph on vertices 0..n-1.  Adjacency is kept as bitsets
// (one word row per 64 vertices) so induced-subgraph search stays cheap.
// Optional per-vertex labels carry curve identities when graphs come from
// curve systems; labels never affect equality or search.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(int n);

  int vertex_count() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v
  int degree(int v) const;

  std::vector<std::string> labels;  // empty or size n_

  friend bool operator==(const FiniteGraph& a, const FiniteGraph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  void check_vertex(int v) const;
  int n_ = 0;
  int words_ = 0;
  std::vector<uint64_t> rows_;  // n_ rows of `words_` words each
};

FiniteGraph complement(const FiniteGraph& g);
FiniteGraph join(const FiniteGraph& a, const FiniteGraph& b);
FiniteGraph disjoint_union(const FiniteGraph& a, const FiniteGraph& b);

enum class GraphFamily { Path, Cycle, Complete };

// P_m, C_m (m >= 3), K_m.
FiniteGraph family(GraphFamily kind, int m);

// Injective vertex map from pattern into host preserving and reflecting
// adjacency (a full = induced subgraph embedding).
struct FullEmbeddingWitness {
  std::vector<int> vertex_map;  // pattern vertex -> host vertex
};

// Three-way search outcome: a witness, a definite no, or budget exhaustion.
struct FullSubgraphResult {
  std::optional<FullEmbeddingWitness> witness;
  bool exhausted = false;
  long long nodes_visited = 0;
};

// Backtracking search for an induced copy of `pattern` in `host`, with
// degree and neighborhood pruning.  Deterministic: returns the
// lexicographically least witness in pattern-vertex order.  `node_budget`
// < 0 means unlimited; exceeding it reports `exhausted` instead of "no".
FullSubgraphResult is_full_subgraph(const FiniteGraph& pattern, const FiniteGraph& host,
                                    long long node_budget = -1);

// Vertices adjacent to every other vertex (cone vertices).  The center of
// the right-angled Artin group A(G) is free abelian on exactly this set.
std::vector<int> raag_center_support(const FiniteGraph& g);

// Text format: first line "graph <n>", then "e <i> <j>" per edge.
std::string write_graph(const FiniteGraph& g);
FiniteGraph read_graph(const std::string& text);

}  // namespace curvechain
