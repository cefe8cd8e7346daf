#pragma once

// Bounded exhaustive searches over the small-weight components of a
// triangulated surface.  Shared by the property tests and the acceptance
// checks: "no chain longer than the bound exists below this weight" is
// checked by actually enumerating every candidate pattern and running the
// verifier on it.

#include <cstdlib>
#include <string>
#include <vector>

#include "curvechain/intersect.hpp"
#include "curvechain/normal.hpp"
#include "curvechain/witness.hpp"

namespace harness {

using namespace curvechain;

inline int search_budget(int fallback = 6) {
  if (const char* env = std::getenv("CURVECHAIN_SEARCH_BUDGET")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return fallback;
}

// Deduplicated essential components up to a weight cap, split into closed
// curves and arcs.  Pairwise intersection numbers are computed on demand
// and cached (searches touch only a fraction of the arc pairs).
struct Pool {
  Triangulation tri;
  std::vector<Component> curves;
  std::vector<Component> arcs;

  long long cc(size_t i, size_t j) const { return look(cc_, curves[i], curves[j], i, j); }
  long long ca(size_t i, size_t j) const { return look(ca_, curves[i], arcs[j], i, j); }
  long long aa(size_t i, size_t j) const { return look(aa_, arcs[i], arcs[j], i, j); }

  mutable std::vector<std::vector<long long>> cc_, ca_, aa_;

 private:
  long long look(std::vector<std::vector<long long>>& m, const Component& a, const Component& b,
                 size_t i, size_t j) const {
    if (m[i][j] < 0) {
      m[i][j] = geometric_intersection(tri, a, b);
      if (&m != &ca_) m[j][i] = m[i][j];
    }
    return m[i][j];
  }
};

inline Pool build_pool(const Triangulation& tri, int max_weight) {
  Pool pool;
  pool.tri = tri;
  for (const Component& c : enumerate_components(tri, max_weight, true)) {
    bool arc = c.edge_arc;
    if (!arc) {
      const ComponentClass cls = classify_component(tri, c.coords);
      if (cls == ComponentClass::Peripheral) continue;
      arc = (cls == ComponentClass::Arc);
    }
    auto& bucket = arc ? pool.arcs : pool.curves;
    // distinct reduced coordinates are distinct classes, so duplicates can
    // only involve an edge-parallel arc on one side
    bool dup = false;
    for (const Component& prev : bucket) {
      if (!c.edge_arc && !prev.edge_arc) continue;
      if (is_isotopic(tri, prev, c)) {
        dup = true;
        break;
      }
    }
    if (!dup) bucket.push_back(c);
  }
  const size_t nc = pool.curves.size(), na = pool.arcs.size();
  pool.cc_.assign(nc, std::vector<long long>(nc, -1));
  pool.ca_.assign(nc, std::vector<long long>(na, -1));
  pool.aa_.assign(na, std::vector<long long>(na, -1));
  for (size_t i = 0; i < nc; ++i) pool.cc_[i][i] = 0;
  for (size_t i = 0; i < na; ++i) pool.aa_[i][i] = 0;
  return pool;
}

struct SearchResult {
  bool found = false;
  NormalCurveSystem sys;
  ChainCertificate cert;
};

namespace detail {

inline Component renamed(const Component& c, const std::string& name) {
  Component out = c;
  out.name = name;
  return out;
}

// Enumerates induced paths c_0 .. c_{len-1} in the curve intersection
// graph (consecutive pairs positive, every other pair zero) and calls
// visit on each; visit returns true to stop the search.
template <typename Visit>
bool curve_paths(const Pool& pool, int len, Visit&& visit) {
  const int n = int(pool.curves.size());
  std::vector<int> path;
  std::vector<bool> used(size_t(n), false);
  auto rec = [&](auto&& self) -> bool {
    if (int(path.size()) == len) return visit(path);
    for (int v = 0; v < n; ++v) {
      if (used[size_t(v)]) continue;
      bool ok = true;
      for (size_t i = 0; ok && i < path.size(); ++i) {
        const long long w = pool.cc(size_t(path[i]), size_t(v));
        ok = (i + 1 == path.size()) ? (w > 0) : (w == 0);
      }
      if (!ok) continue;
      used[size_t(v)] = true;
      path.push_back(v);
      if (self(self)) return true;
      path.pop_back();
      used[size_t(v)] = false;
    }
    return false;
  };
  return rec(rec);
}

}  // namespace detail

// First verified cyclic chain of exactly the given length, if any.
inline SearchResult find_cyclic_chain(const Pool& pool, int length) {
  SearchResult res;
  if (length < 3) return res;
  const int n = int(pool.curves.size());
  std::vector<int> path;
  std::vector<bool> used(size_t(n), false);
  // induced cycle: fix the smallest vertex first, orient by second < last
  auto rec = [&](auto&& self) -> bool {
    if (int(path.size()) == length) {
      if (pool.cc(size_t(path.back()), size_t(path[0])) == 0) return false;
      if (path[1] > path.back()) return false;
      NormalCurveSystem sys;
      sys.tri = pool.tri;
      for (size_t i = 0; i < path.size(); ++i)
        sys.components.push_back(
            detail::renamed(pool.curves[size_t(path[i])], "c" + std::to_string(i)));
      ChainCertificate cert = verify_cyclic_chain(sys);
      if (cert.kind != ChainKind::CyclicChain) return false;
      res = {true, std::move(sys), std::move(cert)};
      return true;
    }
    for (int v = path.empty() ? 0 : path[0] + 1; v < n; ++v) {
      if (used[size_t(v)]) continue;
      bool ok = true;
      for (size_t i = 0; ok && i < path.size(); ++i) {
        const long long w = pool.cc(size_t(path[i]), size_t(v));
        const bool closing = (i == 0 && int(path.size()) == length - 1);
        ok = (i + 1 == path.size()) ? (w > 0) : (closing ? true : (w == 0));
      }
      if (!ok) continue;
      used[size_t(v)] = true;
      path.push_back(v);
      if (self(self)) return true;
      path.pop_back();
      used[size_t(v)] = false;
    }
    return false;
  };
  rec(rec);
  return res;
}

// First verified chained triple (two arcs around a linear chain of the
// given length), if any.
inline SearchResult find_chained_triple(const Pool& pool, int length, TripleVariant variant) {
  SearchResult res;
  if (length < 1) return res;
  const int na = int(pool.arcs.size());
  detail::curve_paths(pool, length, [&](const std::vector<int>& path) {
    for (int a = 0; a < na; ++a) {
      bool ok_a = pool.ca(size_t(path[0]), size_t(a)) > 0;
      for (size_t i = 1; ok_a && i < path.size(); ++i)
        ok_a = pool.ca(size_t(path[i]), size_t(a)) == 0;
      if (!ok_a) continue;
      for (int b = 0; b < na; ++b) {
        if (b == a || pool.aa(size_t(a), size_t(b)) != 0) continue;
        bool ok_b = pool.ca(size_t(path.back()), size_t(b)) > 0;
        for (size_t i = 0; ok_b && i + 1 < path.size(); ++i)
          ok_b = pool.ca(size_t(path[i]), size_t(b)) == 0;
        if (!ok_b) continue;
        NormalCurveSystem sys;
        sys.tri = pool.tri;
        sys.components.push_back(detail::renamed(pool.arcs[size_t(a)], "da"));
        for (size_t i = 0; i < path.size(); ++i)
          sys.components.push_back(
              detail::renamed(pool.curves[size_t(path[i])], "c" + std::to_string(i)));
        sys.components.push_back(detail::renamed(pool.arcs[size_t(b)], "db"));
        ChainCertificate cert = verify_chained_triple(sys, variant);
        if (cert.kind != ChainKind::ChainedTriple) continue;
        res = {true, std::move(sys), std::move(cert)};
        return true;
      }
    }
    return false;
  });
  return res;
}

// First verified Y-quadruple with the given chain length, if any.  The
// optional keep predicate can demand extra structure of the candidate.
template <typename Keep>
SearchResult find_y_quadruple_if(const Pool& pool, int length, Keep&& keep) {
  SearchResult res;
  if (length < 1) return res;
  const int na = int(pool.arcs.size());
  detail::curve_paths(pool, length, [&](const std::vector<int>& path) {
    auto meets_only = [&](int arc, size_t which) {
      for (size_t i = 0; i < path.size(); ++i) {
        const long long w = pool.ca(size_t(path[i]), size_t(arc));
        if (i == which ? w == 0 : w != 0) return false;
      }
      return true;
    };
    for (int d1 = 0; d1 < na; ++d1) {
      if (!meets_only(d1, 0)) continue;
      for (int d2 = 0; d2 < na; ++d2) {
        if (d2 == d1 || !meets_only(d2, path.size() - 1)) continue;
        if (pool.aa(size_t(d1), size_t(d2)) != 0) continue;
        for (int d3 = d2 + 1; d3 < na; ++d3) {
          if (d3 == d1 || !meets_only(d3, path.size() - 1)) continue;
          if (pool.aa(size_t(d1), size_t(d3)) != 0) continue;
          if (pool.aa(size_t(d2), size_t(d3)) != 0) continue;
          NormalCurveSystem sys;
          sys.tri = pool.tri;
          sys.components.push_back(detail::renamed(pool.arcs[size_t(d1)], "d1"));
          for (size_t i = 0; i < path.size(); ++i)
            sys.components.push_back(
                detail::renamed(pool.curves[size_t(path[i])], "c" + std::to_string(i)));
          sys.components.push_back(detail::renamed(pool.arcs[size_t(d2)], "d2"));
          sys.components.push_back(detail::renamed(pool.arcs[size_t(d3)], "d3"));
          ChainCertificate cert = verify_y_quadruple(sys);
          if (cert.kind != ChainKind::YQuadruple) continue;
          if (!keep(sys, cert)) continue;
          res = {true, std::move(sys), std::move(cert)};
          return true;
        }
      }
    }
    return false;
  });
  return res;
}

inline SearchResult find_y_quadruple(const Pool& pool, int length) {
  return find_y_quadruple_if(pool, length,
                             [](const NormalCurveSystem&, const ChainCertificate&) { return true; });
}

}  // namespace harness
