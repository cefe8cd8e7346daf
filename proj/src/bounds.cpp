#include "curvechain/bounds.hpp"

#include "curvechain/errors.hpp"

namespace curvechain {

namespace {

Bound exact(int value, std::string citation) {
  return Bound{BoundKind::Exact, value, std::move(citation)};
}

Bound upper(int value, std::string citation) {
  return Bound{BoundKind::UpperOnly, value, std::move(citation)};
}

Bound imported(int value, std::string citation) {
  return Bound{BoundKind::ImportedUpper, value, std::move(citation)};
}

Bound none_exists(std::string citation) {
  return Bound{BoundKind::NoneExists, std::nullopt, std::move(citation)};
}

Bound out_of_range(std::string citation) {
  return Bound{BoundKind::OutOfTableRange, std::nullopt, std::move(citation)};
}

}  // namespace

Bound max_cyclic_chain(const Surface& surf) {
  const Surface s = as_curve_graph_surface(surf);
  const int g = s.genus, p = s.punctures;
  if (g == 0 && p >= 5)
    return exact(p, "cyclic chains: row g=0, p>=5 gives p (chains need m>=3)");
  if (g == 1 && p == 1)
    return exact(3, "cyclic chains: row (g,p)=(1,1) gives 3 (chains need m>=3)");
  if (g == 1 && p == 2)
    return exact(5, "cyclic chains: row (g,p)=(1,2) gives 5 (chains need m>=3)");
  if (g == 1 && p >= 3)
    return exact(p + 2, "cyclic chains: row g=1, p>=3 gives p+2 (chains need m>=3)");
  if (g >= 2 && p == 0)
    return exact(2 * g + 2, "cyclic chains: row g>=2, p=0 gives 2g+2 (chains need m>=3)");
  if (g >= 2 && p <= 2)
    return exact(2 * g + p + 1,
                 "cyclic chains: row g>=2, 1<=p<=2 gives 2g+p+1 (chains need m>=3)");
  if (g >= 2 && p >= 3)
    return exact(2 * g + p, "cyclic chains: row g>=2, p>=3 gives 2g+p (chains need m>=3)");
  return out_of_range("cyclic chains: no table row covers (" + std::to_string(g) + "," +
                      std::to_string(p) + "); nearest rows start at (0,5) and (1,1)");
}

Bound max_cyclic_join_k1(const Surface& surf) {
  const Surface s = as_curve_graph_surface(surf);
  const int g = s.genus, p = s.punctures;
  if ((g == 0 && p == 5) || (g == 1 && p == 2))
    return exact(3, "cyclic chain + disjoint apex: sporadic row {(0,5),(1,2)} gives 3");
  if (g == 0 && p >= 6)
    return exact(p - 1, "cyclic chain + disjoint apex: row g=0, p>=6 gives p-1");
  if (g == 1 && p >= 3)
    return exact(p + 2, "cyclic chain + disjoint apex: row g=1, p>=3 gives p+2");
  if (g >= 2 && p == 0)
    return exact(2 * g + 1, "cyclic chain + disjoint apex: row g>=2, p=0 gives 2g+1");
  if (g >= 2 && p >= 1)
    return exact(2 * g + p, "cyclic chain + disjoint apex: row g>=2, p>=1 gives 2g+p");
  return out_of_range("cyclic chain + disjoint apex: no table row covers (" +
                      std::to_string(g) + "," + std::to_string(p) + ")");
}

Bound max_chained_triple(const Surface& surf, TripleVariant variant) {
  const Surface s = as_curve_graph_surface(surf);
  const int g = s.genus, p = s.punctures;
  switch (variant) {
    case TripleVariant::Plain:
      if (g == 0 && p == 3) return upper(0, "chained triples: thrice-punctured sphere carries no essential curve");
      if (g == 0 && p >= 4) return upper(p - 2, "chained triples: row g=0, p>=4 gives m<=p-2");
      if (g == 1 && p == 1) return upper(2, "chained triples: row (1,1) gives m<=2");
      if (g == 1 && p == 2)
        return upper(3, "chained triples: row (1,2) gives m<=3 (via the extension remark only)");
      if (g == 1 && p >= 3) return upper(p, "chained triples: row g=1, p>=3 gives m<=p");
      if (g >= 2 && (p == 1 || p == 2))
        return upper(2 * g + p - 1, "chained triples: row g>=2, p in {1,2} gives m<=2g+p-1");
      if (g >= 2 && p >= 3)
        return upper(2 * g + p - 2, "chained triples: row g>=2, p>=3 gives m<=2g+p-2");
      return out_of_range("chained triples: no table row covers (" + std::to_string(g) + "," +
                          std::to_string(p) + ")");
    case TripleVariant::Star:
      if (g == 0 && (p == 2 || p == 3))
        return none_exists("chained triples with the disjoint-ends condition: none exist on (0,2) or (0,3)");
      if (g == 0 && p == 4)
        return upper(1, "chained triples with the disjoint-ends condition: row (0,4) gives m<=1");
      if (g == 0 && p >= 5)
        return upper(p - 3, "chained triples with the disjoint-ends condition: row g=0, p>=5 gives m<=p-3");
      if (g == 1 && p == 2)
        return upper(2, "chained triples with the disjoint-ends condition: row (1,2) gives m<=2");
      return out_of_range("chained triples with the disjoint-ends condition: no row covers (" +
                          std::to_string(g) + "," + std::to_string(p) + ")");
    case TripleVariant::RecursiveEnd:
      if (g == 1 && p == 2)
        return upper(2, "chained triples with recursive end arc: row (1,2) gives m<=2");
      if (g >= 2 && p == 2)
        return upper(2 * g, "chained triples with recursive end arc: row g>=2, p=2 gives m<=2g");
      return out_of_range("chained triples with recursive end arc: no row covers (" +
                          std::to_string(g) + "," + std::to_string(p) + ")");
  }
  throw BadParameter("unknown triple variant");
}

Bound max_y_quadruple(const Surface& surf) {
  const Surface s = as_curve_graph_surface(surf);
  const int g = s.genus, p = s.punctures;
  if (g == 0 && p == 3)
    return none_exists("Y-chained quadruples: disjoint arcs on one boundary circle of (0,3) are isotopic");
  if (g == 0 && p == 4) return upper(1, "Y-chained quadruples: row (0,4) gives m<=1");
  if (g == 0 && p >= 5) return upper(p - 3, "Y-chained quadruples: row g=0, p>=5 gives m<=p-3");
  if (g == 1 && p == 1) return none_exists("Y-chained quadruples: none exist on (1,1)");
  if (g == 1 && p == 2) return upper(2, "Y-chained quadruples: row (1,2) gives m<=2");
  if ((g == 1 && p >= 3) || (g >= 2 && p >= 2))
    return upper(2 * g + p - 3,
                 "Y-chained quadruples: row (g=1, p>=3) or (g>=2, p>=2) gives m<=2g+p-3");
  return out_of_range("Y-chained quadruples: no table row covers (" + std::to_string(g) + "," +
                      std::to_string(p) + "); the statement excludes g>=2, p=1");
}

Bound max_clique_joined_to_path(const Surface& surf, PathJoinMode mode) {
  const Surface s = as_curve_graph_surface(surf);
  const int g = s.genus, p = s.punctures;
  switch (mode) {
    case PathJoinMode::K2Fixed:
      if (g == 0 && p >= 5)
        return upper(p - 3, "path joined with an edge: row g=0, p>=5 gives path length m<=p-3");
      if (g == 1 && p >= 2)
        return upper(p, "path joined with an edge: row g=1, p>=2 gives path length m<=p");
      return out_of_range("path joined with an edge: no row covers (" + std::to_string(g) + "," +
                          std::to_string(p) + ")");
    case PathJoinMode::Path2gp1:
      if (g >= 2)
        return upper(g - 2, "clique joined to a (2g+p+1)-path complement: clique size m<=g-2");
      return out_of_range("clique joined to a (2g+p+1)-path complement: needs g>=2");
    case PathJoinMode::Path2gp:
      if (g >= 2)
        return upper(g - 1, "clique joined to a (2g+p)-path complement: clique size m<=g-1");
      return out_of_range("clique joined to a (2g+p)-path complement: needs g>=2");
  }
  throw BadParameter("unknown path-join mode");
}

Bound max_linear_chain(const Surface& surf) {
  const Surface s = as_curve_graph_surface(surf);
  const int g = s.genus, p = s.punctures;
  if (g == 0 && p >= 4)
    return imported(p - 1, "linear chains (imported classification): g=0, p>=4 gives p-1");
  if (g == 1 && p >= 1)
    return imported(p + 2, "linear chains (imported classification): g=1, p>=1 gives p+2");
  if (g >= 2)
    return imported(2 * g + p + 1, "linear chains (imported classification): g>=2 gives 2g+p+1");
  return out_of_range("linear chains: no quoted row covers (" + std::to_string(g) + "," +
                      std::to_string(p) + ")");
}

int min_genus_unit_chain(int m) {
  if (m < 3) throw BadParameter("cyclic chains need length at least 3");
  return (m + 1) / 2 - 1;
}

}  // namespace curvechain
