#include "curvechain/surface.hpp"

#include <algorithm>
#include <charconv>

#include "curvechain/errors.hpp"

namespace curvechain {

namespace {

void check_fields(const Surface& s) {
  if (s.genus < 0 || s.punctures < 0 || s.boundary < 0)
    throw BadParameter("surface fields must be nonnegative");
}

std::vector<Surface> sorted(std::vector<Surface> pieces) {
  std::sort(pieces.begin(), pieces.end());
  return pieces;
}

}  // namespace

int euler_char(const Surface& s) {
  check_fields(s);
  return 2 - 2 * s.genus - s.punctures - s.boundary;
}

int complexity(const Surface& s) {
  check_fields(s);
  return 3 * s.genus - 3 + s.punctures + s.boundary;
}

Surface compactify(const Surface& s) {
  check_fields(s);
  return Surface{s.genus, 0, s.punctures + s.boundary};
}

Surface as_curve_graph_surface(const Surface& s) {
  check_fields(s);
  return Surface{s.genus, s.punctures + s.boundary, 0};
}

std::string to_token(const Surface& s) {
  return "S" + std::to_string(s.genus) + "," + std::to_string(s.punctures) +
         "," + std::to_string(s.boundary);
}

Surface surface_from_token(const std::string& token) {
  if (token.empty() || token[0] != 'S')
    throw ParseError("surface token must look like S{g},{p},{b}: " + token);
  int vals[3];
  const char* p = token.data() + 1;
  const char* end = token.data() + token.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, vals[i]);
    if (ec != std::errc() || vals[i] < 0)
      throw ParseError("bad surface token: " + token);
    p = next;
    if (i < 2) {
      if (p == end || *p != ',') throw ParseError("bad surface token: " + token);
      ++p;
    }
  }
  if (p != end) throw ParseError("bad surface token: " + token);
  return Surface{vals[0], vals[1], vals[2]};
}

// The cut operations work in the boundary convention: the superscript of
// S_g^n counts boundary circles, and punctures are folded in first.

static int folded_boundary(const Surface& s) {
  return as_curve_graph_surface(s).punctures;
}

std::vector<CutPartition> enumerate_arc_partitions(const Surface& s) {
  const int g = s.genus;
  const int n = folded_boundary(s);
  std::vector<CutPartition> parts;
  for (int g1 = 0; g1 <= g; ++g1) {
    const int g2 = g - g1;
    for (int n1 = 1; n1 <= n; ++n1) {
      const int n2 = n + 1 - n1;
      if (n2 < 1) continue;
      if (g1 == 0 && n1 < 2) continue;
      if (g2 == 0 && n2 < 2) continue;
      // Canonical representative: report each unordered partition once.
      if (std::make_pair(g1, n1) > std::make_pair(g2, n2)) continue;
      parts.push_back(CutPartition{g1, n1, g2, n2});
    }
  }
  return parts;
}

CutOutcome cut_along_arc(const Surface& s, CutKind kind) {
  const int g = s.genus;
  const int n = folded_boundary(s);
  if (n < 1) throw BadParameter("arc cuts need at least one boundary circle or puncture");
  if (kind == CutKind::NonSeparating) {
    if (g == 0)
      throw NotCuttable("a non-separating arc with both ends on one boundary "
                        "component needs genus");
    return CutOutcome{{Surface{g - 1, n + 1, 0}},
                      "non-separating arc: single piece, genus drops by one"};
  }
  CutOutcome out;
  out.constraint_note =
      "separating arc: g1+g2=g, n1+n2=n+1, ni>=1, ni>=2 when gi=0; all "
      "admissible partitions";
  for (const CutPartition& part : enumerate_arc_partitions(s)) {
    out.pieces.push_back(Surface{part.g1, part.p1, 0});
    out.pieces.push_back(Surface{part.g2, part.p2, 0});
  }
  out.pieces = sorted(out.pieces);
  return out;
}

CutOutcome cut_along_arc(const Surface& s, CutKind kind, const CutPartition& part) {
  if (kind == CutKind::NonSeparating) return cut_along_arc(s, kind);
  const int g = s.genus;
  const int n = folded_boundary(s);
  if (n < 1) throw BadParameter("arc cuts need at least one boundary circle or puncture");
  if (part.g1 + part.g2 != g || part.p1 + part.p2 != n + 1)
    throw InvalidPartition("partition totals must satisfy g1+g2=g, n1+n2=n+1");
  if (part.p1 < 1 || part.p2 < 1)
    throw InvalidPartition("each piece keeps at least one boundary circle");
  if ((part.g1 == 0 && part.p1 < 2) || (part.g2 == 0 && part.p2 < 2))
    throw InvalidPartition("a genus-zero piece needs at least two boundary circles");
  return CutOutcome{sorted({Surface{part.g1, part.p1, 0}, Surface{part.g2, part.p2, 0}}),
                    "separating arc: chosen partition"};
}

std::vector<CutPartition> enumerate_curve_partitions(const Surface& s) {
  const int g = s.genus;
  const int n = folded_boundary(s);
  std::vector<CutPartition> parts;
  for (int g1 = 0; g1 <= g; ++g1) {
    const int g2 = g - g1;
    for (int n1 = 1; n1 <= n + 1; ++n1) {
      const int n2 = n + 2 - n1;
      if (n2 < 1) continue;
      // Both pieces must carry nonpositive Euler characteristic (no disks,
      // and no sphere pieces, which cannot occur anyway since ni >= 1).
      if (2 - 2 * g1 - n1 > 0) continue;
      if (2 - 2 * g2 - n2 > 0) continue;
      if (std::make_pair(g1, n1) > std::make_pair(g2, n2)) continue;
      parts.push_back(CutPartition{g1, n1, g2, n2});
    }
  }
  return parts;
}

CutOutcome cut_along_closed_curve(const Surface& s, CutKind kind) {
  const int g = s.genus;
  const int n = folded_boundary(s);
  if (kind == CutKind::NonSeparating) {
    if (g < 1) throw NotCuttable("non-separating curves need genus");
    return CutOutcome{{Surface{g - 1, n + 2, 0}},
                      "non-separating curve: single piece, two new boundary circles"};
  }
  CutOutcome out;
  out.constraint_note =
      "separating curve: g1+g2=g, n1+n2=n+2, each piece with chi<=0; all "
      "admissible partitions";
  for (const CutPartition& part : enumerate_curve_partitions(s)) {
    out.pieces.push_back(Surface{part.g1, part.p1, 0});
    out.pieces.push_back(Surface{part.g2, part.p2, 0});
  }
  out.pieces = sorted(out.pieces);
  return out;
}

CutOutcome cut_along_closed_curve(const Surface& s, CutKind kind, const CutPartition& part) {
  if (kind == CutKind::NonSeparating) return cut_along_closed_curve(s, kind);
  const int g = s.genus;
  const int n = folded_boundary(s);
  if (part.g1 + part.g2 != g || part.p1 + part.p2 != n + 2)
    throw InvalidPartition("partition totals must satisfy g1+g2=g, n1+n2=n+2");
  if (part.p1 < 1 || part.p2 < 1)
    throw InvalidPartition("each side keeps its copy of the curve");
  if (2 - 2 * part.g1 - part.p1 > 0 || 2 - 2 * part.g2 - part.p2 > 0)
    throw InvalidPartition("pieces must have nonpositive Euler characteristic");
  return CutOutcome{sorted({Surface{part.g1, part.p1, 0}, Surface{part.g2, part.p2, 0}}),
                    "separating curve: chosen partition"};
}

}  // namespace curvechain
