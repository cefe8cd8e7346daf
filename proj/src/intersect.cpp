#include "curvechain/intersect.hpp"

#include <algorithm>
#include <vector>

#include "curvechain/errors.hpp"
#include "curvechain/trace.hpp"

namespace curvechain {

namespace {

// Two strands that run side by side through a sequence of shared edge
// crossings form a band.  Inside the band their vertical order (measured
// lo-to-hi on each entered side) is constant: each corner-arc transit and
// each edge gluing reverses the order, and every band step is one of each.
// The order each strand is forced into just past the two ends of the band
// is read off from where it turns next, and the band contributes one
// crossing exactly when the two forced orders disagree.

// Position class of the strand on the side it just entered: 0 = lo third
// (it turns around the lo corner), 1 = middle (it dies at the opposite
// vertex), 2 = hi third.
int forward_class(const TraceStep& st) {
  if (st.exit_side < 0) return 1;
  if (st.exit_side == (st.enter.side + 2) % 3) return 0;
  return 2;
}

// Position class on the same side of where the strand came from, flipped
// through the gluing into the entered frame.
int backward_class(const Trace& tr, int k) {
  const int n = int(tr.steps.size());
  if (!tr.closed && k == 0) return 1;  // the strand starts at a vertex
  const TraceStep& prev = tr.steps[size_t((k - 1 + n) % n)];
  if (prev.enter.side == (prev.exit_side + 1) % 3) return 0;
  return 2;
}

int sign_of(int d) { return d < 0 ? -1 : (d > 0 ? 1 : 0); }

// A band contributes a crossing when the forced orders at its two ends
// have opposite signs.  The constant records that convention so the slope
// oracle test pins it down empirically.
constexpr int kBandCrossSign = -1;

// Crossings between the strands of ta and tb forced along shared edge
// crossings (tb traversed as given; the caller passes the reverse
// traversal separately).
long long band_crossings(const Trace& ta, const Trace& tb) {
  const int n = int(ta.steps.size());
  const int m = int(tb.steps.size());
  long long total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      if (!(ta.steps[size_t(i)].enter == tb.steps[size_t(j)].enter)) continue;
      // only count each maximal run once, from its start
      const bool a_has_pred = ta.closed || i > 0;
      const bool b_has_pred = tb.closed || j > 0;
      if (a_has_pred && b_has_pred &&
          ta.steps[size_t((i - 1 + n) % n)].enter == tb.steps[size_t((j - 1 + m) % m)].enter)
        continue;
      int ia = i, jb = j, len = 1;
      while (len <= n + m) {
        const bool a_has_next = ta.closed || ia + 1 < n;
        const bool b_has_next = tb.closed || jb + 1 < m;
        if (!a_has_next || !b_has_next) break;
        const int ia2 = (ia + 1) % n, jb2 = (jb + 1) % m;
        if (!(ta.steps[size_t(ia2)].enter == tb.steps[size_t(jb2)].enter)) break;
        ia = ia2;
        jb = jb2;
        ++len;
      }
      if (len > n + m) continue;  // full-period parallelism, no crossing
      const int sf =
          sign_of(forward_class(ta.steps[size_t(ia)]) - forward_class(tb.steps[size_t(jb)]));
      const int sb = sign_of(backward_class(ta, i) - backward_class(tb, j));
      if (sf != 0 && sb != 0 && sf * sb == kBandCrossSign) ++total;
    }
  return total;
}

// Crossings forced inside a single triangle between strands that share no
// edge there: a terminal strand (side i to corner i) crosses every corner
// arc of the other component at corner i, and every terminal strand of the
// other component at a different corner.
long long local_crossings(const Triangulation& tri, const NormalCoordinates& a,
                          const NormalCoordinates& b) {
  long long total = 0;
  for (int t = 0; t < tri.triangles(); ++t) {
    const auto ca = corner_counts(tri, a, t);
    const auto cb = corner_counts(tri, b, t);
    for (int i = 0; i < 3; ++i) {
      const long long va = a.ends[size_t(t)][i];
      const long long vb = b.ends[size_t(t)][i];
      total += va * cb[size_t(i)] + vb * ca[size_t(i)];
      for (int j = 0; j < 3; ++j)
        if (j != i) total += va * b.ends[size_t(t)][size_t(j)];
    }
  }
  return total;
}

const Trace& single_trace(const std::vector<TracedComponent>& traced, const char* which) {
  if (traced.size() != 1)
    throw MalformedSystem(std::string(which) + " component is not connected");
  return traced.front().trace;
}

}  // namespace

long long geometric_intersection(const Triangulation& tri, const Component& a,
                                 const Component& b) {
  if (a.edge_arc && b.edge_arc) return 0;
  if (a.edge_arc) {
    validate_coordinates(tri, b.coords);
    if (a.edge < 0 || a.edge >= tri.edges()) throw BadParameter("edge out of range");
    return b.coords.weights[size_t(a.edge)];
  }
  if (b.edge_arc) return geometric_intersection(tri, b, a);

  validate_coordinates(tri, a.coords);
  validate_coordinates(tri, b.coords);
  if (a.coords == b.coords) return 0;

  const auto traced_a = trace_components(tri, a.coords);
  const auto traced_b = trace_components(tri, b.coords);
  const Trace& ta = single_trace(traced_a, "first");
  const Trace& tb = single_trace(traced_b, "second");
  const Trace tb_rev = reverse_trace(tri, tb);

  return band_crossings(ta, tb) + band_crossings(ta, tb_rev) +
         local_crossings(tri, a.coords, b.coords);
}

bool disjointly_realizable(const Triangulation& tri, const Component& a, const Component& b) {
  if (a.edge_arc && b.edge_arc) return true;
  if (a.edge_arc) {
    validate_coordinates(tri, b.coords);
    if (a.edge < 0 || a.edge >= tri.edges()) throw BadParameter("edge out of range");
    return b.coords.weights[size_t(a.edge)] == 0;
  }
  if (b.edge_arc) return disjointly_realizable(tri, b, a);

  validate_coordinates(tri, a.coords);
  validate_coordinates(tri, b.coords);
  NormalCoordinates sum = add(a.coords, b.coords);
  try {
    validate_coordinates(tri, sum);
  } catch (const MalformedSystem&) {
    return false;
  }
  auto pieces = split_components(tri, sum);
  if (pieces.size() != 2) return false;
  auto key = [](const NormalCoordinates& c) { return std::make_pair(c.weights, c.ends); };
  auto lo = std::min(key(pieces[0]), key(pieces[1]));
  auto hi = std::max(key(pieces[0]), key(pieces[1]));
  return lo == std::min(key(a.coords), key(b.coords)) &&
         hi == std::max(key(a.coords), key(b.coords));
}

}  // namespace curvechain
