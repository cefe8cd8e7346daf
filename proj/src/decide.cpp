#include "curvechain/decide.hpp"

#include <algorithm>
#include <sstream>

#include "curvechain/errors.hpp"

namespace curvechain {

namespace {

Surface disk(int n) { return Surface{0, n, 1}; }

void check_surface(const Surface& s) {
  if (s.genus < 0 || s.punctures < 0 || s.boundary < 0)
    throw BadParameter("surface parameters must be nonnegative");
}

struct Row {
  int value;
  std::string citation;
};

Row braid_row(const Surface& s) {
  const int g = s.genus, p = s.punctures, b = s.boundary;
  if (b == 0) {
    if (g == 0 && p <= 3)
      return {1, "braid bound: sphere with at most three punctures carries only trivial braid groups"};
    if ((g == 0 && p == 4) || (g == 1 && p <= 1))
      return {2, "braid bound: sporadic small surfaces give 2"};
    if (g == 0)
      return {p - 2, "braid bound: sphere with p>=5 punctures gives p-2"};
    if (p == 0)
      return {2 * g, "braid bound: closed genus g>=2 gives 2g"};
    return {2 * g + p - 1, "braid bound: punctured positive genus gives 2g+p-1"};
  }
  if (g >= 1 && p + b <= 2)
    return {2 * g + p + b, "braid bound: positive genus with p+b<=2 boundary data gives 2g+p+b"};
  return {2 * g + p + b - 1, "braid bound: general boundary case gives 2g+p+b-1"};
}

Verdict threshold_verdict(int query, int threshold, std::string citation,
                          std::vector<std::string> notes = {}) {
  Verdict v;
  v.answer = query <= threshold ? Answer::Yes : Answer::No;
  v.threshold = threshold;
  v.citation = std::move(citation);
  v.notes = std::move(notes);
  return v;
}

}  // namespace

int braid_virtual_bound(const Surface& s) {
  check_surface(s);
  return std::max(braid_row(s).value, 1);
}

Verdict decide_braid_virtual(int n, const Surface& s) {
  check_surface(s);
  if (n < 1) throw BadParameter("braid index must be at least 1");
  Row row = braid_row(s);
  std::vector<std::string> notes;
  if (row.value < 1)
    notes.push_back("raw bound clamped up to 1: the one-strand braid group is trivial");
  if (euler_char(s) >= 0)
    notes.push_back("degenerate surface with nonnegative Euler characteristic; small mapping class group");
  return threshold_verdict(n, std::max(row.value, 1), row.citation, std::move(notes));
}

Verdict decide_pure_braid(int n, const Surface& s) {
  Verdict v = decide_braid_virtual(n, s);
  v.citation = "pure braid bound: the n-strand threshold coincides with the virtual braid threshold";
  v.notes.push_back("the pure braid embedding is genuine, not just virtual");
  return v;
}

Verdict decide_raag_cycle(int m, const Surface& s) {
  check_surface(s);
  if (m < 0) throw BadParameter("cycle length must be nonnegative");
  if (s.boundary != 0) throw BadParameter("cycle-RAAG thresholds are tabulated for boundaryless surfaces");
  const int g = s.genus, p = s.punctures;
  Row row;
  if (g == 0 && p <= 3)
    row = {0, "cycle-RAAG bound: spheres with at most three punctures admit no cycle"};
  else if ((g == 0 && p == 4) || (g == 1 && p <= 1))
    row = {3, "cycle-RAAG bound: sporadic small surfaces give 3"};
  else if ((g == 1 && p == 2) || (g == 0 && p == 5))
    row = {5, "cycle-RAAG bound: sporadic small surfaces give 5"};
  else if (g >= 2 && p == 0)
    row = {2 * g + 2, "cycle-RAAG bound: closed genus g>=2 gives 2g+2"};
  else if (g >= 2 && p <= 2)
    row = {2 * g + p + 1, "cycle-RAAG bound: genus g>=2 with one or two punctures gives 2g+p+1"};
  else
    row = {2 * g + p, "cycle-RAAG bound: general punctured case gives 2g+p"};
  return threshold_verdict(m, row.value, row.citation);
}

Verdict decide_raag_cycle_times_z(int m, const Surface& s) {
  check_surface(s);
  if (m < 0) throw BadParameter("cycle length must be nonnegative");
  if (s.boundary != 0) throw BadParameter("cycle-RAAG thresholds are tabulated for boundaryless surfaces");
  const int g = s.genus, p = s.punctures;
  if ((g == 0 && p <= 3) || (g == 1 && p == 0)) {
    // past the tabulated range; only the bare center factor (m = 0) has a
    // defensible answer, and even that is flagged rather than asserted
    Verdict v;
    v.threshold = 0;
    v.citation = "cycle-RAAG x Z bound: surface outside the tabulated range";
    if (m == 0) {
      bool infinite_mcg = (g == 1 && p == 0);
      v.answer = infinite_mcg ? Answer::Yes : Answer::No;
      v.notes.push_back("m = 0 reduces to embedding Z, which works exactly when the mapping class group is infinite; flagged, not asserted by the tables");
    } else {
      v.answer = Answer::NoClaim;
      v.notes.push_back("the tables make no claim for this surface");
    }
    return v;
  }
  Row row;
  if ((g == 0 && p == 4) || (g == 1 && p == 1))
    row = {0, "cycle-RAAG x Z bound: sporadic small surfaces leave no room past the center"};
  else if ((g == 0 && p == 5) || (g == 1 && p == 2))
    row = {3, "cycle-RAAG x Z bound: sporadic small surfaces give 3"};
  else if (g == 0)
    row = {p - 1, "cycle-RAAG x Z bound: sphere with p>=6 punctures gives p-1"};
  else if (g == 1)
    row = {p + 2, "cycle-RAAG x Z bound: torus with p>=3 punctures gives p+2"};
  else if (p == 0)
    row = {2 * g + 1, "cycle-RAAG x Z bound: closed genus g>=2 gives 2g+1"};
  else
    row = {2 * g + p, "cycle-RAAG x Z bound: punctured genus g>=2 gives 2g+p"};
  return threshold_verdict(m, row.value, row.citation);
}

Verdict raag_cycle_z_in_braid(int m, int n) {
  if (n < 3) throw BadParameter("braid index must be at least 3");
  if (m < 0) throw BadParameter("cycle length must be nonnegative");
  Verdict v;
  v.threshold = n + 1;
  v.citation = "cycle-RAAG x Z in braid groups: cycles up to length n+1 embed";
  if (m <= n + 1) {
    v.answer = Answer::Yes;
  } else {
    v.answer = Answer::NoClaim;
    v.notes.push_back("the braid-group tables are silent past m = n+1; this is not a refutation");
  }
  return v;
}

// --- routes ------------------------------------------------------------------

namespace {

RouteStep trivial_step(const Surface& from, const Surface& to) {
  RouteStep st;
  st.kind = StepKind::TrivialInclusion;
  st.source = from;
  st.target = to;
  return st;
}

RouteStep hyperbolic_step(const Surface& from, const Surface& to,
                          std::vector<Surface> pieces) {
  RouteStep st;
  st.kind = StepKind::HyperbolicExtension;
  st.source = from;
  st.target = to;
  st.complement_pieces = std::move(pieces);
  return st;
}

RouteStep bh_step(int n) {
  RouteStep st;
  st.kind = StepKind::BirmanHildenCover;
  st.source = disk(n);
  st.branch_points = n;
  st.target = n % 2 == 0 ? Surface{n / 2 - 1, 0, 2} : Surface{(n - 1) / 2, 0, 1};
  return st;
}

RouteStep pseudo_annular_step(int k, const Surface& target) {
  RouteStep st;
  st.kind = StepKind::PseudoAnnularExtension;
  st.source = disk(k);
  st.target = target;
  st.annuli = target.genus;
  st.punctured_disks = target.punctures;
  return st;
}

// grows the n-punctured disk to the k-punctured disk when n < k
void grow_disk(std::vector<RouteStep>& steps, int n, int k) {
  if (n < k)
    steps.push_back(hyperbolic_step(disk(n), disk(k), {Surface{0, k - n, 2}}));
}

}  // namespace

std::optional<EmbeddingRoute> plan_route(int n, const Surface& s) {
  check_surface(s);
  if (n < 1) throw BadParameter("braid index must be at least 1");
  if (n > braid_virtual_bound(s)) return std::nullopt;

  EmbeddingRoute route;
  route.braid_index = n;
  route.conclusion = s;
  const int g = s.genus, p = s.punctures, b = s.boundary;

  if (n <= 1) {
    // trivial group, any surface works
    route.steps.push_back(trivial_step(disk(n), s));
    return route;
  }

  if (b == 0 && g == 0) {
    // punctured sphere: one hyperbolic step, complement is a punctured disk
    route.steps.push_back(hyperbolic_step(disk(n), s, {Surface{0, p - n, 1}}));
    return route;
  }

  if (b == 0 && p == 0) {
    // closed surface: hyperelliptic-style double cover, then one extension
    RouteStep cover = bh_step(n);
    Surface covered = cover.target;
    route.steps.push_back(cover);
    if (covered == Surface{g - 1, 0, 2}) {
      RouteStep ann;
      ann.kind = StepKind::AnnularExtension;
      ann.source = covered;
      ann.target = s;
      ann.annuli = 1;
      route.steps.push_back(ann);
    } else if (covered.boundary == 2) {
      route.steps.push_back(hyperbolic_step(
          covered, s, {Surface{g - covered.genus - 1, 0, 2}}));
    } else {
      route.steps.push_back(hyperbolic_step(
          covered, s, {Surface{g - covered.genus, 0, 1}}));
    }
    return route;
  }

  if (b == 0 || (g == 0 && b >= 1) || (g >= 1 && p + b >= 3)) {
    if (g == 0 && b == 1) {
      // n-punctured disk inside the p-punctured disk
      if (n == p)
        route.steps.push_back(trivial_step(disk(n), s));
      else
        route.steps.push_back(hyperbolic_step(disk(n), s, {Surface{0, p - n, 2}}));
      return route;
    }
    const int k = 2 * g + p + b - 1;
    grow_disk(route.steps, n, k);
    route.steps.push_back(pseudo_annular_step(k, s));
    return route;
  }

  // remaining: g >= 1 with p + b <= 2 and b >= 1, reached through the cover
  if (p == 0) {
    const int top = b == 1 ? 2 * g + 1 : 2 * g + 2;
    grow_disk(route.steps, n, top);
    route.steps.push_back(bh_step(top));
    return route;
  }
  // (g, 1, 1): cover onto S_g^2, then trade one boundary circle for a puncture
  const int top = 2 * g + 2;
  grow_disk(route.steps, n, top);
  route.steps.push_back(bh_step(top));
  RouteStep cap;
  cap.kind = StepKind::Capping;
  cap.source = Surface{g, 0, 2};
  cap.target = s;
  route.steps.push_back(cap);
  return route;
}

std::vector<std::string> validate_route(const EmbeddingRoute& route) {
  std::vector<std::string> bad;
  auto complain = [&](const std::string& msg) { bad.push_back(msg); };

  if (route.steps.empty()) {
    complain("route has no steps");
    return bad;
  }
  if (route.braid_index < 1) complain("braid index must be at least 1");
  if (route.steps.front().source != disk(route.braid_index))
    complain("route must start from the braid-index-punctured disk");
  for (size_t i = 0; i + 1 < route.steps.size(); ++i)
    if (route.steps[i].target != route.steps[i + 1].source)
      complain("step " + std::to_string(i + 1) + " does not start where step " +
               std::to_string(i) + " ends");
  if (route.steps.back().target != route.conclusion)
    complain("final step does not land on the stated conclusion");

  for (size_t i = 0; i < route.steps.size(); ++i) {
    const RouteStep& st = route.steps[i];
    auto where = [&](const std::string& msg) {
      complain("step " + std::to_string(i) + ": " + msg);
    };
    const Surface& a = st.source;
    const Surface& t = st.target;
    switch (st.kind) {
      case StepKind::TrivialInclusion:
        if (!(a == t || (a.genus == 0 && a.boundary == 1 && a.punctures <= 1)))
          where("trivial inclusion needs equal surfaces or a trivial source group");
        break;
      case StepKind::HyperbolicExtension: {
        if (st.complement_pieces.empty())
          where("hyperbolic extension must record its complement pieces");
        int chi = euler_char(a);
        for (const Surface& piece : st.complement_pieces) {
          if (euler_char(piece) >= 0)
            where("complement piece " + to_token(piece) + " is not hyperbolic");
          chi += euler_char(piece);
        }
        if (chi != euler_char(t))
          where("Euler characteristics of source and complement do not add up");
        break;
      }
      case StepKind::AnnularExtension:
        if (st.annuli < 1) where("annular extension needs at least one annulus");
        if (a.punctures != t.punctures) where("annular extension cannot change punctures");
        if (a.boundary != 2 * st.annuli + t.boundary)
          where("annuli do not account for the boundary circles");
        if (t.genus != a.genus + st.annuli)
          where("each glued annulus must add one handle");
        break;
      case StepKind::PseudoAnnularExtension: {
        if (a.genus != 0 || a.boundary != 1)
          where("pseudo-annular source must be a punctured sphere with one boundary circle");
        const int circles = a.punctures + 1;  // after compactifying
        const int left = circles - 2 * st.annuli - st.punctured_disks;
        if (st.annuli < 0 || st.punctured_disks < 0 || left < 0)
          where("attachment counts exceed the available boundary circles");
        else if (t != Surface{st.annuli, st.punctured_disks, left})
          where("attachment bookkeeping does not produce the target surface");
        break;
      }
      case StepKind::BirmanHildenCover: {
        const int m = st.branch_points;
        if (a != disk(m))
          where("cover source must be the disk with one puncture per branch point");
        Surface expect = m % 2 == 0 ? Surface{m / 2 - 1, 0, 2}
                                    : Surface{(m - 1) / 2, 0, 1};
        if (m < 2 || t != expect)
          where("double cover branched at " + std::to_string(m) +
                " points does not give " + to_token(t));
        break;
      }
      case StepKind::Capping:
        if (a.boundary < 1 || t.boundary != a.boundary - 1 ||
            t.punctures != a.punctures + 1 || t.genus != a.genus)
          where("capping must trade exactly one boundary circle for a puncture");
        break;
    }
  }
  return bad;
}

std::string write_route(const EmbeddingRoute& route) {
  auto kind_name = [](StepKind k) {
    switch (k) {
      case StepKind::HyperbolicExtension: return "hyperbolic-extension";
      case StepKind::TrivialInclusion: return "trivial-inclusion";
      case StepKind::AnnularExtension: return "annular-extension";
      case StepKind::PseudoAnnularExtension: return "pseudo-annular-extension";
      case StepKind::BirmanHildenCover: return "birman-hilden-cover";
      case StepKind::Capping: return "capping";
    }
    return "?";
  };
  std::ostringstream out;
  out << "route braid=" << route.braid_index << " target="
      << to_token(route.conclusion) << "\n";
  for (const RouteStep& st : route.steps) {
    out << kind_name(st.kind) << " " << to_token(st.source) << " -> "
        << to_token(st.target);
    if (st.kind == StepKind::HyperbolicExtension) {
      out << " complement";
      for (const Surface& piece : st.complement_pieces) out << " " << to_token(piece);
    } else if (st.kind == StepKind::AnnularExtension) {
      out << " annuli=" << st.annuli;
    } else if (st.kind == StepKind::PseudoAnnularExtension) {
      out << " annuli=" << st.annuli << " punctured-disks=" << st.punctured_disks;
    } else if (st.kind == StepKind::BirmanHildenCover) {
      out << " branch-points=" << st.branch_points;
    }
    out << "\n";
  }
  return out.str();
}

// --- audit -------------------------------------------------------------------

namespace {

// independent restatement of the braid thresholds through the Euler
// characteristic, used to cross-check the piecewise rows
int braid_threshold_chi_form(const Surface& s) {
  const int g = s.genus, p = s.punctures, b = s.boundary;
  const int chi = euler_char(s);
  int t;
  if (b == 0) {
    if (g == 0 && p <= 3) t = 1;
    else if ((g == 0 && p == 4) || (g == 1 && p <= 1)) t = 2;
    else if (g == 0) t = -chi;
    else if (p == 0) t = 2 - chi;
    else t = 1 - chi;
  } else {
    t = (g >= 1 && p + b <= 2) ? 2 - chi : 1 - chi;
  }
  return std::max(t, 1);
}

int raag_cycle_chi_form(const Surface& s) {
  const int g = s.genus, p = s.punctures;
  const int chi = euler_char(s);
  if (g == 0 && p <= 3) return 0;
  if ((g == 0 && p == 4) || (g == 1 && p <= 1)) return 3;
  if ((g == 1 && p == 2) || (g == 0 && p == 5)) return 5;
  if (g >= 2 && p == 0) return 4 - chi;
  if (g >= 2 && p <= 2) return 3 - chi;
  return 2 - chi;
}

int raag_cycle_z_chi_form(const Surface& s) {
  const int g = s.genus, p = s.punctures;
  const int chi = euler_char(s);
  if ((g == 0 && p == 4) || (g == 1 && p == 1)) return 0;
  if ((g == 0 && p == 5) || (g == 1 && p == 2)) return 3;
  if (g == 0) return 1 - chi;
  if (g >= 2 && p == 0) return 3 - chi;
  return 2 - chi;
}

bool raag_z_in_range(const Surface& s) {
  return !((s.genus == 0 && s.punctures <= 3) ||
           (s.genus == 1 && s.punctures == 0));
}

}  // namespace

AuditReport consistency_audit(int g_max, int p_max, int b_max) {
  if (g_max < 0 || p_max < 0 || b_max < 0)
    throw BadParameter("audit grid limits must be nonnegative");
  AuditReport report;
  for (int g = 0; g <= g_max; ++g)
    for (int p = 0; p <= p_max; ++p)
      for (int b = 0; b <= b_max; ++b) {
        const Surface s{g, p, b};
        ++report.cells_checked;
        const std::string cell = to_token(s);

        if (euler_char(s) >= 0)
          report.whitelisted.push_back(
              cell + ": nonnegative Euler characteristic, degenerate mapping class group convention");

        // thresholds against their chi restatements
        const int braid = braid_virtual_bound(s);
        if (braid != braid_threshold_chi_form(s))
          report.unexpected.push_back(cell + ": braid threshold disagrees with its chi form");
        if (b == 0) {
          if (decide_raag_cycle(0, s).threshold != raag_cycle_chi_form(s))
            report.unexpected.push_back(cell + ": cycle-RAAG threshold disagrees with its chi form");
          if (raag_z_in_range(s) &&
              decide_raag_cycle_times_z(0, s).threshold != raag_cycle_z_chi_form(s))
            report.unexpected.push_back(cell + ": cycle-RAAG x Z threshold disagrees with its chi form");
        }

        // interlock: a braid group that fits should leave room for the
        // corresponding cycle-RAAG with center, except on documented
        // sporadic small surfaces
        if (b == 0 && raag_z_in_range(s)) {
          const int z = decide_raag_cycle_times_z(0, s).threshold;
          if (braid + 1 > z) {
            const bool sporadic = (g == 0 && (p == 4 || p == 5)) ||
                                  (g == 1 && (p == 1 || p == 2));
            if (sporadic)
              report.whitelisted.push_back(cell + ": sporadic cell where braid+1 exceeds the cycle-RAAG x Z threshold");
            else
              report.unexpected.push_back(cell + ": braid+1 exceeds the cycle-RAAG x Z threshold");
          }
        }

        // routes exist exactly on the yes-region and validate cleanly
        for (int n = 1; n <= braid; ++n) {
          auto route = plan_route(n, s);
          if (!route) {
            report.unexpected.push_back(cell + ": no route for admissible n=" + std::to_string(n));
            continue;
          }
          auto bad = validate_route(*route);
          for (const std::string& msg : bad)
            report.unexpected.push_back(cell + " n=" + std::to_string(n) + ": " + msg);
        }
        if (plan_route(braid + 1, s))
          report.unexpected.push_back(cell + ": route produced past the threshold");

        // monotonicity in each parameter
        auto check_mono = [&](const Surface& bigger) {
          if (braid_virtual_bound(bigger) < braid)
            report.unexpected.push_back(cell + ": braid threshold drops towards " + to_token(bigger));
          if (b == 0 && bigger.boundary == 0) {
            if (decide_raag_cycle(0, bigger).threshold < decide_raag_cycle(0, s).threshold)
              report.unexpected.push_back(cell + ": cycle-RAAG threshold drops towards " + to_token(bigger));
            if (raag_z_in_range(s) && raag_z_in_range(bigger) &&
                decide_raag_cycle_times_z(0, bigger).threshold <
                    decide_raag_cycle_times_z(0, s).threshold)
              report.unexpected.push_back(cell + ": cycle-RAAG x Z threshold drops towards " + to_token(bigger));
          }
        };
        check_mono(Surface{g + 1, p, b});
        check_mono(Surface{g, p + 1, b});
        check_mono(Surface{g, p, b + 1});
      }
  return report;
}

}  // namespace curvechain
