#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvechain/surface.hpp"

namespace curvechain {

enum class Answer { Yes, No, NoClaim };

// Outcome of a threshold query.  `answer` is Yes iff the query parameter
// is at most `threshold` (after the n<=1 clamp); NoClaim marks surfaces or
// parameters the classification tables are silent about.
struct Verdict {
  Answer answer = Answer::NoClaim;
  int threshold = 0;
  std::string citation;
  std::vector<std::string> notes;
};

// Largest n for which the n-strand braid group virtually embeds into the
// mapping class group of s (clamped below at 1: one-strand braids are
// trivial and embed everywhere).
int braid_virtual_bound(const Surface& s);

Verdict decide_braid_virtual(int n, const Surface& s);

// Same thresholds, but the statement is a genuine (not virtual) embedding
// of the pure braid group.
Verdict decide_pure_braid(int n, const Surface& s);

// Embeddability of the right-angled Artin group on the complement of an
// m-cycle into Mod(S_{g,p}); b must be 0.
Verdict decide_raag_cycle(int m, const Surface& s);

// Same for A(C_m^c) x Z.
Verdict decide_raag_cycle_times_z(int m, const Surface& s);

// A(C_m^c) x Z inside the braid group B_n (n >= 3): yes iff m <= n+1;
// beyond that the tables make no claim.
Verdict raag_cycle_z_in_braid(int m, int n);

// --- extension routes -----------------------------------------------------

enum class StepKind {
  HyperbolicExtension,
  TrivialInclusion,
  AnnularExtension,
  PseudoAnnularExtension,
  BirmanHildenCover,
  Capping,
};

struct RouteStep {
  StepKind kind = StepKind::TrivialInclusion;
  Surface source;
  Surface target;
  int annuli = 0;            // pseudo-annular / annular bookkeeping
  int punctured_disks = 0;   // pseudo-annular bookkeeping
  int branch_points = 0;     // Birman-Hilden bookkeeping
  std::vector<Surface> complement_pieces;  // hyperbolic steps record these
};

struct EmbeddingRoute {
  int braid_index = 0;
  std::vector<RouteStep> steps;
  Surface conclusion;
};

// Constructive route realizing decide_braid_virtual(n, s) = yes as a
// composition of extension steps from the n-punctured disk (possibly via
// its Birman-Hilden cover).  Returns nullopt when the verdict is no.
std::optional<EmbeddingRoute> plan_route(int n, const Surface& s);

// Checks every per-step side condition plus global composition; returns
// the list of violations (empty means the route is valid).
std::vector<std::string> validate_route(const EmbeddingRoute& route);

std::string write_route(const EmbeddingRoute& route);

// --- cross-table audit ------------------------------------------------------

struct AuditReport {
  int cells_checked = 0;
  std::vector<std::string> unexpected;   // should stay empty
  std::vector<std::string> whitelisted;  // documented edge cells that trip rules
  bool clean() const { return unexpected.empty(); }
};

// Over the grid g <= g_max, p <= p_max, b <= b_max verifies that the
// piecewise thresholds match their Euler-characteristic restatements, that
// the braid and cycle-RAAG tables interlock, that plan_route succeeds on
// exactly the yes-region, and that thresholds are monotone in each
// parameter.
AuditReport consistency_audit(int g_max, int p_max, int b_max);

}  // namespace curvechain
