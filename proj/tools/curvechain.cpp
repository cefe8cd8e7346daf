#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvechain/bounds.hpp"
#include "curvechain/decide.hpp"
#include "curvechain/errors.hpp"
#include "curvechain/normal.hpp"
#include "curvechain/surface.hpp"
#include "curvechain/witness.hpp"

using json = nlohmann::json;
using namespace curvechain;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitNoClaim = 2;
constexpr int kExitUsage = 64;

const char* answer_word(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::NoClaim: return "no-claim";
  }
  return "no-claim";
}

int verdict_exit(Answer a) {
  switch (a) {
    case Answer::Yes: return kExitYes;
    case Answer::No: return kExitNo;
    case Answer::NoClaim: return kExitNoClaim;
  }
  return kExitNoClaim;
}

json verdict_json(const Verdict& v) {
  return json{{"answer", answer_word(v.answer)},
              {"threshold", v.threshold},
              {"citation", v.citation},
              {"notes", v.notes}};
}

int report_verdict(const Verdict& v, bool as_json) {
  if (as_json) {
    std::cout << verdict_json(v).dump(2) << "\n";
  } else {
    std::cout << answer_word(v.answer) << " (threshold " << v.threshold << ") - " << v.citation
              << "\n";
    for (const auto& n : v.notes) std::cout << "note: " << n << "\n";
  }
  return verdict_exit(v.answer);
}

const char* bound_word(BoundKind k) {
  switch (k) {
    case BoundKind::Exact: return "exact";
    case BoundKind::UpperOnly: return "at-most";
    case BoundKind::NoneExists: return "none-exists";
    case BoundKind::OutOfTableRange: return "no-claim";
    case BoundKind::ImportedUpper: return "at-most-imported";
  }
  return "no-claim";
}

int report_bound(const Bound& b, bool as_json) {
  if (as_json) {
    json j{{"kind", bound_word(b.kind)}, {"citation", b.citation}};
    if (b.value) j["value"] = *b.value;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << bound_word(b.kind);
    if (b.value) std::cout << " " << *b.value;
    std::cout << " (" << b.citation << ")\n";
  }
  return b.kind == BoundKind::OutOfTableRange ? kExitNoClaim : kExitYes;
}

const char* kind_token(ChainKind k) {
  switch (k) {
    case ChainKind::CyclicChain: return "cyclic-chain";
    case ChainKind::SemiCyclic: return "semi-cyclic";
    case ChainKind::LinearChain: return "linear-chain";
    case ChainKind::ChainedTriple: return "chained-triple";
    case ChainKind::YQuadruple: return "y-quadruple";
    case ChainKind::CyclicJoinK1: return "cyclic-join-k1";
    case ChainKind::Unverified: return "unverified";
  }
  return "unverified";
}

json certificate_json(const ChainCertificate& c) {
  json j{{"kind", kind_token(c.kind)},
         {"length", c.length},
         {"names", c.names},
         {"matrix", c.matrix},
         {"all_essential", c.all_essential},
         {"pairwise_non_isotopic", c.pairwise_non_isotopic},
         {"consecutive_positive", c.consecutive_positive},
         {"chord_free", c.chord_free}};
  if (!c.chord_free) j["offending_chord"] = {c.offending_chord.first, c.offending_chord.second};
  if (!c.arc_kinds.empty()) {
    j["arc_kinds"] = c.arc_kinds;
    j["condition_star"] = c.condition_star;
  }
  if (!c.caveat.empty()) j["note"] = c.caveat;
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw BadParameter("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"closed-form embedding criteria and verified curve systems"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the full record as JSON");

  // decide
  auto* decide = app.add_subcommand("decide", "threshold query for a group family");
  decide->fallthrough();
  std::string decide_family;
  decide->add_option("family", decide_family, "braid | pure-braid | raag-cycle | raag-cycle-z")
      ->required()
      ->check(CLI::IsMember({"braid", "pure-braid", "raag-cycle", "raag-cycle-z"}));
  int d_n = -1, d_m = -1, d_g = 0, d_p = 0, d_b = 0;
  decide->add_option("--n", d_n, "braid strand count");
  decide->add_option("--m", d_m, "cycle length");
  decide->add_option("--g", d_g, "genus")->required();
  decide->add_option("--p", d_p, "punctures")->required();
  decide->add_option("--b", d_b, "boundary components");

  // bound
  auto* bound = app.add_subcommand("bound", "table value for a chain shape");
  bound->fallthrough();
  std::string bound_shape;
  bound
      ->add_option("shape", bound_shape,
                   "cyclic | cyclic-k1 | linear | triple | triple-star | triple-rec | yquad | "
                   "pathjoin")
      ->required()
      ->check(CLI::IsMember({"cyclic", "cyclic-k1", "linear", "triple", "triple-star",
                             "triple-rec", "yquad", "pathjoin"}));
  int b_g = 0, b_p = 0;
  std::string pathjoin_mode = "k2";
  bound->add_option("--g", b_g, "genus")->required();
  bound->add_option("--p", b_p, "punctures")->required();
  bound->add_option("--mode", pathjoin_mode, "pathjoin mode: k2 | path2gp1 | path2gp")
      ->check(CLI::IsMember({"k2", "path2gp1", "path2gp"}));

  // route
  auto* route = app.add_subcommand("route", "extension route for a braid embedding");
  route->fallthrough();
  int r_n = 0, r_g = 0, r_p = 0, r_b = 0;
  route->add_option("--n", r_n, "braid strand count")->required();
  route->add_option("--g", r_g, "genus")->required();
  route->add_option("--p", r_p, "punctures")->required();
  route->add_option("--b", r_b, "boundary components");

  // witness
  auto* witness = app.add_subcommand("witness", "build and store a verified curve system");
  witness->fallthrough();
  std::string witness_shape, witness_out;
  witness->add_option("shape", witness_shape, "cyclic | cyclic-k1")
      ->required()
      ->check(CLI::IsMember({"cyclic", "cyclic-k1"}));
  int w_g = 0, w_p = 0, w_m = 0;
  witness->add_option("--g", w_g, "genus")->required();
  witness->add_option("--p", w_p, "punctures")->required();
  witness->add_option("--m", w_m, "chain length")->required();
  witness->add_option("--out", witness_out, "output ncs file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check a stored curve system");
  verify->fallthrough();
  std::string verify_file, verify_kind, verify_variant = "plain";
  verify->add_option("file", verify_file, "ncs file")->required();
  verify->add_option("--kind", verify_kind, "cyclic | cyclic-k1 | linear | triple | yquad")
      ->required()
      ->check(CLI::IsMember({"cyclic", "cyclic-k1", "linear", "triple", "yquad"}));
  verify->add_option("--variant", verify_variant, "triple variant: plain | star | rec")
      ->check(CLI::IsMember({"plain", "star", "rec"}));

  // audit
  auto* audit = app.add_subcommand("audit", "cross-table consistency sweep");
  audit->fallthrough();
  int a_g = 6, a_p = 10, a_b = 4;
  audit->add_option("--gmax", a_g, "max genus");
  audit->add_option("--pmax", a_p, "max punctures");
  audit->add_option("--bmax", a_b, "max boundary components");

  // table
  auto* table = app.add_subcommand("table", "threshold table over a (g, p) grid");
  table->fallthrough();
  std::string table_name;
  table->add_option("name", table_name, "thm1.1 | thm1.2 | thm4.4 | thm4.5")
      ->required()
      ->check(CLI::IsMember({"thm1.1", "thm1.2", "thm4.4", "thm4.5"}));
  int t_g = 6, t_p = 10;
  bool t_tsv = false;
  table->add_option("--gmax", t_g, "max genus");
  table->add_option("--pmax", t_p, "max punctures");
  table->add_flag("--tsv", t_tsv, "tab-separated output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (decide->parsed()) {
    const Surface s{d_g, d_p, d_b};
    Verdict v;
    if (decide_family == "braid" || decide_family == "pure-braid") {
      if (d_n < 0) {
        std::cerr << "decide " << decide_family << " needs --n\n";
        return kExitUsage;
      }
      v = decide_family == "braid" ? decide_braid_virtual(d_n, s) : decide_pure_braid(d_n, s);
    } else {
      if (d_m < 0) {
        std::cerr << "decide " << decide_family << " needs --m\n";
        return kExitUsage;
      }
      v = decide_family == "raag-cycle" ? decide_raag_cycle(d_m, s)
                                        : decide_raag_cycle_times_z(d_m, s);
    }
    return report_verdict(v, as_json);
  }

  if (bound->parsed()) {
    const Surface s{b_g, b_p, 0};
    Bound b;
    if (bound_shape == "cyclic") b = max_cyclic_chain(s);
    else if (bound_shape == "cyclic-k1") b = max_cyclic_join_k1(s);
    else if (bound_shape == "linear") b = max_linear_chain(s);
    else if (bound_shape == "triple") b = max_chained_triple(s, TripleVariant::Plain);
    else if (bound_shape == "triple-star") b = max_chained_triple(s, TripleVariant::Star);
    else if (bound_shape == "triple-rec") b = max_chained_triple(s, TripleVariant::RecursiveEnd);
    else if (bound_shape == "yquad") b = max_y_quadruple(s);
    else {
      const PathJoinMode mode = pathjoin_mode == "k2"
                                    ? PathJoinMode::K2Fixed
                                    : (pathjoin_mode == "path2gp1" ? PathJoinMode::Path2gp1
                                                                   : PathJoinMode::Path2gp);
      b = max_clique_joined_to_path(s, mode);
    }
    return report_bound(b, as_json);
  }

  if (route->parsed()) {
    const Surface s{r_g, r_p, r_b};
    const auto planned = plan_route(r_n, s);
    if (!planned) {
      const Verdict v = decide_braid_virtual(r_n, s);
      if (as_json)
        std::cout << json{{"answer", "no"}, {"threshold", v.threshold}, {"citation", v.citation}}
                         .dump(2)
                  << "\n";
      else
        std::cout << "no route: " << r_n << " exceeds threshold " << v.threshold << "\n";
      return kExitNo;
    }
    const auto violations = validate_route(*planned);
    if (!violations.empty()) {
      for (const auto& v : violations) std::cerr << "invalid route: " << v << "\n";
      return kExitNo;
    }
    if (as_json) {
      json steps = json::array();
      for (const auto& st : planned->steps)
        steps.push_back(
            {{"source", to_token(st.source)}, {"target", to_token(st.target)}});
      std::cout << json{{"answer", "yes"}, {"braid_index", planned->braid_index},
                        {"conclusion", to_token(planned->conclusion)}, {"steps", steps}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << write_route(*planned);
    }
    return kExitYes;
  }

  if (witness->parsed()) {
    const Surface s{w_g, w_p, 0};
    NormalCurveSystem sys;
    ChainCertificate cert;
    try {
      if (witness_shape == "cyclic") {
        sys = build_cyclic_witness(s, w_m);
        cert = certify_for(s, verify_cyclic_chain(sys));
      } else {
        sys = build_cyclic_join_k1_witness(s, w_m);
        cert = certify_for(s, verify_cyclic_join_k1(sys));
      }
    } catch (const OutOfRange& e) {
      std::cerr << "out of range: " << e.what() << "\n";
      return kExitNoClaim;
    }
    std::ofstream out(witness_out);
    if (!out.good()) {
      std::cerr << "cannot write " << witness_out << "\n";
      return kExitUsage;
    }
    out << write_system(sys);
    if (as_json)
      std::cout << certificate_json(cert).dump(2) << "\n";
    else
      std::cout << "wrote " << witness_out << ": certificate " << kind_token(cert.kind)
                << " length " << cert.length << "\n";
    return cert.kind != ChainKind::Unverified ? kExitYes : kExitNo;
  }

  if (verify->parsed()) {
    const NormalCurveSystem sys = read_system(slurp(verify_file));
    ChainCertificate cert;
    ChainKind want = ChainKind::Unverified;
    try {
    if (verify_kind == "cyclic") {
      cert = verify_cyclic_chain(sys);
      want = ChainKind::CyclicChain;
    } else if (verify_kind == "cyclic-k1") {
      cert = verify_cyclic_join_k1(sys);
      want = ChainKind::CyclicJoinK1;
    } else if (verify_kind == "linear") {
      cert = verify_linear_chain(sys);
      want = ChainKind::LinearChain;
    } else if (verify_kind == "triple") {
      const TripleVariant variant = verify_variant == "star"
                                        ? TripleVariant::Star
                                        : (verify_variant == "rec" ? TripleVariant::RecursiveEnd
                                                                   : TripleVariant::Plain);
      cert = verify_chained_triple(sys, variant);
      want = ChainKind::ChainedTriple;
    } else {
      cert = verify_y_quadruple(sys);
      want = ChainKind::YQuadruple;
    }
    } catch (const MalformedSystem& e) {
      std::cerr << "not a " << verify_kind << ": " << e.what() << "\n";
      return kExitNo;
    }
    if (as_json)
      std::cout << certificate_json(cert).dump(2) << "\n";
    else
      std::cout << write_certificate(cert);
    return cert.kind == want ? kExitYes : kExitNo;
  }

  if (audit->parsed()) {
    const AuditReport report = consistency_audit(a_g, a_p, a_b);
    if (as_json) {
      std::cout << json{{"cells_checked", report.cells_checked},
                        {"unexpected", report.unexpected},
                        {"whitelisted", report.whitelisted}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "checked " << report.cells_checked << " cells, " << report.unexpected.size()
                << " unexpected, " << report.whitelisted.size() << " whitelisted\n";
      for (const auto& u : report.unexpected) std::cout << "unexpected: " << u << "\n";
    }
    return report.clean() ? kExitYes : kExitNo;
  }

  // table
  auto threshold_at = [&](int g, int p) -> Verdict {
    const Surface s{g, p, 0};
    if (table_name == "thm1.1") return decide_braid_virtual(1, s);
    if (table_name == "thm1.2") return decide_pure_braid(1, s);
    if (table_name == "thm4.4") return decide_raag_cycle(0, s);
    return decide_raag_cycle_times_z(0, s);
  };
  json rows = json::array();
  std::ostringstream tsv;
  tsv << "g\tp\tvalue\n";
  for (int g = 0; g <= t_g; ++g)
    for (int p = 0; p <= t_p; ++p) {
      const Verdict v = threshold_at(g, p);
      const bool claims = v.answer != Answer::NoClaim;
      rows.push_back({{"g", g},
                      {"p", p},
                      {"value", claims ? json(v.threshold) : json(nullptr)},
                      {"citation", v.citation}});
      tsv << g << "\t" << p << "\t";
      if (claims) tsv << v.threshold;
      else tsv << "-";
      tsv << "\n";
    }
  if (as_json && !t_tsv)
    std::cout << rows.dump(2) << "\n";
  else
    std::cout << tsv.str();
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
