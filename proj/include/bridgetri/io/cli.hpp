#pragma once

// Command-line front end. Exit codes: 0 every check passed, 1 some
// mathematical check failed, 2 bad usage or unreadable input.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bridgetri/certify.hpp"
#include "bridgetri/invariants.hpp"
#include "bridgetri/io/document.hpp"
#include "bridgetri/io/svg.hpp"
#include "bridgetri/quasipositive.hpp"
#include "bridgetri/stabilize.hpp"
#include "bridgetri/tiles.hpp"

namespace bridgetri::io {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct CliStreams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path);
  return {std::istreambuf_iterator<char>(file), {}};
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write " + path);
  file << text;
}

inline Factorization load_factorization(const std::string& path, int standard, std::istream& in) {
  if (standard != 0) {
    if (standard < 2) throw IoError("--standard needs d >= 2");
    return standard_factorization(standard);
  }
  return parse_factorization(read_input(path, in));
}

inline std::string params_text(const BridgeParams& p) {
  return "(" + std::to_string(p.b) + ";" + std::to_string(p.c1) + "," + std::to_string(p.c2) + "," +
         std::to_string(p.c3) + ")";
}

inline nlohmann::json params_json(const BridgeParams& p) {
  return {{"b", p.b}, {"c1", p.c1}, {"c2", p.c2}, {"c3", p.c3}, {"s", p.s}};
}

inline const char* verdict(bool ok) { return ok ? "ok" : "FAIL"; }

// --- verbs ----------------------------------------------------------------

inline int run_verify(const Factorization& f, bool as_json, std::ostream& out) {
  const ValidationReport r = validate(f);
  if (as_json) {
    nlohmann::json j{{"strands", r.strands},          {"factor_count", r.factor_count},
                     {"exponent_total", r.exponent_total}, {"expected_total", r.expected_total},
                     {"smooth", r.smooth},            {"product_ok", r.product_ok},
                     {"sum_ok", r.sum_ok},            {"negative_factors", r.negative_factors},
                     {"valid", r.valid()}};
    j["count_ok"] = r.count_ok ? nlohmann::json(*r.count_ok) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "strands: " << r.strands << '\n'
        << "factors: n=" << r.factor_count << '\n'
        << "exponent sum: sum=" << r.exponent_total << " (expected " << r.expected_total << ") "
        << verdict(r.sum_ok) << '\n'
        << "product: " << (r.product_ok ? "product ok" : "product differs from the full twist") << '\n';
    if (r.count_ok) out << "factor count: " << verdict(*r.count_ok) << '\n';
    else out << "factor count: not applicable (singular bands)\n";
    if (r.negative_factors) out << "negative bands: " << r.negative_factors << '\n';
    out << "result: " << (r.valid() ? "pass" : "fail") << '\n';
  }
  return r.valid() ? kExitPass : kExitFail;
}

inline int run_build(const Factorization& f, const std::string& output, std::ostream& out, std::ostream& err) {
  const ValidationReport r = validate(f);
  if (!r.valid()) {
    err << "factorization does not multiply to the full twist; nothing built\n";
    return kExitFail;
  }
  if (!r.drawable()) {
    err << "factorization has negative bands, which have no transverse tile\n";
    return kExitFail;
  }
  DiagramDocument doc{mini_stabilize(assemble(f)), f};
  write_output(output, serialize_diagram(doc), out);
  return kExitPass;
}

inline int run_check(const DiagramDocument& doc, bool as_json, std::ostream& out) {
  const TorusDiagram& diag = doc.diagram;
  nlohmann::json j;
  std::ostringstream text;
  std::map<std::string, bool> checks;

  const auto problems = structural_problems(diag);
  checks["structure"] = problems.empty();
  j["problems"] = problems;
  text << "diagram: d=" << diag.strands << " b=" << diag.bridge_index() << " s=" << diag.stabilization_count
       << '\n';
  for (const auto& p : problems) text << "structure: " << p << '\n';

  if (problems.empty()) {
    const TransverseReport tr = check_transverse(diag);
    checks["transverse"] = tr.ok();
    j["transverse_violations"] = tr.violations.size();
    text << "transverse: " << verdict(tr.ok()) << " (" << tr.violations.size() << " violations)\n";
    for (const auto& v : tr.violations)
      text << "  arc " << v.arc << " segment " << v.segment << " (" << color_letter(v.color) << "): " << v.reason
           << '\n';

    const DiagramStructure st = analyze(diag);
    checks["no_red_crossings"] = st.red_crossings == 0;
    if (st.red_crossings > 0) {
      text << "red crossings: " << st.red_crossings << " FAIL\n";
    } else {
      const BridgeParams p = bridge_params(diag, st);
      j["params"] = params_json(p);
      text << "params: " << params_text(p) << " s=" << p.s << '\n';
      const bool smooth = std::all_of(st.l2_types.begin(), st.l2_types.end(),
                                      [](const SplitComponent& c) { return c.q == 1; });
      if (smooth) {
        const BridgeParams want = expected_smooth_params(diag.strands, p.s);
        checks["params_formula"] = p == want;
        text << "expected: " << params_text(want) << ' ' << verdict(p == want) << '\n';
      }
    }

    if (doc.source) {
      const TrivialityReport t = verify_trivial(pairwise_links(diag, st, *doc.source), *doc.source);
      checks["L1"] = t.l1_ok;
      checks["L2"] = t.l2_ok;
      checks["L3"] = t.l3_ok;
      for (const auto& n : t.notes) text << "note: " << n << '\n';
    } else {
      const auto& w1 = st.l1.windings;
      checks["L1"] = st.red_crossings == 0 && static_cast<int>(st.l1.cycles.size()) == diag.strands &&
                     std::all_of(w1.begin(), w1.end(), [](int w) { return w == 1; });
      checks["L2"] = st.l2_split;
      j["L3"] = "skipped: no source factorization";
      text << "L3: skipped (no source factorization in the document)\n";
    }
    for (const char* name : {"L1", "L2", "L3"})
      if (checks.count(name)) text << name << ": " << verdict(checks[name]) << '\n';
  }

  bool ok = true;
  for (const auto& [name, pass] : checks) ok = ok && pass;
  j["checks"] = checks;
  j["pass"] = ok;
  if (as_json) out << j.dump(2) << '\n';
  else out << text.str() << "result: " << (ok ? "pass" : "fail") << '\n';
  return ok ? kExitPass : kExitFail;
}

inline int run_invariants(const DiagramDocument& doc, bool as_json, std::ostream& out, std::ostream& err) {
  const auto problems = structural_problems(doc.diagram);
  if (!problems.empty()) {
    for (const auto& p : problems) err << "structure: " << p << '\n';
    return kExitFail;
  }
  const DiagramStructure st = analyze(doc.diagram);
  if (st.red_crossings > 0) {
    err << "diagram still has " << st.red_crossings << " red crossings\n";
    return kExitFail;
  }
  const InvariantLedger ledger = make_ledger(doc.diagram, st);
  if (as_json) {
    nlohmann::json j{{"degree", ledger.degree},
                     {"genus_expected", ledger.genus_expected},
                     {"euler_expected", ledger.euler_expected},
                     {"euler", euler_characteristic(ledger.params)},
                     {"params", params_json(ledger.params)},
                     {"self_linking", ledger.sl},
                     {"singular", ledger.singular},
                     {"checks", ledger.checks},
                     {"pass", ledger.ok()}};
    out << j.dump(2) << '\n';
  } else {
    out << "degree: " << ledger.degree << '\n'
        << "params: " << params_text(ledger.params) << " s=" << ledger.params.s << '\n'
        << "euler: " << euler_characteristic(ledger.params) << " (expected " << ledger.euler_expected << ")\n"
        << "genus: " << ledger.genus_expected << '\n'
        << "self-linking: " << ledger.sl[0] << ' ' << ledger.sl[1] << ' ' << ledger.sl[2] << '\n';
    if (ledger.singular) out << "singular bands: smooth-surface identities skipped\n";
    for (const auto& [name, pass] : ledger.checks) out << name << ": " << verdict(pass) << '\n';
    out << "result: " << (ledger.ok() ? "pass" : "fail") << '\n';
  }
  return ledger.ok() ? kExitPass : kExitFail;
}

inline int run_orbit(const Factorization& f, std::size_t budget, unsigned workers, bool as_json,
                     std::ostream& out) {
  const OrbitResult r = hurwitz_orbit(f, budget, workers);
  if (as_json) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& rep : r.representatives) members.push_back(nlohmann::json::parse(serialize_factorization(rep)));
    out << nlohmann::json{{"size", r.members.size()},
                          {"truncated", r.truncated},
                          {"levels", r.levels},
                          {"members", members}}
               .dump(2)
        << '\n';
  } else {
    out << "orbit size: " << r.members.size() << (r.truncated ? " (truncated at budget)" : "") << '\n'
        << "levels: " << r.levels << '\n';
  }
  return kExitPass;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, const CliStreams& io) {
  CLI::App app{"Quasipositive factorizations of the full twist and their torus diagrams", "bridgetri"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured JSON report");

  std::string input, output;
  int standard = 0;
  std::size_t budget = 0;
  unsigned workers = 1;

  auto* verify = app.add_subcommand("verify", "Check that a factorization multiplies to the full twist");
  auto* build = app.add_subcommand("build", "Assemble tiles and mini-stabilize into a diagram document");
  auto* check = app.add_subcommand("check", "Transversality, triviality and parameters of a diagram");
  auto* invariants = app.add_subcommand("invariants", "Euler, genus and self-linking ledger of a diagram");
  auto* orbit = app.add_subcommand("orbit", "Enumerate the Hurwitz orbit of a factorization");
  auto* exporter = app.add_subcommand("export", "Write a diagram as SVG");

  for (auto* sub : {verify, build, check, invariants, orbit, exporter}) {
    sub->add_option("file", input, "Input document (- or omitted: stdin)");
    sub->add_flag("--json", as_json, "Structured JSON report");
  }
  for (auto* sub : {verify, build, orbit})
    sub->add_option("--standard", standard, "Use the standard factorization on d strands");
  for (auto* sub : {build, exporter}) sub->add_option("-o,--output", output, "Output file (default stdout)");
  orbit->add_option("--budget", budget, "Maximum orbit size")->required()->check(CLI::PositiveNumber);
  orbit->add_option("--workers", workers, "Worker threads")->check(CLI::Range(1u, 64u));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    io.err << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*verify) return detail::run_verify(detail::load_factorization(input, standard, io.in), as_json, io.out);
    if (*build) return detail::run_build(detail::load_factorization(input, standard, io.in), output, io.out, io.err);
    if (*orbit)
      return detail::run_orbit(detail::load_factorization(input, standard, io.in), budget, workers, as_json, io.out);
    const DiagramDocument doc = parse_diagram(detail::read_input(input, io.in));
    if (*check) return detail::run_check(doc, as_json, io.out);
    if (*invariants) return detail::run_invariants(doc, as_json, io.out, io.err);
    detail::write_output(output, export_svg(doc.diagram), io.out);
    return kExitPass;
  } catch (const IoError& e) {
    io.err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    io.err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    io.err << "input error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace bridgetri::io
