// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if
// all of them pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bridgetri/certify.hpp"
#include "bridgetri/invariants.hpp"
#include "bridgetri/io/document.hpp"
#include "bridgetri/io/svg.hpp"
#include "support/generators.hpp"

using namespace bridgetri;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) detail = what;
    pass = pass && cond;
  }
};

int conjugator_letters(const Factorization& f) {
  int n = 0;
  for (const auto& b : f.factors) n += static_cast<int>(b.conjugator.length());
  return n;
}

// Smooth inputs shared by criteria 2-6: standard d = 2..4 and 100 random
// factorizations at d = 3 with conjugators of length <= 4.
std::vector<Factorization> smooth_corpus() {
  std::vector<Factorization> out;
  for (int d = 2; d <= 4; ++d) out.push_back(standard_factorization(d));
  testgen::Rng rng(2024);
  const testgen::ShortConjugators table(3, 4);
  for (int k = 0; k < 100; ++k) out.push_back(testgen::random_factorization(rng, 3, table, 4 + k % 12));
  return out;
}

Factorization cusp2() { return Factorization{2, {singular_factor(BraidWord(2), 2, +1)}}; }

Factorization cusp3() {
  return Factorization{3,
                       {make_band(BraidWord(3)), singular_factor(BraidWord(3, {2}), 2, +1),
                        make_band(BraidWord(3, {1, 2})), make_band(BraidWord(3, {1, 2})), make_band(BraidWord(3))}};
}

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  for (int d = 2; d <= 6; ++d) {
    const Factorization f = standard_factorization(d);
    const ValidationReport r = validate(f);
    const std::string tag = "d=" + std::to_string(d);
    o.require(r.product_ok, tag + ": product differs from the full twist");
    o.require(testgen::oracle_same(expand(f), full_twist(d)), tag + ": handle reduction disagrees");
    o.require(static_cast<int>(r.factor_count) == d * d - d, tag + ": factor count");
    o.require(r.exponent_total == d * (d - 1), tag + ": exponent sum");
    o.require(r.valid(), tag + ": not valid");
  }
  const double s = seconds_since(t0);
  o.require(s < 10.0, "took longer than 10 s");
  if (o.pass) o.detail = "d=2..6 valid, oracle agrees, " + secs(s);
  return o;
}

Outcome criterion2(const std::vector<Factorization>& corpus) {
  Outcome o;
  const BridgeParams p2 = bridge_params(testgen::build(standard_factorization(2)));
  o.require(p2 == BridgeParams{4, 2, 2, 2, 0}, "d=2 is not (4;2,2,2) with s=0");
  int checked = 0;
  for (const auto& f : corpus) {
    if (f.strands < 3) continue;
    const int d = f.strands;
    const BridgeParams p = bridge_params(testgen::build(f));
    const int s = 2 * conjugator_letters(f);
    o.require(p.s == s, "s differs from 2 * sum |g_i|");
    o.require(p == expected_smooth_params(d, s), "corrected tuple fails at d=" + std::to_string(d));
    ++checked;
  }
  if (o.pass) o.detail = "(4;2,2,2) at d=2; corrected tuple on " + std::to_string(checked) + " diagrams at d=3,4";
  return o;
}

Outcome criterion3(const std::vector<Factorization>& corpus) {
  Outcome o;
  for (const auto& f : corpus) {
    const int d = f.strands;
    const BridgeParams p = bridge_params(testgen::build(f));
    o.require(euler_check(p, d), "c1+c2+c3-b differs from 3d-d^2");
    o.require((2 - euler_characteristic(p)) == 2 * genus_expected(d), "implied genus differs");
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " smooth diagrams";
  return o;
}

Outcome criterion4(const std::vector<Factorization>& corpus) {
  Outcome o;
  for (const auto& f : corpus) {
    const int d = f.strands;
    const TorusDiagram diag = testgen::build(f);
    const InvariantLedger ledger = make_ledger(diag);
    o.require(ledger.sl[0] == -d, "sl(L1) differs from -d");
    o.require(sl_sum_check(ledger.params, d), "sl sum identity fails");
    o.require(ledger.checks.at("bennequin_equality"), "sl_i = -c_i fails");
    // further stabilizations add one bridge and one L2 unknot each
    for (int extra = 1; extra <= 50; ++extra) {
      BridgeParams p = ledger.params;
      p.b += extra;
      p.c2 += extra;
      p.s += extra;
      o.require(sl_sum_check(p, d), "sl sum identity fails after extra stabilization");
    }
  }
  if (o.pass) o.detail = std::to_string(corpus.size()) + " diagrams, 50 extra stabilization counts each";
  return o;
}

Outcome criterion5(const std::vector<Factorization>& corpus) {
  Outcome o;
  int diagrams = 0;
  for (const auto& f : corpus) {
    o.require(check_transverse(testgen::build(f)).ok(), "generated smooth diagram not transverse");
    ++diagrams;
  }
  for (const auto& f : {cusp2(), cusp3()}) {
    o.require(check_transverse(testgen::build(f)).ok(), "singular diagram not transverse");
    ++diagrams;
  }
  const Factorization two_tiles{2, {singular_factor(BraidWord(2), 2, +1), make_band(BraidWord(2))}};
  o.require(check_transverse(mini_stabilize(assemble_tiles(two_tiles))).ok(), "two-tile singular drawing");
  ++diagrams;

  const auto fixtures = testgen::violating_fixtures();
  o.require(fixtures.size() == 10, "expected 10 fixtures");
  int located = 0;
  for (const auto& fx : fixtures) {
    const TransverseReport r = check_transverse(fx.diagram);
    const bool at = r.violations.size() == 1 && r.violations[0].arc == fx.arc && r.violations[0].segment == fx.segment;
    o.require(!r.ok(), "fixture passed: " + fx.name);
    o.require(at, "fixture mislocated: " + fx.name);
    located += at;
  }
  if (o.pass)
    o.detail = std::to_string(diagrams) + " diagrams pass; " + std::to_string(located) + "/10 fixtures fail, located";
  return o;
}

Outcome criterion6(const std::vector<Factorization>& corpus) {
  Outcome o;
  for (const auto& f : corpus) {
    const TrivialityReport r = verify_trivial(pairwise_links(testgen::build(f), f), f);
    o.require(r.ok(), "verify_trivial fails on d=" + std::to_string(f.strands) +
                          (r.notes.empty() ? "" : ": " + r.notes[0]));
  }
  testgen::Rng rng(66);
  int caught = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    const Factorization& f = corpus[std::uniform_int_distribution<std::size_t>(1, corpus.size() - 1)(rng)];
    const TorusDiagram diag = testgen::build(f);
    Factorization mutated = f;
    auto& band = mutated.factors[std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng)];
    // sigma_2 does not commute with sigma_1, so the band changes
    band.conjugator.push_back(std::bernoulli_distribution(0.5)(rng) ? 2 : -2);
    const TrivialityReport r = verify_trivial(pairwise_links(diag, mutated), mutated);
    caught += !r.l3_ok;
  }
  o.require(caught == trials, "mutation survived in " + std::to_string(trials - caught) + " trials");
  if (o.pass)
    o.detail = std::to_string(corpus.size()) + " factorizations certified; mutation caught " +
               std::to_string(caught) + "/" + std::to_string(trials);
  return o;
}

Outcome criterion7() {
  Outcome o;
  testgen::Rng rng(77);
  int moves = 0;
  while (moves < 1000) {
    const int d = 2 + moves % 4;
    Factorization f = standard_factorization(d);
    for (int m = 0; m < 10 && moves < 1000; ++m, ++moves) {
      const auto i = std::uniform_int_distribution<std::size_t>(0, f.size() - 2)(rng);
      const auto dir = std::bernoulli_distribution(0.5)(rng) ? HurwitzDirection::kRight : HurwitzDirection::kLeft;
      const Factorization g = hurwitz_move(f, i, dir);
      o.require(equal(expand(g), expand(f)), "a Hurwitz move changed the product");
      f = g;
    }
    o.require(testgen::oracle_same(expand(f), full_twist(d)), "handle reduction disagrees after moves");
  }
  const OrbitResult fixed = hurwitz_orbit(standard_factorization(2), 1000);
  o.require(fixed.members.size() == 1 && !fixed.truncated, "orbit of (s1, s1) is not a single point");

  const OrbitResult first = hurwitz_orbit(standard_factorization(3), 3000, 1);
  for (unsigned run = 1; run < 5; ++run) {
    const OrbitResult again = hurwitz_orbit(standard_factorization(3), 3000, run + 1);
    o.require(again.members == first.members && again.levels == first.levels &&
                  again.truncated == first.truncated,
              "orbit enumeration differs between runs");
  }
  if (o.pass)
    o.detail = "1000 moves preserve the product; orbit of (s1,s1) has size 1; 5 runs of a " +
               std::to_string(first.members.size()) + "-member orbit agree";
  return o;
}

Outcome criterion8() {
  Outcome o;
  testgen::Rng rng(88);
  const auto t0 = Clock::now();
  int agree = 0, equal_pairs = 0;
  const int pairs = 10000;
  for (int k = 0; k < pairs; ++k) {
    const int d = 2 + k % 5;
    const auto [a, b] = testgen::random_pair(rng, d, 40);
    const bool g = equal(a, b);
    agree += g == testgen::oracle_same(a, b);
    equal_pairs += g;
  }
  const double s = seconds_since(t0);
  o.require(agree == pairs, std::to_string(pairs - agree) + " disagreements");
  o.require(s < 60.0, "took longer than 60 s");
  if (o.pass)
    o.detail = std::to_string(agree) + "/" + std::to_string(pairs) + " agree (" + std::to_string(equal_pairs) +
               " equal pairs), " + secs(s);
  return o;
}

Outcome criterion9() {
  Outcome o;
  testgen::Rng rng(99);
  for (int k = 0; k < 1000; ++k) {
    const int d = 1 + k % 6;
    Factorization f{d, {}};
    const int n = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int i = 0; d > 1 && i < n; ++i)
      f.factors.push_back(BandFactor{testgen::random_word(rng, d, 12), std::uniform_int_distribution<int>(1, 4)(rng),
                                     std::bernoulli_distribution(0.7)(rng) ? 1 : -1});
    const std::string text = io::serialize_factorization(f);
    const Factorization back = io::parse_factorization(text);
    o.require(back == f && io::serialize_factorization(back) == text, "factorization round trip lost data");
  }
  const testgen::ShortConjugators table3(3, 4), table4(4, 3);
  for (int k = 0; k < 1000; ++k) {
    Factorization f;
    if (k % 10 == 0) f = standard_factorization(2 + (k / 10) % 3);
    else if (k % 10 == 1) f = cusp3();
    else if (k % 10 < 8) f = testgen::random_factorization(rng, 3, table3, 1 + k % 9);
    else f = testgen::random_factorization(rng, 4, table4, 1 + k % 5);
    const io::DiagramDocument doc{testgen::build(f), k % 2 ? std::optional<Factorization>(f) : std::nullopt};
    const std::string text = io::serialize_diagram(doc);
    const io::DiagramDocument back = io::parse_diagram(text);
    o.require(back == doc && io::serialize_diagram(back) == text, "diagram round trip lost data");
    if (k % 50 == 0) {
      const std::string svg = io::export_svg(doc.diagram);
      o.require(svg == io::export_svg(doc.diagram) && svg == io::export_svg(back.diagram),
                "SVG output differs between runs");
    }
  }
  if (o.pass) o.detail = "1000 factorization and 1000 diagram documents lossless; SVG byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<Factorization> corpus = smooth_corpus();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"factorization validation", criterion1},
      {"parameter formula", [&] { return criterion2(corpus); }},
      {"Euler characteristic and genus", [&] { return criterion3(corpus); }},
      {"self-linking", [&] { return criterion4(corpus); }},
      {"transversality", [&] { return criterion5(corpus); }},
      {"triviality certificates", [&] { return criterion6(corpus); }},
      {"Hurwitz properties", criterion7},
      {"word problem oracle agreement", criterion8},
      {"I/O round trips", criterion9},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d %s: %s (%s)\n", ++index, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
