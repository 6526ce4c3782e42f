#pragma once

// Numerical identities tying a bridge-trisected surface of degree d to its
// parameters: genus, Euler characteristic, self-linking, Bennequin bound.

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "bridgetri/braid.hpp"
#include "bridgetri/certify.hpp"

namespace bridgetri {

/// Genus of a minimal-genus (symplectic) surface of degree d.
inline int genus_expected(int d) {
  if (d < 1) throw std::invalid_argument("degree must be >= 1");
  return (d - 1) * (d - 2) / 2;
}

inline int euler_expected(int d) { return 3 * d - d * d; }

inline int euler_characteristic(const BridgeParams& p) { return p.c1 + p.c2 + p.c3 - p.b; }

inline bool euler_check(const BridgeParams& p, int d) { return euler_characteristic(p) == euler_expected(d); }

/// Self-linking of a transverse braid closure: writhe minus strand count.
inline int transverse_sl(const BraidWord& word) { return exponent_sum(word) - word.strands(); }

using SelfLinking = std::array<int, 3>;

/// Total self-linking identity with the maximal values sl_i = -c_i.
inline bool sl_sum_check(const BridgeParams& p, int d) {
  return -(p.c1 + p.c2 + p.c3) == d * d - 3 * d - p.b;
}

struct BennequinResult {
  bool ok = false;                 ///< sl_i <= -c_i for every i
  std::array<bool, 3> equality{};  ///< sl_i == -c_i
  bool all_equal() const { return equality[0] && equality[1] && equality[2]; }
};

inline BennequinResult bennequin_check(const BridgeParams& p, const SelfLinking& sl) {
  const std::array<int, 3> c{p.c1, p.c2, p.c3};
  BennequinResult r;
  r.ok = true;
  for (int i = 0; i < 3; ++i) {
    r.ok = r.ok && sl[i] <= -c[i];
    r.equality[i] = sl[i] == -c[i];
  }
  return r;
}

struct InvariantLedger {
  int degree = 1;
  int genus_expected = 0;
  int euler_expected = 0;
  BridgeParams params;
  SelfLinking sl{};
  bool singular = false;
  std::map<std::string, bool> checks;

  bool ok() const {
    for (const auto& [name, pass] : checks)
      if (!pass) return false;
    return true;
  }
};

/// Ledger for a stabilized diagram. sl_1 comes from the L1 braid; sl_2 and
/// sl_3 take their maximal values -c_2, -c_3. Singular diagrams skip the
/// smooth-surface identities.
inline InvariantLedger make_ledger(const TorusDiagram& diag, const DiagramStructure& st) {
  InvariantLedger ledger;
  const int d = diag.strands;
  ledger.degree = d;
  ledger.genus_expected = genus_expected(d);
  ledger.euler_expected = euler_expected(d);
  ledger.params = bridge_params(diag, st);
  for (const auto& t : st.l2_types) ledger.singular = ledger.singular || t.q != 1;

  int l1_strands = 0;
  for (int w : st.l1.windings) l1_strands += std::abs(w);
  const int sl1 = transverse_sl(identity_braid(std::max(1, l1_strands)));
  ledger.sl = {sl1, -ledger.params.c2, -ledger.params.c3};

  const auto& p = ledger.params;
  ledger.checks["sl1_equals_minus_c1"] = sl1 == -p.c1;
  ledger.checks["bennequin_bound"] = bennequin_check(p, ledger.sl).ok;
  if (!ledger.singular) {
    ledger.checks["euler_characteristic"] = euler_check(p, d);
    ledger.checks["genus"] = 2 - euler_characteristic(p) == 2 * ledger.genus_expected;
    ledger.checks["self_linking_sum"] = sl_sum_check(p, d);
    ledger.checks["bennequin_equality"] = bennequin_check(p, ledger.sl).all_equal();
  }
  return ledger;
}

inline InvariantLedger make_ledger(const TorusDiagram& diag) { return make_ledger(diag, analyze(diag)); }

}  // namespace bridgetri
