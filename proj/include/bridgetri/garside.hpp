#pragma once

// Left-greedy Garside normal form in B_d and the word problem.
//
// A positive simple element (permutation braid) is identified with its
// permutation, using the convention of underlying_permutation. The normal
// form of a braid is Delta^p * A_1 * ... * A_k where every A_j is a proper
// simple element (neither trivial nor Delta) and every pair (A_j, A_{j+1})
// is left-weighted: the starting set of A_{j+1} is contained in the
// finishing set of A_j.

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "bridgetri/braid.hpp"

namespace bridgetri {

struct NormalForm {
  int strands = 1;
  int delta_power = 0;
  std::vector<Permutation> factors;

  auto operator<=>(const NormalForm&) const = default;
  bool operator==(const NormalForm&) const = default;
};

namespace garside {

/// Finishing set membership: A = A' sigma_i with A' simple.
inline bool in_finishing_set(const Permutation& a, int i) { return a.has_right_descent(i); }

/// Starting set membership: B = sigma_i B' with B' simple.
inline bool in_starting_set(const Permutation& b, int i) { return b.has_left_descent(i); }

inline bool is_left_weighted(const Permutation& a, const Permutation& b) {
  for (int i = 1; i < a.size(); ++i)
    if (in_starting_set(b, i) && !in_finishing_set(a, i)) return false;
  return true;
}

/// Rewrites the product a*b so that the pair becomes left-weighted, moving
/// one generator at a time from the head of b to the tail of a. Returns
/// whether anything moved.
inline bool left_weight(Permutation& a, Permutation& b) {
  bool moved = false;
  for (;;) {
    int pick = 0;
    for (int i = 1; i < a.size(); ++i) {
      if (!a.has_right_descent(i) && b.has_left_descent(i)) {
        pick = i;
        break;
      }
    }
    if (pick == 0) return moved;
    a.right_multiply_generator(pick);
    b.left_multiply_generator(pick);
    moved = true;
  }
}

/// Conjugation by Delta: sigma_i -> sigma_{d-i}.
inline Permutation flip(const Permutation& p) {
  Permutation delta = Permutation::reversal(p.size());
  return delta * p * delta;
}

/// A positive reduced word for the simple element with permutation p.
inline std::vector<int> simple_letters(Permutation p) {
  std::vector<int> reversed;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < p.size(); ++i) {
      if (p.has_right_descent(i)) {
        reversed.push_back(i);
        p.right_multiply_generator(i);
        found = true;
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

}  // namespace garside

/// Left normal form of w.
inline NormalForm normal_form(const BraidWord& w) {
  const int d = w.strands();
  NormalForm nf;
  nf.strands = d;
  if (d == 1) return nf;

  const Permutation delta = Permutation::reversal(d);
  const Permutation identity(d);
  const auto& letters = w.letters();

  // sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); every Delta^{-1} is
  // pushed to the front, flipping the simple elements it passes.
  std::vector<int> negatives_after(letters.size() + 1, 0);
  for (std::size_t k = letters.size(); k-- > 0;)
    negatives_after[k] = negatives_after[k + 1] + (letters[k] < 0 ? 1 : 0);

  std::vector<Permutation> factors;
  factors.reserve(letters.size());
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const int i = std::abs(letters[k]);
    Permutation simple = Permutation::transposition(d, i);
    if (letters[k] < 0) simple = delta * simple;
    if (negatives_after[k + 1] % 2 == 1) simple = garside::flip(simple);
    if (simple.is_identity()) continue;

    factors.push_back(std::move(simple));
    for (std::size_t j = factors.size() - 1; j > 0; --j)
      if (!garside::left_weight(factors[j - 1], factors[j])) break;
    while (!factors.empty() && factors.back().is_identity()) factors.pop_back();
  }

  int deltas = 0;
  while (static_cast<std::size_t>(deltas) < factors.size() && factors[deltas] == delta) ++deltas;
  nf.delta_power = deltas - negatives_after[0];
  nf.factors.assign(factors.begin() + deltas, factors.end());
  return nf;
}

/// Serializes a normal form back to a braid word.
inline BraidWord to_word(const NormalForm& nf) {
  BraidWord out(nf.strands);
  if (nf.strands == 1) return out;
  const std::vector<int> delta_letters =
      garside::simple_letters(Permutation::reversal(nf.strands));
  for (int p = 0; p < std::abs(nf.delta_power); ++p) {
    if (nf.delta_power > 0) {
      for (int l : delta_letters) out.push_back(l);
    } else {
      for (auto it = delta_letters.rbegin(); it != delta_letters.rend(); ++it) out.push_back(-*it);
    }
  }
  for (const auto& f : nf.factors)
    for (int l : garside::simple_letters(f)) out.push_back(l);
  return out;
}

/// Decides whether two words represent the same element of B_d.
inline bool equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand-count mismatch in equal");
  return normal_form(a) == normal_form(b);
}

inline bool is_identity(const BraidWord& w) { return equal(w, identity_braid(w.strands())); }

}  // namespace bridgetri
