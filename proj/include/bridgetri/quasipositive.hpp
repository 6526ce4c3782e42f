#pragma once

// Band factorizations of the full twist, Hurwitz moves and orbit search.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bridgetri/braid.hpp"
#include "bridgetri/garside.hpp"

namespace bridgetri {

/// The band g sigma_1^(sign * exponent) g^-1.
struct BandFactor {
  BraidWord conjugator;
  int exponent = 1;
  int sign = +1;

  int strands() const { return conjugator.strands(); }
  int signed_exponent() const { return sign * exponent; }

  BraidWord expanded() const {
    return compose({conjugator, generator_power(strands(), 1, signed_exponent()),
                    invert(conjugator)});
  }

  bool operator==(const BandFactor&) const = default;
};

/// Ordered band factors whose product is meant to be Delta_d^2.
struct Factorization {
  int strands = 1;
  std::vector<BandFactor> factors;

  std::size_t size() const { return factors.size(); }
  bool is_smooth() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const BandFactor& f) { return f.exponent == 1 && f.sign == +1; });
  }
  int signed_exponent_total() const {
    int sum = 0;
    for (const auto& f : factors) sum += f.signed_exponent();
    return sum;
  }

  bool operator==(const Factorization&) const = default;
};

inline BandFactor make_band(BraidWord conjugator, int exponent = 1, int sign = +1) {
  if (exponent < 1) throw std::invalid_argument("band exponent must be >= 1");
  if (sign != 1 && sign != -1) throw std::invalid_argument("band sign must be +1 or -1");
  return BandFactor{free_reduce(conjugator), exponent, sign};
}

/// Band modelling an A_n singularity (n = 2 is a cusp) or, with sign -1,
/// a negative singular point.
inline BandFactor singular_factor(const BraidWord& conjugator, int n, int sign) {
  if (n < 1) throw std::invalid_argument("singular_factor needs n >= 1");
  return make_band(conjugator, n, sign);
}

/// Checks that every band lives in B_d; throws otherwise.
inline void check_strands(const Factorization& f) {
  if (f.strands < 1) throw std::invalid_argument("factorization needs at least one strand");
  for (const auto& band : f.factors) {
    if (band.strands() != f.strands)
      throw std::invalid_argument("band strand count differs from factorization");
    if (band.exponent < 1) throw std::invalid_argument("band exponent must be >= 1");
    if (band.sign != 1 && band.sign != -1) throw std::invalid_argument("band sign must be +-1");
  }
  if (f.strands == 1 && !f.factors.empty())
    throw std::invalid_argument("B_1 has no bands");
}

inline BraidWord expand(const Factorization& f) {
  check_strands(f);
  BraidWord out(f.strands);
  for (const auto& band : f.factors) out = compose(out, band.expanded());
  return out;
}

struct ValidationReport {
  int strands = 1;
  std::size_t factor_count = 0;
  int exponent_total = 0;  ///< sum of sign * exponent
  int expected_total = 0;  ///< d(d-1)
  bool smooth = false;
  bool product_ok = false;
  bool sum_ok = false;
  std::optional<bool> count_ok;  ///< only for smooth factorizations: n = d^2 - d
  std::size_t negative_factors = 0;

  bool valid() const { return product_ok && sum_ok && count_ok.value_or(true); }
  /// Negative bands pass validation but cannot be drawn transversely.
  bool drawable() const { return valid() && negative_factors == 0; }
};

inline ValidationReport validate(const Factorization& f) {
  check_strands(f);
  const int d = f.strands;
  ValidationReport r;
  r.strands = d;
  r.factor_count = f.size();
  r.exponent_total = f.signed_exponent_total();
  r.expected_total = d * (d - 1);
  r.smooth = f.is_smooth();
  r.product_ok = equal(expand(f), full_twist(d));
  r.sum_ok = r.exponent_total == r.expected_total;
  if (r.smooth) r.count_ok = static_cast<int>(f.size()) == d * d - d;
  r.negative_factors = static_cast<std::size_t>(
      std::count_if(f.factors.begin(), f.factors.end(), [](const BandFactor& b) { return b.sign < 0; }));
  return r;
}

/// Conjugator c_i with c_i sigma_1 c_i^-1 = sigma_i, built by cascading
/// (s_j s_{j+1}) s_j (s_j s_{j+1})^-1 = s_{j+1}.
inline BraidWord cascade_conjugator(int d, int i) {
  BraidWord c(d);
  for (int j = i - 1; j >= 1; --j) {
    c.push_back(j);
    c.push_back(j + 1);
  }
  return c;
}

/// d(d-1) positive bands from Delta^2 = (s_1 ... s_{d-1})^d.
inline Factorization standard_factorization(int d) {
  if (d < 2) throw std::invalid_argument("standard_factorization needs d >= 2");
  Factorization f{d, {}};
  for (int round = 0; round < d; ++round)
    for (int i = 1; i <= d - 1; ++i) f.factors.push_back(make_band(cascade_conjugator(d, i)));
  return f;
}

/// A shorter word for the same band: g and g Delta^2 s1^m conjugate s1 to
/// the same element, so the Delta power is cut to 0 or 1 and trailing s1
/// letters are dropped. Falls back to the free reduction if that is shorter.
inline BraidWord shorten_conjugator(const BraidWord& g) {
  const BraidWord reduced = free_reduce(g);
  if (reduced.length() < 3) return reduced;
  NormalForm nf = normal_form(g);
  nf.delta_power = ((nf.delta_power % 2) + 2) % 2;
  while (!nf.factors.empty() && nf.factors.back().has_right_descent(1)) {
    nf.factors.back().right_multiply_generator(1);
    if (nf.factors.back().is_identity()) nf.factors.pop_back();
  }
  BraidWord candidate = free_reduce(to_word(nf));
  return candidate.length() < reduced.length() ? candidate : reduced;
}

enum class HurwitzDirection { kRight, kLeft };

/// Hurwitz move on slots (i, i+1), zero-based. Right: (a, b) -> (a b a^-1, a).
/// Left is its inverse: (a, b) -> (b, b^-1 a b).
inline Factorization hurwitz_move(const Factorization& f, std::size_t i, HurwitzDirection dir) {
  if (i + 1 >= f.size()) throw std::out_of_range("Hurwitz move index out of range");
  Factorization out = f;
  const BandFactor& a = f.factors[i];
  const BandFactor& b = f.factors[i + 1];
  if (dir == HurwitzDirection::kRight) {
    out.factors[i] = BandFactor{shorten_conjugator(compose(a.expanded(), b.conjugator)), b.exponent, b.sign};
    out.factors[i + 1] = a;
  } else {
    out.factors[i] = b;
    out.factors[i + 1] =
        BandFactor{shorten_conjugator(compose(invert(b.expanded()), a.conjugator)), a.exponent, a.sign};
  }
  return out;
}

/// Orbit key: the normal form of every expanded band, in order.
using CanonicalFactorization = std::vector<NormalForm>;

inline CanonicalFactorization canonical_form(const Factorization& f) {
  CanonicalFactorization key;
  key.reserve(f.size());
  for (const auto& band : f.factors) key.push_back(normal_form(band.expanded()));
  return key;
}

struct OrbitResult {
  std::vector<CanonicalFactorization> members;  ///< sorted
  std::vector<Factorization> representatives;   ///< parallel to members
  bool truncated = false;
  std::size_t levels = 0;
};

/// Breadth-first closure under Hurwitz moves, capped at `bound` members.
/// Levels are expanded in parallel and merged in canonical order, so the
/// result (including which members survive truncation) does not depend on
/// the worker count.
inline OrbitResult hurwitz_orbit(const Factorization& start, std::size_t bound,
                                 unsigned workers = 1) {
  if (bound < 1) throw std::invalid_argument("orbit bound must be >= 1");
  check_strands(start);
  workers = std::max(1u, workers);

  using NodeMap = std::map<CanonicalFactorization, Factorization>;
  NodeMap visited;
  std::vector<std::pair<CanonicalFactorization, Factorization>> frontier{{canonical_form(start), start}};
  visited.emplace(frontier.front().first, start);

  OrbitResult result;
  const std::size_t n = start.size();
  while (!frontier.empty() && !result.truncated) {
    // Each worker keeps only unseen children, deduplicated locally; visited
    // is read-only until the merge.
    auto expand_range = [&](std::size_t lo, std::size_t hi, NodeMap& fresh) {
      for (std::size_t k = lo; k < hi; ++k) {
        const auto& [key, rep] = frontier[k];
        for (std::size_t i = 0; i + 1 < n; ++i) {
          for (auto dir : {HurwitzDirection::kRight, HurwitzDirection::kLeft}) {
            CanonicalFactorization next_key = key;
            Factorization next = hurwitz_move(rep, i, dir);
            if (dir == HurwitzDirection::kRight) {
              next_key[i] = normal_form(next.factors[i].expanded());
              next_key[i + 1] = key[i];
            } else {
              next_key[i] = key[i + 1];
              next_key[i + 1] = normal_form(next.factors[i + 1].expanded());
            }
            if (!visited.count(next_key)) fresh.emplace(std::move(next_key), std::move(next));
          }
        }
      }
    };
    NodeMap fresh;
    if (workers == 1 || frontier.size() < 2 * workers) {
      expand_range(0, frontier.size(), fresh);
    } else {
      const std::size_t chunk = (frontier.size() + workers - 1) / workers;
      std::vector<NodeMap> parts((frontier.size() + chunk - 1) / chunk);
      std::vector<std::thread> pool;
      for (std::size_t p = 0; p < parts.size(); ++p)
        pool.emplace_back(expand_range, p * chunk, std::min(frontier.size(), (p + 1) * chunk), std::ref(parts[p]));
      for (auto& t : pool) t.join();
      for (auto& part : parts) fresh.merge(part);
    }

    frontier.clear();
    for (auto& [key, rep] : fresh) {
      if (visited.size() >= bound) {
        result.truncated = true;
        break;
      }
      visited.emplace(key, rep);
      frontier.emplace_back(key, rep);
    }
    if (!frontier.empty()) ++result.levels;
  }

  result.members.reserve(visited.size());
  result.representatives.reserve(visited.size());
  while (!visited.empty()) {
    auto node = visited.extract(visited.begin());
    result.members.push_back(std::move(node.key()));
    result.representatives.push_back(std::move(node.mapped()));
  }
  return result;
}

}  // namespace bridgetri
