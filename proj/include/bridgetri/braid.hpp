#pragma once

// Braid words in the Artin generators of B_d and their permutations.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bridgetri {

/// Largest strand count supported by Permutation.
inline constexpr int kMaxStrands = 32;

/// A permutation of {1..n}, stored zero-based inline. Composition follows
/// function notation: (p * q)(x) = p(q(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : n_(n) {
    if (n < 0 || n > kMaxStrands) throw std::invalid_argument("permutation size out of range");
    for (int x = 0; x < n; ++x) image_[x] = static_cast<Cell>(x);
  }
  /// Builds from one-based images, e.g. {2, 3, 1} sends 1 to 2.
  static Permutation from_images(std::initializer_list<int> one_based) {
    if (one_based.size() > static_cast<std::size_t>(kMaxStrands))
      throw std::invalid_argument("permutation size out of range");
    Permutation p;
    std::vector<bool> seen(one_based.size(), false);
    for (int v : one_based) {
      if (v < 1 || v > static_cast<int>(one_based.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation");
      seen[v - 1] = true;
      p.image_[p.n_++] = static_cast<Cell>(v - 1);
    }
    return p;
  }
  static Permutation transposition(int n, int i) {
    Permutation p(n);
    std::swap(p.image_[i - 1], p.image_[i]);
    return p;
  }
  /// The half-twist permutation i -> n + 1 - i.
  static Permutation reversal(int n) {
    Permutation p(n);
    std::reverse(p.image_.begin(), p.image_.begin() + n);
    return p;
  }

  int size() const { return n_; }
  /// One-based image.
  int operator()(int x) const { return image_[x - 1] + 1; }

  Permutation operator*(const Permutation& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("permutation size mismatch");
    Permutation out;
    out.n_ = n_;
    for (int x = 0; x < n_; ++x) out.image_[x] = image_[rhs.image_[x]];
    return out;
  }

  Permutation inverse() const {
    Permutation out;
    out.n_ = n_;
    for (int x = 0; x < n_; ++x) out.image_[image_[x]] = static_cast<Cell>(x);
    return out;
  }

  bool is_identity() const {
    for (int x = 0; x < n_; ++x)
      if (image_[x] != x) return false;
    return true;
  }

  /// Number of inversions (Coxeter length).
  int length() const {
    int count = 0;
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (image_[a] > image_[b]) ++count;
    return count;
  }

  /// True if length(*this * s_i) < length(*this), i one-based.
  bool has_right_descent(int i) const { return image_[i - 1] > image_[i]; }

  /// Swaps the images of i and i+1: *this * s_i.
  void right_multiply_generator(int i) { std::swap(image_[i - 1], image_[i]); }

  /// Swaps the values i and i+1: s_i * *this.
  void left_multiply_generator(int i) {
    for (int x = 0; x < n_; ++x) {
      if (image_[x] == i - 1) image_[x] = static_cast<Cell>(i);
      else if (image_[x] == i) image_[x] = static_cast<Cell>(i - 1);
    }
  }

  /// True if length(s_i * *this) < length(*this): i+1 is hit before i.
  bool has_left_descent(int i) const {
    for (int x = 0; x < n_; ++x) {
      if (image_[x] == i - 1) return false;
      if (image_[x] == i) return true;
    }
    return false;
  }

  /// One-based images as a vector.
  std::vector<int> images() const {
    std::vector<int> out;
    for (int x = 0; x < n_; ++x) out.push_back(image_[x] + 1);
    return out;
  }

  // unused cells stay zero, so the defaulted comparisons are exact
  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  using Cell = std::uint8_t;
  int n_ = 0;
  std::array<Cell, kMaxStrands> image_{};
};

/// A word in the Artin generators of B_d. Letter i > 0 is sigma_i, -i its
/// inverse. Construction never simplifies.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {})
      : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1 || strands_ > kMaxStrands) throw std::invalid_argument("strand count out of range");
    for (int l : letters_) check_letter(l);
  }
  BraidWord(int strands, std::initializer_list<int> letters)
      : BraidWord(strands, std::vector<int>(letters)) {}

  int strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push_back(int letter) {
    check_letter(letter);
    letters_.push_back(letter);
  }

  bool operator==(const BraidWord&) const = default;

 private:
  void check_letter(int l) const {
    if (l == 0 || std::abs(l) > strands_ - 1)
      throw std::out_of_range("generator index " + std::to_string(l) + " out of range for B_" +
                              std::to_string(strands_));
  }

  int strands_ = 1;
  std::vector<int> letters_;
};

inline BraidWord identity_braid(int strands) { return BraidWord(strands); }

inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand-count mismatch in compose");
  std::vector<int> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

inline BraidWord compose(std::initializer_list<BraidWord> words) {
  if (words.size() == 0) throw std::invalid_argument("compose of nothing");
  BraidWord out(words.begin()->strands());
  for (const auto& w : words) out = compose(out, w);
  return out;
}

inline BraidWord invert(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strands(), std::move(letters));
}

inline BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.length());
  for (int l : w.letters()) {
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return BraidWord(w.strands(), std::move(stack));
}

inline int exponent_sum(const BraidWord& w) {
  int sum = 0;
  for (int l : w.letters()) sum += l > 0 ? 1 : -1;
  return sum;
}

/// Image under B_d -> S_d, sigma_i -> (i i+1), with
/// perm(ab) = perm(a) * perm(b).
inline Permutation underlying_permutation(const BraidWord& w) {
  Permutation p(w.strands());
  for (int l : w.letters()) p.right_multiply_generator(std::abs(l));
  return p;
}

/// sigma_i^power as a word (negative power gives inverses).
inline BraidWord generator_power(int strands, int i, int power) {
  BraidWord w(strands);
  for (int k = 0; k < std::abs(power); ++k) w.push_back(power > 0 ? i : -i);
  return w;
}

/// Positive half twist, written (s1...s_{d-1})(s1...s_{d-2})...(s1).
inline BraidWord half_twist(int d) {
  if (d < 1) throw std::invalid_argument("half_twist needs d >= 1");
  BraidWord w(d);
  for (int top = d - 1; top >= 1; --top)
    for (int i = 1; i <= top; ++i) w.push_back(i);
  return w;
}

/// The full twist Delta_d^2, a positive word of length d(d-1).
inline BraidWord full_twist(int d) {
  BraidWord half = half_twist(d);
  return compose(half, half);
}

/// Applies the Garside automorphism sigma_i -> sigma_{d-i}.
inline BraidWord flip(const BraidWord& w) {
  std::vector<int> letters = w.letters();
  for (int& l : letters) l = l > 0 ? w.strands() - l : -(w.strands() + l);
  return BraidWord(w.strands(), std::move(letters));
}

inline std::string to_string(const BraidWord& w) {
  std::string s = "B" + std::to_string(w.strands()) + "[";
  for (std::size_t k = 0; k < w.length(); ++k) {
    if (k) s += ",";
    s += std::to_string(w.letters()[k]);
  }
  return s + "]";
}

}  // namespace bridgetri
