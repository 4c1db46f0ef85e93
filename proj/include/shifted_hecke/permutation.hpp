#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <numeric>
#include <optional>
#include <vector>

#include "shifted_hecke/errors.hpp"

namespace shifted_hecke {

// A word is a finite sequence of positive integers (letters index the
// adjacent transpositions s_1, s_2, ...).
using Word = std::vector<int>;

// Finite-support permutation of the positive integers, stored in one-line
// notation with trailing fixed points trimmed. The empty vector is the
// identity. Canonical storage makes values hashable and set-friendly.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    validate();
    trim();
  }

  static Permutation identity() { return {}; }

  // The adjacent transposition s_i = (i, i+1).
  static Permutation transposition(int i) {
    assert(i >= 1);
    std::vector<int> v(static_cast<size_t>(i) + 1);
    std::iota(v.begin(), v.end(), 1);
    std::swap(v[i - 1], v[i]);
    return Permutation(std::move(v));
  }

  // One-based application; points beyond the stored prefix are fixed.
  int operator()(int i) const {
    assert(i >= 1);
    if (i <= static_cast<int>(oneline_.size())) return oneline_[i - 1];
    return i;
  }

  int size() const { return static_cast<int>(oneline_.size()); }
  bool is_identity() const { return oneline_.empty(); }
  const std::vector<int>& oneline() const { return oneline_; }

  // Functional composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    int n = std::max(a.size(), b.size());
    std::vector<int> v(n);
    for (int i = 1; i <= n; ++i) v[i - 1] = a(b(i));
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(oneline_.size());
    for (int i = 1; i <= size(); ++i) v[oneline_[i - 1] - 1] = i;
    return Permutation(std::move(v));
  }

  // Coxeter length = inversion count.
  int length() const {
    int n = size(), inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (oneline_[i] > oneline_[j]) ++inv;
    return inv;
  }

  bool is_involution() const { return *this == inverse(); }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  void validate() const {
    std::vector<int> seen(oneline_.size(), 0);
    for (int v : oneline_) {
      if (v < 1 || v > static_cast<int>(oneline_.size()) || seen[v - 1]++)
        throw ValidationError("BadPermutation",
                              "one-line form is not a permutation of {1..n}");
    }
  }
  void trim() {
    while (!oneline_.empty() &&
           oneline_.back() == static_cast<int>(oneline_.size()))
      oneline_.pop_back();
  }

  std::vector<int> oneline_;
};

// One step of the 0-Hecke (Demazure) product: multiply by s_i on the right,
// except that descents absorb.
inline Permutation demazure_step(const Permutation& p, int i) {
  if (p(i) < p(i + 1)) return p * Permutation::transposition(i);
  return p;
}

// The permutation pi with U_pi = U_{w_1} U_{w_2} ... U_{w_l}.
inline Permutation demazure_product(const Word& w) {
  Permutation p;
  for (int i : w) p = demazure_step(p, i);
  return p;
}

// A reduced word for p, built by peeling descents from the right.
inline Word reduced_word(Permutation p) {
  Word rev;
  while (!p.is_identity()) {
    int i = 1;
    while (p(i) < p(i + 1)) ++i;
    rev.push_back(i);
    p = p * Permutation::transposition(i);
  }
  return {rev.rbegin(), rev.rend()};
}

// Demazure product of two permutations: U_a U_b = U_{demazure_mult(a,b)}.
inline Permutation demazure_mult(const Permutation& a, const Permutation& b) {
  Permutation r = a;
  for (int i : reduced_word(b)) r = demazure_step(r, i);
  return r;
}

// A permutation equal to its own inverse. Thin checked wrapper so that the
// three word systems take distinct target types.
class Involution {
 public:
  Involution() = default;
  explicit Involution(Permutation p) : p_(std::move(p)) {
    if (!p_.is_involution())
      throw ValidationError("BadInvolution", "permutation is not an involution");
  }
  const Permutation& perm() const { return p_; }
  int operator()(int i) const { return p_(i); }
  int size() const { return p_.size(); }
  bool operator==(const Involution&) const = default;
  auto operator<=>(const Involution&) const = default;

 private:
  Permutation p_;
};

// Fold of the twisted conjugation action U_y -> U_i U_y U_i from the
// identity. Always lands on an involution.
inline Involution orthogonal_fold(const Word& w) {
  Permutation y;
  for (int i : w) {
    Permutation s = Permutation::transposition(i);
    y = demazure_mult(demazure_mult(s, y), s);
  }
  assert(y.is_involution());
  return Involution(y);
}

// Fixed-point-free involution agreeing with theta = (1 2)(3 4)(5 6)... beyond
// its support. Stored as the minimal even prefix of one-line values; the
// empty prefix is theta itself. Equality is prefix equality.
class FpfInvolution {
 public:
  FpfInvolution() = default;

  explicit FpfInvolution(std::vector<int> prefix) : prefix_(std::move(prefix)) {
    validate();
    trim();
  }

  static FpfInvolution theta() { return {}; }

  static int theta_value(int i) { return i % 2 == 1 ? i + 1 : i - 1; }

  int operator()(int i) const {
    assert(i >= 1);
    if (i <= static_cast<int>(prefix_.size())) return prefix_[i - 1];
    return theta_value(i);
  }

  // Length of the minimal even prefix (0 for theta).
  int support() const { return static_cast<int>(prefix_.size()); }
  const std::vector<int>& prefix() const { return prefix_; }
  bool is_theta() const { return prefix_.empty(); }

  // The restricted involution: acts as z on [support] and fixes everything
  // beyond (rather than continuing as theta).
  Involution restricted() const { return Involution(Permutation(prefix_)); }

  // Conjugate by s_i.
  FpfInvolution conjugated(int i) const {
    int n = std::max(support(), i + 1);
    if (n % 2 == 1) ++n;
    std::vector<int> v(n);
    for (int x = 1; x <= n; ++x) v[x - 1] = (*this)(x);
    std::swap(v[i - 1], v[i]);
    for (int x = 0; x < n; ++x)
      if (v[x] == i) v[x] = i + 1;
      else if (v[x] == i + 1) v[x] = i;
    return FpfInvolution(std::move(v));
  }

  bool operator==(const FpfInvolution&) const = default;
  auto operator<=>(const FpfInvolution&) const = default;

 private:
  void validate() const {
    int n = support();
    if (n % 2 != 0)
      throw ValidationError("BadFpf", "prefix length must be even");
    for (int i = 1; i <= n; ++i) {
      int v = (*this)(i);
      if (v < 1 || v > n || v == i || (*this)(v) != i)
        throw ValidationError("BadFpf",
                              "prefix is not a fixed-point-free involution");
    }
  }
  void trim() {
    while (prefix_.size() >= 2) {
      int n = static_cast<int>(prefix_.size());
      if (prefix_[n - 2] == n && prefix_[n - 1] == n - 1)
        prefix_.resize(n - 2);
      else
        break;
    }
  }

  std::vector<int> prefix_;
};

// One step of the N-module action. Empty optional is the absorbing zero.
inline std::optional<FpfInvolution> symplectic_step(const FpfInvolution& z,
                                                    int i) {
  int zi = z(i), zi1 = z(i + 1);
  if (zi < zi1) return z.conjugated(i);
  if (zi == i + 1 && zi1 == i) return std::nullopt;
  return z;
}

// Fold of the N-module action from theta. Empty optional means the product
// hit zero; that is a value, not an error.
inline std::optional<FpfInvolution> symplectic_fold(const Word& w) {
  std::optional<FpfInvolution> z = FpfInvolution::theta();
  for (int i : w) {
    z = symplectic_step(*z, i);
    if (!z) return std::nullopt;
  }
  return z;
}

struct LengthStats {
  int ell;      // Coxeter length
  int ell_hat;  // minimal word length in the relevant word system
  int kappa;    // number of two-cycles
};

inline LengthStats length_stats(const Involution& y) {
  int ell = y.perm().length();
  int kappa = 0;
  for (int i = 1; i <= y.size(); ++i)
    if (y(i) > i) ++kappa;
  return {ell, (ell + kappa) / 2, kappa};
}

inline LengthStats length_stats(const FpfInvolution& z) {
  Involution y = z.restricted();
  int ell = y.perm().length();
  int kappa = z.support() / 2;
  return {ell, (ell - kappa) / 2, kappa};
}

namespace detail {
inline Permutation conjugate_by_reversal(const Permutation& p, int n) {
  std::vector<int> v(n);
  for (int x = 1; x <= n; ++x) v[x - 1] = n + 1 - p(n + 1 - x);
  return Permutation(std::move(v));
}
}  // namespace detail

// Conjugation by the reversal n...321. By default n is the canonical support
// bound; a larger n may be stated explicitly.
inline Permutation star(const Permutation& p, std::optional<int> stated_n = {}) {
  int n = stated_n.value_or(p.size());
  if (n < p.size())
    throw ValidationError("BadStar", "stated n is below the support bound");
  return detail::conjugate_by_reversal(p, n);
}

inline Involution star(const Involution& y, std::optional<int> stated_n = {}) {
  return Involution(star(y.perm(), stated_n));
}

inline FpfInvolution star(const FpfInvolution& z) {
  int n = z.support();
  std::vector<int> v(n);
  for (int x = 1; x <= n; ++x) v[x - 1] = n + 1 - z(n + 1 - x);
  return FpfInvolution(std::move(v));
}

}  // namespace shifted_hecke
