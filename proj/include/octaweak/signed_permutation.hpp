#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace octaweak {

/// A signed permutation of size n in one-line notation: the window
/// (w_1,...,w_n) determines a bijection of [-n,n] with w(-i) = -w(i)
/// and w(0) = 0.  Size 0 is the empty permutation, the unit of all
/// product constructions.  Values are immutable after construction.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);
  /// Coxeter generator s_i of B_n: s_0 swaps 1 and -1, s_i for i >= 1 is
  /// the transposition (i,i+1)(-i,-(i+1)).
  static SignedPermutation generator(int i, int n);
  /// Parses comma- or space-separated signed decimals; "" is the empty
  /// permutation.
  static SignedPermutation parse(std::string_view text);

  int size() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  /// Evaluation at any i in [-n, n].
  int operator()(int i) const;

  SignedPermutation inverse() const;

  bool all_positive() const;
  std::string render() const;

  bool operator==(const SignedPermutation&) const = default;
  /// Orders by size, then lexicographically on the window.  Used for
  /// deterministic term ordering in formal sums.
  std::strong_ordering operator<=>(const SignedPermutation& o) const;

 private:
  std::vector<int> window_;
};

/// (u o v)(i) = u(v(i)); both factors must have the same size.
SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v);

inline SignedPermutation operator*(const SignedPermutation& u,
                                   const SignedPermutation& v) {
  return compose(u, v);
}

/// Entrywise shift a |-> a + sgn(a)*p.
std::vector<int> shift(std::span<const int> word, int p);

/// Shifted product u x v in B_{p+q}: u on the first p places, v shifted
/// by p on the rest.
SignedPermutation shifted_product(const SignedPermutation& u,
                                  const SignedPermutation& v);

/// Standard signed permutation sts(a) of a word of nonzero integers:
/// keeps the sign pattern, ranks absolute values with ties broken left
/// to right (|w_i| < |w_j| iff |a_i| <= |a_j| for i < j).
SignedPermutation standardize(std::span<const int> word);

/// Standard permutation st(a): w_i < w_j iff a_i <= a_j for i < j.
/// Signs participate in the comparison but the output is unsigned.
SignedPermutation standardize_plain(std::span<const int> word);

SignedPermutation standardize(const std::vector<int>& word);
SignedPermutation standardize_plain(const std::vector<int>& word);

/// Drops the signs: the canonical projection B_n -> S_n.
SignedPermutation forget_signs(const SignedPermutation& w);

struct SpHash {
  std::size_t operator()(const SignedPermutation& w) const;
};

}  // namespace octaweak
