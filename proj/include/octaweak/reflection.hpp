#pragma once

#include <string>
#include <vector>

#include "octaweak/signed_permutation.hpp"

namespace octaweak {

/// A reflection of B_n: either the pair transposition (i,j)(-i,-j) with
/// 1 <= i < |j| <= n (j may be negative), or the sign change (i,-i).
struct Reflection {
  enum class Kind { transposition, sign_change };
  Kind kind;
  int i;
  int j;  // 0 for sign changes

  SignedPermutation as_permutation(int n) const;
  std::string render() const;
  bool operator==(const Reflection&) const = default;
};

/// The full reflection set of B_n: n^2 elements.
std::vector<Reflection> all_reflections(int n);

/// T_R(w) = {t | l(wt) < l(w)} assembled from the three statistic
/// families; its cardinality equals l(w).
std::vector<Reflection> reflections_below(const SignedPermutation& w);

/// w composed with the reflection on the right.
SignedPermutation apply_right(const SignedPermutation& w, const Reflection& t);

}  // namespace octaweak
