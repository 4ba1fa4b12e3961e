#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "octaweak/signed_permutation.hpp"

namespace octaweak {

/// The triple (Inv, Nega, Nsp) of a signed permutation, stored as word
/// bitsets: pair sets over the n(n-1)/2 slots in row-major (i,j) order
/// and Nega over [n].  Theorem-3.1 order tests reduce to three word
/// subset checks.  Supports n <= 11 (55 pair slots).
class OrderProfile {
 public:
  static constexpr int max_size = 11;

  static OrderProfile of(const SignedPermutation& w);

  int size() const { return n_; }
  std::uint64_t inv_bits() const { return inv_; }
  std::uint64_t nega_bits() const { return nega_; }
  std::uint64_t nsp_bits() const { return nsp_; }

  int inv_count() const;
  int nega_count() const;
  int nsp_count() const;
  int length() const { return inv_count() + nega_count() + nsp_count(); }

  bool subset_of(const OrderProfile& o) const {
    return n_ == o.n_ && (inv_ & ~o.inv_) == 0 && (nega_ & ~o.nega_) == 0 &&
           (nsp_ & ~o.nsp_) == 0;
  }

  /// Row-major slot of the pair (i,j), 1 <= i < j <= n.
  static int pair_slot(int i, int j, int n) {
    return (i - 1) * n - i * (i + 1) / 2 + j - 1;
  }

  bool inv_contains(int i, int j) const { return inv_ >> pair_slot(i, j, n_) & 1; }
  bool nsp_contains(int i, int j) const { return nsp_ >> pair_slot(i, j, n_) & 1; }
  bool nega_contains(int i) const { return nega_ >> (i - 1) & 1; }

  std::vector<std::pair<int, int>> inv_pairs() const;
  std::vector<std::pair<int, int>> nsp_pairs() const;
  std::vector<int> nega_indices() const;

  bool operator==(const OrderProfile&) const = default;

  /// Assembles a profile from raw bitsets (used by the Lemma 4.7 route).
  static OrderProfile from_bits(int n, std::uint64_t inv, std::uint64_t nega,
                                std::uint64_t nsp);

 private:
  int n_ = 0;
  std::uint64_t inv_ = 0;
  std::uint64_t nega_ = 0;
  std::uint64_t nsp_ = 0;
};

OrderProfile profile(const SignedPermutation& w);

/// Coxeter length inv(w) + nega(w) + nsp(w); works for any size.
int length(const SignedPermutation& w);

/// u <= v in the left weak order on B_n, by joint containment of the
/// three statistic sets.
bool leq(const SignedPermutation& u, const SignedPermutation& v);

/// Descent set Des(w) as a bitmask over [0, n-1], with the convention
/// w_0 = 0 (so 0 is a descent iff w_1 < 0).
std::uint32_t descent_mask(const SignedPermutation& w);

/// Global descent set GDes(w) as a bitmask over [1, n-1]: bit i is set
/// when every entry in positions <= i exceeds every entry beyond.
std::uint32_t global_descent_mask(const SignedPermutation& w);

}  // namespace octaweak
