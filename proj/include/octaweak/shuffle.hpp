#pragma once

#include <vector>

#include "octaweak/signed_permutation.hpp"

namespace octaweak {

/// A (p_1,...,p_k)-shuffle: an all-positive permutation increasing on
/// each consecutive block.  Shuffles are the minimal left coset
/// representatives of B_{p_1} x ... x B_{p_k} in B_n.
struct Shuffle {
  SignedPermutation perm;
  std::vector<int> blocks;

  static Shuffle of(SignedPermutation perm, std::vector<int> blocks);
  int size() const { return perm.size(); }
};

/// All (p_1,...,p_k)-shuffles in lexicographic order of the window.
/// Blocks must be nonnegative; an empty list yields only the empty
/// permutation.
std::vector<Shuffle> shuffles(const std::vector<int>& blocks);

}  // namespace octaweak
