#include "octaweak/order_profile.hpp"

#include <bit>
#include <stdexcept>

namespace octaweak {

OrderProfile OrderProfile::of(const SignedPermutation& w) {
  const int n = w.size();
  if (n > max_size)
    throw std::invalid_argument("order statistics limited to size " +
                                std::to_string(max_size) + ", got " +
                                std::to_string(n));
  OrderProfile p;
  p.n_ = n;
  const std::vector<int>& win = w.window();
  int slot = 0;
  for (int i = 1; i <= n; ++i) {
    const int wi = win[static_cast<std::size_t>(i - 1)];
    if (wi < 0) p.nega_ |= 1ull << (i - 1);
    for (int j = i + 1; j <= n; ++j, ++slot) {
      const int wj = win[static_cast<std::size_t>(j - 1)];
      if (wi > wj) p.inv_ |= 1ull << slot;
      if (wi + wj < 0) p.nsp_ |= 1ull << slot;
    }
  }
  return p;
}

OrderProfile OrderProfile::from_bits(int n, std::uint64_t inv, std::uint64_t nega,
                                     std::uint64_t nsp) {
  if (n > max_size) throw std::invalid_argument("profile size too large");
  OrderProfile p;
  p.n_ = n;
  p.inv_ = inv;
  p.nega_ = nega;
  p.nsp_ = nsp;
  return p;
}

int OrderProfile::inv_count() const { return std::popcount(inv_); }
int OrderProfile::nega_count() const { return std::popcount(nega_); }
int OrderProfile::nsp_count() const { return std::popcount(nsp_); }

std::vector<std::pair<int, int>> OrderProfile::inv_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (inv_contains(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> OrderProfile::nsp_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (nsp_contains(i, j)) out.emplace_back(i, j);
  return out;
}

std::vector<int> OrderProfile::nega_indices() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (nega_contains(i)) out.push_back(i);
  return out;
}

OrderProfile profile(const SignedPermutation& w) { return OrderProfile::of(w); }

int length(const SignedPermutation& w) {
  const std::vector<int>& win = w.window();
  const int n = w.size();
  int len = 0;  // inv(w) - sum of negative entries
  for (int i = 0; i < n; ++i) {
    if (win[static_cast<std::size_t>(i)] < 0) len -= win[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j)
      if (win[static_cast<std::size_t>(i)] > win[static_cast<std::size_t>(j)]) ++len;
  }
  return len;
}

bool leq(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("leq: size mismatch");
  return OrderProfile::of(u).subset_of(OrderProfile::of(v));
}

std::uint32_t descent_mask(const SignedPermutation& w) {
  const std::vector<int>& win = w.window();
  std::uint32_t mask = 0;
  int prev = 0;  // w_0 = 0
  for (int i = 0; i < w.size(); ++i) {
    const int cur = win[static_cast<std::size_t>(i)];
    if (prev > cur) mask |= 1u << i;
    prev = cur;
  }
  return mask;
}

std::uint32_t global_descent_mask(const SignedPermutation& w) {
  const std::vector<int>& win = w.window();
  const int n = w.size();
  std::uint32_t mask = 0;
  for (int i = 1; i < n; ++i) {
    int min_head = win[0];
    for (int j = 1; j < i; ++j) min_head = std::min(min_head, win[static_cast<std::size_t>(j)]);
    int max_tail = win[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k) max_tail = std::max(max_tail, win[static_cast<std::size_t>(k)]);
    if (min_head > max_tail) mask |= 1u << i;
  }
  return mask;
}

}  // namespace octaweak
