#include "octaweak/reflection.hpp"

#include <cstdlib>
#include <stdexcept>

#include "octaweak/order_profile.hpp"

namespace octaweak {

SignedPermutation Reflection::as_permutation(int n) const {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) w[static_cast<std::size_t>(k - 1)] = k;
  if (kind == Kind::sign_change) {
    if (i < 1 || i > n) throw std::out_of_range("reflection index out of range");
    w[static_cast<std::size_t>(i - 1)] = -i;
  } else {
    const int aj = std::abs(j);
    if (i < 1 || aj <= i || aj > n)
      throw std::out_of_range("reflection indices out of range");
    // (i,j)(-i,-j): position i takes value j, position |j| takes sgn(j)*i
    w[static_cast<std::size_t>(i - 1)] = j;
    w[static_cast<std::size_t>(aj - 1)] = j > 0 ? i : -i;
  }
  return SignedPermutation(std::move(w));
}

std::string Reflection::render() const {
  if (kind == Kind::sign_change)
    return "(" + std::to_string(i) + "," + std::to_string(-i) + ")";
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")(" +
         std::to_string(-i) + "," + std::to_string(-j) + ")";
}

std::vector<Reflection> all_reflections(int n) {
  std::vector<Reflection> out;
  out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back({Reflection::Kind::sign_change, i, 0});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.push_back({Reflection::Kind::transposition, i, j});
      out.push_back({Reflection::Kind::transposition, i, -j});
    }
  return out;
}

std::vector<Reflection> reflections_below(const SignedPermutation& w) {
  const OrderProfile p = profile(w);
  std::vector<Reflection> out;
  for (auto [i, j] : p.inv_pairs())
    out.push_back({Reflection::Kind::transposition, i, j});
  for (int i : p.nega_indices())
    out.push_back({Reflection::Kind::sign_change, i, 0});
  for (auto [i, j] : p.nsp_pairs())
    out.push_back({Reflection::Kind::transposition, i, -j});
  return out;
}

SignedPermutation apply_right(const SignedPermutation& w, const Reflection& t) {
  return compose(w, t.as_permutation(w.size()));
}

}  // namespace octaweak
