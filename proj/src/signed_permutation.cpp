#include "octaweak/signed_permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace octaweak {

namespace {

void validate_window(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int a : w) {
    if (a == 0) throw std::invalid_argument("signed permutation entry is zero");
    const int v = std::abs(a);
    if (v > n)
      throw std::invalid_argument("entry " + std::to_string(a) +
                                  " out of range for size " + std::to_string(n));
    if (seen[v])
      throw std::invalid_argument("repeated absolute value " + std::to_string(v));
    seen[v] = 1;
  }
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> window)
    : window_(std::move(window)) {
  validate_window(window_);
}

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

SignedPermutation SignedPermutation::generator(int i, int n) {
  if (n <= 0 || i < 0 || i >= n)
    throw std::out_of_range("generator index " + std::to_string(i) +
                            " out of range for B_" + std::to_string(n));
  SignedPermutation s = identity(n);
  if (i == 0) {
    s.window_[0] = -1;
  } else {
    std::swap(s.window_[i - 1], s.window_[i]);
  }
  return s;
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  std::vector<int> w;
  const char* p = text.data();
  const char* end = p + text.size();
  while (p != end) {
    if (*p == ',' || *p == ' ' || *p == '\t' || *p == '(' || *p == ')') {
      ++p;
      continue;
    }
    int value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p)
      throw std::invalid_argument("cannot parse permutation text '" +
                                  std::string(text) + "'");
    w.push_back(value);
    p = next;
  }
  return SignedPermutation(std::move(w));
}

int SignedPermutation::operator()(int i) const {
  const int n = size();
  if (i < -n || i > n) throw std::out_of_range("evaluation outside [-n, n]");
  if (i == 0) return 0;
  return i > 0 ? window_[static_cast<std::size_t>(i - 1)]
               : -window_[static_cast<std::size_t>(-i - 1)];
}

SignedPermutation SignedPermutation::inverse() const {
  const int n = size();
  std::vector<int> inv(static_cast<std::size_t>(n), 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int v = window_[static_cast<std::size_t>(pos - 1)];
    if (v > 0)
      inv[static_cast<std::size_t>(v - 1)] = pos;
    else
      inv[static_cast<std::size_t>(-v - 1)] = -pos;
  }
  SignedPermutation r;
  r.window_ = std::move(inv);
  return r;
}

bool SignedPermutation::all_positive() const {
  return std::all_of(window_.begin(), window_.end(), [](int a) { return a > 0; });
}

std::string SignedPermutation::render() const {
  std::string out;
  for (std::size_t k = 0; k < window_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(window_[k]);
  }
  return out;
}

std::strong_ordering SignedPermutation::operator<=>(
    const SignedPermutation& o) const {
  if (auto c = size() <=> o.size(); c != 0) return c;
  for (std::size_t k = 0; k < window_.size(); ++k)
    if (auto c = window_[k] <=> o.window_[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("compose: size mismatch (" +
                                std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()) + ")");
  std::vector<int> w(v.window().size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = u(v.window()[k]);
  return SignedPermutation(std::move(w));
}

std::vector<int> shift(std::span<const int> word, int p) {
  std::vector<int> out(word.begin(), word.end());
  for (int& a : out) a += (a > 0 ? p : -p);
  return out;
}

SignedPermutation shifted_product(const SignedPermutation& u,
                                  const SignedPermutation& v) {
  std::vector<int> w = u.window();
  const std::vector<int> tail = shift(v.window(), u.size());
  w.insert(w.end(), tail.begin(), tail.end());
  return SignedPermutation(std::move(w));
}

namespace {

std::vector<int> ranks_by(std::span<const int> word, bool use_abs) {
  const int n = static_cast<int>(word.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  // stable sort by value realizes the asymmetric tie rule: for i < j with
  // a_i <= a_j the earlier position gets the smaller rank
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    const int x = use_abs ? std::abs(word[static_cast<std::size_t>(a)])
                          : word[static_cast<std::size_t>(a)];
    const int y = use_abs ? std::abs(word[static_cast<std::size_t>(b)])
                          : word[static_cast<std::size_t>(b)];
    return x < y;
  });
  std::vector<int> rank(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) rank[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])] = r + 1;
  return rank;
}

}  // namespace

SignedPermutation standardize(std::span<const int> word) {
  for (int a : word)
    if (a == 0) throw std::invalid_argument("standardize: zero entry");
  std::vector<int> w = ranks_by(word, /*use_abs=*/true);
  for (std::size_t k = 0; k < w.size(); ++k)
    if (word[k] < 0) w[k] = -w[k];
  return SignedPermutation(std::move(w));
}

SignedPermutation standardize_plain(std::span<const int> word) {
  for (int a : word)
    if (a == 0) throw std::invalid_argument("standardize: zero entry");
  return SignedPermutation(ranks_by(word, /*use_abs=*/false));
}

SignedPermutation standardize(const std::vector<int>& word) {
  return standardize(std::span<const int>(word));
}

SignedPermutation standardize_plain(const std::vector<int>& word) {
  return standardize_plain(std::span<const int>(word));
}

SignedPermutation forget_signs(const SignedPermutation& w) {
  std::vector<int> v = w.window();
  for (int& a : v) a = std::abs(a);
  return SignedPermutation(std::move(v));
}

std::size_t SpHash::operator()(const SignedPermutation& w) const {
  std::size_t h = 1469598103934665603ull;
  for (int a : w.window()) {
    h ^= static_cast<std::size_t>(a + 64);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace octaweak
