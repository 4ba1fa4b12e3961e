#include "octaweak/shuffle.hpp"

#include <numeric>
#include <stdexcept>

namespace octaweak {

Shuffle Shuffle::of(SignedPermutation perm, std::vector<int> blocks) {
  int total = 0;
  for (int b : blocks) {
    if (b < 0) throw std::invalid_argument("negative shuffle block");
    total += b;
  }
  if (total != perm.size())
    throw std::invalid_argument("shuffle blocks do not sum to permutation size");
  const std::vector<int>& w = perm.window();
  int pos = 0;
  for (int b : blocks) {
    for (int k = 0; k < b; ++k, ++pos) {
      if (w[static_cast<std::size_t>(pos)] <= 0)
        throw std::invalid_argument("shuffle entries must be positive");
      if (k > 0 && w[static_cast<std::size_t>(pos - 1)] > w[static_cast<std::size_t>(pos)])
        throw std::invalid_argument("shuffle not increasing within block: " +
                                    perm.render());
    }
  }
  return Shuffle{std::move(perm), std::move(blocks)};
}

namespace {

// Fills block-value choices recursively; choosing value subsets for each
// block in combination-lex order yields window-lex order overall.
void emit(const std::vector<int>& blocks, std::size_t bi, std::vector<int>& avail,
          std::vector<int>& window, std::vector<Shuffle>& out,
          const std::vector<int>& all_blocks) {
  if (bi == blocks.size()) {
    out.push_back(Shuffle{SignedPermutation(window), all_blocks});
    return;
  }
  const int b = blocks[bi];
  const int m = static_cast<int>(avail.size());
  std::vector<int> idx(static_cast<std::size_t>(b));
  // combinations of `avail` indices in lex order
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == b) {
      std::vector<int> rest;
      rest.reserve(static_cast<std::size_t>(m - b));
      int t = 0;
      for (int k = 0; k < m; ++k) {
        if (t < b && idx[static_cast<std::size_t>(t)] == k) {
          ++t;
          continue;
        }
        rest.push_back(avail[static_cast<std::size_t>(k)]);
      }
      const std::size_t base = window.size();
      for (int k = 0; k < b; ++k)
        window.push_back(avail[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])]);
      std::vector<int> saved = std::move(avail);
      avail = std::move(rest);
      emit(blocks, bi + 1, avail, window, out, all_blocks);
      avail = std::move(saved);
      window.resize(base);
      return;
    }
    for (int k = start; k <= m - (b - depth); ++k) {
      idx[static_cast<std::size_t>(depth)] = k;
      self(self, k + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<Shuffle> shuffles(const std::vector<int>& blocks) {
  int total = 0;
  for (int b : blocks) {
    if (b < 0) throw std::invalid_argument("negative shuffle block");
    total += b;
  }
  std::vector<int> avail(static_cast<std::size_t>(total));
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> window;
  window.reserve(static_cast<std::size_t>(total));
  std::vector<Shuffle> out;
  emit(blocks, 0, avail, window, out, blocks);
  return out;
}

}  // namespace octaweak
