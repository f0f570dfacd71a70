#include "skewminor/subset.hpp"

namespace skewminor {

bool enumeration_less(Subset a, Subset b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  // Equal sizes: compare member sequences. The first differing position
  // belongs to exactly one set; the set holding the smaller member wins.
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

std::vector<Subset> combinations(std::size_t n, std::size_t k) {
  std::vector<Subset> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(Subset::from_positions(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Subset> subsets_in_order(std::size_t n, std::size_t min_size, std::size_t max_size) {
  std::vector<Subset> out;
  for (std::size_t k = min_size; k <= max_size && k <= n; ++k) {
    auto layer = combinations(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace skewminor
