#pragma once

// Test-only reference computations. Nothing here calls the bitmap engine.

#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace brute {

/// All sums <= bound of exactly h values drawn (with repetition) from `elems`,
/// by nested iteration over nondecreasing index tuples.
inline std::vector<bool> hfold(const std::vector<std::uint64_t>& elems, unsigned h, std::uint64_t bound) {
  std::vector<bool> hit(bound + 1, false);
  std::vector<std::size_t> idx(h, 0);
  if (elems.empty()) return hit;
  while (true) {
    std::uint64_t s = 0;
    for (auto i : idx) s += elems[i];
    if (s <= bound) hit[s] = true;
    // Next nondecreasing tuple.
    int pos = static_cast<int>(h) - 1;
    while (pos >= 0 && idx[pos] + 1 == elems.size()) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (unsigned j = pos + 1; j < h; ++j) idx[j] = idx[pos];
  }
  return hit;
}

inline std::vector<bool> sumset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                std::uint64_t bound) {
  std::vector<bool> hit(bound + 1, false);
  for (auto x : a)
    for (auto y : b)
      if (x + y <= bound) hit[x + y] = true;
  return hit;
}

/// k-gonal numbers <= bound by gnomon addition: P(0)=0, P(x+1)=P(x)+(k-2)x+1.
inline std::vector<std::uint64_t> polygonals(unsigned k, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  std::uint64_t v = 0;
  for (std::uint64_t x = 0; v <= bound; ++x) {
    out.push_back(v);
    v += (k - 2) * x + 1;
  }
  return out;
}

inline std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// Number of triangular numbers in [1, n]: floor((sqrt(8n+1)-1)/2).
inline std::uint64_t triangular_count(std::uint64_t n) { return (isqrt(8 * n + 1) - 1) / 2; }

/// h-fold sumset of `residues` inside Z_m, by enumerating residue tuples.
inline std::set<std::uint64_t> residue_hfold(const std::vector<std::uint64_t>& residues, unsigned h,
                                             std::uint64_t m) {
  std::set<std::uint64_t> cur(residues.begin(), residues.end());
  for (unsigned i = 1; i < h; ++i) {
    std::set<std::uint64_t> next;
    for (auto s : cur)
      for (auto r : residues) next.insert((s + r) % m);
    cur = next;
  }
  return cur;
}

inline std::vector<std::uint64_t> clear_positions(const std::vector<bool>& hit, std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (auto i = lo; i <= hi; ++i)
    if (!hit[i]) out.push_back(i);
  return out;
}

}  // namespace brute
