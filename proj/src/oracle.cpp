#include "sumsetlab/oracle.hpp"

#include <algorithm>
#include <vector>

namespace sumsetlab {

namespace {

// Is `target` a sum of `parts` values from values[0..top], each part no larger
// than the one chosen before it?
bool descend(const std::vector<std::uint64_t>& values, std::uint64_t target, std::uint32_t parts,
             std::size_t top) {
  if (parts == 1) return std::binary_search(values.begin(), values.begin() + top + 1, target);
  if (parts == 2) {
    // Two pointers over values[0..top].
    std::size_t lo = 0;
    std::size_t hi = top;
    while (lo <= hi) {
      const std::uint64_t s = values[lo] + values[hi];
      if (s == target) return true;
      if (s < target) {
        ++lo;
      } else {
        if (hi == 0) break;
        --hi;
      }
    }
    return false;
  }
  for (std::size_t i = top + 1; i-- > 0;) {
    const std::uint64_t v = values[i];
    if (v > target) continue;
    if (v * parts < target) return false;
    if (descend(values, target - v, parts - 1, i)) return true;
  }
  return false;
}

}  // namespace

bool oracle_hfold_membership(std::uint64_t n, const BasisSpec& spec, std::uint32_t h) {
  if (h == 0) return false;
  const std::vector<std::uint64_t> values = enumerate(spec, n);
  if (values.empty()) return false;
  return descend(values, n, h, values.size() - 1);
}

}  // namespace sumsetlab
