#pragma once

#include <cstdint>
#include <vector>

#include "sumsetlab/bitmap.hpp"

namespace sumsetlab {

/// Truncated Minkowski sum {a + b : a ∈ x, b ∈ y, a + b <= N}.
///
/// The operand with fewer members drives the loop; each of its members ORs a
/// shifted copy of the other operand into the output. The output is split
/// into fixed blocks that workers claim independently, so the result does not
/// depend on `threads`.
IntervalBitmap sumset(const IntervalBitmap& x, const IntervalBitmap& y, unsigned threads = 1);

/// Truncated h-fold sumset hA, by doubling: hA = floor(h/2)A + ceil(h/2)A.
IntervalBitmap hfold(const IntervalBitmap& a, std::uint32_t h, unsigned threads = 1);

/// Integers in [lo, hi] whose bit is clear.
std::vector<std::uint64_t> complement_members(const IntervalBitmap& a, std::uint64_t lo,
                                              std::uint64_t hi);

/// #{x ∈ a : 1 <= x <= n}. Zero is never counted.
std::uint64_t counting(const IntervalBitmap& a, std::uint64_t n);

}  // namespace sumsetlab
