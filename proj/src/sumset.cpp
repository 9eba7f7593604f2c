#include "sumsetlab/sumset.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <string>
#include <thread>

#include "sumsetlab/error.hpp"

namespace sumsetlab {

namespace {

using Word = IntervalBitmap::Word;
constexpr unsigned kW = IntervalBitmap::kWordBits;

// Output words per work unit (4096 integers).
constexpr std::size_t kBlockWords = 64;
// Shifts between fullness checks of a block.
constexpr std::size_t kFullCheckStride = 8;

struct ShiftJob {
  std::span<const std::uint64_t> shifts;  // ascending
  std::span<const Word> dense;
  std::span<Word> out;
  Word tail_mask;
};

bool block_full(std::span<const Word> out, std::size_t w0, std::size_t w1, Word tail_mask) {
  for (std::size_t j = w0; j < w1; ++j) {
    const Word want = (j + 1 == out.size()) ? tail_mask : ~Word{0};
    if ((out[j] & want) != want) return false;
  }
  return true;
}

void accumulate_block(const ShiftJob& job, std::size_t block) {
  const std::size_t w0 = block * kBlockWords;
  const std::size_t w1 = std::min(w0 + kBlockWords, job.out.size());
  const std::uint64_t top_bit = std::uint64_t{w1} * kW - 1;
  std::size_t applied = 0;
  for (std::uint64_t a : job.shifts) {
    if (a > top_bit) break;
    const std::size_t q = static_cast<std::size_t>(a / kW);
    const unsigned r = static_cast<unsigned>(a % kW);
    std::size_t j = std::max(w0, q);
    if (r == 0) {
      for (; j < w1; ++j) job.out[j] |= job.dense[j - q];
    } else {
      if (j == q) {
        job.out[j] |= job.dense[0] << r;
        ++j;
      }
      for (; j < w1; ++j) {
        const std::size_t src = j - q;
        job.out[j] |= (job.dense[src] << r) | (job.dense[src - 1] >> (kW - r));
      }
    }
    if (++applied % kFullCheckStride == 0 && block_full(job.out, w0, w1, job.tail_mask)) break;
  }
}

}  // namespace

IntervalBitmap sumset(const IntervalBitmap& x, const IntervalBitmap& y, unsigned threads) {
  require(x.bound() == y.bound(), "sumset operands have different bounds (" +
                                      std::to_string(x.bound()) + " vs " +
                                      std::to_string(y.bound()) + ")");
  const bool x_sparse = x.popcount() <= y.popcount();
  const IntervalBitmap& sparse = x_sparse ? x : y;
  const IntervalBitmap& dense = x_sparse ? y : x;

  IntervalBitmap out(x.bound());
  const std::vector<std::uint64_t> shifts = sparse.members();
  if (shifts.empty() || dense.popcount() == 0) return out;

  const ShiftJob job{shifts, dense.words(), out.words(), out.tail_mask()};
  const std::size_t blocks = (out.word_count() + kBlockWords - 1) / kBlockWords;
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, blocks);

  if (workers == 1) {
    for (std::size_t b = 0; b < blocks; ++b) accumulate_block(job, b);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t b; (b = next.fetch_add(1, std::memory_order_relaxed)) < blocks;)
        accumulate_block(job, b);
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
  }
  out.trim();
  return out;
}

IntervalBitmap hfold(const IntervalBitmap& a, std::uint32_t h, unsigned threads) {
  require(h >= 1, "h-fold sumset needs h >= 1");
  std::map<std::uint32_t, IntervalBitmap> memo;
  memo.emplace(1, a);
  auto fold = [&](auto&& self, std::uint32_t k) -> const IntervalBitmap& {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    const std::uint32_t lo = k / 2;
    const IntervalBitmap& left = self(self, lo);
    const IntervalBitmap& right = self(self, k - lo);
    return memo.emplace(k, sumset(left, right, threads)).first->second;
  };
  return fold(fold, h);
}

std::vector<std::uint64_t> complement_members(const IntervalBitmap& a, std::uint64_t lo,
                                              std::uint64_t hi) {
  require(lo <= hi && hi <= a.bound(), "range [" + std::to_string(lo) + ", " +
                                           std::to_string(hi) + "] not within [0, " +
                                           std::to_string(a.bound()) + "]");
  std::vector<std::uint64_t> out;
  const auto words = a.words();
  for (std::size_t j = static_cast<std::size_t>(lo / kW); j <= hi / kW; ++j) {
    Word inv = ~words[j];
    const std::uint64_t base = std::uint64_t{j} * kW;
    if (base < lo) inv &= ~Word{0} << (lo - base);
    if (hi - base < kW - 1) inv &= (Word{1} << (hi - base + 1)) - 1;
    for (; inv != 0; inv &= inv - 1) out.push_back(base + static_cast<unsigned>(std::countr_zero(inv)));
  }
  return out;
}

std::uint64_t counting(const IntervalBitmap& a, std::uint64_t n) {
  require(n <= a.bound(), "counting point " + std::to_string(n) + " exceeds bound " +
                              std::to_string(a.bound()));
  if (n == 0) return 0;
  const auto words = a.words();
  const std::size_t last = static_cast<std::size_t>(n / kW);
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < last; ++j) total += static_cast<std::uint64_t>(std::popcount(words[j]));
  const unsigned used = static_cast<unsigned>(n % kW) + 1;
  const Word mask = used == kW ? ~Word{0} : (Word{1} << used) - 1;
  total += static_cast<std::uint64_t>(std::popcount(words[last] & mask));
  return total - (words[0] & 1u);
}

}  // namespace sumsetlab
