#include "sumsetlab/order.hpp"

#include <algorithm>

#include "sumsetlab/error.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

namespace {

CoverageLevel describe(const IntervalBitmap& folded, std::uint32_t h) {
  CoverageLevel level;
  level.h = h;
  level.uncovered = folded.bound() + 1 - folded.popcount();
  level.covers = level.uncovered == 0;
  level.smallest_gap = folded.first_clear();
  level.largest_gap = folded.last_clear();
  if (!level.largest_gap)
    level.covered_from = 0;
  else if (*level.largest_gap < folded.bound())
    level.covered_from = *level.largest_gap + 1;
  return level;
}

}  // namespace

std::vector<std::uint64_t> OrderReport::witnesses() const {
  std::vector<std::uint64_t> out;
  for (const auto& level : levels)
    if (!level.covers && level.smallest_gap) out.push_back(*level.smallest_gap);
  if (witness) out.push_back(*witness);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint32_t default_h_max(const BasisSpec& spec) {
  if (const auto* p = std::get_if<BasisSpec::Polygonal>(&spec.kind())) return p->k + 3;
  if (const auto* a = std::get_if<BasisSpec::Augmented>(&spec.kind()))
    if (std::holds_alternative<BasisSpec::Polygonal>(a->base->kind())) return default_h_max(*a->base);
  return 8;
}

OrderReport empirical_order(const BasisSpec& spec, std::uint64_t bound, std::uint32_t h_max,
                            unsigned threads) {
  require(h_max >= 1, "h_max must be >= 1");
  const IntervalBitmap base = to_bitmap(spec, bound);
  require(base.popcount() > 0, "basis '" + spec.to_string() + "' has no element <= " + std::to_string(bound));

  OrderReport report{.spec = spec, .bound = bound, .h_max = h_max, .contains_zero = spec.contains_zero()};
  // hA is built as A + (h-1)A, so the sparse side is always the basis itself.
  IntervalBitmap folded = base;
  for (std::uint32_t h = 1; h <= h_max; ++h) {
    if (h > 1) folded = sumset(base, folded, threads);
    report.levels.push_back(describe(folded, h));
    if (report.levels.back().covers && !report.empirical_order) {
      report.empirical_order = h;
      // With 0 in A, hA ⊆ (h+1)A, so every later level covers as well.
      if (report.contains_zero) break;
    }
  }

  const std::uint32_t witness_level = report.empirical_order ? *report.empirical_order - 1 : h_max;
  if (witness_level >= 1) report.witness = report.levels[witness_level - 1].largest_gap;
  return report;
}

std::optional<std::vector<std::uint64_t>> find_representation(std::uint64_t n, const BasisSpec& spec,
                                                              std::uint32_t h) {
  require(h >= 1, "representation needs h >= 1");
  const std::vector<std::uint64_t> elems = enumerate(spec, n);
  if (elems.empty()) return std::nullopt;
  const std::uint64_t smallest = elems.front();

  std::vector<std::uint64_t> parts;
  parts.reserve(h);
  // Largest-first over indices <= max_index; parts stay nonincreasing.
  auto search = [&](auto&& self, std::uint64_t rest, std::uint32_t left, std::size_t max_index) -> bool {
    if (left == 1) {
      auto end = elems.begin() + static_cast<std::ptrdiff_t>(max_index) + 1;
      if (!std::binary_search(elems.begin(), end, rest)) return false;
      parts.push_back(rest);
      return true;
    }
    auto upper = std::upper_bound(elems.begin(), elems.begin() + static_cast<std::ptrdiff_t>(max_index) + 1, rest);
    for (auto i = static_cast<std::size_t>(upper - elems.begin()); i-- > 0;) {
      const std::uint64_t e = elems[i];
      // Every remaining part is <= e.
      if (static_cast<unsigned __int128>(e) * left < rest) break;
      if (rest - e < static_cast<unsigned __int128>(smallest) * (left - 1)) continue;
      parts.push_back(e);
      if (self(self, rest - e, left - 1, i)) return true;
      parts.pop_back();
    }
    return false;
  };
  if (!search(search, n, h, elems.size() - 1)) return std::nullopt;
  return parts;
}

StabilityReport stability_experiment(const BasisSpec& spec, std::uint64_t cutoff, std::uint64_t bound,
                                     std::uint32_t h_max, unsigned threads) {
  require(cutoff >= 2, "cutoff must be >= 2 so the augmentation holds 0 and 1");
  require(bound / 10 >= cutoff, "bound " + std::to_string(bound) + " must be >= 10 * cutoff (" +
                                    std::to_string(cutoff) + ")");
  StabilityReport report{.spec = spec,
                         .cutoff = cutoff,
                         .bound = bound,
                         .h_max = h_max,
                         .base = empirical_order(spec, bound, h_max, threads),
                         .augmented = empirical_order(BasisSpec::augmented_prefix(spec, cutoff), bound,
                                                      h_max, threads)};
  report.stable = report.base.empirical_order && report.augmented.empirical_order &&
                  *report.base.empirical_order == *report.augmented.empirical_order;
  return report;
}

LegendreResult verify_legendre(std::uint32_t m, std::uint64_t bound, unsigned threads) {
  require(m >= 3, "Legendre check needs m >= 3, got " + std::to_string(m));
  const std::uint64_t cutoff = 28ull * m * m * m;
  require(bound > cutoff, "bound " + std::to_string(bound) + " must exceed 28m^3 = " + std::to_string(cutoff));

  LegendreResult result{.m = m, .cutoff = cutoff, .bound = bound, .parts = m % 2 ? 4u : 5u};
  const IntervalBitmap four = hfold(to_bitmap(BasisSpec::polygonal(m + 2), bound), 4, threads);
  for (std::uint64_t v = cutoff; v <= bound; ++v) {
    const bool ok = four.test(v) || (m % 2 == 0 && four.test(v - 1));
    ++result.checked;
    if (!ok) {
      result.counterexample = v;
      break;
    }
  }
  result.passed = !result.counterexample;
  return result;
}

}  // namespace sumsetlab
