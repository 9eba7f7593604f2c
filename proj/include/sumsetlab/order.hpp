#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumsetlab/basis.hpp"

namespace sumsetlab {

/// Coverage facts for hA on [0, bound] at one h.
struct CoverageLevel {
  std::uint32_t h = 0;
  bool covers = false;
  std::uint64_t uncovered = 0;
  std::optional<std::uint64_t> smallest_gap;
  std::optional<std::uint64_t> largest_gap;
  /// Smallest t with [t, bound] ⊆ hA; empty when `bound` itself is uncovered.
  std::optional<std::uint64_t> covered_from;
};

struct OrderReport {
  BasisSpec spec;
  std::uint64_t bound = 0;
  std::uint32_t h_max = 0;
  bool contains_zero = false;
  /// Smallest h with [0, bound] ⊆ hA; empty means "exceeds h_max".
  std::optional<std::uint32_t> empirical_order;
  std::vector<CoverageLevel> levels;
  /// Largest uncovered integer at empirical_order - 1 (or at h_max when the
  /// order was not reached).
  std::optional<std::uint64_t> witness;

  /// Per-h smallest gaps below the order, plus `witness`; increasing, unique.
  std::vector<std::uint64_t> witnesses() const;
};

struct StabilityReport {
  BasisSpec spec;
  std::uint64_t cutoff = 0;
  std::uint64_t bound = 0;
  std::uint32_t h_max = 0;
  OrderReport base;
  OrderReport augmented;
  bool stable = false;
};

struct LegendreResult {
  std::uint32_t m = 0;
  std::uint64_t cutoff = 0;
  std::uint64_t bound = 0;
  /// 4 for odd m, 5 (one part 0 or 1) for even m.
  std::uint32_t parts = 0;
  std::uint64_t checked = 0;
  bool passed = false;
  std::optional<std::uint64_t> counterexample;
};

/// k + 3 for Polygonal(k) (also as the base of an augmentation), 8 otherwise.
std::uint32_t default_h_max(const BasisSpec& spec);

OrderReport empirical_order(const BasisSpec& spec, std::uint64_t bound, std::uint32_t h_max,
                            unsigned threads = 1);

/// One representation of n as h basis elements, parts nonincreasing, chosen
/// largest-first. Empty when none exists.
std::optional<std::vector<std::uint64_t>> find_representation(std::uint64_t n,
                                                              const BasisSpec& spec,
                                                              std::uint32_t h);

/// Orders of `spec` and of `spec ∪ [0, cutoff)` on [0, bound].
StabilityReport stability_experiment(const BasisSpec& spec, std::uint64_t cutoff,
                                     std::uint64_t bound, std::uint32_t h_max,
                                     unsigned threads = 1);

/// Every v in [28m^3, bound] is a sum of four (m+2)-gonal numbers (m odd), or
/// v or v-1 is (m even).
LegendreResult verify_legendre(std::uint32_t m, std::uint64_t bound, unsigned threads = 1);

}  // namespace sumsetlab
