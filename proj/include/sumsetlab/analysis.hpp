#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumsetlab/basis.hpp"
#include "sumsetlab/bitmap.hpp"

namespace sumsetlab {

struct CountingSample {
  std::uint64_t n;
  std::uint64_t count;
  double ratio;
};

/// Sampled X(n)/n for X = hA on [1, bound].
struct CountingProfile {
  std::string set_label;
  std::string basis;
  std::uint32_t h = 1;
  std::uint64_t bound = 0;
  std::vector<CountingSample> samples;
  /// Max / min ratio over samples with n >= bound/10. Finite-N evidence for
  /// limsup and lim; never a proof of either.
  double tail_max_ratio = 0.0;
  double tail_min_ratio = 0.0;
  bool tail_nonincreasing = true;
  bool tail_strictly_decreasing = true;
};

/// Geometric grid of `points` values from bound/10^decades up to bound,
/// rounded, clamped to >= 1 and deduplicated.
std::vector<std::uint64_t> geometric_grid(std::uint64_t bound, std::size_t points = 32,
                                          double decades = 3.0);

CountingProfile density_profile(const BasisSpec& spec, std::uint32_t h, std::uint64_t bound,
                                std::span<const std::uint64_t> grid, unsigned threads = 1);

/// Residue-class obstruction for h-fold sums modulo m.
struct ObstructionReport {
  std::string basis;
  std::uint64_t modulus = 0;
  std::uint32_t h = 1;
  /// Residues of the basis mod m.
  std::vector<std::uint64_t> certificate;
  std::vector<std::uint64_t> attainable;
  std::vector<std::uint64_t> missing;
  /// Period (in the index x) that was checked for polygonal generators; 0 for
  /// finite sets.
  std::uint64_t verified_period = 0;
};

/// Residues of `spec` mod m. Polygonal residues come from the generator's
/// period (checked to divide 2m), not from a bounded enumeration.
std::vector<std::uint64_t> residue_set(const BasisSpec& spec, std::uint64_t modulus);

ObstructionReport modular_obstruction(const BasisSpec& spec, std::uint32_t h,
                                      std::uint64_t modulus);

/// True iff no member of `bitmap` lies in a missing residue class.
bool cross_check_obstruction(const ObstructionReport& report, const IntervalBitmap& bitmap);

}  // namespace sumsetlab
