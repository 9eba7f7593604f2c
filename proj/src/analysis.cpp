#include "sumsetlab/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "sumsetlab/error.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

std::vector<std::uint64_t> geometric_grid(std::uint64_t bound, std::size_t points, double decades) {
  require(bound >= 1, "grid needs bound >= 1");
  require(points >= 1, "grid needs at least one point");
  std::vector<std::uint64_t> grid;
  grid.reserve(points);
  const double top = static_cast<double>(bound);
  const double start = top / std::pow(10.0, decades);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = points == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(points - 1);
    auto n = static_cast<std::uint64_t>(std::llround(start * std::pow(top / start, t)));
    n = std::clamp<std::uint64_t>(n, 1, bound);
    if (grid.empty() || grid.back() < n) grid.push_back(n);
  }
  grid.back() = bound;
  return grid;
}

CountingProfile density_profile(const BasisSpec& spec, std::uint32_t h, std::uint64_t bound,
                                std::span<const std::uint64_t> grid, unsigned threads) {
  require(!grid.empty(), "density profile needs a non-empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(grid[i] >= 1 && grid[i] <= bound,
            "grid point " + std::to_string(grid[i]) + " outside [1, " + std::to_string(bound) + "]");
    require(i == 0 || grid[i - 1] < grid[i], "grid points must be strictly increasing");
  }
  const IntervalBitmap folded = hfold(to_bitmap(spec, bound), h, threads);

  CountingProfile profile;
  profile.basis = spec.to_string();
  profile.set_label = std::to_string(h) + "A, A = " + profile.basis;
  profile.h = h;
  profile.bound = bound;
  profile.samples.reserve(grid.size());
  for (auto n : grid) {
    const auto c = counting(folded, n);
    profile.samples.push_back({n, c, static_cast<double>(c) / static_cast<double>(n)});
  }

  // Top decade of the grid.
  const std::uint64_t tail_start = bound / 10;
  bool first = true;
  double previous = 0.0;
  for (const auto& s : profile.samples) {
    if (s.n < tail_start) continue;
    if (first) {
      profile.tail_max_ratio = profile.tail_min_ratio = s.ratio;
      first = false;
    } else {
      profile.tail_max_ratio = std::max(profile.tail_max_ratio, s.ratio);
      profile.tail_min_ratio = std::min(profile.tail_min_ratio, s.ratio);
      if (s.ratio > previous) profile.tail_nonincreasing = false;
      if (s.ratio >= previous) profile.tail_strictly_decreasing = false;
    }
    previous = s.ratio;
  }
  return profile;
}

namespace {

std::vector<std::uint64_t> polygonal_residues(std::uint32_t k, std::uint64_t modulus,
                                              std::uint64_t& period) {
  // Walk P(x+1) = P(x) + (k-2)x + 1 mod m over four periods' worth of indices
  // and confirm the sequence repeats with period 2m.
  const std::uint64_t span = 4 * modulus;
  std::vector<std::uint64_t> seq;
  seq.reserve(static_cast<std::size_t>(span));
  const unsigned __int128 step = (k - 2) % modulus;
  std::uint64_t value = 0;
  for (std::uint64_t x = 0; x < span; ++x) {
    seq.push_back(value);
    value = static_cast<std::uint64_t>((value + step * (x % modulus) + 1) % modulus);
  }
  period = 2 * modulus;
  for (std::uint64_t x = 0; x + period < span; ++x) {
    if (seq[x] != seq[x + period])
      fail(Errc::invalid_parameter, "polygonal residues mod " + std::to_string(modulus) +
                                        " are not periodic with period 2m");
  }
  std::vector<char> seen(static_cast<std::size_t>(modulus), 0);
  for (std::uint64_t x = 0; x < period; ++x) seen[seq[x]] = 1;
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < modulus; ++r)
    if (seen[r]) out.push_back(r);
  return out;
}

std::vector<std::uint64_t> residues_with_period(const BasisSpec& spec, std::uint64_t modulus,
                                                std::uint64_t& period) {
  if (const auto* p = std::get_if<BasisSpec::Polygonal>(&spec.kind()))
    return polygonal_residues(p->k, modulus, period);

  std::vector<char> seen(static_cast<std::size_t>(modulus), 0);
  auto mark = [&](const std::vector<std::uint64_t>& values) {
    for (auto v : values) seen[v % modulus] = 1;
  };
  if (const auto* e = std::get_if<BasisSpec::Explicit>(&spec.kind())) {
    mark(e->elements);
  } else {
    const auto& a = std::get<BasisSpec::Augmented>(spec.kind());
    for (auto r : residues_with_period(*a.base, modulus, period)) seen[r] = 1;
    mark(a.finite_set);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < modulus; ++r)
    if (seen[r]) out.push_back(r);
  return out;
}

}  // namespace

std::vector<std::uint64_t> residue_set(const BasisSpec& spec, std::uint64_t modulus) {
  require(modulus >= 2, "modulus must be >= 2, got " + std::to_string(modulus));
  require(modulus <= kMaxBound, "modulus exceeds 2^32");
  std::uint64_t period = 0;
  return residues_with_period(spec, modulus, period);
}

ObstructionReport modular_obstruction(const BasisSpec& spec, std::uint32_t h, std::uint64_t modulus) {
  require(modulus >= 2, "modulus must be >= 2, got " + std::to_string(modulus));
  require(modulus <= kMaxBound, "modulus exceeds 2^32");
  require(h >= 1, "obstruction needs h >= 1");

  ObstructionReport report;
  report.basis = spec.to_string();
  report.modulus = modulus;
  report.h = h;
  report.certificate = residues_with_period(spec, modulus, report.verified_period);

  // h-fold sumset of the certificate inside Z_m.
  const auto m = static_cast<std::size_t>(modulus);
  std::vector<char> reach(m, 0);
  for (auto r : report.certificate) reach[r] = 1;
  for (std::uint32_t step = 1; step < h; ++step) {
    std::vector<char> next(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
      if (!reach[s]) continue;
      for (auto r : report.certificate) next[(s + r) % m] = 1;
    }
    if (next == reach) break;  // fixed point: further folds add nothing
    reach.swap(next);
  }
  for (std::size_t s = 0; s < m; ++s) (reach[s] ? report.attainable : report.missing).push_back(s);
  return report;
}

bool cross_check_obstruction(const ObstructionReport& report, const IntervalBitmap& bitmap) {
  if (report.missing.empty()) return true;
  std::vector<char> forbidden(static_cast<std::size_t>(report.modulus), 0);
  for (auto r : report.missing) forbidden[r] = 1;
  for (auto v : bitmap.members())
    if (forbidden[v % report.modulus]) return false;
  return true;
}

}  // namespace sumsetlab
