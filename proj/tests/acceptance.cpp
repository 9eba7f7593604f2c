// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "property_checks.hpp"
#include "sumsetlab/analysis.hpp"
#include "sumsetlab/basis.hpp"
#include "sumsetlab/oracle.hpp"
#include "sumsetlab/order.hpp"
#include "sumsetlab/sumset.hpp"

using namespace sumsetlab;

namespace {

constexpr std::uint64_t kMillion = 1'000'000;

struct Verdict {
  bool passed = false;
  std::string detail;
};

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;
  std::function<Verdict()> run;
};

Verdict gauss() {
  const auto tri = to_bitmap(BasisSpec::polygonal(3), kMillion);
  const bool three = hfold(tri, 3).is_full();
  const auto gap = hfold(tri, 2).first_clear();
  std::ostringstream d;
  d << "3T covers [0,10^6]=" << three << ", first gap of 2T=" << (gap ? std::to_string(*gap) : "none");
  return {three && gap == 5u, d.str()};
}

Verdict proposition() {
  const auto two = hfold(to_bitmap(BasisSpec::polygonal(3), kMillion), 2);
  std::uint64_t in_complement = 0;
  for (std::uint64_t n = 0; n <= kMillion; ++n)
    if ((n % 9 == 5 || n % 9 == 8) && !two.test(n)) ++in_complement;
  const auto report = modular_obstruction(BasisSpec::polygonal(3), 2, 9);
  const bool residues = report.missing == std::vector<std::uint64_t>{5, 8};
  std::ostringstream d;
  d << in_complement << " of 222222 values = 5,8 (mod 9) absent from 2T; missing residues "
    << (residues ? "{5,8}" : "WRONG");
  return {in_complement == 222'222 && residues, d.str()};
}

Verdict lagrange() {
  const auto sq = to_bitmap(BasisSpec::polygonal(4), kMillion);
  const bool four = hfold(sq, 4).is_full();
  const auto three = hfold(sq, 3);
  std::uint64_t hit = 0;
  for (std::uint64_t n = 7; n <= kMillion; n += 8) hit += three.test(n);
  std::ostringstream d;
  d << "4S covers=" << four << ", 7 in 3S=" << three.test(7) << ", 7 (mod 8) values in 3S=" << hit;
  return {four && !three.test(7) && hit == 0, d.str()};
}

Verdict fermat_cauchy() {
  bool ok = true;
  std::ostringstream d;
  for (std::uint32_t k = 3; k <= 8; ++k) {
    const auto spec = BasisSpec::polygonal(k);
    const auto r = empirical_order(spec, 100'000, default_h_max(spec));
    bool good = r.empirical_order == k;
    for (const auto& level : r.levels) {
      if (level.covers) continue;
      if (oracle_hfold_membership(*level.smallest_gap, spec, level.h)) good = false;
      if (oracle_hfold_membership(*level.largest_gap, spec, level.h)) good = false;
    }
    if (k == 5) good = good && r.levels.at(3).smallest_gap == 9u;
    d << "k=" << k << "->" << (r.empirical_order ? std::to_string(*r.empirical_order) : "?") << (good ? " " : "! ");
    ok = ok && good;
  }
  d << "(witnesses oracle-checked; pentagonal h=4 gap 9)";
  return {ok, d.str()};
}

Verdict legendre() {
  const auto odd = verify_legendre(3, kMillion);
  const auto even = verify_legendre(4, kMillion);
  std::ostringstream d;
  d << "m=3 " << (odd.passed ? "pass" : "fail") << ", m=4 " << (even.passed ? "pass" : "fail");
  return {odd.passed && even.passed, d.str()};
}

Verdict stability_case(std::uint32_t k, std::uint64_t cutoff, std::uint32_t want_base, std::uint32_t want_aug,
                       bool want_stable) {
  const auto spec = BasisSpec::polygonal(k);
  const auto r = stability_experiment(spec, cutoff, kMillion, default_h_max(spec));
  auto show = [](const OrderReport& o) { return o.empirical_order ? std::to_string(*o.empirical_order) : "?"; };
  std::ostringstream d;
  d << "k=" << k << " C=" << cutoff << ": got (" << show(r.base) << "," << show(r.augmented) << ") "
    << (r.stable ? "stable" : "not stable") << ", expected (" << want_base << "," << want_aug << ") "
    << (want_stable ? "stable" : "not stable");
  const bool ok = r.base.empirical_order == want_base && r.augmented.empirical_order == want_aug &&
                  r.stable == want_stable;
  return {ok, d.str()};
}

Verdict stability() {
  const Verdict cases[] = {stability_case(3, 1000, 3, 3, true), stability_case(4, 1000, 4, 4, true),
                           stability_case(5, 756, 5, 4, false), stability_case(6, 1792, 6, 5, false)};
  Verdict v{true, ""};
  for (const auto& c : cases) {
    v.passed = v.passed && c.passed;
    v.detail += "\n        " + std::string(c.passed ? "ok   " : "FAIL ") + c.detail;
  }
  return v;
}

Verdict density() {
  const auto grid = geometric_grid(kMillion);
  const auto one = density_profile(BasisSpec::polygonal(3), 1, kMillion, grid);
  const auto two = density_profile(BasisSpec::polygonal(3), 2, kMillion, grid);
  const double at_top = one.samples.back().ratio;
  std::ostringstream d;
  d << "T(10^6)/10^6=" << at_top << " (<= 0.0015), top-decade decreasing=" << one.tail_strictly_decreasing
    << ", 2T top-decade max=" << two.tail_max_ratio << " (<= 0.78)";
  return {one.samples.back().n == kMillion && at_top <= 0.0015 && one.tail_strictly_decreasing &&
              two.tail_max_ratio <= 0.78,
          d.str()};
}

Verdict properties() {
  const std::pair<const char*, props::Outcome> suites[] = {
      {"algebra", props::sumset_algebra(101)},
      {"doubling", props::doubling_matches_naive(102)},
      {"truncation", props::truncation_exactness(103)},
      {"brute-force", props::engine_matches_brute_force(104)},
      {"oracle", props::engine_matches_oracle(105)},
      {"round-trip", props::serialization_round_trip(106)},
  };
  Verdict v{true, ""};
  for (const auto& [name, o] : suites) {
    v.passed = v.passed && o.ok();
    v.detail += std::string(name) + " " + std::to_string(o.cases - o.failures) + "/" + std::to_string(o.cases) +
                (o.ok() ? "" : " [" + o.note + "]") + "; ";
  }
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "Gauss: 3T covers [0,10^6], 2T first gap 5", 5, gauss},
      {"AC2", "Proposition: 5, 8 (mod 9) outside 2T", 5, proposition},
      {"AC3", "Lagrange: 4S covers, 3S misses 7 (mod 8)", 5, lagrange},
      {"AC4", "Fermat-Cauchy: order k for k = 3..8 at 10^5", 60, fermat_cauchy},
      {"AC5", "Legendre: m = 3, 4 at 10^6", 10, legendre},
      {"AC6", "Finite stability verdicts at 10^6", 60, stability},
      {"AC7", "Density evidence for T, h = 3", 10, density},
      {"AC8", "Property suites", 600, properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.time_limit_s;
    const bool ok = v.passed && in_time;
    failed += !ok;
    std::printf("[%s] %s %s (%.2fs, limit %.0fs%s)\n        %s\n", ok ? "PASS" : "FAIL", c.id, c.title, secs,
                c.time_limit_s, in_time ? "" : " EXCEEDED", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
