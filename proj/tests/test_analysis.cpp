#include <doctest.h>

#include <cmath>
#include <set>

#include "brute_force.hpp"
#include "sumsetlab/analysis.hpp"
#include "sumsetlab/error.hpp"
#include "sumsetlab/sumset.hpp"

using namespace sumsetlab;
using V = std::vector<std::uint64_t>;

TEST_CASE("geometric_grid") {
  const auto g = geometric_grid(1'000'000);
  CHECK(g.size() == 32);
  CHECK(g.front() == 1000);
  CHECK(g.back() == 1'000'000);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i - 1] < g[i]);
  // Small bounds clamp to 1 and deduplicate.
  const auto small = geometric_grid(10);
  CHECK(small.front() == 1);
  CHECK(small.back() == 10);
  CHECK(small.size() <= 10);
}

TEST_CASE("density_profile: triangular numbers, h = 1") {
  const auto grid = geometric_grid(1'000'000);
  const auto p = density_profile(BasisSpec::polygonal(3), 1, 1'000'000, grid);
  REQUIRE(p.samples.size() == grid.size());
  CHECK(p.samples.back().count == 1413);
  CHECK(p.samples.back().ratio == doctest::Approx(0.001413).epsilon(1e-12));
  for (const auto& s : p.samples) REQUIRE(s.count == brute::triangular_count(s.n));
  CHECK(p.tail_strictly_decreasing);
}

TEST_CASE("density_profile: triangular numbers, h = 2") {
  // Brute force at 10^4 first: at least the 5, 8 (mod 9) classes are absent.
  const auto hit = brute::hfold(brute::polygonals(3, 10'000), 2, 10'000);
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= 10'000; ++n) count += hit[n];
  CHECK(static_cast<double>(count) / 10'000 <= 7.0 / 9.0);
  const auto small = density_profile(BasisSpec::polygonal(3), 2, 10'000, V{10'000});
  CHECK(small.samples.back().count == count);

  const auto p = density_profile(BasisSpec::polygonal(3), 2, 1'000'000, geometric_grid(1'000'000));
  CHECK(p.tail_max_ratio <= 7.0 / 9.0);
  for (const auto& s : p.samples) CHECK(s.ratio <= 1.0);
}

TEST_CASE("density_profile: explicit set and errors") {
  const auto p = density_profile(BasisSpec::explicit_set({0, 1}), 1, 100, V{100});
  CHECK(p.samples.at(0).ratio == doctest::Approx(0.01));
  CHECK_THROWS_AS(density_profile(BasisSpec::polygonal(3), 1, 100, V{0}), Error);
  CHECK_THROWS_AS(density_profile(BasisSpec::polygonal(3), 1, 100, V{101}), Error);
  CHECK_THROWS_AS(density_profile(BasisSpec::polygonal(3), 1, 100, V{50, 50}), Error);
  CHECK_THROWS_AS(density_profile(BasisSpec::polygonal(3), 0, 100, V{50}), Error);
}

TEST_CASE("density_profile: coverage grows with h for 0-containing bases") {
  const auto grid = geometric_grid(200'000);
  for (std::uint32_t k : {3u, 4u, 5u}) {
    std::vector<CountingProfile> profiles;
    for (std::uint32_t h = 1; h <= 4; ++h) profiles.push_back(density_profile(BasisSpec::polygonal(k), h, 200'000, grid));
    for (std::size_t h = 1; h < profiles.size(); ++h)
      for (std::size_t i = 0; i < grid.size(); ++i) REQUIRE(profiles[h - 1].samples[i].ratio <= profiles[h].samples[i].ratio);
  }
}

TEST_CASE("modular_obstruction: listed values") {
  const auto tri2 = modular_obstruction(BasisSpec::polygonal(3), 2, 9);
  CHECK(tri2.missing == V{5, 8});
  CHECK(tri2.certificate == V{0, 1, 3, 6});

  const auto tri3 = modular_obstruction(BasisSpec::polygonal(3), 3, 9);
  CHECK(brute::residue_hfold({0, 1, 3, 6}, 3, 9).size() == 9);
  CHECK(tri3.missing.empty());

  const auto sq3 = modular_obstruction(BasisSpec::polygonal(4), 3, 8);
  CHECK(sq3.certificate == V{0, 1, 4});
  const auto reach = brute::residue_hfold({0, 1, 4}, 3, 8);
  CHECK(reach.count(7) == 0);
  CHECK(reach.size() == 7);
  CHECK(sq3.missing == V{7});

  CHECK_THROWS_AS(modular_obstruction(BasisSpec::polygonal(3), 2, 1), Error);
  CHECK_THROWS_AS(modular_obstruction(BasisSpec::polygonal(3), 0, 9), Error);
}

TEST_CASE("modular_obstruction: report invariants against residue brute force") {
  const std::vector<BasisSpec> specs = {BasisSpec::polygonal(3), BasisSpec::polygonal(4), BasisSpec::polygonal(7),
                                        BasisSpec::explicit_set({3, 10, 22}),
                                        BasisSpec::augmented(BasisSpec::polygonal(5), {2, 11})};
  for (const auto& spec : specs) {
    for (std::uint64_t m = 2; m <= 24; ++m) {
      for (std::uint32_t h = 1; h <= 4; ++h) {
        const auto r = modular_obstruction(spec, h, m);
        REQUIRE(r.attainable.size() + r.missing.size() == m);
        const auto reach = brute::residue_hfold(r.certificate, h, m);
        REQUIRE(V(reach.begin(), reach.end()) == r.attainable);
      }
    }
  }
}

TEST_CASE("residue sets: period divides 2m, matches direct evaluation") {
  for (std::uint32_t k = 3; k <= 12; ++k) {
    for (std::uint64_t m = 2; m <= 40; ++m) {
      std::vector<std::uint64_t> seq;
      for (std::uint64_t x = 0; x < 4 * m; ++x) seq.push_back(polygonal_value(k, x) % m);
      for (std::uint64_t x = 0; x < 2 * m; ++x) REQUIRE(seq[x] == seq[x + 2 * m]);
      std::set<std::uint64_t> direct(seq.begin(), seq.end());
      REQUIRE(residue_set(BasisSpec::polygonal(k), m) == V(direct.begin(), direct.end()));
    }
  }
}

TEST_CASE("cross_check_obstruction") {
  const auto tri2 = modular_obstruction(BasisSpec::polygonal(3), 2, 9);
  const auto folded = hfold(to_bitmap(BasisSpec::polygonal(3), 100'000), 2);
  CHECK(cross_check_obstruction(tri2, folded));

  ObstructionReport none;
  none.modulus = 5;
  CHECK(cross_check_obstruction(none, folded));

  ObstructionReport fake;
  fake.modulus = 7;
  fake.missing = {0};
  CHECK_FALSE(cross_check_obstruction(fake, IntervalBitmap::from_members(10, V{0})));
}

TEST_CASE("obstruction soundness at N = 10^5") {
  struct Case {
    std::uint32_t k;
    std::uint64_t m;
  };
  for (auto c : {Case{3, 9}, Case{4, 8}}) {
    const auto base = to_bitmap(BasisSpec::polygonal(c.k), 100'000);
    for (std::uint32_t h = 1; h <= 3; ++h) {
      const auto r = modular_obstruction(BasisSpec::polygonal(c.k), h, c.m);
      CAPTURE(c.k);
      CAPTURE(h);
      CHECK(cross_check_obstruction(r, hfold(base, h)));
    }
  }
}
