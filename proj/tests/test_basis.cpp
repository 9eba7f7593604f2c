#include <doctest.h>

#include <algorithm>
#include <iterator>
#include <random>

#include "brute_force.hpp"
#include "sumsetlab/basis.hpp"
#include "sumsetlab/error.hpp"

using namespace sumsetlab;
using V = std::vector<std::uint64_t>;

TEST_CASE("polygonal_value: listed values") {
  CHECK(polygonal_value(3, 4) == 10);
  CHECK(polygonal_value(4, 0) == 0);
  CHECK(polygonal_value(5, 3) == brute::polygonals(5, 12).at(3));
  CHECK(polygonal_value(5, 3) == 12);
}

TEST_CASE("polygonal_value: errors") {
  CHECK_THROWS_AS(polygonal_value(2, 5), Error);
  try {
    polygonal_value(3, UINT64_MAX);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::overflow);
  }
  // Largest triangular index whose value still fits.
  CHECK_NOTHROW(polygonal_value(3, 6'074'000'999ull));
}

TEST_CASE("polygonal_value: sequence shape") {
  for (std::uint32_t k = 3; k <= 40; ++k) {
    CHECK(polygonal_value(k, 0) == 0);
    CHECK(polygonal_value(k, 1) == 1);
    for (std::uint64_t x = 0; x < 500; ++x) {
      const auto a = polygonal_value(k, x), b = polygonal_value(k, x + 1), c = polygonal_value(k, x + 2);
      REQUIRE(c - 2 * b + a == k - 2);
    }
  }
  for (std::uint64_t x = 0; x <= 10'000; ++x) {
    REQUIRE(polygonal_value(3, x) == x * (x + 1) / 2);
    REQUIRE(polygonal_value(4, x) == x * x);
  }
}

TEST_CASE("enumerate: listed values") {
  CHECK(enumerate(BasisSpec::polygonal(3), 12) == V{0, 1, 3, 6, 10});
  CHECK(enumerate(BasisSpec::explicit_set({2, 7}), 1).empty());
  CHECK(enumerate(BasisSpec::augmented(BasisSpec::polygonal(5), {2, 3}), 6) == V{0, 1, 2, 3, 5});
}

TEST_CASE("enumerate: matches gnomon construction") {
  for (unsigned k = 3; k <= 12; ++k) CHECK(enumerate(BasisSpec::polygonal(k), 50'000) == brute::polygonals(k, 50'000));
}

TEST_CASE("enumerate: augmented is the sorted union") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    V finite;
    for (std::uint64_t v = 0; v < 300; ++v)
      if (rng() % 7 == 0) finite.push_back(v);
    const auto k = static_cast<std::uint32_t>(3 + rng() % 6);
    const std::uint64_t bound = rng() % 400;
    const auto got = enumerate(BasisSpec::augmented(BasisSpec::polygonal(k), finite), bound);

    V expected = brute::polygonals(k, bound);
    for (auto f : finite)
      if (f <= bound) expected.push_back(f);
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    REQUIRE(got == expected);
    REQUIRE(std::adjacent_find(got.begin(), got.end(), std::greater_equal<>()) == got.end());
  }
}

TEST_CASE("to_bitmap") {
  CHECK(to_bitmap(BasisSpec::polygonal(3), 6).members() == V{0, 1, 3, 6});
  CHECK(to_bitmap(BasisSpec::explicit_set({}), 10).popcount() == 0);
  CHECK(to_bitmap(BasisSpec::polygonal(4), 20).members() == V{0, 1, 4, 9, 16});
}

TEST_CASE("BasisSpec invariants") {
  CHECK_THROWS_AS(BasisSpec::polygonal(2), Error);
  CHECK_THROWS_AS(BasisSpec::explicit_set({3, 1}), Error);
  CHECK_THROWS_AS(BasisSpec::explicit_set({1, 1}), Error);
  CHECK_THROWS_AS(BasisSpec::augmented(BasisSpec::polygonal(3), {5, 5}), Error);
  CHECK(BasisSpec::polygonal(7).contains_zero());
  CHECK_FALSE(BasisSpec::explicit_set({1, 2}).contains_zero());
  CHECK(BasisSpec::augmented(BasisSpec::explicit_set({1, 2}), {0}).contains_zero());
}

TEST_CASE("parse_basis: accepted forms round-trip") {
  for (const char* text : {"poly:3", "poly:12", "set:", "set:0,4,9", "aug:poly:5+set:0,1,2", "aug:set:1,2+set:7"}) {
    CAPTURE(text);
    CHECK(parse_basis(text).to_string() == text);
  }
  CHECK(parse_basis("aug:poly:5+set:2,3") == BasisSpec::augmented(BasisSpec::polygonal(5), {2, 3}));
}

TEST_CASE("parse_basis: diagnostics name the offending token") {
  auto error_of = [](const char* text) -> Error {
    try {
      parse_basis(text);
    } catch (const Error& e) {
      return e;
    }
    FAIL("no error for " << text);
    return Error(Errc::io, "");
  };
  auto e = error_of("poly:2");
  CHECK(e.code() == Errc::invalid_parameter);
  CHECK(std::string(e.what()).find("poly:2") != std::string::npos);

  e = error_of("poly:x");
  CHECK(e.code() == Errc::parse);
  CHECK(std::string(e.what()).find("'x'") != std::string::npos);

  e = error_of("set:3,1");
  CHECK(e.code() == Errc::invalid_parameter);
  CHECK(std::string(e.what()).find("'1'") != std::string::npos);

  CHECK(error_of("tri:3").code() == Errc::parse);
  CHECK(error_of("set:1,,2").code() == Errc::parse);
  CHECK(error_of("aug:poly:3").code() == Errc::parse);
  CHECK(error_of("aug:aug:poly:3+set:1+set:2").code() == Errc::parse);
  CHECK(error_of("poly:-4").code() == Errc::parse);
}
