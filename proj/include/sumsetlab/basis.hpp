#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sumsetlab/bitmap.hpp"

namespace sumsetlab {

/// Symbolic description of a set of nonnegative integers.
///
/// Three shapes are supported: the k-gonal numbers (indexed from 0, so 0 is
/// always a member), an explicit finite set, and the union of a basis with a
/// finite set. Instances are immutable and validated on construction.
class BasisSpec {
 public:
  struct Polygonal {
    std::uint32_t k;
  };
  struct Explicit {
    std::vector<std::uint64_t> elements;
  };
  struct Augmented {
    std::shared_ptr<const BasisSpec> base;
    std::vector<std::uint64_t> finite_set;
  };
  using Kind = std::variant<Polygonal, Explicit, Augmented>;

  static BasisSpec polygonal(std::uint32_t k);
  static BasisSpec explicit_set(std::vector<std::uint64_t> elements);
  static BasisSpec augmented(BasisSpec base, std::vector<std::uint64_t> finite_set);
  /// `base ∪ [0, cutoff)`.
  static BasisSpec augmented_prefix(BasisSpec base, std::uint64_t cutoff);

  const Kind& kind() const noexcept { return kind_; }

  bool contains_zero() const;
  /// Canonical text form (`poly:k`, `set:a,b`, `aug:<spec>+set:a,b`).
  std::string to_string() const;

  friend bool operator==(const BasisSpec& a, const BasisSpec& b);

 private:
  explicit BasisSpec(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
};

/// The x-th k-gonal number, ((k-2)x^2 - (k-4)x) / 2. Throws on k < 3 or when
/// the value does not fit in 64 bits.
std::uint64_t polygonal_value(std::uint32_t k, std::uint64_t x);

/// Elements of `spec` in [0, bound], strictly increasing.
std::vector<std::uint64_t> enumerate(const BasisSpec& spec, std::uint64_t bound);

IntervalBitmap to_bitmap(const BasisSpec& spec, std::uint64_t bound);

/// Parses the CLI basis grammar:
///
///   spec     := poly | set | aug
///   poly     := "poly:" uint              (k >= 3)
///   set      := "set:" [uint ("," uint)*] (strictly increasing)
///   aug      := "aug:" (poly | set) "+" set
///
/// Errors are `Errc::parse` (malformed text) or `Errc::invalid_parameter`
/// (well-formed but violating an invariant); both name the offending token.
BasisSpec parse_basis(std::string_view text);

}  // namespace sumsetlab
