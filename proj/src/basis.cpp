#include "sumsetlab/basis.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <numeric>

#include "sumsetlab/error.hpp"

namespace sumsetlab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_strictly_increasing(const std::vector<std::uint64_t>& values, const char* what) {
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] >= values[i])
      fail(Errc::invalid_parameter, std::string(what) + " must be strictly increasing (at " +
                                        std::to_string(values[i]) + ")");
  }
}

std::string join(const std::vector<std::uint64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

BasisSpec BasisSpec::polygonal(std::uint32_t k) {
  require(k >= 3, "polygonal order k must be >= 3, got " + std::to_string(k));
  return BasisSpec(Polygonal{k});
}

BasisSpec BasisSpec::explicit_set(std::vector<std::uint64_t> elements) {
  require_strictly_increasing(elements, "explicit set");
  return BasisSpec(Explicit{std::move(elements)});
}

BasisSpec BasisSpec::augmented(BasisSpec base, std::vector<std::uint64_t> finite_set) {
  require_strictly_increasing(finite_set, "augmentation set");
  return BasisSpec(
      Augmented{std::make_shared<const BasisSpec>(std::move(base)), std::move(finite_set)});
}

BasisSpec BasisSpec::augmented_prefix(BasisSpec base, std::uint64_t cutoff) {
  require(cutoff <= kMaxBound + 1, "augmentation cutoff too large");
  std::vector<std::uint64_t> prefix(static_cast<std::size_t>(cutoff));
  std::iota(prefix.begin(), prefix.end(), std::uint64_t{0});
  return augmented(std::move(base), std::move(prefix));
}

bool BasisSpec::contains_zero() const {
  return std::visit(overloaded{
                        [](const Polygonal&) { return true; },
                        [](const Explicit& e) { return !e.elements.empty() && e.elements[0] == 0; },
                        [](const Augmented& a) {
                          return a.base->contains_zero() ||
                                 (!a.finite_set.empty() && a.finite_set[0] == 0);
                        },
                    },
                    kind_);
}

std::string BasisSpec::to_string() const {
  return std::visit(
      overloaded{
          [](const Polygonal& p) { return "poly:" + std::to_string(p.k); },
          [](const Explicit& e) { return "set:" + join(e.elements); },
          [](const Augmented& a) { return "aug:" + a.base->to_string() + "+set:" + join(a.finite_set); },
      },
      kind_);
}

bool operator==(const BasisSpec& a, const BasisSpec& b) {
  if (a.kind_.index() != b.kind_.index()) return false;
  return std::visit(
      overloaded{
          [&](const BasisSpec::Polygonal& p) { return p.k == std::get<BasisSpec::Polygonal>(b.kind_).k; },
          [&](const BasisSpec::Explicit& e) {
            return e.elements == std::get<BasisSpec::Explicit>(b.kind_).elements;
          },
          [&](const BasisSpec::Augmented& x) {
            const auto& y = std::get<BasisSpec::Augmented>(b.kind_);
            return *x.base == *y.base && x.finite_set == y.finite_set;
          },
      },
      a.kind_);
}

std::uint64_t polygonal_value(std::uint32_t k, std::uint64_t x) {
  require(k >= 3, "polygonal order k must be >= 3, got " + std::to_string(k));
  using u128 = unsigned __int128;
  const u128 xx = u128{x} * x;
  u128 lead = 0;
  if (__builtin_mul_overflow(xx, u128{k - 2}, &lead))
    fail(Errc::overflow, "polygonal_value(" + std::to_string(k) + ", " + std::to_string(x) + ") overflows");
  // (k-4) is -1 for triangular numbers.
  const u128 numerator = k == 3 ? lead + x : lead - u128{k - 4} * x;
  const u128 value = numerator / 2;
  if (value > u128{UINT64_MAX})
    fail(Errc::overflow, "polygonal_value(" + std::to_string(k) + ", " + std::to_string(x) + ") overflows");
  return static_cast<std::uint64_t>(value);
}

std::vector<std::uint64_t> enumerate(const BasisSpec& spec, std::uint64_t bound) {
  return std::visit(
      overloaded{
          [bound](const BasisSpec::Polygonal& p) {
            std::vector<std::uint64_t> out;
            for (std::uint64_t x = 0;; ++x) {
              std::uint64_t v = 0;
              try {
                v = polygonal_value(p.k, x);
              } catch (const Error&) {
                break;
              }
              if (v > bound) break;
              out.push_back(v);
            }
            return out;
          },
          [bound](const BasisSpec::Explicit& e) {
            auto end = std::upper_bound(e.elements.begin(), e.elements.end(), bound);
            return std::vector<std::uint64_t>(e.elements.begin(), end);
          },
          [bound](const BasisSpec::Augmented& a) {
            const auto base = enumerate(*a.base, bound);
            auto end = std::upper_bound(a.finite_set.begin(), a.finite_set.end(), bound);
            std::vector<std::uint64_t> out;
            out.reserve(base.size() + static_cast<std::size_t>(end - a.finite_set.begin()));
            std::set_union(base.begin(), base.end(), a.finite_set.begin(), end, std::back_inserter(out));
            return out;
          },
      },
      spec.kind());
}

IntervalBitmap to_bitmap(const BasisSpec& spec, std::uint64_t bound) {
  const auto members = enumerate(spec, bound);
  return IntervalBitmap::from_members(bound, members);
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

std::uint64_t parse_uint(std::string_view token, std::string_view context) {
  std::uint64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last)
    fail(Errc::parse, "malformed integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  return value;
}

std::vector<std::uint64_t> parse_list(std::string_view body, std::string_view context) {
  std::vector<std::uint64_t> out;
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = body.find(',', start);
    out.push_back(parse_uint(body.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

BasisSpec parse_leaf(std::string_view text) {
  if (text.starts_with("poly:")) {
    const auto k = parse_uint(text.substr(5), text);
    if (k < 3 || k > UINT32_MAX)
      fail(Errc::invalid_parameter, "polygonal order must be >= 3 in '" + std::string(text) + "'");
    return BasisSpec::polygonal(static_cast<std::uint32_t>(k));
  }
  if (text.starts_with("set:")) {
    auto values = parse_list(text.substr(4), text);
    for (std::size_t i = 1; i < values.size(); ++i) {
      if (values[i - 1] >= values[i])
        fail(Errc::invalid_parameter, "set elements must be strictly increasing at '" +
                                          std::to_string(values[i]) + "' in '" + std::string(text) + "'");
    }
    return BasisSpec::explicit_set(std::move(values));
  }
  fail(Errc::parse, "unknown basis token '" + std::string(text) + "' (expected poly:, set: or aug:)");
}

}  // namespace

BasisSpec parse_basis(std::string_view text) {
  if (text.starts_with("aug:")) {
    const auto body = text.substr(4);
    const auto plus = body.rfind("+set:");
    if (plus == std::string_view::npos)
      fail(Errc::parse, "augmented basis '" + std::string(text) + "' lacks a '+set:' part");
    const auto inner = body.substr(0, plus);
    if (inner.starts_with("aug:"))
      fail(Errc::parse, "nested augmentation '" + std::string(inner) + "' is not supported");
    BasisSpec base = parse_leaf(inner);
    const BasisSpec extra = parse_leaf(body.substr(plus + 1));
    return BasisSpec::augmented(std::move(base), std::get<BasisSpec::Explicit>(extra.kind()).elements);
  }
  return parse_leaf(text);
}

}  // namespace sumsetlab
