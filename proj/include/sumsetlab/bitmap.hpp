#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace sumsetlab {

/// Largest supported inclusive bound.
inline constexpr std::uint64_t kMaxBound = std::uint64_t{1} << 32;

/// Membership bitmap of a set intersected with [0, bound].
///
/// Bit i of word j stands for the integer 64j + i. Bits above `bound` are
/// always zero, so `popcount()` is the cardinality of the represented set.
class IntervalBitmap {
 public:
  using Word = std::uint64_t;
  static constexpr unsigned kWordBits = 64;

  /// Empty set over [0, bound].
  explicit IntervalBitmap(std::uint64_t bound);

  static IntervalBitmap from_members(std::uint64_t bound, std::span<const std::uint64_t> members);
  static IntervalBitmap full(std::uint64_t bound);

  std::uint64_t bound() const noexcept { return bound_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  /// Mask of the valid bits in the last word.
  Word tail_mask() const noexcept;

  bool test(std::uint64_t i) const noexcept {
    return i <= bound_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1u);
  }
  void set(std::uint64_t i);
  void reset(std::uint64_t i);
  void flip(std::uint64_t i);

  std::uint64_t popcount() const noexcept;
  bool is_full() const noexcept;
  bool is_subset_of(const IntervalBitmap& other) const;

  std::vector<std::uint64_t> members() const;
  /// Smallest / largest integer in [0, bound] whose bit is clear.
  std::optional<std::uint64_t> first_clear() const noexcept;
  std::optional<std::uint64_t> last_clear() const noexcept;

  /// Clears any bits above `bound`; used after word-level writes.
  void trim() noexcept;

  /// Binary form: "SSL1", bound as u64 LE, then ceil((bound+1)/64) u64 LE words.
  void write(std::ostream& out) const;
  static IntervalBitmap read(std::istream& in);
  void save(const std::filesystem::path& path) const;
  static IntervalBitmap load(const std::filesystem::path& path);

  friend bool operator==(const IntervalBitmap& a, const IntervalBitmap& b) = default;

 private:
  std::uint64_t bound_;
  std::vector<Word> words_;
};

}  // namespace sumsetlab
