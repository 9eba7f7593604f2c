#include "sumsetlab/bitmap.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "sumsetlab/error.hpp"

namespace sumsetlab {

namespace {

constexpr std::array<char, 4> kMagic = {'S', 'S', 'L', '1'};

std::size_t words_for(std::uint64_t bound) {
  return static_cast<std::size_t>(bound / IntervalBitmap::kWordBits + 1);
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> bytes{};
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

bool get_u64(std::istream& in, std::uint64_t& v) {
  std::array<unsigned char, 8> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{bytes[i]} << (8 * i);
  return true;
}

}  // namespace

IntervalBitmap::IntervalBitmap(std::uint64_t bound) : bound_(bound) {
  require(bound <= kMaxBound, "bound " + std::to_string(bound) + " exceeds 2^32");
  words_.assign(words_for(bound), 0);
}

IntervalBitmap IntervalBitmap::from_members(std::uint64_t bound,
                                            std::span<const std::uint64_t> members) {
  IntervalBitmap out(bound);
  for (auto v : members)
    if (v <= bound) out.words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  return out;
}

IntervalBitmap IntervalBitmap::full(std::uint64_t bound) {
  IntervalBitmap out(bound);
  std::fill(out.words_.begin(), out.words_.end(), ~Word{0});
  out.trim();
  return out;
}

IntervalBitmap::Word IntervalBitmap::tail_mask() const noexcept {
  const unsigned used = static_cast<unsigned>(bound_ % kWordBits) + 1;
  return used == kWordBits ? ~Word{0} : (Word{1} << used) - 1;
}

void IntervalBitmap::set(std::uint64_t i) {
  require(i <= bound_, "bit " + std::to_string(i) + " above bound");
  words_[i / kWordBits] |= Word{1} << (i % kWordBits);
}

void IntervalBitmap::reset(std::uint64_t i) {
  require(i <= bound_, "bit " + std::to_string(i) + " above bound");
  words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
}

void IntervalBitmap::flip(std::uint64_t i) {
  require(i <= bound_, "bit " + std::to_string(i) + " above bound");
  words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

std::uint64_t IntervalBitmap::popcount() const noexcept {
  std::uint64_t total = 0;
  for (auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

bool IntervalBitmap::is_full() const noexcept {
  for (std::size_t j = 0; j + 1 < words_.size(); ++j)
    if (words_[j] != ~Word{0}) return false;
  return words_.back() == tail_mask();
}

bool IntervalBitmap::is_subset_of(const IntervalBitmap& other) const {
  require(bound_ == other.bound_, "subset test on bitmaps with different bounds");
  for (std::size_t j = 0; j < words_.size(); ++j)
    if (words_[j] & ~other.words_[j]) return false;
  return true;
}

std::vector<std::uint64_t> IntervalBitmap::members() const {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(popcount()));
  for (std::size_t j = 0; j < words_.size(); ++j) {
    for (Word w = words_[j]; w != 0; w &= w - 1)
      out.push_back(j * kWordBits + static_cast<unsigned>(std::countr_zero(w)));
  }
  return out;
}

std::optional<std::uint64_t> IntervalBitmap::first_clear() const noexcept {
  for (std::size_t j = 0; j < words_.size(); ++j) {
    Word inv = ~words_[j];
    if (j + 1 == words_.size()) inv &= tail_mask();
    if (inv) return j * kWordBits + static_cast<unsigned>(std::countr_zero(inv));
  }
  return std::nullopt;
}

std::optional<std::uint64_t> IntervalBitmap::last_clear() const noexcept {
  for (std::size_t j = words_.size(); j-- > 0;) {
    Word inv = ~words_[j];
    if (j + 1 == words_.size()) inv &= tail_mask();
    if (inv) return j * kWordBits + (kWordBits - 1 - static_cast<unsigned>(std::countl_zero(inv)));
  }
  return std::nullopt;
}

void IntervalBitmap::trim() noexcept { words_.back() &= tail_mask(); }

void IntervalBitmap::write(std::ostream& out) const {
  out.write(kMagic.data(), kMagic.size());
  put_u64(out, bound_);
  for (auto w : words_) put_u64(out, w);
  if (!out) fail(Errc::io, "failed writing bitmap");
}

IntervalBitmap IntervalBitmap::read(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic)
    fail(Errc::io, "not a bitmap file (bad magic)");
  std::uint64_t bound = 0;
  if (!get_u64(in, bound)) fail(Errc::io, "truncated bitmap header");
  if (bound > kMaxBound) fail(Errc::io, "bitmap bound " + std::to_string(bound) + " exceeds 2^32");
  IntervalBitmap out(bound);
  for (auto& w : out.words_)
    if (!get_u64(in, w)) fail(Errc::io, "truncated bitmap payload");
  if (in.peek() != std::char_traits<char>::eof()) fail(Errc::io, "trailing bytes after bitmap");
  if (out.words_.back() & ~out.tail_mask()) fail(Errc::io, "bitmap has bits set above its bound");
  return out;
}

void IntervalBitmap::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io, "cannot open " + path.string() + " for writing");
  write(out);
}

IntervalBitmap IntervalBitmap::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open " + path.string());
  return read(in);
}

}  // namespace sumsetlab
