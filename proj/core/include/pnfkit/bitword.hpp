#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pnfkit/errors.hpp"

namespace pnfkit {

/// A binary symbol.
enum class Bit : std::uint8_t { zero = 0, one = 1 };

constexpr Bit flip(Bit b) noexcept { return b == Bit::one ? Bit::zero : Bit::one; }
constexpr char to_char(Bit b) noexcept { return b == Bit::one ? '1' : '0'; }

/// Immutable bit-packed word over {0,1}.
///
/// Positions are 1-based throughout the public interface: position 1 is the
/// first symbol and position 0 stands for the empty prefix. Storage is
/// LSB-first in 64-bit blocks; bits past size() are always zero.
class BinaryWord {
 public:
  static constexpr std::size_t kBlockBits = 64;

  /// Incrementally assembles a word.
  class Builder {
   public:
    Builder() = default;
    explicit Builder(std::size_t expected_size) { blocks_.reserve(block_count(expected_size)); }

    Builder& push_back(Bit b);
    Builder& append(const BinaryWord& w);
    Builder& append(Bit b, std::size_t count);
    std::size_t size() const noexcept { return size_; }
    BinaryWord build() &&;

   private:
    friend class BinaryWord;
    std::vector<std::uint64_t> blocks_;
    std::size_t size_ = 0;
  };

  BinaryWord() = default;

  /// The word b^count.
  static BinaryWord repeat(Bit b, std::size_t count);

  /// Word of `length` symbols read from the low bits of `bits`; bit i-1 is
  /// position i. Requires length <= 64.
  static BinaryWord from_uint(std::uint64_t bits, std::size_t length);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Symbol at 1-based position `pos`. Throws RangeError outside 1..size().
  Bit at(std::size_t pos) const;

  /// Unchecked 1-based access.
  Bit operator[](std::size_t pos) const noexcept {
    const std::size_t i = pos - 1;
    return static_cast<Bit>((blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1U);
  }

  std::size_t ones() const noexcept;
  std::size_t zeros() const noexcept { return size_ - ones(); }
  std::size_t count(Bit b) const noexcept { return b == Bit::one ? ones() : zeros(); }

  /// Occurrences of `b` among the first `i` symbols (0 <= i <= size()).
  std::size_t rank(Bit b, std::size_t i) const;

  /// Position of the i-th occurrence of `b` (i >= 1). Throws NotFoundError
  /// when fewer than i occurrences exist.
  std::size_t select(Bit b, std::size_t i) const;

  BinaryWord prefix(std::size_t length) const;
  BinaryWord suffix(std::size_t length) const;
  /// Factor of `length` symbols starting at 1-based position `start`.
  BinaryWord factor(std::size_t start, std::size_t length) const;

  BinaryWord appended(Bit b) const;

  std::string to_string() const;

  std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }

  friend BinaryWord operator+(const BinaryWord& a, const BinaryWord& b);

  friend bool operator==(const BinaryWord& a, const BinaryWord& b) noexcept {
    return a.size_ == b.size_ && a.blocks_ == b.blocks_;
  }
  /// Lexicographic order with 0 < 1; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept;

 private:
  static std::size_t block_count(std::size_t bits) noexcept {
    return (bits + kBlockBits - 1) / kBlockBits;
  }

  std::vector<std::uint64_t> blocks_;
  std::size_t size_ = 0;
};

/// Parses an ASCII string of '0'/'1'. Throws ParseError naming the 1-based
/// position of the first other character.
BinaryWord parse_word(std::string_view text);

std::size_t rank(const BinaryWord& w, Bit b, std::size_t i);
std::size_t select(const BinaryWord& w, Bit b, std::size_t i);

BinaryWord complement(const BinaryWord& w);
BinaryWord reverse(const BinaryWord& w);
/// w repeated `times` times.
BinaryWord power(const BinaryWord& w, std::size_t times);

/// Constant-time rank directory with one cumulative count per 64-bit block.
class RankDirectory {
 public:
  static constexpr std::size_t kBlockSize = BinaryWord::kBlockBits;

  RankDirectory() : block_counts_{0} {}
  explicit RankDirectory(BinaryWord word);

  const BinaryWord& word() const noexcept { return word_; }
  std::size_t block_size() const noexcept { return kBlockSize; }
  /// block_counts()[b] is the number of 1s before block b; the last entry is |w|_1.
  std::span<const std::uint64_t> block_counts() const noexcept { return block_counts_; }

  std::size_t rank1(std::size_t i) const;
  std::size_t rank(Bit b, std::size_t i) const {
    return b == Bit::one ? rank1(i) : i - rank1(i);
  }
  std::size_t select(Bit b, std::size_t i) const;

 private:
  BinaryWord word_;
  std::vector<std::uint64_t> block_counts_;
};

enum class ProfileKind { max_ones, max_zeros, min_ones };

/// Values F[0..n] of a maximum-ones, maximum-zeros, or minimum-ones function.
class OnesProfile {
 public:
  OnesProfile(ProfileKind kind, std::vector<std::uint32_t> values)
      : kind_(kind), values_(std::move(values)) {}

  ProfileKind kind() const noexcept { return kind_; }
  std::span<const std::uint32_t> values() const noexcept { return values_; }
  /// Word length n; values() has n + 1 entries.
  std::size_t length() const noexcept { return values_.size() - 1; }
  std::uint32_t operator[](std::size_t k) const noexcept { return values_[k]; }

  friend bool operator==(const OnesProfile&, const OnesProfile&) = default;

 private:
  ProfileKind kind_;
  std::vector<std::uint32_t> values_;
};

/// Largest word length accepted by the quadratic profile computation.
inline constexpr std::size_t kProfileLengthLimit = 100'000;

OnesProfile max_ones_profile(const BinaryWord& w, Guard guard = Guard::enforce);
OnesProfile max_zeros_profile(const BinaryWord& w, Guard guard = Guard::enforce);
OnesProfile min_ones_profile(const BinaryWord& w, Guard guard = Guard::enforce);
/// max_ones_profile for Bit::one, max_zeros_profile for Bit::zero.
OnesProfile max_profile(const BinaryWord& w, Bit b, Guard guard = Guard::enforce);

}  // namespace pnfkit

template <>
struct std::hash<pnfkit::BinaryWord> {
  std::size_t operator()(const pnfkit::BinaryWord& w) const noexcept;
};
