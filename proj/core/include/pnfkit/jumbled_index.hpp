#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "pnfkit/bitword.hpp"
#include "pnfkit/pnf.hpp"

namespace pnfkit {

/// Linear-size index for binary jumbled pattern matching.
///
/// For every length k the index keeps the largest and the smallest number of
/// 1s over all length-k factors. A factor with `ones` 1s and `zeros` 0s
/// exists iff fmin[k] <= ones <= fmax[k] for k = ones + zeros, because the
/// ones-counts of same-length factors form an integer interval.
///
/// The same bounds are also readable as prefix ranks of PNF1(w) and PNF0(w);
/// query_via_rank() answers through those two rank directories instead of
/// the profile arrays.
class JumbledIndex {
 public:
  /// Magic bytes opening the serialized form.
  static constexpr std::string_view kMagic = "PNFIX1";

  static JumbledIndex build(const BinaryWord& w, Guard guard = Guard::enforce);

  std::size_t length() const noexcept { return n_; }
  const OnesProfile& fmax() const noexcept { return fmax_; }
  const OnesProfile& fmin() const noexcept { return fmin_; }
  const PnfPair& pnf_pair() const noexcept { return pnfs_; }
  const RankDirectory& rank1_directory() const noexcept { return rank1_dir_; }
  const RankDirectory& rank0_directory() const noexcept { return rank0_dir_; }

  /// Profile lookup. Totals beyond the word length answer false.
  bool query(std::size_t ones, std::size_t zeros) const noexcept;
  /// Same contract as query(), answered with two O(1) rank lookups.
  bool query_via_rank(std::size_t ones, std::size_t zeros) const;

  void write(std::ostream& out) const;
  std::vector<std::uint8_t> serialize() const;
  /// Throws ParseError on a bad magic, truncation, or inconsistent payload.
  static JumbledIndex read(std::istream& in);
  static JumbledIndex deserialize(std::span<const std::uint8_t> bytes);

  friend bool operator==(const JumbledIndex& a, const JumbledIndex& b) {
    return a.n_ == b.n_ && a.fmax_ == b.fmax_ && a.fmin_ == b.fmin_ && a.pnfs_ == b.pnfs_;
  }

 private:
  JumbledIndex(std::size_t n, OnesProfile fmax, OnesProfile fmin, PnfPair pnfs);

  std::size_t n_;
  OnesProfile fmax_;
  OnesProfile fmin_;
  PnfPair pnfs_;
  RankDirectory rank1_dir_;
  RankDirectory rank0_dir_;
};

inline JumbledIndex build_index(const BinaryWord& w, Guard guard = Guard::enforce) {
  return JumbledIndex::build(w, guard);
}

}  // namespace pnfkit
