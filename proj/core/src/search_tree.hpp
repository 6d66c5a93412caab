#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "pnfkit/bitword.hpp"

namespace pnfkit::detail {

/// A 1-prefix-normal word of length <= 64 held as a bit mask plus its
/// prefix ones-counts, so extension tests need no allocation.
class SearchNode {
 public:
  SearchNode() = default;

  /// Requires |w| <= 64. Does not check normality.
  static SearchNode from_word(const BinaryWord& w) {
    SearchNode node;
    for (std::size_t p = 1; p <= w.size(); ++p) node.push(w[p]);
    return node;
  }

  std::size_t length() const noexcept { return length_; }
  std::size_t ones() const noexcept { return prefix_[length_]; }
  std::uint64_t bits() const noexcept { return bits_; }

  void push(Bit b) noexcept {
    const unsigned one = b == Bit::one ? 1U : 0U;
    bits_ |= static_cast<std::uint64_t>(one) << length_;
    prefix_[length_ + 1] = static_cast<std::uint8_t>(prefix_[length_] + one);
    ++length_;
  }

  void pop() noexcept {
    --length_;
    bits_ &= ~(std::uint64_t{1} << length_);
  }

  /// Whether appending a 1 keeps the word prefix normal: every suffix of
  /// length k must hold fewer 1s than the prefix of length k + 1.
  bool can_append_one() const noexcept {
    const unsigned total = prefix_[length_];
    for (std::size_t k = 0; k < length_; ++k) {
      if (total - prefix_[length_ - k] >= prefix_[k + 1]) return false;
    }
    return true;
  }

  BinaryWord word() const { return BinaryWord::from_uint(bits_, length_); }

 private:
  std::uint64_t bits_ = 0;
  std::size_t length_ = 0;
  std::array<std::uint8_t, 66> prefix_{};
};

/// Depth-first walk of the prefix normal words below `node` down to length
/// `target`. Visitor supplies:
///   bool allow(const SearchNode&, Bit next)  -- extra pruning
///   void leaf(const SearchNode&)             -- called at length `target`
/// The 1-branch is explored first.
template <class Visitor>
void walk(SearchNode& node, std::size_t target, Visitor& visitor) {
  if (node.length() == target) {
    visitor.leaf(node);
    return;
  }
  if (visitor.allow(node, Bit::one) && node.can_append_one()) {
    node.push(Bit::one);
    walk(node, target, visitor);
    node.pop();
  }
  if (visitor.allow(node, Bit::zero)) {
    node.push(Bit::zero);
    walk(node, target, visitor);
    node.pop();
  }
}

}  // namespace pnfkit::detail
