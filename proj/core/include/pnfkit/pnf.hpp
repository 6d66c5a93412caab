#pragma once

#include <compare>
#include <cstddef>
#include <set>

#include "pnfkit/bitword.hpp"

namespace pnfkit {

/// The two prefix normal forms of a word.
struct PnfPair {
  BinaryWord pnf1;
  BinaryWord pnf0;
  std::size_t source_length = 0;

  friend bool operator==(const PnfPair&, const PnfPair&) = default;
};

/// Parikh vector of a word. Fields are named; never pass these positionally.
struct ParikhVector {
  std::size_t zeros = 0;
  std::size_t ones = 0;

  std::size_t total() const noexcept { return zeros + ones; }
  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;
};

ParikhVector parikh_vector(const BinaryWord& w) noexcept;

/// Set of Parikh vectors of all factors of a word, including the empty one.
class ParikhSet {
 public:
  ParikhSet() = default;
  explicit ParikhSet(std::set<ParikhVector> members) : members_(std::move(members)) {}

  const std::set<ParikhVector>& members() const noexcept { return members_; }
  bool contains(ParikhVector v) const { return members_.contains(v); }
  std::size_t size() const noexcept { return members_.size(); }

  friend bool operator==(const ParikhSet&, const ParikhSet&) = default;

 private:
  std::set<ParikhVector> members_;
};

/// The unique b-prefix-normal word with the same maximum-b profile as `profile`'s source.
BinaryWord normal_form_from_profile(const OnesProfile& profile);

BinaryWord pnf1(const BinaryWord& w, Guard guard = Guard::enforce);
BinaryWord pnf0(const BinaryWord& w, Guard guard = Guard::enforce);
BinaryWord pnf(const BinaryWord& w, Bit b, Guard guard = Guard::enforce);
PnfPair pnf_pair(const BinaryWord& w, Guard guard = Guard::enforce);

/// True iff v and w have identical maximum-b profiles. Words of different
/// length are never equivalent.
bool prefix_equivalent(const BinaryWord& v, const BinaryWord& w, Bit b);

inline constexpr std::size_t kParikhSetLengthLimit = 24;

/// Union over all suffixes of the Parikh vectors of their prefixes.
ParikhSet parikh_set(const BinaryWord& w, Guard guard = Guard::enforce);

/// Parikh-set equality decided through both normal forms.
bool parikh_set_equal(const BinaryWord& v, const BinaryWord& w);

}  // namespace pnfkit
