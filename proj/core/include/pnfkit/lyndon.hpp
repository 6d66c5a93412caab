#pragma once

#include <cstddef>
#include <cstdint>

#include "pnfkit/bitword.hpp"

namespace pnfkit {

// Lexicographic predicates under the order 0 < 1.

/// Non-empty and strictly smaller than each proper non-empty suffix.
bool is_lyndon(const BinaryWord& w);
/// A power of a Lyndon word. The empty word counts as a necklace.
bool is_necklace(const BinaryWord& w);
/// A prefix of some necklace. The empty word is a pre-necklace.
bool is_prenecklace(const BinaryWord& w);

/// is_lyndon(w · 1^{|w|}) for a 0-prefix-normal w containing a 0.
/// Throws ContractError when w does not meet that precondition.
bool lyndon_extension_check(const BinaryWord& w);

inline constexpr std::size_t kPrenecklaceLengthLimit = 24;

std::uint64_t count_prenecklaces(std::size_t n, Guard guard = Guard::enforce);

}  // namespace pnfkit
