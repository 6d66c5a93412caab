#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pnfkit/bitword.hpp"

namespace pnfkit {

/// A word 1 0^{r_1 - 1} 1 0^{r_2 - 1} ... 1 0^{r_d - 1} described by its gaps r_i >= 1.
class GapDecomposition {
 public:
  /// Throws ContractError unless every gap is positive.
  explicit GapDecomposition(std::vector<std::size_t> gaps);

  std::size_t density() const noexcept { return gaps_.size(); }
  const std::vector<std::size_t>& gaps() const noexcept { return gaps_; }
  /// Sum of the gaps, which is the length of the described word.
  std::size_t length() const noexcept;
  BinaryWord reconstruct() const;

 private:
  std::vector<std::size_t> gaps_;
};

/// Throws ContractError unless w starts with 1.
GapDecomposition decompose_gaps(const BinaryWord& w);

/// The definition: the b-prefix count equals the maximum-b profile at every length.
bool is_prefix_normal(const BinaryWord& w, Bit b = Bit::one);

// Alternative deciders for 1-prefix normality.
bool check_subadditive_char(const BinaryWord& w);
bool check_factor_pos_char(const BinaryWord& w);
bool check_pos_superadditive_char(const BinaryWord& w);
/// Gap inequalities for 1-initial words; 0-initial words are normal iff they are 0^n.
bool check_gap_inequalities(const BinaryWord& w);

/// Whether w·b is b-prefix-normal, for a b-prefix-normal w: every suffix of
/// length k must hold fewer b's than the prefix of length k + 1.
/// Throws ContractError on a non-normal w when contract checks are compiled in.
bool can_append(const BinaryWord& w, Bit b);
bool can_append_one(const BinaryWord& w);

enum class NormalityMethod { definition, subadditive, factor_pos, pos_superadditive, gap_inequalities };

inline constexpr std::array<NormalityMethod, 5> kAllNormalityMethods = {
    NormalityMethod::definition, NormalityMethod::subadditive, NormalityMethod::factor_pos,
    NormalityMethod::pos_superadditive, NormalityMethod::gap_inequalities};

std::string_view method_name(NormalityMethod m) noexcept;
std::optional<NormalityMethod> parse_method(std::string_view name) noexcept;

/// b-prefix normality by the chosen route; b = 0 goes through the complement.
bool decide_prefix_normal(const BinaryWord& w, Bit b, NormalityMethod method);

}  // namespace pnfkit
