#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pnfkit/bitword.hpp"

namespace pnfkit {

inline constexpr std::size_t kEnumerationLengthLimit = 30;
inline constexpr std::size_t kClassScanLengthLimit = 20;
inline constexpr std::size_t kClassListingLengthLimit = 8;
/// Hard ceiling of the enumeration engine, which packs words into 64 bits.
inline constexpr std::size_t kEngineLengthLimit = 64;
inline constexpr std::size_t kDefaultSplitDepth = 12;
inline constexpr std::size_t kMaxSeriesDensity = 6;
inline constexpr std::size_t kMaxSeriesOrder = 200;

struct EnumOptions {
  /// Worker threads for subtree tasks; 0 and 1 both mean sequential.
  unsigned threads = 1;
  /// Depth at which the search tree is cut into independent tasks.
  std::size_t split_depth = kDefaultSplitDepth;
  Guard guard = Guard::enforce;
};

// --- Enumeration -----------------------------------------------------------

/// Visits every b-prefix-normal word of length n exactly once. The search
/// extends by b before the other symbol, so for b = 1 words arrive in
/// decreasing lexicographic order (1111, 1110, 1101, ...).
void for_each_prefix_normal(std::size_t n, Bit b, const std::function<void(const BinaryWord&)>& visit,
                            Guard guard = Guard::enforce);
std::vector<BinaryWord> enumerate_pn(std::size_t n, Bit b, Guard guard = Guard::enforce);

/// Per-length counts gathered in a single pass over the 1-prefix-normal words.
struct Census {
  std::size_t n = 0;
  std::uint64_t pnw = 0;
  /// Words w with w·1 not prefix normal.
  std::uint64_t ecrit = 0;
  /// by_density[d] counts the words with exactly d ones; size n + 1.
  std::vector<std::uint64_t> by_density;
};

Census census(std::size_t n, const EnumOptions& options = {});

std::uint64_t count_pnw(std::size_t n, const EnumOptions& options = {});
std::uint64_t count_pnw_density(std::size_t n, std::size_t d, const EnumOptions& options = {});
std::uint64_t count_ecrit(std::size_t n, const EnumOptions& options = {});

// --- Prefix-equivalence classes ---------------------------------------------

struct EquivalenceClass {
  BinaryWord normal_form;
  /// Members in decreasing lexicographic order.
  std::vector<BinaryWord> members;
};

struct ClassStatistics {
  std::size_t n = 0;
  std::uint64_t class_count = 0;
  std::uint64_t max_class_size = 0;
  /// Filled only on request and for n <= kClassListingLengthLimit, ordered by
  /// decreasing normal form.
  std::vector<EquivalenceClass> classes;
};

/// Groups all 2^n words of length n by their PNF1.
ClassStatistics class_statistics(std::size_t n, bool list_classes = false, Guard guard = Guard::enforce);

struct EnumReport {
  std::size_t n = 0;
  std::uint64_t pnw = 0;
  std::uint64_t ecrit = 0;
  std::vector<std::uint64_t> by_density;
  std::optional<std::uint64_t> class_count;
  std::optional<std::uint64_t> max_class_size;
};

/// Census plus, when `with_classes` is set, the class scan.
EnumReport enum_report(std::size_t n, bool with_classes, const EnumOptions& options = {});

// --- Generating functions ----------------------------------------------------

/// numerator(x) / denominator(x) as a power series with integer coefficients.
class RationalSeries {
 public:
  /// Throws ContractError when the denominator's constant term is zero.
  RationalSeries(std::vector<std::int64_t> numerator, std::vector<std::int64_t> denominator);

  const std::vector<std::int64_t>& numerator() const noexcept { return numerator_; }
  const std::vector<std::int64_t>& denominator() const noexcept { return denominator_; }

  /// Coefficients of x^0 .. x^order. Throws InvariantError if a coefficient
  /// is not an integer and OverflowError if it leaves the int64 range.
  std::vector<std::int64_t> expand(std::size_t order) const;

 private:
  std::vector<std::int64_t> numerator_;
  std::vector<std::int64_t> denominator_;
};

/// Generating function of pnw(n, d) in n, for d <= 6.
RationalSeries density_series(std::size_t d);
std::vector<std::int64_t> expand_gf(std::size_t d, std::size_t order);

// --- Extensions ---------------------------------------------------------------

/// Number of w' of length m with w·w' 1-prefix-normal, restricted to total
/// density `density` when given. Throws ContractError if w is not prefix normal.
std::uint64_t ext_count(const BinaryWord& w, std::size_t m, std::optional<std::size_t> density = std::nullopt,
                        Guard guard = Guard::enforce);

/// ext(10, n + d - 3, d) == pnw(n, d), for 1 <= d <= n and n + d >= 3.
bool ext_bijection_check(std::size_t n, std::size_t d, Guard guard = Guard::enforce);

/// Fibonacci numbers with F(1) = F(2) = 1.
std::uint64_t fibonacci(std::size_t n);

/// A prefix family with a closed-form extension count ext(prefix, n).
struct ExtFormulaCase {
  std::string family;
  BinaryWord prefix;
  std::uint64_t expected = 0;
};

/// Families whose closed form applies at length n (non-negative exponents,
/// parity). The 01-ending, 10^(n-2)1 and odd Fibonacci families start at n = 3.
std::vector<ExtFormulaCase> ext_formula_cases(std::size_t n);

enum class NormalSide { first, second };

struct SeparatingSuffix {
  BinaryWord suffix;
  /// Which of v·suffix (first) or w·suffix (second) is prefix normal.
  NormalSide normal_side = NormalSide::first;
};

/// A suffix u such that exactly one of v·u, w·u is 1-prefix-normal.
/// Requires distinct 1-prefix-normal v, w that both start with 1.
/// Throws ContractError on bad input and InvariantError if the
/// construction fails its own verification.
SeparatingSuffix separating_suffix(const BinaryWord& v, const BinaryWord& w);

// --- Growth data ---------------------------------------------------------------

struct BoundRow {
  std::size_t n = 0;
  std::uint64_t pnw = 0;
  /// 2^(n - lg n + 1)
  double upper = 0;
  /// 2^(n - 4 sqrt(n lg n))
  double lower = 0;
  bool upper_holds = false;
  bool lower_holds = false;
};

struct BoundReport {
  std::vector<BoundRow> rows;
  /// Smallest n0 such that the upper bound holds for every computed n >= n0.
  std::optional<std::size_t> upper_threshold;
};

BoundReport bound_check(std::size_t n_max, const EnumOptions& options = {});

struct RatioRow {
  std::size_t n = 0;
  std::uint64_t pnw = 0;
  std::uint64_t ecrit = 0;
  /// pnw(n) / pnw(n-1)
  double growth = 0;
  /// ecrit(n) / pnw(n)
  double critical_fraction = 0;
  /// critical_fraction * n / ln n; undefined at n = 1.
  std::optional<double> scaled_fraction;
};

/// Rows for n = 1..n_max.
std::vector<RatioRow> ratio_series(std::size_t n_max, const EnumOptions& options = {});

}  // namespace pnfkit
