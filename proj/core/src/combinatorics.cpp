#include "pnfkit/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <thread>
#include <unordered_map>

#include "pnfkit/normality.hpp"
#include "search_tree.hpp"

namespace pnfkit {
namespace {

using detail::SearchNode;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count exceeds 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("series coefficient exceeds int64");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("series coefficient exceeds int64");
  return r;
}

void check_enumeration_length(std::size_t n, Guard guard) {
  detail::check_scale(guard, n, kEnumerationLengthLimit, "enumeration length");
  detail::check_scale(Guard::enforce, n, kEngineLengthLimit, "enumeration length (hard engine limit)");
}

struct NoPruning {
  bool allow(const SearchNode&, Bit) const noexcept { return true; }
};

struct CensusVisitor : NoPruning {
  explicit CensusVisitor(std::size_t n) : by_density(n + 1, 0) {}

  void leaf(const SearchNode& node) {
    ++pnw;
    ++by_density[node.ones()];
    if (!node.can_append_one()) ++ecrit;
  }

  std::uint64_t pnw = 0;
  std::uint64_t ecrit = 0;
  std::vector<std::uint64_t> by_density;
};

// Collects the nodes at the split depth, pruning exactly as `Inner` would.
template <class Inner>
struct FrontierVisitor {
  const Inner& inner;
  std::vector<SearchNode> nodes;

  bool allow(const SearchNode& node, Bit next) const { return inner.allow(node, next); }
  void leaf(const SearchNode& node) { nodes.push_back(node); }
};

struct DensityVisitor {
  std::size_t target;
  std::size_t density;
  std::uint64_t count = 0;

  bool allow(const SearchNode& node, Bit next) const noexcept {
    if (next == Bit::one) return node.ones() + 1 <= density;
    // Appending 0 must leave room for the missing ones.
    return node.ones() + (target - node.length() - 1) >= density;
  }
  void leaf(const SearchNode&) { ++count; }
};

// Runs `make_visitor()` visitors over the subtrees hanging below depth
// `split_depth` and folds them in frontier order, so the result does not
// depend on the number of threads.
template <class MakeVisitor, class Fold>
void forked_walk(SearchNode root, std::size_t target, const EnumOptions& options, MakeVisitor make_visitor,
                 Fold fold) {
  const std::size_t split = std::min(target, std::max(root.length(), options.split_depth));
  using Visitor = decltype(make_visitor());
  const Visitor pruning = make_visitor();
  FrontierVisitor<Visitor> frontier{.inner = pruning, .nodes = {}};
  walk(root, split, frontier);

  std::vector<std::optional<Visitor>> results(frontier.nodes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < frontier.nodes.size(); i = next++) {
      Visitor v = make_visitor();
      SearchNode node = frontier.nodes[i];
      walk(node, target, v);
      results[i].emplace(std::move(v));
    }
  };

  const unsigned threads = std::max(1U, options.threads);
  if (threads == 1 || frontier.nodes.size() <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    const auto count = static_cast<unsigned>(std::min<std::size_t>(threads, frontier.nodes.size()));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  for (auto& r : results) fold(*r);
}

// Normal form of the n-bit word x (position i at bit i-1) as a bit mask.
std::uint64_t normal_form_bits(std::uint64_t x, std::size_t n) {
  std::uint64_t form = 0;
  unsigned previous = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::uint64_t window = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    unsigned best = 0;
    for (std::size_t i = 0; i + k <= n; ++i) best = std::max(best, static_cast<unsigned>(std::popcount((x >> i) & window)));
    if (best != previous) form |= std::uint64_t{1} << (k - 1);
    previous = best;
  }
  return form;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// 1 - x^a
std::vector<std::int64_t> one_minus_power(std::size_t a) {
  std::vector<std::int64_t> p(a + 1, 0);
  p[0] = 1;
  p[a] -= 1;
  return p;
}

std::vector<std::int64_t> shifted(std::vector<std::int64_t> p, std::size_t by) {
  p.insert(p.begin(), by, 0);
  return p;
}

}  // namespace

// --- Enumeration -----------------------------------------------------------

void for_each_prefix_normal(std::size_t n, Bit b, const std::function<void(const BinaryWord&)>& visit,
                            Guard guard) {
  check_enumeration_length(n, guard);
  struct Emit : NoPruning {
    const std::function<void(const BinaryWord&)>* visit;
    bool complemented;
    void leaf(const SearchNode& node) {
      const BinaryWord w = node.word();
      (*visit)(complemented ? complement(w) : w);
    }
  } emit{{}, &visit, b == Bit::zero};
  // 0-prefix-normal words are the complements of 1-prefix-normal ones.
  SearchNode root;
  walk(root, n, emit);
}

std::vector<BinaryWord> enumerate_pn(std::size_t n, Bit b, Guard guard) {
  std::vector<BinaryWord> words;
  for_each_prefix_normal(n, b, [&](const BinaryWord& w) { words.push_back(w); }, guard);
  return words;
}

Census census(std::size_t n, const EnumOptions& options) {
  check_enumeration_length(n, options.guard);
  Census total{.n = n, .pnw = 0, .ecrit = 0, .by_density = std::vector<std::uint64_t>(n + 1, 0)};
  forked_walk(
      SearchNode{}, n, options, [n] { return CensusVisitor(n); },
      [&](const CensusVisitor& part) {
        total.pnw = checked_add(total.pnw, part.pnw);
        total.ecrit = checked_add(total.ecrit, part.ecrit);
        for (std::size_t d = 0; d <= n; ++d) total.by_density[d] = checked_add(total.by_density[d], part.by_density[d]);
      });
  return total;
}

std::uint64_t count_pnw(std::size_t n, const EnumOptions& options) { return census(n, options).pnw; }

std::uint64_t count_pnw_density(std::size_t n, std::size_t d, const EnumOptions& options) {
  check_enumeration_length(n, options.guard);
  if (d > n) throw RangeError("density " + std::to_string(d) + " exceeds length " + std::to_string(n));
  std::uint64_t total = 0;
  forked_walk(
      SearchNode{}, n, options, [n, d] { return DensityVisitor{.target = n, .density = d}; },
      [&](const DensityVisitor& part) { total = checked_add(total, part.count); });
  return total;
}

std::uint64_t count_ecrit(std::size_t n, const EnumOptions& options) { return census(n, options).ecrit; }

// --- Classes -----------------------------------------------------------------

ClassStatistics class_statistics(std::size_t n, bool list_classes, Guard guard) {
  detail::check_scale(guard, n, kClassScanLengthLimit, "class scan length");
  detail::check_scale(Guard::enforce, n, 40, "class scan length (hard limit)");
  const bool listing = list_classes && n <= kClassListingLengthLimit;

  std::unordered_map<std::uint64_t, std::uint64_t> sizes;
  std::map<std::uint64_t, std::vector<std::uint64_t>> members;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) {
    const std::uint64_t form = normal_form_bits(x, n);
    ++sizes[form];
    if (listing) members[form].push_back(x);
  }

  ClassStatistics stats{.n = n, .class_count = sizes.size(), .max_class_size = 0, .classes = {}};
  for (const auto& [form, size] : sizes) stats.max_class_size = std::max(stats.max_class_size, size);
  if (listing) {
    for (const auto& [form, xs] : members) {
      EquivalenceClass cls{.normal_form = BinaryWord::from_uint(form, n), .members = {}};
      for (std::uint64_t x : xs) cls.members.push_back(BinaryWord::from_uint(x, n));
      std::sort(cls.members.begin(), cls.members.end(), std::greater<>());
      stats.classes.push_back(std::move(cls));
    }
    std::sort(stats.classes.begin(), stats.classes.end(),
              [](const EquivalenceClass& a, const EquivalenceClass& b) { return a.normal_form > b.normal_form; });
  }
  return stats;
}

EnumReport enum_report(std::size_t n, bool with_classes, const EnumOptions& options) {
  Census c = census(n, options);
  EnumReport report;
  report.n = n;
  report.pnw = c.pnw;
  report.ecrit = c.ecrit;
  report.by_density = std::move(c.by_density);
  if (with_classes) {
    const ClassStatistics stats = class_statistics(n, false, options.guard);
    report.class_count = stats.class_count;
    report.max_class_size = stats.max_class_size;
  }
  return report;
}

// --- Generating functions ----------------------------------------------------

RationalSeries::RationalSeries(std::vector<std::int64_t> numerator, std::vector<std::int64_t> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.empty() || denominator_[0] == 0) {
    throw ContractError("series denominator needs a nonzero constant term");
  }
}

std::vector<std::int64_t> RationalSeries::expand(std::size_t order) const {
  std::vector<std::int64_t> c(order + 1, 0);
  for (std::size_t n = 0; n <= order; ++n) {
    std::int64_t acc = n < numerator_.size() ? numerator_[n] : 0;
    for (std::size_t j = 1; j <= n && j < denominator_.size(); ++j) {
      acc = checked_sub(acc, checked_mul(denominator_[j], c[n - j]));
    }
    if (acc % denominator_[0] != 0) {
      throw InvariantError("series coefficient " + std::to_string(n) + " is not an integer");
    }
    c[n] = acc / denominator_[0];
  }
  return c;
}

RationalSeries density_series(std::size_t d) {
  const auto one_minus_x = one_minus_power(1);
  auto product = [](std::initializer_list<std::vector<std::int64_t>> factors) {
    std::vector<std::int64_t> p{1};
    for (const auto& f : factors) p = poly_mul(p, f);
    return p;
  };
  switch (d) {
    case 0: return {{1}, one_minus_x};
    case 1: return {{0, 1}, one_minus_x};
    case 2: return {shifted({1}, 2), product({one_minus_x, one_minus_x})};
    case 3: return {shifted({1}, 3), product({one_minus_power(2), one_minus_x, one_minus_x})};
    case 4: return {shifted({1}, 4), product({one_minus_power(3), one_minus_x, one_minus_x, one_minus_x})};
    case 5:
      return {shifted({1, 1, 1}, 5),
              product({one_minus_power(4), one_minus_power(2), one_minus_power(2), one_minus_x, one_minus_x})};
    case 6:
      return {shifted({1, 1, 1, 1}, 6), product({one_minus_power(5), one_minus_power(3), one_minus_power(2),
                                                  one_minus_x, one_minus_x, one_minus_x})};
    default: break;
  }
  throw RangeError("no closed-form series for density " + std::to_string(d) + " (supported: 0.." +
                   std::to_string(kMaxSeriesDensity) + ")");
}

std::vector<std::int64_t> expand_gf(std::size_t d, std::size_t order) {
  if (order > kMaxSeriesOrder) {
    throw RangeError("series order " + std::to_string(order) + " exceeds " + std::to_string(kMaxSeriesOrder));
  }
  return density_series(d).expand(order);
}

// --- Extensions ---------------------------------------------------------------

std::uint64_t ext_count(const BinaryWord& w, std::size_t m, std::optional<std::size_t> density, Guard guard) {
  check_enumeration_length(w.size() + m, guard);
  if (!is_prefix_normal(w, Bit::one)) {
    throw ContractError("ext_count needs a prefix normal word, got '" + w.to_string() + "'");
  }
  const std::size_t target = w.size() + m;
  SearchNode root = SearchNode::from_word(w);
  if (density) {
    if (*density < root.ones() || *density > root.ones() + m) return 0;
    DensityVisitor v{.target = target, .density = *density};
    walk(root, target, v);
    return v.count;
  }
  struct Count : NoPruning {
    std::uint64_t count = 0;
    void leaf(const SearchNode&) { ++count; }
  } counter;
  walk(root, target, counter);
  return counter.count;
}

bool ext_bijection_check(std::size_t n, std::size_t d, Guard guard) {
  if (d < 1 || d > n) throw RangeError("bijection check needs 1 <= d <= n");
  // The extension length n + d - 3 is negative at n = d = 1.
  if (n + d < 3) throw RangeError("bijection check needs n + d >= 3");
  const std::size_t m = n + d - 3;
  const std::uint64_t left = ext_count(parse_word("10"), m, d, guard);
  EnumOptions options;
  options.guard = guard;
  return left == count_pnw_density(n, d, options);
}

std::uint64_t fibonacci(std::size_t n) {
  std::uint64_t a = 0;  // F(0)
  std::uint64_t b = 1;  // F(1)
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t next = checked_add(a, b);
    a = b;
    b = next;
  }
  return a;
}

std::vector<ExtFormulaCase> ext_formula_cases(std::size_t n) {
  if (n >= 63) throw RangeError("closed forms are evaluated for n < 63");
  const auto ones = [](std::size_t k) { return BinaryWord::repeat(Bit::one, k); };
  const auto zeros = [](std::size_t k) { return BinaryWord::repeat(Bit::zero, k); };
  const BinaryWord one = ones(1);
  const BinaryWord zero = zeros(1);
  const BinaryWord ten = parse_word("10");
  const std::uint64_t two_n = std::uint64_t{1} << n;

  std::vector<ExtFormulaCase> cases;
  cases.push_back({"0^n", zeros(n), 1});
  cases.push_back({"1^n", ones(n), two_n});
  if (n >= 1) {
    cases.push_back({"1^(n-1)0", ones(n - 1) + zero, two_n - 1});
    cases.push_back({"10^(n-1)", one + zeros(n - 1), n + 1});
  }
  if (n >= 2) cases.push_back({"1^(n-2)00", ones(n - 2) + zeros(2), two_n - (n + 1)});
  // At n = 2 the first prefix is 01 (not normal) and the second is 11.
  if (n >= 3) {
    cases.push_back({"1^(n-2)01", ones(n - 2) + zero + one, two_n - 5});
    cases.push_back({"10^(n-2)1", one + zeros(n - 2) + one, 3});
  }
  if (n % 2 == 0) {
    cases.push_back({"(10)^(n/2)", power(ten, n / 2), fibonacci(n + 2)});
  } else if (n >= 3) {
    cases.push_back({"(10)^((n-1)/2)1", power(ten, (n - 1) / 2) + one, fibonacci(n + 1)});
  }
  return cases;
}

SeparatingSuffix separating_suffix(const BinaryWord& v, const BinaryWord& w) {
  for (const BinaryWord* x : {&v, &w}) {
    if (x->empty() || (*x)[1] != Bit::one || !is_prefix_normal(*x, Bit::one)) {
      throw ContractError("separating_suffix needs prefix normal words starting with 1, got '" + x->to_string() +
                          "'");
    }
  }
  if (v == w) throw ContractError("separating_suffix needs distinct words");

  // Work with a shorter-or-equal first word and flip the answer back at the end.
  const bool swapped = v.size() > w.size();
  const BinaryWord& a = swapped ? w : v;
  const BinaryWord& b = swapped ? v : w;
  const BinaryWord pad = BinaryWord::repeat(Bit::zero, b.size());

  std::size_t first_diff = 0;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    if (a[i] != b[i]) {
      first_diff = i;
      break;
    }
  }

  SeparatingSuffix result;
  if (first_diff != 0) {
    if (a[first_diff] == Bit::one) {
      result = {pad + a, NormalSide::first};
    } else {
      result = {pad + b, NormalSide::second};
    }
  } else if (b.ones() > a.ones()) {
    // a is a proper prefix of b and b has a 1 beyond it.
    result = {pad + b, NormalSide::second};
  } else if (is_prefix_normal(a + a, Bit::one)) {
    // b = a 0^m: a·aa is normal, a 0^m aa is not.
    result = {a + a, NormalSide::first};
  } else {
    std::size_t k = 1;
    while (k <= a.size() && !is_prefix_normal(a + BinaryWord::repeat(Bit::zero, k) + a, Bit::one)) ++k;
    if (k > a.size()) {
      throw InvariantError("no k with a 0^k a prefix normal for a='" + a.to_string() + "'");
    }
    result = {BinaryWord::repeat(Bit::zero, k - 1) + a, NormalSide::second};
  }

  if (swapped) result.normal_side = result.normal_side == NormalSide::first ? NormalSide::second : NormalSide::first;

  const bool v_normal = is_prefix_normal(v + result.suffix, Bit::one);
  const bool w_normal = is_prefix_normal(w + result.suffix, Bit::one);
  const bool expected_first = result.normal_side == NormalSide::first;
  if (v_normal == w_normal || v_normal != expected_first) {
    throw InvariantError("separator '" + result.suffix.to_string() + "' fails for v='" + v.to_string() + "', w='" +
                         w.to_string() + "'");
  }
  return result;
}

// --- Growth data ---------------------------------------------------------------

BoundReport bound_check(std::size_t n_max, const EnumOptions& options) {
  check_enumeration_length(n_max, options.guard);
  BoundReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BoundRow row;
    row.n = n;
    row.pnw = count_pnw(n, options);
    const double nd = static_cast<double>(n);
    const double lg = std::log2(nd);
    row.upper = std::exp2(nd - lg + 1.0);
    row.lower = std::exp2(nd - 4.0 * std::sqrt(nd * lg));
    const auto value = static_cast<double>(row.pnw);
    row.upper_holds = value <= row.upper;
    row.lower_holds = value >= row.lower;
    report.rows.push_back(row);
  }
  for (auto it = report.rows.rbegin(); it != report.rows.rend() && it->upper_holds; ++it) {
    report.upper_threshold = it->n;
  }
  return report;
}

std::vector<RatioRow> ratio_series(std::size_t n_max, const EnumOptions& options) {
  check_enumeration_length(n_max, options.guard);
  std::vector<RatioRow> rows;
  std::uint64_t previous = count_pnw(0, options);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Census c = census(n, options);
    RatioRow row;
    row.n = n;
    row.pnw = c.pnw;
    row.ecrit = c.ecrit;
    row.growth = static_cast<double>(c.pnw) / static_cast<double>(previous);
    row.critical_fraction = static_cast<double>(c.ecrit) / static_cast<double>(c.pnw);
    if (n > 1) {
      const double nd = static_cast<double>(n);
      row.scaled_fraction = row.critical_fraction * nd / std::log(nd);
    }
    rows.push_back(row);
    previous = c.pnw;
  }
  return rows;
}

}  // namespace pnfkit
