#include "pnfkit/normality.hpp"

#include <algorithm>
#include <numeric>

namespace pnfkit {
namespace {

std::vector<std::size_t> prefix_counts(const BinaryWord& w, Bit b) {
  std::vector<std::size_t> p(w.size() + 1, 0);
  for (std::size_t i = 1; i <= w.size(); ++i) p[i] = p[i - 1] + (w[i] == b ? 1 : 0);
  return p;
}

// pos[i] is the position of the i-th 1; pos[0] = 0.
std::vector<std::size_t> one_positions(const BinaryWord& w) {
  std::vector<std::size_t> pos{0};
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (w[i] == Bit::one) pos.push_back(i);
  }
  return pos;
}

}  // namespace

GapDecomposition::GapDecomposition(std::vector<std::size_t> gaps) : gaps_(std::move(gaps)) {
  if (std::find(gaps_.begin(), gaps_.end(), std::size_t{0}) != gaps_.end()) {
    throw ContractError("gap decomposition requires positive gaps");
  }
}

std::size_t GapDecomposition::length() const noexcept {
  return std::accumulate(gaps_.begin(), gaps_.end(), std::size_t{0});
}

BinaryWord GapDecomposition::reconstruct() const {
  BinaryWord::Builder out(length());
  for (std::size_t r : gaps_) out.push_back(Bit::one).append(Bit::zero, r - 1);
  return std::move(out).build();
}

GapDecomposition decompose_gaps(const BinaryWord& w) {
  if (w.empty() || w[1] != Bit::one) throw ContractError("gap decomposition needs a word starting with 1");
  const auto pos = one_positions(w);
  std::vector<std::size_t> gaps;
  gaps.reserve(pos.size() - 1);
  for (std::size_t i = 1; i + 1 < pos.size(); ++i) gaps.push_back(pos[i + 1] - pos[i]);
  gaps.push_back(w.size() + 1 - pos.back());
  return GapDecomposition(std::move(gaps));
}

bool is_prefix_normal(const BinaryWord& w, Bit b) {
  const OnesProfile profile = max_profile(w, b);
  const auto p = prefix_counts(w, b);
  for (std::size_t k = 0; k <= w.size(); ++k) {
    if (p[k] != profile[k]) return false;
  }
  return true;
}

bool check_subadditive_char(const BinaryWord& w) {
  const auto p = prefix_counts(w, Bit::one);
  for (std::size_t j = 0; j <= w.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if (p[j] - p[i] > p[j - i]) return false;
    }
  }
  return true;
}

bool check_factor_pos_char(const BinaryWord& w) {
  const auto pos = one_positions(w);
  const std::size_t d = pos.size() - 1;
  for (std::size_t i = 1; i <= d; ++i) {
    // Shortest factor holding i ones spans i consecutive 1s.
    std::size_t shortest = w.size();
    for (std::size_t j = 1; j + i - 1 <= d; ++j) shortest = std::min(shortest, pos[j + i - 1] - pos[j] + 1);
    if (shortest < pos[i]) return false;
  }
  return true;
}

bool check_pos_superadditive_char(const BinaryWord& w) {
  const auto pos = one_positions(w);
  const std::size_t d = pos.size() - 1;
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; i + j - 1 <= d; ++j) {
      if (pos[i] + pos[j] - 1 > pos[i + j - 1]) return false;
    }
  }
  return true;
}

bool check_gap_inequalities(const BinaryWord& w) {
  if (w.empty() || w[1] == Bit::zero) return w.ones() == 0;
  const GapDecomposition decomposition = decompose_gaps(w);
  const auto& r = decomposition.gaps();
  const std::size_t d = r.size();
  if (d <= 2) return true;
  // prefix[t] = r_1 + ... + r_t (1-based gaps stored 0-based in r).
  std::vector<std::size_t> prefix(d + 1, 0);
  for (std::size_t t = 1; t <= d; ++t) prefix[t] = prefix[t - 1] + r[t - 1];
  for (std::size_t t = 1; t + 2 <= d; ++t) {
    for (std::size_t j = 2; j + t <= d; ++j) {
      if (prefix[t] > prefix[j + t - 1] - prefix[j - 1]) return false;
    }
  }
  return true;
}

bool can_append(const BinaryWord& w, Bit b) {
#ifdef PNFKIT_CONTRACT_CHECKS
  if (!is_prefix_normal(w, b)) {
    throw ContractError("can_append requires a " + std::string(1, to_char(b)) + "-prefix-normal word, got " +
                        w.to_string());
  }
#endif
  const auto p = prefix_counts(w, b);
  const std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (p[n] - p[n - k] >= p[k + 1]) return false;
  }
  return true;
}

bool can_append_one(const BinaryWord& w) { return can_append(w, Bit::one); }

std::string_view method_name(NormalityMethod m) noexcept {
  switch (m) {
    case NormalityMethod::definition: return "def";
    case NormalityMethod::subadditive: return "subadd";
    case NormalityMethod::factor_pos: return "pos";
    case NormalityMethod::pos_superadditive: return "superadd";
    case NormalityMethod::gap_inequalities: return "gaps";
  }
  return "?";
}

std::optional<NormalityMethod> parse_method(std::string_view name) noexcept {
  for (NormalityMethod m : kAllNormalityMethods) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

bool decide_prefix_normal(const BinaryWord& w, Bit b, NormalityMethod method) {
  if (method == NormalityMethod::definition) return is_prefix_normal(w, b);
  const BinaryWord& subject = b == Bit::one ? w : complement(w);
  switch (method) {
    case NormalityMethod::subadditive: return check_subadditive_char(subject);
    case NormalityMethod::factor_pos: return check_factor_pos_char(subject);
    case NormalityMethod::pos_superadditive: return check_pos_superadditive_char(subject);
    case NormalityMethod::gap_inequalities: return check_gap_inequalities(subject);
    case NormalityMethod::definition: break;
  }
  return is_prefix_normal(w, b);
}

}  // namespace pnfkit
