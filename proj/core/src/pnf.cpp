#include "pnfkit/pnf.hpp"

namespace pnfkit {

ParikhVector parikh_vector(const BinaryWord& w) noexcept {
  const std::size_t ones = w.ones();
  return {.zeros = w.size() - ones, .ones = ones};
}

BinaryWord normal_form_from_profile(const OnesProfile& profile) {
  if (profile.kind() == ProfileKind::min_ones) {
    throw ContractError("normal forms are defined by maximum profiles only");
  }
  const Bit counted = profile.kind() == ProfileKind::max_ones ? Bit::one : Bit::zero;
  // Position k carries the counted symbol exactly where the profile steps up.
  BinaryWord::Builder out(profile.length());
  for (std::size_t k = 1; k <= profile.length(); ++k) {
    out.push_back(profile[k] != profile[k - 1] ? counted : flip(counted));
  }
  return std::move(out).build();
}

BinaryWord pnf(const BinaryWord& w, Bit b, Guard guard) {
  return normal_form_from_profile(max_profile(w, b, guard));
}

BinaryWord pnf1(const BinaryWord& w, Guard guard) { return pnf(w, Bit::one, guard); }
BinaryWord pnf0(const BinaryWord& w, Guard guard) { return pnf(w, Bit::zero, guard); }

PnfPair pnf_pair(const BinaryWord& w, Guard guard) {
  return {.pnf1 = pnf1(w, guard), .pnf0 = pnf0(w, guard), .source_length = w.size()};
}

bool prefix_equivalent(const BinaryWord& v, const BinaryWord& w, Bit b) {
  if (v.size() != w.size()) return false;
  return max_profile(v, b) == max_profile(w, b);
}

ParikhSet parikh_set(const BinaryWord& w, Guard guard) {
  detail::check_scale(guard, w.size(), kParikhSetLengthLimit, "Parikh set word length");
  std::set<ParikhVector> members{ParikhVector{}};
  for (std::size_t start = 1; start <= w.size(); ++start) {
    ParikhVector v;
    for (std::size_t p = start; p <= w.size(); ++p) {
      (w[p] == Bit::one ? v.ones : v.zeros) += 1;
      members.insert(v);
    }
  }
  return ParikhSet(std::move(members));
}

bool parikh_set_equal(const BinaryWord& v, const BinaryWord& w) {
  // The longest member has total |w|, so lengths must agree.
  if (v.size() != w.size()) return false;
  return pnf1(v) == pnf1(w) && pnf0(v) == pnf0(w);
}

}  // namespace pnfkit
