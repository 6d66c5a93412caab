#include "pnfkit/lyndon.hpp"

#include <vector>

#include "pnfkit/normality.hpp"

namespace pnfkit {
namespace {

struct NecklaceScan {
  bool prenecklace = true;
  std::size_t period = 0;
};

// Classic left-to-right scan: the longest Lyndon prefix length is tracked as
// the period p; a symbol smaller than the one p places back breaks the
// pre-necklace property.
NecklaceScan scan(const BinaryWord& w) {
  NecklaceScan s{.prenecklace = true, .period = w.empty() ? std::size_t{0} : std::size_t{1}};
  for (std::size_t i = 2; i <= w.size(); ++i) {
    const Bit back = w[i - s.period];
    if (back == w[i]) continue;
    if (back == Bit::one) {
      s.prenecklace = false;
      return s;
    }
    s.period = i;
  }
  return s;
}

void count_prenecklaces_from(std::vector<std::uint8_t>& a, std::size_t t, std::size_t p, std::size_t n,
                             std::uint64_t& total) {
  if (t > n) {
    ++total;
    return;
  }
  a[t] = a[t - p];
  count_prenecklaces_from(a, t + 1, p, n, total);
  if (a[t - p] == 0) {
    a[t] = 1;
    count_prenecklaces_from(a, t + 1, t, n, total);
  }
}

}  // namespace

bool is_lyndon(const BinaryWord& w) {
  const NecklaceScan s = scan(w);
  return !w.empty() && s.prenecklace && s.period == w.size();
}

bool is_necklace(const BinaryWord& w) {
  if (w.empty()) return true;
  const NecklaceScan s = scan(w);
  return s.prenecklace && w.size() % s.period == 0;
}

bool is_prenecklace(const BinaryWord& w) { return scan(w).prenecklace; }

bool lyndon_extension_check(const BinaryWord& w) {
  if (w.zeros() == 0 || !is_prefix_normal(w, Bit::zero)) {
    throw ContractError("lyndon_extension_check needs a 0-prefix-normal word containing a 0, got '" +
                        w.to_string() + "'");
  }
  return is_lyndon(w + BinaryWord::repeat(Bit::one, w.size()));
}

std::uint64_t count_prenecklaces(std::size_t n, Guard guard) {
  detail::check_scale(guard, n, kPrenecklaceLengthLimit, "pre-necklace length");
  // a[0] is a sentinel 0 so that the first symbol may be either value.
  std::vector<std::uint8_t> a(n + 1, 0);
  std::uint64_t total = 0;
  count_prenecklaces_from(a, 1, 1, n, total);
  return total;
}

}  // namespace pnfkit
