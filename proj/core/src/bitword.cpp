#include "pnfkit/bitword.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace pnfkit {
namespace {

constexpr std::uint64_t low_mask(std::size_t bits) noexcept {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// 0-based index of the r-th (1-based) set bit of x; x must have >= r set bits.
unsigned select_in_block(std::uint64_t x, std::size_t r) noexcept {
  for (std::size_t k = 1; k < r; ++k) x &= x - 1;
  return static_cast<unsigned>(std::countr_zero(x));
}

std::string position_text(std::size_t pos, std::size_t size) {
  return "position " + std::to_string(pos) + " outside 0.." + std::to_string(size);
}

}  // namespace

// --- Builder ---------------------------------------------------------------

BinaryWord::Builder& BinaryWord::Builder::push_back(Bit b) {
  if (size_ % kBlockBits == 0) blocks_.push_back(0);
  if (b == Bit::one) blocks_.back() |= std::uint64_t{1} << (size_ % kBlockBits);
  ++size_;
  return *this;
}

BinaryWord::Builder& BinaryWord::Builder::append(const BinaryWord& w) {
  const std::size_t shift = size_ % kBlockBits;
  if (shift == 0) {
    blocks_.insert(blocks_.end(), w.blocks_.begin(), w.blocks_.end());
    size_ += w.size_;
    return *this;
  }
  for (std::size_t i = 1; i <= w.size_; ++i) push_back(w[i]);
  return *this;
}

BinaryWord::Builder& BinaryWord::Builder::append(Bit b, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) push_back(b);
  return *this;
}

BinaryWord BinaryWord::Builder::build() && {
  BinaryWord w;
  w.blocks_ = std::move(blocks_);
  w.size_ = size_;
  return w;
}

// --- BinaryWord ------------------------------------------------------------

BinaryWord BinaryWord::repeat(Bit b, std::size_t count) {
  BinaryWord w;
  w.size_ = count;
  w.blocks_.assign(block_count(count), b == Bit::one ? ~std::uint64_t{0} : 0);
  if (b == Bit::one && count % kBlockBits != 0) w.blocks_.back() = low_mask(count % kBlockBits);
  return w;
}

BinaryWord BinaryWord::from_uint(std::uint64_t bits, std::size_t length) {
  if (length > kBlockBits) throw RangeError("from_uint: length exceeds 64");
  BinaryWord w;
  w.size_ = length;
  if (length > 0) w.blocks_.push_back(bits & low_mask(length));
  return w;
}

Bit BinaryWord::at(std::size_t pos) const {
  if (pos == 0 || pos > size_) {
    throw RangeError("symbol " + position_text(pos, size_) + " (positions are 1-based)");
  }
  return (*this)[pos];
}

std::size_t BinaryWord::ones() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t b : blocks_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

std::size_t BinaryWord::rank(Bit b, std::size_t i) const {
  if (i > size_) throw RangeError("rank " + position_text(i, size_));
  std::size_t ones_before = 0;
  const std::size_t full = i / kBlockBits;
  for (std::size_t k = 0; k < full; ++k) ones_before += static_cast<std::size_t>(std::popcount(blocks_[k]));
  if (i % kBlockBits != 0) {
    ones_before += static_cast<std::size_t>(std::popcount(blocks_[full] & low_mask(i % kBlockBits)));
  }
  return b == Bit::one ? ones_before : i - ones_before;
}

std::size_t BinaryWord::select(Bit b, std::size_t i) const {
  if (i == 0) throw RangeError("select: occurrence index is 1-based");
  std::size_t remaining = i;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    std::uint64_t block = b == Bit::one ? blocks_[k] : ~blocks_[k];
    if (k + 1 == blocks_.size()) block &= low_mask(size_ - k * kBlockBits);
    const auto here = static_cast<std::size_t>(std::popcount(block));
    if (remaining <= here) return k * kBlockBits + select_in_block(block, remaining) + 1;
    remaining -= here;
  }
  throw NotFoundError("select: word has fewer than " + std::to_string(i) + " occurrences of " +
                      to_char(b));
}

BinaryWord BinaryWord::prefix(std::size_t length) const { return factor(1, length); }

BinaryWord BinaryWord::suffix(std::size_t length) const {
  if (length > size_) throw RangeError("suffix length " + position_text(length, size_));
  return factor(size_ - length + 1, length);
}

BinaryWord BinaryWord::factor(std::size_t start, std::size_t length) const {
  if (length == 0) return {};
  if (start == 0 || start - 1 + length > size_) {
    throw RangeError("factor [" + std::to_string(start) + ", +" + std::to_string(length) +
                     ") outside word of length " + std::to_string(size_));
  }
  Builder out(length);
  const std::size_t offset = start - 1;
  if (offset % kBlockBits == 0) {
    const std::size_t first = offset / kBlockBits;
    out.blocks_.assign(blocks_.begin() + static_cast<std::ptrdiff_t>(first),
                       blocks_.begin() + static_cast<std::ptrdiff_t>(first + block_count(length)));
    if (length % kBlockBits != 0) out.blocks_.back() &= low_mask(length % kBlockBits);
    out.size_ = length;
  } else {
    for (std::size_t p = start; p < start + length; ++p) out.push_back((*this)[p]);
  }
  return std::move(out).build();
}

BinaryWord BinaryWord::appended(Bit b) const {
  BinaryWord w = *this;
  if (w.size_ % kBlockBits == 0) w.blocks_.push_back(0);
  if (b == Bit::one) w.blocks_.back() |= std::uint64_t{1} << (w.size_ % kBlockBits);
  ++w.size_;
  return w;
}

std::string BinaryWord::to_string() const {
  std::string text(size_, '0');
  for (std::size_t p = 1; p <= size_; ++p) text[p - 1] = to_char((*this)[p]);
  return text;
}

BinaryWord operator+(const BinaryWord& a, const BinaryWord& b) {
  BinaryWord::Builder out(a.size() + b.size());
  out.append(a).append(b);
  return std::move(out).build();
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept {
  const std::size_t common = std::min(a.blocks_.size(), b.blocks_.size());
  const std::size_t shared = std::min(a.size_, b.size_);
  for (std::size_t k = 0; k < common; ++k) {
    const std::uint64_t diff = a.blocks_[k] ^ b.blocks_[k];
    if (diff == 0) continue;
    const std::size_t pos = k * BinaryWord::kBlockBits + static_cast<std::size_t>(std::countr_zero(diff));
    // Padding bits are zero, so a difference past the shorter word's end
    // shows up as a 1 in the longer word and falls through to the length test.
    if (pos >= shared) break;
    return ((a.blocks_[k] >> (pos % BinaryWord::kBlockBits)) & 1U) != 0 ? std::strong_ordering::greater
                                                                       : std::strong_ordering::less;
  }
  return a.size_ <=> b.size_;
}

BinaryWord parse_word(std::string_view text) {
  BinaryWord::Builder out(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError("invalid symbol '" + std::string(1, c) + "' at position " + std::to_string(i + 1) +
                           "; expected '0' or '1'",
                       i + 1);
    }
    out.push_back(c == '1' ? Bit::one : Bit::zero);
  }
  return std::move(out).build();
}

std::size_t rank(const BinaryWord& w, Bit b, std::size_t i) { return w.rank(b, i); }
std::size_t select(const BinaryWord& w, Bit b, std::size_t i) { return w.select(b, i); }

BinaryWord complement(const BinaryWord& w) {
  BinaryWord::Builder out(w.size());
  for (std::size_t p = 1; p <= w.size(); ++p) out.push_back(flip(w[p]));
  return std::move(out).build();
}

BinaryWord reverse(const BinaryWord& w) {
  BinaryWord::Builder out(w.size());
  for (std::size_t p = w.size(); p >= 1; --p) out.push_back(w[p]);
  return std::move(out).build();
}

BinaryWord power(const BinaryWord& w, std::size_t times) {
  BinaryWord::Builder out(w.size() * times);
  for (std::size_t t = 0; t < times; ++t) out.append(w);
  return std::move(out).build();
}

// --- RankDirectory ---------------------------------------------------------

RankDirectory::RankDirectory(BinaryWord word) : word_(std::move(word)) {
  const auto blocks = word_.blocks();
  block_counts_.reserve(blocks.size() + 1);
  std::uint64_t running = 0;
  block_counts_.push_back(0);
  for (std::uint64_t b : blocks) {
    running += static_cast<std::uint64_t>(std::popcount(b));
    block_counts_.push_back(running);
  }
}

std::size_t RankDirectory::rank1(std::size_t i) const {
  if (i > word_.size()) throw RangeError("rank " + position_text(i, word_.size()));
  const std::size_t block = i / kBlockSize;
  const std::size_t tail = i % kBlockSize;
  std::size_t r = block_counts_[block];
  if (tail != 0) r += static_cast<std::size_t>(std::popcount(word_.blocks()[block] & low_mask(tail)));
  return r;
}

std::size_t RankDirectory::select(Bit b, std::size_t i) const {
  if (i == 0) throw RangeError("select: occurrence index is 1-based");
  const std::size_t n = word_.size();
  const std::size_t blocks = word_.blocks().size();
  auto before = [&](std::size_t k) -> std::size_t {
    const std::size_t ones_before = block_counts_[k];
    return b == Bit::one ? ones_before : std::min(k * kBlockSize, n) - ones_before;
  };
  if (i > before(blocks)) {
    throw NotFoundError("select: word has fewer than " + std::to_string(i) + " occurrences of " +
                        to_char(b));
  }
  // Largest block k with before(k) < i.
  std::size_t lo = 0;
  std::size_t hi = blocks;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (before(mid) < i) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  std::uint64_t block = word_.blocks()[lo];
  if (b == Bit::zero) {
    block = ~block;
    if (lo + 1 == blocks) block &= low_mask(n - lo * kBlockSize);
  }
  return lo * kBlockSize + select_in_block(block, i - before(lo)) + 1;
}

// --- Profiles --------------------------------------------------------------

OnesProfile max_profile(const BinaryWord& w, Bit b, Guard guard) {
  detail::check_scale(guard, w.size(), kProfileLengthLimit, "profile word length");
  const std::size_t n = w.size();
  std::vector<std::uint32_t> prefix(n + 1, 0);
  for (std::size_t p = 1; p <= n; ++p) prefix[p] = prefix[p - 1] + (w[p] == b ? 1U : 0U);

  std::vector<std::uint32_t> values(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    std::uint32_t best = 0;
    for (std::size_t i = 0; i + k <= n; ++i) best = std::max(best, prefix[i + k] - prefix[i]);
    values[k] = best;
  }
  return {b == Bit::one ? ProfileKind::max_ones : ProfileKind::max_zeros, std::move(values)};
}

OnesProfile max_ones_profile(const BinaryWord& w, Guard guard) { return max_profile(w, Bit::one, guard); }
OnesProfile max_zeros_profile(const BinaryWord& w, Guard guard) { return max_profile(w, Bit::zero, guard); }

OnesProfile min_ones_profile(const BinaryWord& w, Guard guard) {
  const OnesProfile zeros = max_zeros_profile(w, guard);
  std::vector<std::uint32_t> values(zeros.values().size());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = static_cast<std::uint32_t>(k) - zeros[k];
  return {ProfileKind::min_ones, std::move(values)};
}

}  // namespace pnfkit

std::size_t std::hash<pnfkit::BinaryWord>::operator()(const pnfkit::BinaryWord& w) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(w.size());
  for (std::uint64_t b : w.blocks()) h ^= std::hash<std::uint64_t>{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
