#include "pnfkit/jumbled_index.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>

namespace pnfkit {
namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

// Position p lands in byte (p-1)/8, bit (p-1)%8.
void put_word(std::vector<std::uint8_t>& out, const BinaryWord& w) {
  const std::size_t bytes = (w.size() + 7) / 8;
  const auto blocks = w.blocks();
  for (std::size_t i = 0; i < bytes; ++i) {
    out.push_back(static_cast<std::uint8_t>(blocks[i / 8] >> (8 * (i % 8))));
  }
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::span<const std::uint8_t> take(std::size_t count, const char* what) {
    if (bytes_.size() - offset_ < count) {
      throw ParseError(std::string("index file truncated while reading ") + what, offset_ + 1);
    }
    auto view = bytes_.subspan(offset_, count);
    offset_ += count;
    return view;
  }

  std::uint64_t u64(const char* what) {
    const auto b = take(8, what);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
    return v;
  }

  std::uint32_t u32(const char* what) {
    const auto b = take(4, what);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
    return v;
  }

  BinaryWord word(std::size_t n, const char* what) {
    const auto b = take((n + 7) / 8, what);
    BinaryWord::Builder out(n);
    for (std::size_t p = 1; p <= n; ++p) out.push_back(((b[(p - 1) / 8] >> ((p - 1) % 8)) & 1U) != 0 ? Bit::one : Bit::zero);
    if (n % 8 != 0 && (b.back() >> (n % 8)) != 0) throw ParseError(std::string("nonzero padding in ") + what);
    return std::move(out).build();
  }

  OnesProfile profile(ProfileKind kind, std::size_t n, const char* what) {
    std::vector<std::uint32_t> values(n + 1);
    for (auto& v : values) v = u32(what);
    return {kind, std::move(values)};
  }

  bool exhausted() const noexcept { return offset_ == bytes_.size(); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t offset_ = 0;
};

}  // namespace

JumbledIndex::JumbledIndex(std::size_t n, OnesProfile fmax, OnesProfile fmin, PnfPair pnfs)
    : n_(n),
      fmax_(std::move(fmax)),
      fmin_(std::move(fmin)),
      pnfs_(std::move(pnfs)),
      rank1_dir_(pnfs_.pnf1),
      rank0_dir_(pnfs_.pnf0) {}

JumbledIndex JumbledIndex::build(const BinaryWord& w, Guard guard) {
  OnesProfile fmax = max_ones_profile(w, guard);
  OnesProfile fmin = min_ones_profile(w, guard);
  PnfPair pnfs{.pnf1 = normal_form_from_profile(fmax),
               .pnf0 = pnf0(w, guard),
               .source_length = w.size()};
  return JumbledIndex(w.size(), std::move(fmax), std::move(fmin), std::move(pnfs));
}

bool JumbledIndex::query(std::size_t ones, std::size_t zeros) const noexcept {
  if (ones > n_ || zeros > n_ - ones) return false;
  const std::size_t k = ones + zeros;
  return fmin_[k] <= ones && ones <= fmax_[k];
}

bool JumbledIndex::query_via_rank(std::size_t ones, std::size_t zeros) const {
  if (ones > n_ || zeros > n_ - ones) return false;
  const std::size_t k = ones + zeros;
  return rank0_dir_.rank1(k) <= ones && ones <= rank1_dir_.rank1(k);
}

std::vector<std::uint8_t> JumbledIndex::serialize() const {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  put_u64(out, n_);
  put_word(out, pnfs_.pnf1);
  put_word(out, pnfs_.pnf0);
  for (std::uint32_t v : fmax_.values()) put_u32(out, v);
  for (std::uint32_t v : fmin_.values()) put_u32(out, v);
  return out;
}

void JumbledIndex::write(std::ostream& out) const {
  const auto bytes = serialize();
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

JumbledIndex JumbledIndex::deserialize(std::span<const std::uint8_t> bytes) {
  Reader in(bytes);
  const auto magic = in.take(kMagic.size(), "magic");
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw ParseError("not a PNFIX1 index (bad magic)", 1);
  }
  const std::uint64_t n64 = in.u64("length");
  // Each symbol costs at least eight bytes of profile data.
  if (n64 > bytes.size() / 8) throw ParseError("index length field inconsistent with file size");
  const auto n = static_cast<std::size_t>(n64);
  BinaryWord p1 = in.word(n, "PNF1");
  BinaryWord p0 = in.word(n, "PNF0");
  OnesProfile fmax = in.profile(ProfileKind::max_ones, n, "max-ones profile");
  OnesProfile fmin = in.profile(ProfileKind::min_ones, n, "min-ones profile");
  if (!in.exhausted()) throw ParseError("trailing bytes after index payload");

  JumbledIndex ix(n, std::move(fmax), std::move(fmin), PnfPair{std::move(p1), std::move(p0), n});
  for (std::size_t k = 0; k <= n; ++k) {
    if (ix.fmax_[k] != ix.rank1_dir_.rank1(k) || ix.fmin_[k] != ix.rank0_dir_.rank1(k) ||
        ix.fmin_[k] > ix.fmax_[k]) {
      throw ParseError("index profiles disagree with stored normal forms at k=" + std::to_string(k));
    }
  }
  return ix;
}

JumbledIndex JumbledIndex::read(std::istream& in) {
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

}  // namespace pnfkit
