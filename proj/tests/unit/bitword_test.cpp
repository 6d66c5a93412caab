#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "pnfkit/bitword.hpp"

using namespace pnfkit;

namespace {

const char* const kTableWord = "1010011011000111001011";

std::vector<std::uint32_t> values(const OnesProfile& p) { return {p.values().begin(), p.values().end()}; }

}  // namespace

TEST(ParseWord, AcceptsBinaryText) {
  EXPECT_EQ(parse_word("").size(), 0U);
  const BinaryWord w = parse_word("1001101");
  EXPECT_EQ(w.size(), 7U);
  EXPECT_EQ(w.ones(), 4U);
  EXPECT_EQ(w.to_string(), "1001101");
}

TEST(ParseWord, RejectsOtherCharactersWithPosition) {
  try {
    parse_word("10a1");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3U);
  }
  EXPECT_THROW(parse_word("1 0"), ParseError);
}

TEST(ParseWord, HandlesMultiBlockWords) {
  std::mt19937_64 rng(7);
  for (std::size_t n : {63U, 64U, 65U, 128U, 200U}) {
    const std::string s = oracle::random_word(rng, n);
    EXPECT_EQ(parse_word(s).to_string(), s);
  }
}

TEST(Rank, Examples) {
  const BinaryWord w = parse_word("1001101");
  EXPECT_EQ(rank(w, Bit::one, 0), 0U);
  EXPECT_EQ(rank(w, Bit::one, 4), 2U);
  EXPECT_EQ(rank(parse_word(kTableWord), Bit::one, 22), 12U);
  EXPECT_EQ(rank(w, Bit::zero, 7), 3U);
  EXPECT_THROW(rank(w, Bit::one, 8), RangeError);
}

TEST(Select, Examples) {
  const BinaryWord w = parse_word("1001101");
  EXPECT_EQ(select(w, Bit::one, 1), 1U);
  EXPECT_EQ(select(w, Bit::one, 3), 5U);
  EXPECT_THROW(select(w, Bit::one, 5), NotFoundError);
  EXPECT_EQ(select(w, Bit::zero, 3), 6U);
  EXPECT_THROW(select(w, Bit::zero, 0), RangeError);
}

TEST(RankDirectory, MatchesNaiveCountsOnRandomWords) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 200;
    const std::string s = oracle::random_word(rng, n);
    const RankDirectory dir(parse_word(s));
    EXPECT_EQ(dir.block_counts().back(), static_cast<std::uint64_t>(oracle::count_char(s, '1', 0, n)));
    EXPECT_TRUE(std::is_sorted(dir.block_counts().begin(), dir.block_counts().end()));
    for (std::size_t i = 0; i <= n; ++i) {
      const std::size_t ones = oracle::count_char(s, '1', 0, i);
      ASSERT_EQ(dir.rank1(i), ones) << s << " i=" << i;
      ASSERT_EQ(dir.rank(Bit::zero, i), i - ones);
    }
    for (Bit b : {Bit::zero, Bit::one}) {
      const std::size_t total = dir.rank(b, n);
      for (std::size_t i = 1; i <= total; ++i) {
        const std::size_t pos = dir.select(b, i);
        ASSERT_EQ(dir.rank(b, pos), i);
        ASSERT_EQ(dir.word()[pos], b);
        ASSERT_EQ(pos, dir.word().select(b, i));
      }
      EXPECT_THROW(dir.select(b, total + 1), NotFoundError);
    }
  }
}

TEST(Profiles, TableWord) {
  const BinaryWord w = parse_word(kTableWord);
  EXPECT_EQ(values(max_ones_profile(w)),
            (std::vector<std::uint32_t>{0, 1, 2, 3, 3, 4, 4, 4, 5, 6, 6, 7, 7, 7, 8, 8, 9, 10, 10, 10, 11, 11, 12}));
  EXPECT_EQ(values(max_zeros_profile(w)),
            (std::vector<std::uint32_t>{0, 1, 2, 3, 3, 3, 4, 4, 5, 5, 6, 6, 7, 7, 7, 8, 8, 9, 9, 10, 10, 10, 10}));
  // k - F0(8) = 8 - 5, confirmed against the all-factors minimum.
  EXPECT_EQ(min_ones_profile(w)[8], 3U);
  EXPECT_EQ(oracle::factor_extreme(kTableWord, '1', false)[8], 3U);
}

TEST(Profiles, SmallWords) {
  const BinaryWord w = parse_word("1001101");
  EXPECT_EQ(values(max_ones_profile(w)), (std::vector<std::uint32_t>{0, 1, 2, 2, 3, 3, 3, 4}));
  EXPECT_EQ(values(max_zeros_profile(w)), (std::vector<std::uint32_t>{0, 1, 2, 2, 2, 3, 3, 3}));
  EXPECT_EQ(values(min_ones_profile(w)), (std::vector<std::uint32_t>{0, 0, 0, 1, 2, 2, 3, 4}));
  EXPECT_EQ(values(max_ones_profile(parse_word("0000"))), (std::vector<std::uint32_t>{0, 0, 0, 0, 0}));
  EXPECT_EQ(values(max_zeros_profile(parse_word("1111"))), (std::vector<std::uint32_t>{0, 0, 0, 0, 0}));
  EXPECT_EQ(values(min_ones_profile(parse_word("1111"))), (std::vector<std::uint32_t>{0, 1, 2, 3, 4}));
  EXPECT_EQ(max_ones_profile(parse_word("")).values().size(), 1U);
}

TEST(Profiles, LengthGuard) {
  const BinaryWord big = BinaryWord::repeat(Bit::one, kProfileLengthLimit + 1);
  EXPECT_THROW(max_ones_profile(big), ScaleError);
  EXPECT_THROW(min_ones_profile(big), ScaleError);
}

TEST(Profiles, MatchBruteForceExhaustively) {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const std::string& s : oracle::all_words(n)) {
      const BinaryWord w = parse_word(s);
      ASSERT_EQ(values(max_ones_profile(w)), oracle::factor_extreme(s, '1', true)) << s;
      ASSERT_EQ(values(max_zeros_profile(w)), oracle::factor_extreme(s, '0', true)) << s;
      ASSERT_EQ(values(min_ones_profile(w)), oracle::factor_extreme(s, '1', false)) << s;
    }
  }
}

namespace {

void expect_profile_laws(const BinaryWord& w) {
  const OnesProfile f1 = max_ones_profile(w);
  const OnesProfile f0 = max_zeros_profile(w);
  const OnesProfile min1 = min_ones_profile(w);
  const std::size_t n = w.size();
  ASSERT_EQ(f1[0], 0U);
  for (std::size_t k = 1; k <= n; ++k) {
    ASSERT_LE(f1[k] - f1[k - 1], 1U);
    ASSERT_GE(f1[k], f1[k - 1]);
    ASSERT_LE(f0[k] - f0[k - 1], 1U);
    ASSERT_EQ(min1[k] + f0[k], k);
  }
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i <= j; ++i) ASSERT_LE(f1[j] - f1[i], f1[j - i]) << w.to_string();
  }
  ASSERT_EQ(f1, max_ones_profile(reverse(w)));
  ASSERT_EQ(max_ones_profile(complement(w)).values().size(), f0.values().size());
  const OnesProfile flipped = max_ones_profile(complement(w));
  ASSERT_TRUE(std::equal(flipped.values().begin(), flipped.values().end(), f0.values().begin()));
}

}  // namespace

TEST(Profiles, LawsExhaustiveUpTo14) {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) expect_profile_laws(BinaryWord::from_uint(x, n));
  }
}

TEST(Profiles, LawsOnRandomLongerWords) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    expect_profile_laws(parse_word(oracle::random_word(rng, 15 + rng() % 120)));
  }
}

TEST(WordOps, ComplementAndReverse) {
  EXPECT_EQ(complement(parse_word("1001101")).to_string(), "0110010");
  EXPECT_EQ(reverse(parse_word("1001101")).to_string(), "1011001");
  EXPECT_TRUE(reverse(BinaryWord{}).empty());
}

TEST(WordOps, SlicingAndConcatenation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::string a = oracle::random_word(rng, rng() % 150);
    const std::string b = oracle::random_word(rng, rng() % 150);
    const BinaryWord wa = parse_word(a);
    const BinaryWord wb = parse_word(b);
    EXPECT_EQ((wa + wb).to_string(), a + b);
    const std::size_t cut = a.empty() ? 0 : rng() % a.size();
    EXPECT_EQ(wa.prefix(cut).to_string(), a.substr(0, cut));
    EXPECT_EQ(wa.suffix(cut).to_string(), a.substr(a.size() - cut));
    EXPECT_EQ(wa.appended(Bit::one).to_string(), a + "1");
    EXPECT_EQ(wa < wb, a < b) << a << " vs " << b;
    EXPECT_EQ(wa == wb, a == b);
  }
  EXPECT_THROW(parse_word("101").factor(3, 2), RangeError);
  EXPECT_THROW(parse_word("101").at(0), RangeError);
  EXPECT_EQ(power(parse_word("10"), 3).to_string(), "101010");
}
