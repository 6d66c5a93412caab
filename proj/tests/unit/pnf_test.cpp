#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "pnfkit/pnf.hpp"

using namespace pnfkit;

TEST(Pnf, KnownExamples) {
  const BinaryWord w = parse_word("1010011011000111001011");
  EXPECT_EQ(pnf1(w).to_string(), "1110100110100101100101");
  EXPECT_EQ(pnf0(w).to_string(), "0001101010101101010111");
  EXPECT_EQ(pnf1(parse_word("1001101")).to_string(), "1101001");
  EXPECT_EQ(pnf0(parse_word("1001101")).to_string(), "0011011");
  EXPECT_EQ(pnf0(parse_word("0000")).to_string(), "0000");

  const PnfPair pair = pnf_pair(parse_word("1001101"));
  EXPECT_EQ(pair.source_length, 7U);
  EXPECT_EQ(pair.pnf1.to_string(), "1101001");
}

TEST(Pnf, Idempotent) {
  const BinaryWord u = pnf1(parse_word("10110"));
  EXPECT_EQ(pnf1(u), u);
  for (std::size_t n = 0; n <= 10; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const BinaryWord w = BinaryWord::from_uint(x, n);
      ASSERT_EQ(pnf1(pnf1(w)), pnf1(w));
      ASSERT_EQ(pnf0(pnf0(w)), pnf0(w));
    }
  }
}

TEST(Pnf, NormalFormsAreNormalAndShareTheProfile) {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const std::string& s : oracle::all_words(n)) {
      const BinaryWord w = parse_word(s);
      const PnfPair pair = pnf_pair(w);
      ASSERT_TRUE(oracle::prefix_normal(pair.pnf1.to_string(), '1')) << s;
      ASSERT_TRUE(oracle::prefix_normal(pair.pnf0.to_string(), '0')) << s;
      ASSERT_EQ(max_ones_profile(pair.pnf1), max_ones_profile(w));
      ASSERT_EQ(max_zeros_profile(pair.pnf0), max_zeros_profile(w));
    }
  }
}

TEST(Pnf, UniqueNormalWordPerClassUpTo14) {
  for (std::size_t n = 0; n <= 14; ++n) {
    std::map<std::vector<std::uint32_t>, std::vector<BinaryWord>> classes;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const BinaryWord w = BinaryWord::from_uint(x, n);
      const OnesProfile p = max_ones_profile(w);
      classes[{p.values().begin(), p.values().end()}].push_back(w);
    }
    for (const auto& [profile, members] : classes) {
      std::size_t normal = 0;
      const BinaryWord form = pnf1(members.front());
      for (const BinaryWord& w : members) {
        if (oracle::prefix_normal(w.to_string(), '1')) {
          ++normal;
          ASSERT_EQ(w, form);
        }
        ASSERT_EQ(pnf1(w), form);
      }
      ASSERT_EQ(normal, 1U) << "n=" << n;
      if (members.size() == 1) {
        // Singleton classes hold a prefix normal palindrome.
        ASSERT_EQ(members.front(), reverse(members.front()));
      }
    }
  }
}

TEST(Pnf, ReversalInvarianceAndComplementDuality) {
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const BinaryWord w = BinaryWord::from_uint(x, n);
      ASSERT_EQ(pnf1(w), pnf1(reverse(w)));
      ASSERT_EQ(pnf0(w), pnf0(reverse(w)));
      ASSERT_EQ(pnf0(w), complement(pnf1(complement(w))));
    }
  }
}

TEST(PrefixEquivalent, Examples) {
  EXPECT_TRUE(prefix_equivalent(parse_word("11010"), parse_word("10110"), Bit::one));
  EXPECT_FALSE(prefix_equivalent(parse_word("11010"), parse_word("10110"), Bit::zero));
  EXPECT_TRUE(prefix_equivalent(parse_word("01011"), parse_word("10101"), Bit::zero));
  EXPECT_TRUE(prefix_equivalent(parse_word("01101"), parse_word("01011"), Bit::one));
  EXPECT_TRUE(prefix_equivalent(parse_word("01101"), parse_word("10110"), Bit::zero));
  EXPECT_FALSE(prefix_equivalent(parse_word("1"), parse_word("10"), Bit::one));
}

TEST(ParikhSet, Examples) {
  using V = ParikhVector;
  const ParikhSet s011 = parikh_set(parse_word("011"));
  EXPECT_EQ(s011.members(), (std::set<V>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}}));
  EXPECT_EQ(parikh_set(BinaryWord{}).members(), (std::set<V>{{0, 0}}));
  std::set<V> expected = s011.members();
  expected.erase({.zeros = 0, .ones = 2});
  EXPECT_EQ(parikh_set(parse_word("101")).members(), expected);
  EXPECT_THROW(parikh_set(BinaryWord::repeat(Bit::one, 25)), ScaleError);
  EXPECT_NO_THROW(parikh_set(BinaryWord::repeat(Bit::one, 25), Guard::bypass));
}

TEST(ParikhSet, MatchesAllFactorsAndIsIntervalClosed) {
  for (std::size_t n = 0; n <= 14; ++n) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); x += (n > 11 ? 7 : 1)) {
      const std::string s = oracle::word_of(x, n);
      const ParikhSet set = parikh_set(parse_word(s));
      if (n <= 11) {
        std::set<ParikhVector> brute;
        for (auto [z, o] : oracle::parikh_set(s)) brute.insert({.zeros = z, .ones = o});
        ASSERT_EQ(set.members(), brute) << s;
      }
      // Per total length the ones-counts form one contiguous interval.
      std::map<std::size_t, std::vector<std::size_t>> by_total;
      for (const ParikhVector& v : set.members()) by_total[v.total()].push_back(v.ones);
      for (const auto& [k, ones] : by_total) {
        const auto [lo, hi] = std::minmax_element(ones.begin(), ones.end());
        ASSERT_EQ(*hi - *lo + 1, ones.size()) << s << " k=" << k;
      }
    }
  }
}

TEST(ParikhSetEqual, Examples) {
  EXPECT_TRUE(parikh_set_equal(parse_word("011"), parse_word("110")));
  EXPECT_EQ(oracle::parikh_set("011"), oracle::parikh_set("110"));
  EXPECT_FALSE(parikh_set_equal(parse_word("011"), parse_word("101")));
  EXPECT_TRUE(parikh_set_equal(parse_word("1001101"), parse_word("1001101")));
  EXPECT_FALSE(parikh_set_equal(parse_word("1"), parse_word("10")));
}

TEST(ParikhSetEqual, AgreesWithBruteForceForAllPairsUpTo10) {
  for (std::size_t n = 0; n <= 10; ++n) {
    const auto words = oracle::all_words(n);
    std::vector<std::set<std::pair<std::size_t, std::size_t>>> sets;
    std::vector<BinaryWord> parsed;
    for (const auto& s : words) {
      sets.push_back(oracle::parikh_set(s));
      parsed.push_back(parse_word(s));
    }
    if (n <= 7) {
      for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = 0; j < words.size(); ++j) {
          ASSERT_EQ(parikh_set_equal(parsed[i], parsed[j]), sets[i] == sets[j]) << words[i] << " " << words[j];
        }
      }
      continue;
    }
    // Larger n: the two keys must induce the same partition of all words,
    // which is equivalent to agreeing on every pair.
    std::map<std::pair<std::string, std::string>, std::size_t> by_forms;
    std::map<std::set<std::pair<std::size_t, std::size_t>>, std::size_t> by_sets;
    for (std::size_t i = 0; i < words.size(); ++i) {
      const PnfPair p = pnf_pair(parsed[i]);
      const auto [form_it, form_new] = by_forms.emplace(std::make_pair(p.pnf1.to_string(), p.pnf0.to_string()), i);
      const auto [set_it, set_new] = by_sets.emplace(sets[i], i);
      ASSERT_EQ(form_new, set_new) << words[i];
      ASSERT_EQ(form_it->second, set_it->second) << words[i];
      ASSERT_TRUE(parikh_set_equal(parsed[i], parsed[form_it->second]));
    }
  }
}
