#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = pnfkit::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "pnfkit_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream s(text);
  for (std::string line; std::getline(s, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, Pnf) {
  EXPECT_EQ(invoke({"pnf", "1001101", "--bit", "both"}).out, "PNF1=1101001\nPNF0=0011011\n");
  EXPECT_EQ(invoke({"pnf", "0000"}).out, "PNF1=0000\n");
  EXPECT_EQ(invoke({"pnf", "1001101", "--bit", "0"}).out, "PNF0=0011011\n");
  const Outcome bad = invoke({"pnf", "10a1"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("position 3"), std::string::npos);
  EXPECT_EQ(invoke({"pnf", "--bit", "both", "--format", "csv", "-"}, "1001101\n").out, "PNF1,PNF0\n1101001,0011011\n");
}

TEST(Cli, Check) {
  EXPECT_EQ(invoke({"check", "11010", "--bit", "1"}).out, "normal\n");
  EXPECT_EQ(invoke({"check", "10110", "--bit", "1"}).out, "not normal\n");
  const Outcome all = invoke({"check", "11010", "--method", "all"});
  EXPECT_EQ(all.code, 0);
  EXPECT_EQ(all.out, "def: normal\nsubadd: normal\npos: normal\nsuperadd: normal\ngaps: normal\n");
  EXPECT_EQ(invoke({"check", "0011011", "--bit", "0", "--method", "gaps"}).out, "normal\n");
  EXPECT_EQ(invoke({"check", "11010", "--method", "bogus"}).code, 2);
}

TEST(Cli, Index) {
  const auto word = scratch("w.txt");
  const auto ix = scratch("w.ix");
  std::ofstream(word) << "1001101\n";
  ASSERT_EQ(invoke({"index", "build", word.string(), "-o", ix.string()}).code, 0);
  EXPECT_EQ(invoke({"index", "query", ix.string(), "--ones", "3", "--zeros", "2"}).out, "yes\n");
  EXPECT_EQ(invoke({"index", "query", ix.string(), "--ones", "0", "--zeros", "3"}).out, "no\n");
  EXPECT_EQ(invoke({"index", "query", ix.string(), "--ones", "0", "--zeros", "0"}).out, "yes\n");
  const Outcome batch = invoke({"index", "query-batch", ix.string(), "-", "--format", "csv"}, "ones,zeros\n3,2\n0,3\n\n2,2\n");
  EXPECT_EQ(batch.out, "ones,zeros,answer\n3,2,yes\n0,3,no\n2,2,yes\n");
  EXPECT_EQ(invoke({"index", "query-batch", ix.string(), "-"}, "1;2\n").code, 2);
  EXPECT_EQ(invoke({"index", "query", scratch("missing.ix").string(), "--ones", "1", "--zeros", "1"}).code, 2);
}

TEST(Cli, Enum) {
  EXPECT_EQ(lines(invoke({"enum", "4", "--bit", "1"}).out),
            (std::vector<std::string>{"1111", "1110", "1101", "1100", "1010", "1001", "1000", "0000"}));
  EXPECT_EQ(invoke({"enum", "16", "--count-only"}).out, "7568\n");
  const std::string classes = invoke({"enum", "4", "--classes"}).out;
  EXPECT_NE(classes.find("class_count=8\n"), std::string::npos);
  EXPECT_NE(classes.find("max_class_size=4\n"), std::string::npos);
  const auto listed = lines(invoke({"enum", "4", "--list-classes", "--format", "csv"}).out);
  ASSERT_EQ(listed.size(), 9U);
  EXPECT_EQ(listed[7], "1000,4,1000 0100 0010 0001");
  EXPECT_EQ(invoke({"enum", "1", "--ecrit", "--format", "csv"}).out, "n,pnw,ecrit\n1,2,1\n");
  EXPECT_EQ(invoke({"enum", "4", "--density", "3"}).out, "1110\n1101\n");
  EXPECT_EQ(invoke({"enum", "4", "--density", "5"}).code, 1);
  EXPECT_EQ(invoke({"enum", "31", "--count-only"}).code, 3);
  EXPECT_EQ(invoke({"enum"}).code, 2);
}

TEST(Cli, EnumIsDeterministicAcrossThreadCounts) {
  ::setenv("PNFKIT_THREADS", "1", 1);
  const std::string one = invoke({"enum", "18", "--ecrit", "--format", "json"}).out;
  ::setenv("PNFKIT_THREADS", "4", 1);
  const std::string four = invoke({"enum", "18", "--ecrit", "--format", "json"}).out;
  ::unsetenv("PNFKIT_THREADS");
  EXPECT_EQ(one, four);
}

TEST(Cli, Region) {
  const auto rows = lines(invoke({"region", "1111"}).out);
  ASSERT_EQ(rows.size(), 6U);
  for (std::size_t k = 0; k <= 4; ++k) {
    const std::string h = std::to_string(k);
    EXPECT_EQ(rows[k + 1], h + "," + h + "," + h + "," + h);
  }
  // 5 ones and 6 zeros: height -1 at abscissa 11 lies between the envelopes.
  const auto fig = lines(invoke({"region", "1010011011000111001011", "--format", "csv"}).out);
  ASSERT_EQ(fig.size(), 24U);
  int k = 0, w = 0, upper = 0, lower = 0;
  ASSERT_EQ(std::sscanf(fig[12].c_str(), "%d,%d,%d,%d", &k, &w, &upper, &lower), 4);
  EXPECT_EQ(k, 11);
  EXPECT_LE(lower, -1);
  EXPECT_GE(upper, -1);
  for (std::size_t i = 1; i < fig.size(); ++i) {
    ASSERT_EQ(std::sscanf(fig[i].c_str(), "%d,%d,%d,%d", &k, &w, &upper, &lower), 4);
    EXPECT_LE(lower, w);
    EXPECT_LE(w, upper);
  }
}

TEST(Cli, GfExtBounds) {
  const auto gf = lines(invoke({"gf", "4", "10", "--format", "csv"}).out);
  ASSERT_EQ(gf.size(), 12U);
  EXPECT_EQ(gf[5], "4,1");
  EXPECT_EQ(gf[11], "10,39");
  EXPECT_EQ(invoke({"ext", "10", "7", "4"}).out, invoke({"enum", "6", "--density", "4", "--count-only"}).out);
  EXPECT_EQ(invoke({"ext", "011", "3"}).code, 1);
  const auto bounds = lines(invoke({"bounds", "16"}).out);
  EXPECT_EQ(bounds[16], "16,7568,8192.0,1.52587890625e-05,true,true");
  EXPECT_EQ(bounds.back(), "upper_threshold=14");
  EXPECT_EQ(invoke({"gf", "7", "10"}).code, 1);
}

TEST(Cli, Extras) {
  EXPECT_EQ(invoke({"profile", "1001101"}).out, "k=0..7\n0,1,2,2,3,3,3,4\n");
  EXPECT_EQ(invoke({"profile", "1001101", "--kind", "min1", "--format", "csv"}).out.substr(0, 8), "k,value\n");
  EXPECT_EQ(invoke({"parikh", "10", "--format", "csv"}).out, "zeros,ones\n0,0\n0,1\n1,0\n1,1\n");
  EXPECT_EQ(invoke({"lyndon", "0101"}).out, "lyndon=false\nnecklace=true\nprenecklace=true\n");
  EXPECT_EQ(invoke({"separate", "11", "10"}).out, "suffix=0011\nnormal=v\n");
  EXPECT_EQ(invoke({"separate", "10", "10"}).code, 1);
}

TEST(Cli, JsonMirrorsCsv) {
  const std::string json = invoke({"ext", "10", "7", "4", "--format", "json"}).out;
  EXPECT_NE(json.find("\"w\": \"10\""), std::string::npos);
  EXPECT_NE(json.find("\"m\": 7"), std::string::npos);
  EXPECT_NE(json.find("\"d\": 4"), std::string::npos);
  EXPECT_EQ(invoke({"ext", "10", "7", "4", "--format", "csv"}).out.substr(0, 10), "w,m,d,coun");
}

TEST(Cli, InputSources) {
  const auto word = scratch("in.txt");
  std::ofstream(word) << "  1001101  \n";
  EXPECT_EQ(invoke({"pnf", "--input", word.string()}).out, "PNF1=1101001\n");
  EXPECT_EQ(invoke({"pnf", "--input", "-"}, "1001101").out, "PNF1=1101001\n");
  EXPECT_EQ(invoke({"pnf", "1", "--input", word.string()}).code, 2);
  EXPECT_EQ(invoke({"pnf"}).code, 2);
  EXPECT_EQ(invoke({"pnf", std::string(4097, '1')}).code, 2);
  EXPECT_EQ(invoke({"pnf", std::string(4096, '1')}).code, 0);
  EXPECT_EQ(invoke({"pnf", "--bogus", "1"}).code, 2);
}

TEST(Cli, RepeatedInvocationsAreByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"enum", "12", "--format", "json"},
                                                                {"bounds", "12", "--format", "csv"},
                                                                {"enum", "--ratios", "12"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

TEST(Cli, Help) {
  const Outcome help = invoke({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("pnf"), std::string::npos);
}
