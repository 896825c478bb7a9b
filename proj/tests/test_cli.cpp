#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "weylwords/cli.hpp"
#include "weylwords/error.hpp"
#include "weylwords/export.hpp"
#include "weylwords/verify.hpp"

using namespace weylwords;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "weylwords");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("weylwords_test_" + name);
}

}  // namespace

TEST(Cli, Word) {
  auto r = run({"word", "C4", "e2+e4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s24342  (length 5)\n");
  EXPECT_EQ(run({"word", "G2", "3,2"}).out, "s21212  (length 5)\n");
  EXPECT_EQ(run({"word", "A5", "e1-e2"}).out, "s1  (length 1)\n");
  EXPECT_EQ(run({"word", "C4", "2e2"}).out, "s23432  (length 5)\n");
  EXPECT_EQ(run({"word", "B4", "e2"}).out, "s23432  (length 5)\n");
}

TEST(Cli, WordErrors) {
  EXPECT_EQ(run({"word", "C4", "1,0,1,0"}).code, kExitUsage);
  EXPECT_EQ(run({"word", "C4", "e1+e9"}).code, kExitUsage);
  EXPECT_EQ(run({"word", "C4", "e1+"}).code, kExitUsage);
  EXPECT_EQ(run({"word", "C4", "e2-e1"}).code, kExitUsage);
  EXPECT_EQ(run({"word", "E6", "e1+e2"}).code, kExitUsage);
  EXPECT_EQ(run({"word", "D3", "e1+e2"}).code, kExitUsage);
  const auto r = run({"word", "C4", "1,0,1,0"});
  EXPECT_NE(r.err.find("NotARoot"), std::string::npos);
}

TEST(Cli, ParseRootSpec) {
  const auto c4 = RootSystem::build(TypeLabel::parse("C4"));
  EXPECT_EQ(parse_root_spec(c4, "e1+e2"), Root({1, 2, 2, 1}));
  EXPECT_EQ(parse_root_spec(c4, "2e1"), Root({2, 2, 2, 1}));
  EXPECT_EQ(parse_root_spec(c4, "1,2,2,1"), Root({1, 2, 2, 1}));
  EXPECT_THROW(parse_root_spec(c4, "e1e2"), Error);
  EXPECT_THROW(parse_root_spec(c4, "-1,-2,-2,-1"), Error);
}

TEST(Cli, TableText) {
  const auto r = run({"table", "G2"});
  EXPECT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 8u);  // comment, header, 6 rows
  EXPECT_NE(ls.back().find("3α1+2α2"), std::string::npos);
  EXPECT_TRUE(ls.back().ends_with("s21212"));
  EXPECT_EQ(lines(run({"table", "A1"}).out).size(), 3u);
}

TEST(Cli, TableJson) {
  const auto r = run({"table", "E8", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("type"), "E8");
  EXPECT_EQ(j.at("rank"), 8);
  EXPECT_EQ(j.at("entries").size(), 120u);
  const auto& first = j.at("entries").at(0);
  for (const char* key : {"root_coeffs", "coroot_coeffs", "euclid", "word", "length", "palindrome"})
    EXPECT_TRUE(first.contains(key)) << key;
  EXPECT_EQ(run({"table", "E8", "--format", "yaml"}).code, kExitUsage);
}

TEST(Cli, TableCsv) {
  const auto ls = lines(run({"table", "C3", "--format", "csv"}).out);
  ASSERT_EQ(ls.size(), 10u);
  EXPECT_EQ(ls[0], "label,euclidean,expansion,coroot,length,palindrome,conjugator,word");
}

TEST(Cli, Verify) {
  auto r = run({"verify", "F4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("24/24 ok"), std::string::npos);
  EXPECT_EQ(run({"verify", "D3"}).code, kExitUsage);
  EXPECT_EQ(run({"verify"}).code, kExitUsage);
}

TEST(Cli, VerifyAllWithReport) {
  const auto path = temp_file("report.json");
  const auto r = run({"verify", "all", "--report", path.string()});
  EXPECT_EQ(r.code, 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), standard_labels().size());
  int checked = 0;
  for (const auto& rep : j) {
    EXPECT_TRUE(rep.at("ok").get<bool>());
    checked += rep.at("checked").get<int>();
  }
  int expected = 120 + 63 + 36 + 24 + 6;
  for (int n = 1; n <= 8; ++n) expected += n * (n + 1) / 2;
  for (int n = 2; n <= 8; ++n) expected += 2 * n * n;
  for (int n = 4; n <= 8; ++n) expected += n * n - n;
  EXPECT_EQ(checked, expected);
  std::filesystem::remove(path);
}

TEST(Cli, VerifyMaxGroupOrder) {
  const auto r = run({"verify", "F4", "--max-group-order", "100"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("group enumeration"), std::string::npos);
  EXPECT_NE(run({"verify", "F4"}).out.find("group enumeration"), std::string::npos);
}

TEST(Cli, Corrections) {
  const auto r = run({"corrections"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 5u);
  EXPECT_NE(r.out.find("omits α_2 from Φ+"), std::string::npos);
  EXPECT_NE(r.out.find("omits α_i from this expansion"), std::string::npos);
}

TEST(Cli, CheckDetectsTampering) {
  const auto path = temp_file("g2.json");
  auto j = nlohmann::json::parse(run({"table", "G2", "--format", "json"}).out);
  {
    std::ofstream(path) << j.dump();
  }
  EXPECT_EQ(run({"check", path.string()}).code, 0);
  j["entries"][5]["word"] = "s12121";
  {
    std::ofstream(path) << j.dump();
  }
  const auto r = run({"check", path.string()});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_NE(r.out.find("WRONG_ELEMENT"), std::string::npos);
  {
    std::ofstream(path) << "{\"type\": 3}";
  }
  EXPECT_EQ(run({"check", path.string()}).code, kExitUsage);
  std::filesystem::remove(path);
}

TEST(Export, JsonRoundTripReverifies) {
  for (const auto& label : standard_labels()) {
    SCOPED_TRACE(label.str());
    const auto sys = RootSystem::build(label);
    const auto rec = make_export(sys);
    ASSERT_EQ(rec.entries.size(), sys.positives().size());
    const auto back = export_from_json(nlohmann::json::parse(to_json(rec).dump()));
    EXPECT_EQ(back.type, label);
    ASSERT_EQ(back.entries.size(), rec.entries.size());
    std::map<Root, Word> words;
    for (std::size_t k = 0; k < rec.entries.size(); ++k) {
      EXPECT_EQ(back.entries[k].root, rec.entries[k].root);
      EXPECT_EQ(back.entries[k].word, rec.entries[k].word);
      EXPECT_EQ(back.entries[k].euclid, rec.entries[k].euclid);
      EXPECT_EQ(parse_word(render_word(rec.entries[k].word)), rec.entries[k].word);
      words.emplace(back.entries[k].root, back.entries[k].word);
    }
    EXPECT_TRUE(verify_table(sys, words).ok());
  }
}

TEST(Export, Expansion) {
  EXPECT_EQ(render_expansion(Root({3, 2})), "3α1+2α2");
  EXPECT_EQ(render_expansion(Root({0, 1, 0})), "α2");
}
