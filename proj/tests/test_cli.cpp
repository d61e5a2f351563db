#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

using Json = nlohmann::json;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the ci2 binary with the given argument string; stderr is discarded.
Run ci2(const std::string& args) {
  std::string cmd = std::string(CI2_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json json_of(const Run& r) { return Json::parse(r.out); }

const char* kPair = R"(--vars x,y,z,w -f "x^2+y^2+z^2+w^2" -g "wxz+y^3")";

}  // namespace

TEST(Cli, HilbertExample) {
  auto r = ci2(std::string("hilbert ") + kPair + " --algebra A");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = json_of(r);
  EXPECT_EQ(j["schema"], 1);
  for (const char* k : {"inputs", "results", "timings_ms"}) EXPECT_TRUE(j.contains(k)) << k;
  const auto& res = j["results"];
  for (const char* k : {"hp", "finite", "tail", "betti", "checks"}) EXPECT_TRUE(res.contains(k)) << k;
  for (const char* k : {"thm1", "prop1_radical", "prop2", "conj1", "conj2"})
    EXPECT_TRUE(res["checks"].contains(k)) << k;
  EXPECT_EQ(res["hp"], Json::parse("[1,4,9,10,5,1]"));
  EXPECT_EQ(res["finite"], true);
  EXPECT_EQ(res["checks"]["thm1"], true);
  EXPECT_EQ(res["checks"]["prop2"], true);
  EXPECT_EQ(res["checks"]["conj2"], true);
}

TEST(Cli, HilbertInfiniteSeries) {
  auto r = ci2(R"~(hilbert -f "x^2+y^2+z^2+w^2" -g "xzw+(x+z)(y^2-x^2-z^2)" --algebra B --max-degree 8)~");
  ASSERT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["results"]["finite"], false);
  EXPECT_EQ(j["results"]["tail"], 2);
  EXPECT_EQ(j["results"]["hp"], Json::parse("[1,4,9,9,5,2,2,2,2]"));
}

TEST(Cli, FormulaExamples) {
  auto r = ci2("formula --prop2 B -d 3 -e 3 --expand");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["results"]["hp"], Json::parse("[1,4,10,18,21,16,8,2]"));
  auto s = ci2("formula --smooth -n 2 -d 3");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(json_of(s)["results"]["hp"], Json::parse("[1,3,3,1]"));
  EXPECT_EQ(ci2("formula -d 3").code, 2);
  EXPECT_EQ(ci2("formula --prop2 A --smooth -d 3 -e 3").code, 2);
  EXPECT_EQ(ci2("formula --prop2 A -d 3").code, 2);
}

TEST(Cli, Check) {
  auto r = ci2(R"~(check -f "x^2+y^2+z^2+w^2" -g "xzw+(x+z)(y^2-x^2-z^2)")~");
  ASSERT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["results"]["checks"]["thm1"], true);
  EXPECT_EQ(j["results"]["checks"]["prop1_radical"], true);
}

TEST(Cli, BettiWithComparison) {
  auto r = ci2(std::string("betti ") + kPair + " --algebra B --compare-conjecture");
  ASSERT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["results"]["checks"]["conj1"], true);
  EXPECT_EQ(j["results"]["betti"][0], Json::parse("[0,0,1]"));
}

TEST(Cli, ExamplesEx1) {
  auto r = ci2("examples --which ex1");
  ASSERT_EQ(r.code, 0);
  auto ex = json_of(r)["results"]["examples"]["ex1"];
  EXPECT_EQ(ex["ok"], true);
  const auto& item = ex["items"][0];
  EXPECT_EQ(item["g_in_I"]["computed"], false);
  EXPECT_EQ(item["radical_equal"]["computed"], true);
  EXPECT_EQ(item["radical_maximal_I"]["computed"], true);
  EXPECT_EQ(item["radical_maximal_J"]["computed"], true);
}

TEST(Cli, ExamplesAreByteIdentical) {
  auto a = ci2("examples --which all");
  auto b = ci2("examples --which all");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST(Cli, ParseErrorsExitTwo) {
  auto r = ci2(R"(hilbert -f "x^2+y^2+z^2+w^2" -g "wxz+q^3")");
  EXPECT_EQ(r.code, 2);
  auto j = json_of(r);
  EXPECT_EQ(j["error"]["kind"], "parse");
  EXPECT_EQ(j["error"]["offset"], 4);
  EXPECT_EQ(ci2("hilbert -f x").code, 2);
  EXPECT_EQ(ci2("nonsense").code, 2);
  EXPECT_EQ(ci2(std::string("hilbert ") + kPair + " --algebra C").code, 2);
  EXPECT_EQ(ci2(R"(hilbert --vars x,x -f x -g x)").code, 2);
}

TEST(Cli, PreconditionsExitThree) {
  EXPECT_EQ(ci2(R"(hilbert -f "x^2+y" -g "wxz+y^3")").code, 3);
  EXPECT_EQ(ci2(R"(betti -f "x^2+y^2+z^2+w^2" -g "x-y^2")").code, 3);
}

TEST(Cli, SingularFirstFormIsReportedNotChecked) {
  auto r = ci2(R"(check -f "wxz+y^3" -g "x^2+y^2+z^2+w^2")");
  ASSERT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["results"]["smooth_f"], false);
  EXPECT_TRUE(j["results"]["ci"].is_null());
  EXPECT_TRUE(j["results"]["checks"]["thm1"].is_null());
  EXPECT_TRUE(j["results"]["checks"]["prop1_radical"].is_null());
}

TEST(Cli, BudgetExitsFour) {
  EXPECT_EQ(ci2("sweep --dmax 1 --emax 1 --seeds 1 --resample-budget 0").code, 4);
}

TEST(Cli, SweepWithCsv) {
  auto path = std::filesystem::temp_directory_path() / "ci2_cli_sweep.csv";
  auto r = ci2("sweep --dmax 2 --emax 2 --seeds 1 --csv " + path.string());
  ASSERT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["results"]["checks"]["thm1"], true);
  EXPECT_EQ(j["results"]["checks"]["prop2"], true);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "d,e,seed,variant,k,coefficient");
  std::filesystem::remove(path);
}

TEST(Cli, TextFormat) {
  auto r = ci2(std::string("--format text hilbert ") + kPair);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find('{'), std::string::npos);
  EXPECT_NE(r.out.find("[1,4,9,10,5,1]"), std::string::npos) << r.out;
}
