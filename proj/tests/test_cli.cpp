#include <gtest/gtest.h>

#include <cstdio>
#include <sys/wait.h>

#include "ttstar/serialize.hpp"

using namespace ttstar;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TTSTAR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, ConvertAsymptotic) {
  auto r = run("convert 4a --from asymptotic 3 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(0,-1,-1,-1)"), std::string::npos);
  EXPECT_NE(r.out.find("±4"), std::string::npos);
  EXPECT_NE(r.out.find("-6"), std::string::npos);
  auto z = run("convert 4a --from asymptotic 0 0 --format json");
  auto j = Json::parse(z.out);
  EXPECT_EQ(j["s1"], "0");
  EXPECT_EQ(j["s2"], "0");
}

TEST(Cli, ConvertFromNegativeK) {
  auto r = run("convert 5a --from k -2/3 -5/6 -5/6 -5/6 -5/6 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["gamma"], "2/3");
  EXPECT_EQ(j["delta"], "1/3");
  EXPECT_EQ(j["s1"], "1");
  EXPECT_EQ(j["s2"], "-1");
}

TEST(Cli, ConvertIrrational) {
  auto r = run("convert 4a --from asymptotic 1/2 0 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_TRUE(j["s1"].is_null());
  EXPECT_FALSE(j["integral"].get<bool>());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("convert 4a --from asymptotic 5 0").code, 3);
  EXPECT_EQ(run("convert 4a --from k 0 -1 -1 -1/2").code, 3);
  EXPECT_EQ(run("convert 4a --from asymptotic x 0").code, 2);
  EXPECT_EQ(run("convert 9z 0 0").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("qdo --weights 1,1 --degrees 3").code, 4);
  EXPECT_EQ(run("qdo --weights 2,2,2 --degrees 5").code, 4);
  EXPECT_EQ(run("qdo --weights 1,a").code, 2);
  EXPECT_EQ(run("verify --case 4a --inject-fault").code, 5);
  EXPECT_EQ(run("verify --case 4a --bound 3").code, 2);
  EXPECT_EQ(run("solve 4a 5 0").code, 3);
  EXPECT_EQ(run("solve 4a 3 1 --tol 1e-30").code, 6);
  EXPECT_EQ(run("solve 4a 3 1 --t-min -2").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, Enumerate) {
  auto r = run("enumerate 4a --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 13);
  EXPECT_EQ(lines(run("enumerate 4a --full --format csv").out), 20);
  EXPECT_EQ(lines(run("enumerate 6a --full --format csv").out), 20);
  EXPECT_EQ(lines(run("enumerate 5c --format csv").out), 20);
  EXPECT_EQ(lines(run("enumerate --raw --format csv").out), 34);
  EXPECT_EQ(lines(run("enumerate --all --full --format csv").out), 191);
}

TEST(Cli, EnumerateDeterministic) {
  auto a = run("enumerate --all --format json");
  auto b = run("enumerate --all --format json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run("enumerate --all --format latex");
  EXPECT_EQ(c.out, run("enumerate --all --format latex").out);
}

TEST(Cli, ThreadCapGivesSameOutput) {
  auto a = run("enumerate --all --format csv");
  std::string cmd = "env TTSTAR_THREADS=1 " + std::string(TTSTAR_CLI_PATH) + " enumerate --all --format csv";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  pclose(p);
  EXPECT_EQ(out, a.out);
}

TEST(Cli, JsonRoundTrip) {
  auto r = run("enumerate 5a --format json");
  ASSERT_EQ(r.code, 0);
  auto arr = Json::parse(r.out);
  ASSERT_EQ(arr.size(), 19u);
  Json again = Json::array();
  for (const auto& j : arr) again.push_back(to_json(record_from_json(j)));
  EXPECT_EQ(again.dump(2) + "\n", r.out);
}

TEST(Cli, Qdo) {
  auto r = run("qdo --weights 1,2,3 --degrees 2 --match");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("λ^4 θ^2(θ-1/3)(θ-2/3) - z"), std::string::npos);
  EXPECT_NE(r.out.find("P^{1,3}"), std::string::npos);
  auto s = run("qdo --weights 1,1,1,6 --degrees 2,3");
  EXPECT_NE(s.out.find("λ^4 θ^2(θ-1/6)(θ-5/6) - z"), std::string::npos);
}

TEST(Cli, Verify) {
  EXPECT_EQ(run("verify --case 4a --bound 12").code, 0);
  EXPECT_EQ(run("verify --case 5c --bound 12").code, 0);
  EXPECT_EQ(run(std::string("verify --tables ") + TTSTAR_TABLES_DIR).code, 0);
  EXPECT_EQ(run("verify --case 4a --tables /nonexistent").code, 1);
}

TEST(Cli, Solve) {
  auto r = run("solve 4a 0 0 --format json");
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_LT(j["residual"].get<double>(), 1e-10);
  EXPECT_LT(std::abs(j["fitted_gamma"].get<double>()), 1e-6);
  auto v = run("solve 4a 3 1 --format json");
  ASSERT_EQ(v.code, 0);
  auto jv = Json::parse(v.out);
  EXPECT_NEAR(jv["fitted_gamma"].get<double>(), 3, 0.05);
  EXPECT_NEAR(jv["fitted_delta"].get<double>(), 1, 0.05);
  auto c = run("solve 4a 1 0 --grid 64 --csv -");
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(lines(c.out), 65);
}
