#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "pcat/cli.hpp"

using namespace pcat;

namespace {

struct Output {
  int code = 0;
  std::string out;
  std::string err;
};

Output run_cfg(const RunConfig& c) {
  std::ostringstream out, err;
  Output o;
  o.code = run(c, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

RunConfig cfg_for(const std::string& command) {
  RunConfig c;
  c.command = command;
  return c;
}

Output exec(const std::string& args) {
  const std::string cmd = std::string(PCAT_CLI_PATH) + " " + args + " 2>/dev/null";
  Output o;
  std::FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) o.out.append(buf.data(), n);
  const int status = pclose(p);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

}  // namespace

TEST_CASE("enumerate counts pairings") {
  auto c = cfg_for("enumerate");
  c.k = 0;
  c.l = 8;
  c.pairings = true;
  const auto o = run_cfg(c);
  CHECK(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["count"] == 14);
  CHECK(j["status"] == "pass");
  CHECK(j["partitions"].size() == 14);
}

TEST_CASE("enumerate Catalan table") {
  auto c = cfg_for("enumerate");
  c.catalan_table = true;
  c.max_points = 6;
  const auto j = nlohmann::json::parse(run_cfg(c).out);
  CHECK(j["catalan_table"].size() == 6);
  CHECK(j["catalan_table"][5]["catalan"] == 132);
}

TEST_CASE("dims, gram and fatten-verify verbs") {
  auto d = cfg_for("dims");
  d.max_points = 4;
  d.pairings = true;
  d.expect_independent = true;
  d.n = 2;
  CHECK(run_cfg(d).code == 0);
  d.homomorphism = true;
  d.max_points = 4;
  CHECK(run_cfg(d).code == 0);
  auto g = cfg_for("gram");
  g.max_points = 3;
  CHECK(run_cfg(g).code == 0);
  auto f = cfg_for("fatten-verify");
  f.max_points = 4;
  CHECK(run_cfg(f).code == 0);
}

TEST_CASE("closure verb in both modes") {
  auto c = cfg_for("closure");
  c.mode = "plain";
  c.max_legs = 6;
  auto j = nlohmann::json::parse(run_cfg(c).out);
  CHECK(j["status"] == "pass");
  CHECK(j["dims"]["0,6"] == 5);
  c.mode = "projective";
  c.preset = "o-minus";
  c.max_legs = 4;
  c.slack = 4;
  j = nlohmann::json::parse(run_cfg(c).out);
  CHECK(j["reference_dims"].is_null());
  CHECK(j["saturated"] == true);
}

TEST_CASE("theorem-t passes for o-plus at n = 2 up to eight legs") {
  auto c = cfg_for("theorem-t");
  c.max_legs = 8;
  const auto o = run_cfg(c);
  CHECK(o.code == 0);
  CHECK(nlohmann::json::parse(o.out)["mismatches"].empty());
}

TEST_CASE("classical-check passes at n = 3") {
  auto c = cfg_for("classical-check");
  c.n = 3;
  c.samples = 100;
  c.seed = 7;
  c.tolerance = 1e-9;
  const auto o = run_cfg(c);
  CHECK(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["crossing_factorization"]["2"] == true);
  CHECK(j["crossing_factorization"]["3"] == true);
}

TEST_CASE("reports are byte-identical across runs and formats render") {
  auto c = cfg_for("twisted");
  c.max_legs = 6;
  CHECK(run_cfg(c).out == run_cfg(c).out);
  c.format = Format::csv;
  const auto csv = run_cfg(c).out;
  CHECK(csv.rfind("k,l,twisted,untwisted\n", 0) == 0);
  c.format = Format::markdown;
  const auto md = run_cfg(c).out;
  CHECK(md.rfind("## twisted: pass", 0) == 0);
  CHECK(md.find("| k | l | twisted | untwisted |") != std::string::npos);
}

TEST_CASE("usage errors") {
  auto c = cfg_for("enumerate");
  CHECK_THROWS_AS(run_cfg(c), UsageError);
  auto t = cfg_for("theorem-t");
  t.max_legs = 5;
  CHECK_THROWS_AS(run_cfg(t), UsageError);
  t.max_legs = 4;
  t.preset = "o";
  CHECK_THROWS_AS(run_cfg(t), UsageError);
  auto x = cfg_for("nope");
  CHECK_THROWS_AS(run_cfg(x), UsageError);
  auto s = cfg_for("closure");
  s.slack = -1;
  CHECK_THROWS_AS(run_cfg(s), UsageError);
}

TEST_CASE("binary: exit codes and output") {
  auto e = exec("enumerate --k 0 --l 8 --pairings");
  CHECK(e.code == 0);
  CHECK(nlohmann::json::parse(e.out)["count"] == 14);
  CHECK(exec("theorem-t --preset o-plus --n 2 --max-legs 8").code == 0);
  CHECK(exec("classical-check --n 3 --samples 100 --seed 7 --tol 1e-9").code == 0);
  CHECK(exec("theorem-t --bogus").code == 64);
  CHECK(exec("theorem-t --max-legs 5").code == 64);
  CHECK(exec("").code == 64);
  CHECK(exec("enumerate --k 0 --l 4 --out /nonexistent/dir/x.json").code == 74);
  CHECK(exec("closure --preset o-plus-bare --max-legs 4").code == 0);
  const auto a = exec("pu-po --max-legs 4 --max-points 6 --format csv");
  CHECK(a.code == 0);
  CHECK(a.out == exec("pu-po --max-legs 4 --max-points 6 --format csv").out);
}
