#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "cli.hpp"

using namespace rmt;
using namespace rmt::cli;

namespace {

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("value formatting") {
  CHECK(format_value(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_value(0.0) == "0");
  // 17 significant digits round-trip doubles exactly
  for (double v : {0.1, 1.0 / 3.0, 12345.678901234567, -2.2250738585072014e-308})
    CHECK(std::stod(format_value(v)) == v);
}

TEST_CASE("eval prints the three log quantities") {
  RunConfig cfg;
  cfg.ensemble.kind = EnsembleKind::linear;
  cfg.ensemble.n = 2;
  cfg.ensemble.beta = 2;
  cfg.point = {0.0, 1.0};
  std::ostringstream out, err;
  CHECK(cmd_eval(cfg, out, err) == kExitOk);
  CHECK(out.str() == "log_j,log_p,log_density\n0,0,0\n");
}

TEST_CASE("eval renders a vanishing density with the -inf token") {
  RunConfig cfg;
  cfg.ensemble.kind = EnsembleKind::linear;
  cfg.ensemble.n = 2;
  cfg.ensemble.beta = 2;
  cfg.point = {1.0, 1.0};
  std::ostringstream out, err;
  CHECK(cmd_eval(cfg, out, err) == kExitOk);
  CHECK(out.str().find("-inf") != std::string::npos);
}

TEST_CASE("eval rejects a wrong-arity point") {
  RunConfig cfg;
  cfg.ensemble.kind = EnsembleKind::linear;
  cfg.ensemble.n = 3;
  cfg.point = {1.0, 2.0};
  std::ostringstream out, err;
  CHECK(cmd_eval(cfg, out, err) == kExitUsage);
  CHECK_FALSE(err.str().empty());
}

TEST_CASE("table emits midpoint rows in lexicographic order") {
  RunConfig cfg;
  cfg.ensemble.kind = EnsembleKind::sl2r_alg1;
  cfg.grid = 4;
  std::ostringstream out, err;
  CHECK(cmd_table(cfg, out, err) == kExitOk);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x1,log_j,log_p");
  std::getline(in, line);
  CHECK(line.substr(0, line.find(',')) == "-2.25");  // -3 + 0.75
  CHECK(count_lines(out.str()) == 5);
}

TEST_CASE("table caps the rank") {
  RunConfig cfg;
  cfg.ensemble.kind = EnsembleKind::group_complex;  // arity 2n
  cfg.ensemble.cgroup = ComplexGroup::sl;
  cfg.ensemble.n = 2;
  std::ostringstream out, err;
  CHECK(cmd_table(cfg, out, err) == kExitUsage);
}

TEST_CASE("sample emits a seed header and honors count zero") {
  RunConfig cfg;
  cfg.ensemble.kind = EnsembleKind::linear;
  cfg.ensemble.n = 2;
  cfg.ensemble.beta = 2;
  cfg.ensemble.envelope = Envelope::gaussian_trace(0.5);
  cfg.seed = 5;
  cfg.count = 0;
  std::ostringstream out, err;
  CHECK(cmd_sample(cfg, out, err) == kExitOk);
  CHECK(out.str() == "# seed=5\nx1,x2\n");
}

TEST_CASE("sample refuses density-only kinds with a clear message") {
  RunConfig cfg;
  cfg.ensemble.kind = EnsembleKind::group_complex;
  cfg.ensemble.cgroup = ComplexGroup::sp;
  cfg.ensemble.n = 2;
  std::ostringstream out, err;
  CHECK(cmd_sample(cfg, out, err) == kExitUsage);
  CHECK(err.str().find("no matrix-level sampler") != std::string::npos);
}

TEST_CASE("list enumerates the fifteen kinds") {
  RunConfig cfg;
  std::ostringstream out, err;
  CHECK(cmd_list(cfg, out, err) == kExitOk);
  CHECK(count_lines(out.str()) == 16);  // header + 15 kinds
  cfg.format = "jsonl";
  std::ostringstream jout;
  CHECK(cmd_list(cfg, jout, err) == kExitOk);
  CHECK(count_lines(jout.str()) == 15);
}

TEST_CASE("suite parsing") {
  std::istringstream in(
      "# comment\n"
      "[check]\n"
      "name = a\n"
      "kind = pointwise\n"
      "pair = circular\n"
      "n = 3\n"
      "beta = 4\n"
      "\n"
      "[check]\n"
      "name = b\n"
      "kind = mc_vs_quad\n"
      "ensemble = linear\n"
      "env = gaussian_trace\n"
      "a = 0.5\n"
      "observable = gap_sq\n"
      "samples = 1234\n"
      "rel = 0.01\n");
  const auto suite = parse_suite(in);
  REQUIRE(suite.size() == 2);
  CHECK(suite[0].kind == CheckKind::pointwise_equality);
  CHECK(suite[0].pair == DualFormPair::circular);
  CHECK(suite[0].ensemble.n == 3);
  CHECK(suite[0].ensemble.beta == 4);
  CHECK(suite[1].ensemble.kind == EnsembleKind::linear);
  CHECK(suite[1].ensemble.envelope.kind == EnvelopeKind::gaussian_trace);
  CHECK(suite[1].observable == "gap_sq");
  CHECK(suite[1].sample_count == 1234);
  CHECK(suite[1].tol.rel == 0.01);
}

TEST_CASE("suite parsing rejects malformed input") {
  std::istringstream stray("name = x\n");
  CHECK_THROWS(parse_suite(stray));
  std::istringstream unknown("[check]\nname = x\nwidget = 3\n");
  CHECK_THROWS(parse_suite(unknown));
  std::istringstream nameless("[check]\nkind = invariance\n");
  CHECK_THROWS(parse_suite(nameless));
}

TEST_CASE("check returns one for failures and two for bad suites") {
  const char* path = "cli_forced_fail_suite.tmp";
  {
    std::ofstream f(path);
    f << "[check]\nname = forced\nkind = mc_vs_quad\nensemble = linear\n"
         "n = 2\nbeta = 1\nenv = gaussian_trace\na = 0.5\n"
         "samples = 2000\nnodes = 32\nrel = 0\nsigma = 0\n";
  }
  RunConfig cfg;
  cfg.suite = path;
  std::ostringstream out, err;
  CHECK(cmd_check(cfg, out, err) == kExitCheckFailed);
  CHECK(out.str().find("forced") != std::string::npos);
  CHECK(out.str().find("fail") != std::string::npos);
  std::remove(path);

  RunConfig missing;
  missing.suite = "no_such_suite_file.tmp";
  std::ostringstream out2, err2;
  CHECK(cmd_check(missing, out2, err2) == kExitUsage);
}

TEST_CASE("argv entry point maps parse errors to the usage exit code") {
  const char* bad[] = {"rmt", "frobnicate"};
  CHECK(run_cli(2, bad) == kExitUsage);
  const char* noargs[] = {"rmt"};
  CHECK(run_cli(1, noargs) == kExitUsage);
}
