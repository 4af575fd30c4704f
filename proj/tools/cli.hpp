#ifndef RMT_TOOLS_CLI_HPP
#define RMT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rmt/ensemble.hpp"
#include "rmt/verify.hpp"

namespace rmt::cli {

// exit codes: 0 success / all checks pass, 1 check failures, 2 usage errors
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::uint64_t kDefaultSeed = 20260823;

// RMT_SEED overrides the built-in default when --seed is absent
std::uint64_t default_seed();

struct RunConfig {
  EnsembleSpec ensemble;
  std::vector<double> point;
  int grid = 5;
  double lo = 0.0, hi = 0.0;
  bool bounds_set = false;
  std::string format = "csv";  // csv | jsonl
  std::uint64_t seed = kDefaultSeed;
  long count = 1;
  int jobs = 1;
  std::string suite = "default";
};

// 17 significant digits; -inf renders as the literal token
std::string format_value(double v);

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_list(const RunConfig& config, std::ostream& out, std::ostream& err);

// flat key=value sections, one [check] per section
std::vector<CheckSpec> parse_suite(std::istream& in);

// full argv-driven entry point used by the executable
int run_cli(int argc, const char* const* argv);

}  // namespace rmt::cli

#endif
