#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

namespace rmt::cli {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

void write_row_csv(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) out << ',';
    out << cells[k];
  }
  out << '\n';
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << '\n';
  return kExitUsage;
}

std::pair<double, double> default_bounds(const EnsembleSpec& spec) {
  if (chart_of(spec.kind) == Chart::angle)
    return {-std::numbers::pi, std::numbers::pi};
  return {-3.0, 3.0};
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RMT_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return kDefaultSeed;
}

std::string format_value(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const double log_j = log_J(config.ensemble, config.point);
    const double log_p = log_envelope(config.ensemble.envelope, config.point);
    if (config.format == "jsonl") {
      out << "{\"log_j\":\"" << format_value(log_j) << "\",\"log_p\":\""
          << format_value(log_p) << "\",\"log_density\":\""
          << format_value(log_j + log_p) << "\"}\n";
    } else {
      out << "log_j,log_p,log_density\n";
      write_row_csv(out, {format_value(log_j), format_value(log_p),
                          format_value(log_j + log_p)});
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int cmd_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const int rank = coord_arity(config.ensemble);
    if (rank > 3) return usage_error(err, "table is limited to rank <= 3");
    if (config.grid < 1) return usage_error(err, "grid must be >= 1");
    auto [lo, hi] = default_bounds(config.ensemble);
    if (config.bounds_set) {
      lo = config.lo;
      hi = config.hi;
    }
    if (!(lo < hi)) return usage_error(err, "requires lo < hi");
    const GridFunction density = make_log_density(config.ensemble);
    const double step = (hi - lo) / config.grid;
    if (config.format == "csv") {
      std::vector<std::string> header;
      for (int d = 0; d < rank; ++d) header.push_back("x" + std::to_string(d + 1));
      header.push_back("log_j");
      header.push_back("log_p");
      write_row_csv(out, header);
    }
    std::vector<int> idx(static_cast<std::size_t>(rank), 0);
    std::vector<double> x(static_cast<std::size_t>(rank));
    for (;;) {
      for (int d = 0; d < rank; ++d)
        x[static_cast<std::size_t>(d)] =
            lo + (idx[static_cast<std::size_t>(d)] + 0.5) * step;
      const double log_p = log_envelope(config.ensemble.envelope, x);
      const double log_j = density(x) - log_p;
      if (config.format == "jsonl") {
        out << "{\"coords\":[";
        for (int d = 0; d < rank; ++d) {
          if (d) out << ',';
          out << format_value(x[static_cast<std::size_t>(d)]);
        }
        out << "],\"log_j\":\"" << format_value(log_j) << "\",\"log_p\":\""
            << format_value(log_p) << "\"}\n";
      } else {
        std::vector<std::string> cells;
        for (int d = 0; d < rank; ++d)
          cells.push_back(format_value(x[static_cast<std::size_t>(d)]));
        cells.push_back(format_value(log_j));
        cells.push_back(format_value(log_p));
        write_row_csv(out, cells);
      }
      int d = rank;
      bool done = true;
      while (d > 0) {
        --d;
        if (++idx[static_cast<std::size_t>(d)] < config.grid) {
          done = false;
          break;
        }
        idx[static_cast<std::size_t>(d)] = 0;
      }
      if (done) break;
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!has_sampler(config.ensemble))
      return usage_error(err, "kind '" + kind_name(config.ensemble.kind) +
                                  "' has no matrix-level sampler; it is "
                                  "density-evaluation-only");
    if (config.count < 0) return usage_error(err, "count must be >= 0");
    const int rank = coord_arity(config.ensemble);
    out << "# seed=" << config.seed << '\n';
    std::vector<std::string> header;
    for (int d = 0; d < rank; ++d) header.push_back("x" + std::to_string(d + 1));
    write_row_csv(out, header);
    // one stream per draw makes the output independent of the job count
    std::vector<std::string> rows(static_cast<std::size_t>(config.count));
    const auto render = [&](long i) {
      Rng rng(config.seed, static_cast<std::uint64_t>(i));
      const std::vector<double> coords = sample_coords(config.ensemble, rng);
      std::string row;
      for (std::size_t d = 0; d < coords.size(); ++d) {
        if (d) row.push_back(',');
        row += format_value(coords[d]);
      }
      return row;
    };
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1 || config.count < 2) {
      for (long i = 0; i < config.count; ++i)
        rows[static_cast<std::size_t>(i)] = render(i);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&, t]() {
          for (long i = t; i < config.count; i += jobs)
            rows[static_cast<std::size_t>(i)] = render(i);
        });
      for (auto& th : pool) th.join();
    }
    for (const std::string& row : rows) out << row << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

std::vector<CheckSpec> parse_suite(std::istream& in) {
  std::vector<CheckSpec> suite;
  CheckSpec* current = nullptr;
  std::string line;
  int line_no = 0;
  const auto fail = [&line_no](const std::string& what) {
    throw std::runtime_error("suite line " + std::to_string(line_no) + ": " +
                             what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.empty() || line[0] == '#') continue;
    if (line == "[check]") {
      suite.emplace_back();
      current = &suite.back();
      continue;
    }
    if (!current) fail("key outside of a [check] section");
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key = key.substr(0, key.find_last_not_of(" \t") + 1);
    const auto vfirst = value.find_first_not_of(" \t");
    value = vfirst == std::string::npos ? "" : value.substr(vfirst);
    if (key == "name") current->name = value;
    else if (key == "kind") {
      if (value == "pointwise") current->kind = CheckKind::pointwise_equality;
      else if (value == "invariance") current->kind = CheckKind::invariance;
      else if (value == "mc_vs_quad") current->kind = CheckKind::mc_vs_quad;
      else fail("unknown check kind: " + value);
    } else if (key == "pair") {
      static const std::pair<const char*, DualFormPair> pairs[] = {
          {"transfer_gl", DualFormPair::transfer_gl},
          {"transfer_indefinite", DualFormPair::transfer_indefinite},
          {"circular", DualFormPair::circular},
          {"jacobi", DualFormPair::jacobi},
          {"linear_indefinite", DualFormPair::linear_indefinite},
          {"group_compact_closed", DualFormPair::group_compact_closed},
          {"algebra_compact_closed", DualFormPair::algebra_compact_closed},
          {"group_complex_closed", DualFormPair::group_complex_closed},
          {"algebra_complex_closed", DualFormPair::algebra_complex_closed},
          {"pseudo_algebra_eigen", DualFormPair::pseudo_algebra_eigen},
          {"pseudo_group_eigen", DualFormPair::pseudo_group_eigen}};
      bool found = false;
      for (const auto& [name, p] : pairs)
        if (value == name) {
          current->pair = p;
          found = true;
        }
      if (!found) fail("unknown pair: " + value);
    } else if (key == "ensemble") {
      const auto kind = parse_kind(value);
      if (!kind) fail("unknown ensemble kind: " + value);
      current->ensemble.kind = *kind;
    } else if (key == "family") {
      if (value == "gl") current->ensemble.family = LinearFamily::gl;
      else if (value == "indefinite")
        current->ensemble.family = LinearFamily::indefinite;
      else fail("unknown family: " + value);
    } else if (key == "group") {
      if (value == "u") current->ensemble.group = CompactGroup::u;
      else if (value == "so_odd") current->ensemble.group = CompactGroup::so_odd;
      else if (value == "sp") current->ensemble.group = CompactGroup::sp;
      else if (value == "so_even")
        current->ensemble.group = CompactGroup::so_even;
      else fail("unknown group: " + value);
    } else if (key == "cgroup") {
      if (value == "sl") current->ensemble.cgroup = ComplexGroup::sl;
      else if (value == "sp") current->ensemble.cgroup = ComplexGroup::sp;
      else if (value == "so_even")
        current->ensemble.cgroup = ComplexGroup::so_even;
      else if (value == "so_odd")
        current->ensemble.cgroup = ComplexGroup::so_odd;
      else fail("unknown cgroup: " + value);
    } else if (key == "n") current->ensemble.n = std::stoi(value);
    else if (key == "m") current->ensemble.m = std::stoi(value);
    else if (key == "beta") current->ensemble.beta = std::stoi(value);
    else if (key == "j") current->ensemble.j = std::stoi(value);
    else if (key == "env") {
      if (value == "uniform") current->ensemble.envelope = Envelope::uniform();
      else if (value == "gaussian_trace")
        current->ensemble.envelope.kind = EnvelopeKind::gaussian_trace;
      else if (value == "gaussian_hs")
        current->ensemble.envelope.kind = EnvelopeKind::gaussian_hs;
      else fail("unknown envelope: " + value);
    } else if (key == "a") current->ensemble.envelope.a = std::stod(value);
    else if (key == "b") current->ensemble.envelope.b = std::stod(value);
    else if (key == "c") current->ensemble.envelope.c = std::stod(value);
    else if (key == "observable") current->observable = value;
    else if (key == "samples") current->sample_count = std::stol(value);
    else if (key == "nodes") current->nodes_per_dim = std::stoi(value);
    else if (key == "points") current->points = std::stoi(value);
    else if (key == "seed") current->seed = std::stoull(value);
    else if (key == "rel") current->tol.rel = std::stod(value);
    else if (key == "sigma") current->tol.sigma_mult = std::stod(value);
    else if (key == "analytic") current->analytic_value = std::stod(value);
    else fail("unknown key: " + key);
  }
  for (const CheckSpec& spec : suite)
    if (spec.name.empty()) throw std::runtime_error("check without a name");
  return suite;
}

int cmd_check(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::vector<CheckSpec> suite;
  try {
    if (config.suite == "default") {
      suite = default_suite();
    } else {
      std::ifstream file(config.suite);
      if (!file) return usage_error(err, "cannot open suite: " + config.suite);
      suite = parse_suite(file);
    }
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
  if (config.seed != kDefaultSeed)
    for (CheckSpec& spec : suite) spec.seed = config.seed;
  const std::vector<CheckReport> reports = run_suite(suite, config.jobs);
  bool all_pass = true;
  if (config.format == "csv")
    out << "name,lhs,rhs,stderr,criterion,result\n";
  for (const CheckReport& r : reports) {
    all_pass = all_pass && r.pass;
    if (config.format == "jsonl") {
      out << "{\"name\":\"" << json_escape(r.name) << "\",\"lhs\":\""
          << format_value(r.lhs) << "\",\"rhs\":\"" << format_value(r.rhs)
          << "\",\"stderr\":\"" << format_value(r.stderr_of_mean)
          << "\",\"criterion\":\"" << json_escape(r.criterion)
          << "\",\"pass\":" << (r.pass ? "true" : "false") << "}\n";
    } else {
      write_row_csv(out, {r.name, format_value(r.lhs), format_value(r.rhs),
                          format_value(r.stderr_of_mean), r.criterion,
                          r.pass ? "pass" : "fail"});
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

namespace {

std::string param_schema(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::linear:
    case EnsembleKind::nonlinear_noncompact:
    case EnsembleKind::compact:
      return "family;n;beta;m(indefinite);env";
    case EnsembleKind::sym_space_noncompact_delta:
    case EnsembleKind::sym_space_compact_delta:
      return "family;n;beta;m(indefinite)";
    case EnsembleKind::group_compact:
      return "group;n";
    case EnsembleKind::algebra_compact:
      return "group;n;env";
    case EnsembleKind::group_complex:
    case EnsembleKind::algebra_complex:
      return "cgroup;n";
    case EnsembleKind::pseudo_algebra_gl:
    case EnsembleKind::pseudo_group_gl:
      return "n;j";
    default:
      return "scalar coordinate";
  }
}

}  // namespace

int cmd_list(const RunConfig& config, std::ostream& out, std::ostream&) {
  if (config.format == "csv") out << "kind,params,sampler\n";
  for (EnsembleKind kind : all_kinds()) {
    EnsembleSpec probe;
    probe.kind = kind;
    // sampler availability can depend on the family; report the best case
    bool sampler = has_sampler(probe);
    if (kind == EnsembleKind::linear || kind == EnsembleKind::compact) {
      probe.family = LinearFamily::gl;
      sampler = has_sampler(probe);
    }
    if (config.format == "jsonl") {
      out << "{\"kind\":\"" << kind_name(kind) << "\",\"params\":\""
          << param_schema(kind) << "\",\"sampler\":"
          << (sampler ? "true" : "false") << "}\n";
    } else {
      write_row_csv(out, {kind_name(kind), param_schema(kind),
                          sampler ? "yes" : "no"});
    }
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"joint eigenvalue densities, samplers, and cross-route checks "
               "for classical matrix ensembles"};
  app.require_subcommand(1);

  RunConfig config;
  config.seed = default_seed();
  std::string kind_str, family_str = "gl", group_str, env_str, point_str;
  std::string out_path;

  const auto add_ensemble_opts = [&](CLI::App* cmd) {
    cmd->add_option("--kind", kind_str, "ensemble kind (see `list`)")
        ->required();
    cmd->add_option("--family", family_str, "gl | indefinite");
    cmd->add_option("--group", group_str,
                    "u | so_odd | sp | so_even (compact) or sl | sp | so_even "
                    "| so_odd (complex)");
    cmd->add_option("--n", config.ensemble.n, "rank parameter");
    cmd->add_option("--m", config.ensemble.m, "larger block size (m >= n)");
    cmd->add_option("--beta", config.ensemble.beta, "1, 2, or 4");
    cmd->add_option("--j", config.ensemble.j, "conjugate-pair count");
    cmd->add_option("--env", env_str,
                    "uniform | gaussian_trace | gaussian_hs");
    cmd->add_option("--a", config.ensemble.envelope.a, "envelope scale");
    cmd->add_option("--b", config.ensemble.envelope.b, "envelope tilt");
    cmd->add_option("--c", config.ensemble.envelope.c, "envelope offset");
  };
  const auto add_io_opts = [&](CLI::App* cmd) {
    cmd->add_option("--format", config.format, "csv | jsonl");
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate log J and log p at a point");
  add_ensemble_opts(eval);
  add_io_opts(eval);
  eval->add_option("--point", point_str, "comma-separated coordinates")
      ->required();

  CLI::App* table = app.add_subcommand("table", "tabulate log J on a grid");
  add_ensemble_opts(table);
  add_io_opts(table);
  table->add_option("--grid", config.grid, "points per dimension");
  CLI::Option* lo_opt = table->add_option("--lo", config.lo, "grid lower bound");
  table->add_option("--hi", config.hi, "grid upper bound")->needs(lo_opt);

  CLI::App* sample = app.add_subcommand("sample", "stream folded eigenvalue coordinates");
  add_ensemble_opts(sample);
  add_io_opts(sample);
  sample->add_option("--count", config.count, "number of draws");
  sample->add_option("--seed", config.seed, "RNG seed (env RMT_SEED)");
  sample->add_option("--jobs", config.jobs, "worker threads");

  CLI::App* check = app.add_subcommand("check", "run a verification suite");
  add_io_opts(check);
  check->add_option("--suite", config.suite, "'default' or a suite file path");
  check->add_option("--seed", config.seed, "RNG seed override");
  check->add_option("--jobs", config.jobs, "worker threads");

  CLI::App* list = app.add_subcommand("list", "enumerate supported ensemble kinds");
  add_io_opts(list);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (config.format != "csv" && config.format != "jsonl")
    return usage_error(std::cerr, "format must be csv or jsonl");

  if (!kind_str.empty()) {
    const auto kind = parse_kind(kind_str);
    if (!kind) return usage_error(std::cerr, "unknown kind: " + kind_str);
    config.ensemble.kind = *kind;
  }
  if (family_str == "gl") config.ensemble.family = LinearFamily::gl;
  else if (family_str == "indefinite")
    config.ensemble.family = LinearFamily::indefinite;
  else return usage_error(std::cerr, "unknown family: " + family_str);
  if (!group_str.empty()) {
    bool matched = false;
    if (group_str == "u") { config.ensemble.group = CompactGroup::u; matched = true; }
    if (group_str == "so_odd") {
      config.ensemble.group = CompactGroup::so_odd;
      config.ensemble.cgroup = ComplexGroup::so_odd;
      matched = true;
    }
    if (group_str == "sp") {
      config.ensemble.group = CompactGroup::sp;
      config.ensemble.cgroup = ComplexGroup::sp;
      matched = true;
    }
    if (group_str == "so_even") {
      config.ensemble.group = CompactGroup::so_even;
      config.ensemble.cgroup = ComplexGroup::so_even;
      matched = true;
    }
    if (group_str == "sl") { config.ensemble.cgroup = ComplexGroup::sl; matched = true; }
    if (!matched) return usage_error(std::cerr, "unknown group: " + group_str);
  }
  if (!env_str.empty()) {
    if (env_str == "uniform") config.ensemble.envelope.kind = EnvelopeKind::uniform;
    else if (env_str == "gaussian_trace")
      config.ensemble.envelope.kind = EnvelopeKind::gaussian_trace;
    else if (env_str == "gaussian_hs")
      config.ensemble.envelope.kind = EnvelopeKind::gaussian_hs;
    else return usage_error(std::cerr, "unknown envelope: " + env_str);
  }
  if (!point_str.empty()) {
    std::stringstream ss(point_str);
    std::string cell;
    try {
      while (std::getline(ss, cell, ',')) config.point.push_back(std::stod(cell));
    } catch (const std::exception&) {
      return usage_error(std::cerr, "bad point: " + point_str);
    }
  }
  config.bounds_set = lo_opt->count() > 0;

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) return usage_error(std::cerr, "cannot open output: " + out_path);
    out = &file;
  }

  if (eval->parsed()) return cmd_eval(config, *out, std::cerr);
  if (table->parsed()) return cmd_table(config, *out, std::cerr);
  if (sample->parsed()) return cmd_sample(config, *out, std::cerr);
  if (check->parsed()) return cmd_check(config, *out, std::cerr);
  if (list->parsed()) return cmd_list(config, *out, std::cerr);
  return usage_error(std::cerr, "no command given");
}

}  // namespace rmt::cli
