#include "rmt/verify.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace rmt {

namespace {

using Complex = std::complex<double>;

double uniform_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform();
}

std::string format_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double sum_pow(std::span<const double> x, int p) {
  double s = 0.0;
  for (double v : x) s += std::pow(v, p);
  return s;
}

}  // namespace

Observable observable_catalog(const std::string& name) {
  if (name == "sum_sq")
    return [](std::span<const double> x) {
      double s = 0.0;
      for (double v : x) s += v * v;
      return s;
    };
  if (name == "sum_quartic")
    return [](std::span<const double> x) { return sum_pow(x, 4); };
  if (name == "gap_sq")
    return [](std::span<const double> x) {
      double s = 0.0;
      for (std::size_t r = 0; r < x.size(); ++r)
        for (std::size_t t = r + 1; t < x.size(); ++t)
          s += (x[r] - x[t]) * (x[r] - x[t]);
      return s;
    };
  if (name == "abs_char_sq")
    return [](std::span<const double> x) {
      Complex c = 0.0;
      for (double v : x) c += std::polar(1.0, v);
      return std::norm(c);
    };
  if (name == "char2_sq")
    return [](std::span<const double> x) {
      Complex c = 0.0;
      for (double v : x) c += std::polar(1.0, 2.0 * v);
      return std::norm(c);
    };
  throw std::invalid_argument("unknown observable: " + name);
}

const std::vector<std::string>& observable_names() {
  static const std::vector<std::string> names = {
      "sum_sq", "sum_quartic", "gap_sq", "abs_char_sq", "char2_sq"};
  return names;
}

namespace {

// ---- pointwise dual-form routes -------------------------------------------

struct Routes {
  double lhs, rhs;
};

std::vector<Complex> random_torus_coords(Rng& rng, int n, bool det_one) {
  std::vector<Complex> h(static_cast<std::size_t>(n));
  Complex prod = 1.0;
  for (int r = 0; r < n - (det_one ? 1 : 0); ++r) {
    const double mod = std::exp(uniform_in(rng, -0.7, 0.7));
    h[static_cast<std::size_t>(r)] =
        std::polar(mod, uniform_in(rng, -std::numbers::pi, std::numbers::pi));
    prod *= h[static_cast<std::size_t>(r)];
  }
  if (det_one) h[static_cast<std::size_t>(n - 1)] = 1.0 / prod;
  return h;
}

// eigenvalue multiset of the block coordinates: j conjugate pairs v_r ± i
// v_{j+r} plus the trailing real entries
std::vector<Complex> pseudo_eigenvalues(int n, int j,
                                        std::span<const double> v) {
  std::vector<Complex> ev;
  ev.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < j; ++r) {
    ev.emplace_back(v[static_cast<std::size_t>(r)], v[static_cast<std::size_t>(j + r)]);
    ev.emplace_back(v[static_cast<std::size_t>(r)], -v[static_cast<std::size_t>(j + r)]);
  }
  for (int r = 2 * j; r < n; ++r) ev.emplace_back(v[static_cast<std::size_t>(r)], 0.0);
  return ev;
}

double log_vandermonde_sq(const std::vector<Complex>& ev) {
  double acc = 0.0;
  for (std::size_t p = 0; p < ev.size(); ++p)
    for (std::size_t q = p + 1; q < ev.size(); ++q)
      acc += 2.0 * std::log(std::abs(ev[p] - ev[q]));
  return acc;
}

Routes pointwise_routes(const CheckSpec& spec, Rng& rng) {
  const EnsembleSpec& e = spec.ensemble;
  const int n = e.n;
  const int m = e.m >= 0 ? e.m : e.n;
  switch (spec.pair) {
    case DualFormPair::transfer_gl: {
      std::vector<double> x(static_cast<std::size_t>(n));
      std::vector<double> a(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) {
        x[static_cast<std::size_t>(r)] = uniform_in(rng, -3.0, 3.0);
        a[static_cast<std::size_t>(r)] = std::exp(x[static_cast<std::size_t>(r)]);
      }
      const RootDatum d = build_restricted_roots(LinearFamily::gl, n, e.beta);
      return {log_J_nonlinear(d, x), log_J_new_transfer_dualform(n, e.beta, a)};
    }
    case DualFormPair::transfer_indefinite: {
      std::vector<double> x(static_cast<std::size_t>(n));
      std::vector<double> a(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) {
        x[static_cast<std::size_t>(r)] = uniform_in(rng, 0.05, 3.0);
        a[static_cast<std::size_t>(r)] = std::cosh(x[static_cast<std::size_t>(r)]);
      }
      const RootDatum d =
          build_restricted_roots(LinearFamily::indefinite, n, m, e.beta);
      return {log_J_nonlinear(d, x),
              log_J_nonlinear_indefinite_dualform(m, n, e.beta, a)};
    }
    case DualFormPair::circular: {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (double& v : x) v = uniform_in(rng, -std::numbers::pi, std::numbers::pi);
      const RootDatum d = build_restricted_roots(LinearFamily::gl, n, e.beta);
      return {log_J_compact(d, x), log_J_circular_dualform(n, e.beta, x)};
    }
    case DualFormPair::jacobi: {
      std::vector<double> x(static_cast<std::size_t>(n));
      std::vector<double> a(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) {
        x[static_cast<std::size_t>(r)] = uniform_in(rng, 0.02, std::numbers::pi - 0.02);
        a[static_cast<std::size_t>(r)] = std::cos(x[static_cast<std::size_t>(r)]);
      }
      const RootDatum d =
          build_restricted_roots(LinearFamily::indefinite, n, m, e.beta);
      return {log_J_compact(d, x), log_J_jacobi(m, n, e.beta, a)};
    }
    case DualFormPair::linear_indefinite: {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (double& v : x) v = uniform_in(rng, -3.0, 3.0);
      const RootDatum d =
          build_restricted_roots(LinearFamily::indefinite, n, m, e.beta);
      return {log_J_linear(d, x), log_J_linear_indefinite(m, n, e.beta, x)};
    }
    case DualFormPair::group_compact_closed: {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (double& v : x) v = uniform_in(rng, -std::numbers::pi, std::numbers::pi);
      return {log_J_group_compact(e.group, x),
              log_J_group_compact_closed(e.group, x)};
    }
    case DualFormPair::algebra_compact_closed: {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (double& v : x) v = uniform_in(rng, -3.0, 3.0);
      return {log_J_algebra_compact(e.group, x),
              log_J_algebra_compact_closed(e.group, x)};
    }
    case DualFormPair::group_complex_closed: {
      const std::vector<Complex> h =
          random_torus_coords(rng, n, e.cgroup == ComplexGroup::sl);
      return {log_J_group_complex(e.cgroup, h),
              log_J_group_complex_closed(e.cgroup, h)};
    }
    case DualFormPair::algebra_complex_closed: {
      std::vector<Complex> z(static_cast<std::size_t>(n));
      Complex sum = 0.0;
      for (int r = 0; r < n - (e.cgroup == ComplexGroup::sl ? 1 : 0); ++r) {
        z[static_cast<std::size_t>(r)] = {uniform_in(rng, -2.0, 2.0),
                                          uniform_in(rng, -2.0, 2.0)};
        sum += z[static_cast<std::size_t>(r)];
      }
      if (e.cgroup == ComplexGroup::sl) z[static_cast<std::size_t>(n - 1)] = -sum;
      return {log_J_algebra_complex(e.cgroup, z),
              log_J_algebra_complex_closed(e.cgroup, z)};
    }
    case DualFormPair::pseudo_algebra_eigen: {
      std::vector<double> x(static_cast<std::size_t>(n));
      for (double& v : x) v = uniform_in(rng, -3.0, 3.0);
      return {log_J_pseudo_algebra_gl(n, e.j, x),
              log_vandermonde_sq(pseudo_eigenvalues(n, e.j, x))};
    }
    case DualFormPair::pseudo_group_eigen: {
      std::vector<double> h(static_cast<std::size_t>(n));
      for (double& v : h) {
        do {
          v = uniform_in(rng, -3.0, 3.0);
        } while (std::abs(v) < 0.05);
      }
      const std::vector<Complex> ev = pseudo_eigenvalues(n, e.j, h);
      double rhs = log_vandermonde_sq(ev);
      for (const Complex& l : ev) rhs -= (n - 1) * std::log(std::abs(l));
      return {log_J_pseudo_group_gl(n, e.j, h), rhs};
    }
  }
  throw std::logic_error("unreachable pair");
}

// ---- invariance transforms -------------------------------------------------

std::size_t pick_index(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng.next_u64() % n);
}

void swap_real(std::vector<double>& x, std::size_t a, std::size_t b) {
  std::swap(x[a], x[b]);
}

void swap_complex_pair(std::vector<double>& x, std::size_t a, std::size_t b) {
  std::swap(x[2 * a], x[2 * b]);
  std::swap(x[2 * a + 1], x[2 * b + 1]);
}

// one random elementary Weyl (or closed-form symmetry) move, in place
void apply_random_symmetry(const EnsembleSpec& spec, std::vector<double>& x,
                           Rng& rng) {
  const EnsembleKind kind = spec.kind;
  if (kind == EnsembleKind::sl2r_alg1 || kind == EnsembleKind::sl2r_alg2 ||
      kind == EnsembleKind::sl2r_grp2) {
    x[0] = -x[0];
    return;
  }
  if (kind == EnsembleKind::sl2r_grp1) {
    x[0] = 1.0 / x[0];
    return;
  }
  if (kind == EnsembleKind::pseudo_algebra_gl ||
      kind == EnsembleKind::pseudo_group_gl) {
    const int j = spec.j, n = spec.n;
    const int moves = (j >= 2 ? 1 : 0) + (j >= 1 ? 1 : 0) + (n - 2 * j >= 2 ? 1 : 0);
    if (moves == 0) return;
    for (;;) {
      const std::uint64_t pick = rng.next_u64() % 3;
      if (pick == 0 && j >= 2) {  // swap two conjugate-pair blocks
        const std::size_t a = pick_index(rng, static_cast<std::size_t>(j));
        const std::size_t b = pick_index(rng, static_cast<std::size_t>(j));
        swap_real(x, a, b);
        swap_real(x, static_cast<std::size_t>(j) + a, static_cast<std::size_t>(j) + b);
        return;
      }
      if (pick == 1 && j >= 1) {  // conjugate one pair
        const std::size_t a = pick_index(rng, static_cast<std::size_t>(j));
        x[static_cast<std::size_t>(j) + a] = -x[static_cast<std::size_t>(j) + a];
        return;
      }
      if (pick == 2 && n - 2 * j >= 2) {  // swap two real coordinates
        const std::size_t a = static_cast<std::size_t>(2 * j) +
                              pick_index(rng, static_cast<std::size_t>(n - 2 * j));
        const std::size_t b = static_cast<std::size_t>(2 * j) +
                              pick_index(rng, static_cast<std::size_t>(n - 2 * j));
        swap_real(x, a, b);
        return;
      }
    }
  }
  if (kind == EnsembleKind::group_complex) {
    const std::size_t n = static_cast<std::size_t>(spec.n);
    if (spec.cgroup == ComplexGroup::sp && (rng.next_u64() & 1) != 0) {
      const std::size_t a = pick_index(rng, n);
      const Complex inv = 1.0 / Complex(x[2 * a], x[2 * a + 1]);
      x[2 * a] = inv.real();
      x[2 * a + 1] = inv.imag();
      return;
    }
    if (n >= 2)
      swap_complex_pair(x, pick_index(rng, n), pick_index(rng, n));
    return;
  }
  if (kind == EnsembleKind::algebra_complex) {
    const std::size_t n = static_cast<std::size_t>(spec.n);
    const bool flips = spec.cgroup != ComplexGroup::sl;
    if (flips && (rng.next_u64() & 1) != 0) {
      if (spec.cgroup == ComplexGroup::so_even) {
        if (n >= 2) {  // even sign changes only
          const std::size_t a = pick_index(rng, n);
          std::size_t b = pick_index(rng, n);
          while (b == a) b = pick_index(rng, n);
          x[2 * a] = -x[2 * a];
          x[2 * a + 1] = -x[2 * a + 1];
          x[2 * b] = -x[2 * b];
          x[2 * b + 1] = -x[2 * b + 1];
        }
      } else {
        const std::size_t a = pick_index(rng, n);
        x[2 * a] = -x[2 * a];
        x[2 * a + 1] = -x[2 * a + 1];
      }
      return;
    }
    if (n >= 2)
      swap_complex_pair(x, pick_index(rng, n), pick_index(rng, n));
    return;
  }
  // real-coordinate root-datum kinds
  EnsembleSpec probe = spec;
  const RootFamily family = fold_family(probe);
  const std::size_t n = x.size();
  const bool can_flip = family != RootFamily::A;
  if (can_flip && (rng.next_u64() & 1) != 0) {
    if (family == RootFamily::D) {
      if (n >= 2) {
        const std::size_t a = pick_index(rng, n);
        std::size_t b = pick_index(rng, n);
        while (b == a) b = pick_index(rng, n);
        x[a] = -x[a];
        x[b] = -x[b];
      }
    } else {
      const std::size_t a = pick_index(rng, n);
      x[a] = -x[a];
    }
    return;
  }
  if (n >= 2) swap_real(x, pick_index(rng, n), pick_index(rng, n));
}

std::vector<double> random_interior_point(const EnsembleSpec& spec, Rng& rng) {
  const int arity = coord_arity(spec);
  std::vector<double> x(static_cast<std::size_t>(arity));
  if (spec.kind == EnsembleKind::sl2r_grp1) {
    x[0] = uniform_in(rng, 0.2, 3.0);
    return x;
  }
  if (spec.kind == EnsembleKind::group_complex) {
    const std::vector<Complex> h =
        random_torus_coords(rng, spec.n, spec.cgroup == ComplexGroup::sl);
    for (int r = 0; r < spec.n; ++r) {
      x[static_cast<std::size_t>(2 * r)] = h[static_cast<std::size_t>(r)].real();
      x[static_cast<std::size_t>(2 * r) + 1] = h[static_cast<std::size_t>(r)].imag();
    }
    return x;
  }
  if (spec.kind == EnsembleKind::algebra_complex) {
    Complex sum = 0.0;
    const int free = spec.n - (spec.cgroup == ComplexGroup::sl ? 1 : 0);
    for (int r = 0; r < free; ++r) {
      x[static_cast<std::size_t>(2 * r)] = uniform_in(rng, -2.0, 2.0);
      x[static_cast<std::size_t>(2 * r) + 1] = uniform_in(rng, -2.0, 2.0);
      sum += Complex(x[static_cast<std::size_t>(2 * r)],
                     x[static_cast<std::size_t>(2 * r) + 1]);
    }
    if (spec.cgroup == ComplexGroup::sl) {
      x[static_cast<std::size_t>(2 * spec.n - 2)] = -sum.real();
      x[static_cast<std::size_t>(2 * spec.n - 1)] = -sum.imag();
    }
    return x;
  }
  const double bound =
      chart_of(spec.kind) == Chart::angle ? std::numbers::pi - 1e-3 : 3.0;
  for (double& v : x) {
    do {
      v = uniform_in(rng, -bound, bound);
    } while (spec.kind == EnsembleKind::pseudo_group_gl && std::abs(v) < 0.05);
  }
  return x;
}

}  // namespace

CheckReport check_pointwise(const CheckSpec& spec, std::uint64_t stream_id) {
  Rng rng(spec.seed, stream_id);
  double max_rel = 0.0;
  for (int k = 0; k < spec.points; ++k) {
    const Routes r = pointwise_routes(spec, rng);
    const double rel =
        std::abs(r.lhs - r.rhs) / std::max(1.0, std::abs(r.lhs));
    max_rel = std::max(max_rel, rel);
  }
  CheckReport report;
  report.name = spec.name;
  report.lhs = max_rel;
  report.rhs = spec.tol.rel;
  report.criterion = "max_rel_log_diff < " + format_g(spec.tol.rel);
  report.pass = max_rel < spec.tol.rel;
  return report;
}

CheckReport check_invariance(const CheckSpec& spec, std::uint64_t stream_id) {
  Rng rng(spec.seed, stream_id);
  double max_abs = 0.0;
  for (int k = 0; k < spec.points; ++k) {
    std::vector<double> x = random_interior_point(spec.ensemble, rng);
    const double base = log_J(spec.ensemble, x);
    const int word_len = 1 + static_cast<int>(rng.next_u64() % 5);
    for (int w = 0; w < word_len; ++w)
      apply_random_symmetry(spec.ensemble, x, rng);
    const double moved = log_J(spec.ensemble, x);
    max_abs = std::max(max_abs, std::abs(moved - base));
  }
  CheckReport report;
  report.name = spec.name;
  report.lhs = max_abs;
  report.rhs = spec.tol.rel;
  report.criterion = "max_abs_log_diff <= " + format_g(spec.tol.rel);
  report.pass = max_abs <= spec.tol.rel;
  return report;
}

CheckReport check_mc_vs_quad(const CheckSpec& spec, std::uint64_t stream_id) {
  Rng rng(spec.seed, stream_id);
  const Observable obs = observable_catalog(spec.observable);
  std::vector<double> values(static_cast<std::size_t>(spec.sample_count));
  for (long k = 0; k < spec.sample_count; ++k) {
    const std::vector<double> coords = sample_coords(spec.ensemble, rng);
    values[static_cast<std::size_t>(k)] = obs(coords);
  }
  const MeanStderr mc = mc_mean(values);
  const QuadResult quad =
      normalized_expectation(make_log_density(spec.ensemble), obs,
                             quadrature_domain(spec.ensemble),
                             spec.nodes_per_dim);
  CheckReport report;
  report.name = spec.name;
  report.lhs = mc.mean;
  report.rhs = quad.value;
  report.stderr_of_mean = mc.stderr_of_mean;
  report.criterion = "|mc - quad| <= " + format_g(spec.tol.sigma_mult) +
                     "*stderr + " + format_g(spec.tol.rel) + "*|quad|";
  const double bound = spec.tol.sigma_mult * mc.stderr_of_mean +
                       spec.tol.rel * std::abs(quad.value);
  report.pass = std::abs(mc.mean - quad.value) <= bound;
  if (spec.analytic_value) {
    report.criterion += " and |mc - " + format_g(*spec.analytic_value) +
                        "| <= " + format_g(spec.tol.sigma_mult) + "*stderr";
    report.pass =
        report.pass && std::abs(mc.mean - *spec.analytic_value) <=
                           spec.tol.sigma_mult * mc.stderr_of_mean +
                               spec.tol.rel * std::abs(*spec.analytic_value);
  }
  return report;
}

CheckReport run_check(const CheckSpec& spec, std::uint64_t stream_id) {
  try {
    switch (spec.kind) {
      case CheckKind::pointwise_equality:
        return check_pointwise(spec, stream_id);
      case CheckKind::invariance:
        return check_invariance(spec, stream_id);
      case CheckKind::mc_vs_quad:
        return check_mc_vs_quad(spec, stream_id);
    }
    throw std::logic_error("unreachable kind");
  } catch (const std::exception& err) {
    CheckReport report;
    report.name = spec.name;
    report.criterion = std::string("error: ") + err.what();
    report.pass = false;
    return report;
  }
}

namespace {

CheckSpec pointwise_spec(std::string name, DualFormPair pair, EnsembleSpec ens,
                         int group, double rel = 1e-10, int points = 1000) {
  CheckSpec s;
  s.name = std::move(name);
  s.kind = CheckKind::pointwise_equality;
  s.pair = pair;
  s.ensemble = std::move(ens);
  s.points = points;
  s.tol.rel = rel;
  s.acceptance_group = group;
  return s;
}

CheckSpec mc_spec(std::string name, EnsembleSpec ens, std::string observable,
                  int group, long samples = 100000, int nodes = 64) {
  CheckSpec s;
  s.name = std::move(name);
  s.kind = CheckKind::mc_vs_quad;
  s.ensemble = std::move(ens);
  s.observable = std::move(observable);
  s.sample_count = samples;
  s.nodes_per_dim = nodes;
  s.acceptance_group = group;
  return s;
}

CheckSpec invariance_spec(std::string name, EnsembleSpec ens, int group) {
  CheckSpec s;
  s.name = std::move(name);
  s.kind = CheckKind::invariance;
  s.ensemble = std::move(ens);
  s.points = 1000;
  s.tol.rel = 1e-12;
  s.acceptance_group = group;
  return s;
}

}  // namespace

std::vector<CheckSpec> default_suite() {
  std::vector<CheckSpec> suite;
  const int betas[] = {1, 2, 4};

  // hyperbolic dual form, square case
  for (int beta : betas)
    for (int n : {2, 3, 5}) {
      EnsembleSpec e;
      e.n = n;
      e.beta = beta;
      suite.push_back(pointwise_spec(
          "transfer_gl_n" + std::to_string(n) + "_b" + std::to_string(beta),
          DualFormPair::transfer_gl, e, 1));
    }

  // hyperbolic and trigonometric dual forms on the BC data
  const std::pair<int, int> mn_pairs[] = {{1, 1}, {2, 1}, {3, 2}};
  for (int beta : betas)
    for (auto [m, n] : mn_pairs) {
      EnsembleSpec e;
      e.family = LinearFamily::indefinite;
      e.m = m;
      e.n = n;
      e.beta = beta;
      const std::string tag = "_m" + std::to_string(m) + "_n" +
                              std::to_string(n) + "_b" + std::to_string(beta);
      suite.push_back(pointwise_spec("transfer_indef" + tag,
                                     DualFormPair::transfer_indefinite, e, 2));
      suite.push_back(pointwise_spec("jacobi" + tag, DualFormPair::jacobi, e, 2));
      suite.push_back(pointwise_spec("linear_indef" + tag,
                                     DualFormPair::linear_indefinite, e, 2));
    }

  // unit-circle dual form
  for (int beta : betas)
    for (int n : {2, 3, 4, 5}) {
      EnsembleSpec e;
      e.n = n;
      e.beta = beta;
      suite.push_back(pointwise_spec(
          "circular_n" + std::to_string(n) + "_b" + std::to_string(beta),
          DualFormPair::circular, e, 3));
    }

  // character/root engines vs the closed per-group forms
  const std::pair<CompactGroup, std::string> compact_groups[] = {
      {CompactGroup::u, "u"},
      {CompactGroup::so_odd, "so_odd"},
      {CompactGroup::sp, "sp"},
      {CompactGroup::so_even, "so_even"}};
  for (auto [g, gname] : compact_groups)
    for (int n : {1, 2, 3}) {
      EnsembleSpec e;
      e.n = n;
      e.group = g;
      suite.push_back(pointwise_spec("group_" + gname + "_n" + std::to_string(n),
                                     DualFormPair::group_compact_closed, e, 4));
      suite.push_back(pointwise_spec(
          "algebra_" + gname + "_n" + std::to_string(n),
          DualFormPair::algebra_compact_closed, e, 4));
    }
  const std::pair<ComplexGroup, std::string> complex_groups[] = {
      {ComplexGroup::sl, "sl"},
      {ComplexGroup::sp, "sp"},
      {ComplexGroup::so_even, "so_even"},
      {ComplexGroup::so_odd, "so_odd"}};
  for (auto [g, gname] : complex_groups)
    for (int n : {1, 2, 3}) {
      if (g == ComplexGroup::sl && n < 2) continue;
      EnsembleSpec e;
      e.n = n;
      e.cgroup = g;
      suite.push_back(pointwise_spec(
          "group_cplx_" + gname + "_n" + std::to_string(n),
          DualFormPair::group_complex_closed, e, 4));
      suite.push_back(pointwise_spec(
          "algebra_cplx_" + gname + "_n" + std::to_string(n),
          DualFormPair::algebra_complex_closed, e, 4));
    }

  // Gaussian invariant ensembles, matrix MC vs quadrature
  for (int beta : betas)
    for (int n : {2, 3})
      for (const char* obs : {"sum_sq", "sum_quartic", "gap_sq"}) {
        EnsembleSpec e;
        e.kind = EnsembleKind::linear;
        e.n = n;
        e.beta = beta;
        e.envelope = Envelope::gaussian_trace(0.5);
        suite.push_back(mc_spec("gaussian_b" + std::to_string(beta) + "_n" +
                                    std::to_string(n) + "_" + obs,
                                e, obs, 6));
      }

  // circular ensembles
  for (int beta : betas)
    for (int n : {2, 3})
      for (const char* obs : {"abs_char_sq", "char2_sq"}) {
        EnsembleSpec e;
        e.kind = EnsembleKind::compact;
        e.n = n;
        e.beta = beta;
        CheckSpec s = mc_spec("circular_mc_b" + std::to_string(beta) + "_n" +
                                  std::to_string(n) + "_" + obs,
                              e, obs, 7);
        // Haar-unitary moment E|tr U|² = 1
        if (beta == 2 && std::string(obs) == "abs_char_sq")
          s.analytic_value = 1.0;
        suite.push_back(s);
      }

  // symmetric-space pushforward vs the radial sin-density
  for (auto [m, n] : {std::pair<int, int>{1, 1}, {2, 1}}) {
    EnsembleSpec e;
    e.kind = EnsembleKind::sym_space_compact_delta;
    e.family = LinearFamily::indefinite;
    e.m = m;
    e.n = n;
    e.beta = 2;
    suite.push_back(mc_spec("symspace_u_m" + std::to_string(m) + "_n" +
                                std::to_string(n) + "_sum_sq",
                            e, "sum_sq", 8));
  }

  // singular values of Gaussian blocks
  for (int beta : {1, 2})
    for (auto [m, n] : {std::pair<int, int>{2, 1}, {3, 2}}) {
      EnsembleSpec e;
      e.kind = EnsembleKind::linear;
      e.family = LinearFamily::indefinite;
      e.m = m;
      e.n = n;
      e.beta = beta;
      e.envelope = Envelope::gaussian_hs(0.5);
      suite.push_back(mc_spec("chiral_b" + std::to_string(beta) + "_m" +
                                  std::to_string(m) + "_n" + std::to_string(n) +
                                  "_sum_sq",
                              e, "sum_sq", 9));
    }

  // compact-algebra Gaussians
  {
    EnsembleSpec e;
    e.kind = EnsembleKind::algebra_compact;
    e.group = CompactGroup::so_even;
    e.n = 2;
    e.envelope = Envelope::gaussian_hs(0.5);
    suite.push_back(mc_spec("algebra_so4_sum_sq", e, "sum_sq", 10));
    e.group = CompactGroup::u;
    suite.push_back(mc_spec("algebra_u2_sum_sq", e, "sum_sq", 10));
  }

  // Weyl/symmetry invariance across every kind
  {
    const auto add_inv = [&suite](std::string name, EnsembleSpec e) {
      suite.push_back(invariance_spec("inv_" + std::move(name), std::move(e), 11));
    };
    for (int beta : betas) {
      EnsembleSpec e;
      e.n = 3;
      e.beta = beta;
      e.kind = EnsembleKind::linear;
      add_inv("linear_gl_b" + std::to_string(beta), e);
      e.kind = EnsembleKind::nonlinear_noncompact;
      add_inv("nonlinear_gl_b" + std::to_string(beta), e);
      e.kind = EnsembleKind::compact;
      add_inv("compact_gl_b" + std::to_string(beta), e);
      e.family = LinearFamily::indefinite;
      e.m = 4;
      e.kind = EnsembleKind::linear;
      add_inv("linear_indef_b" + std::to_string(beta), e);
      e.kind = EnsembleKind::nonlinear_noncompact;
      add_inv("nonlinear_indef_b" + std::to_string(beta), e);
      e.kind = EnsembleKind::compact;
      add_inv("compact_indef_b" + std::to_string(beta), e);
      e.kind = EnsembleKind::sym_space_noncompact_delta;
      add_inv("delta_noncompact_b" + std::to_string(beta), e);
      e.kind = EnsembleKind::sym_space_compact_delta;
      add_inv("delta_compact_b" + std::to_string(beta), e);
    }
    for (auto [g, gname] : compact_groups) {
      EnsembleSpec e;
      e.n = 3;
      e.group = g;
      e.kind = EnsembleKind::group_compact;
      add_inv("group_" + gname, e);
      e.kind = EnsembleKind::algebra_compact;
      add_inv("algebra_" + gname, e);
    }
    for (auto [g, gname] : complex_groups) {
      EnsembleSpec e;
      e.n = 3;
      e.cgroup = g;
      e.kind = EnsembleKind::group_complex;
      add_inv("group_cplx_" + gname, e);
      e.kind = EnsembleKind::algebra_complex;
      add_inv("algebra_cplx_" + gname, e);
    }
    for (auto [n, j] : {std::pair<int, int>{2, 1}, {4, 2}, {5, 2}}) {
      EnsembleSpec e;
      e.n = n;
      e.j = j;
      e.kind = EnsembleKind::pseudo_algebra_gl;
      add_inv("pseudo_alg_n" + std::to_string(n) + "_j" + std::to_string(j), e);
      e.kind = EnsembleKind::pseudo_group_gl;
      add_inv("pseudo_grp_n" + std::to_string(n) + "_j" + std::to_string(j), e);
    }
    for (EnsembleKind k : {EnsembleKind::sl2r_alg1, EnsembleKind::sl2r_alg2,
                           EnsembleKind::sl2r_grp1, EnsembleKind::sl2r_grp2}) {
      EnsembleSpec e;
      e.kind = k;
      add_inv(kind_name(k), e);
    }
    // independent route agreement for the one-Cartan-class forms
    for (auto [n, j] : {std::pair<int, int>{2, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2}}) {
      EnsembleSpec e;
      e.n = n;
      e.j = j;
      suite.push_back(pointwise_spec(
          "pseudo_alg_eigen_n" + std::to_string(n) + "_j" + std::to_string(j),
          DualFormPair::pseudo_algebra_eigen, e, 11));
      suite.push_back(pointwise_spec(
          "pseudo_grp_eigen_n" + std::to_string(n) + "_j" + std::to_string(j),
          DualFormPair::pseudo_group_eigen, e, 11));
    }
  }

  return suite;
}

std::vector<CheckReport> run_suite(const std::vector<CheckSpec>& suite,
                                   int jobs) {
  std::vector<CheckReport> reports(suite.size());
  if (jobs < 1) jobs = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= suite.size()) return;
      reports[i] = run_check(suite[i], i);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return reports;
}

}  // namespace rmt
