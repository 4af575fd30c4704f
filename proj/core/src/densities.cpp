#include "rmt/densities.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rmt {

namespace {

constexpr double kLog2 = 0.6931471805599453094172321214581766;

double log_abs(double v) { return v == 0.0 ? kLogZero : std::log(std::abs(v)); }

double log_abs(const std::complex<double>& v) {
  const double m = std::abs(v);
  return m == 0.0 ? kLogZero : std::log(m);
}

// exponent·log|base|, with 0·log 0 = 0 (absent factor)
double pow_term(double exponent, double log_base) {
  if (exponent == 0.0) return 0.0;
  return exponent * log_base;
}

void require_len(std::size_t got, std::size_t want) {
  if (got != want) throw std::invalid_argument("coordinate length mismatch");
}

std::complex<double> char_coordinate(ComplexGroup group,
                                     const std::complex<double>& h) {
  // A and C series Cartan coordinates are already multiplicative; the
  // orthogonal series list h_r = (w_r + w_r⁻¹)/2.  Either square root
  // works: the ±α pairing makes the product branch-invariant.
  if (group == ComplexGroup::sl || group == ComplexGroup::sp) return h;
  return h + std::sqrt(h * h - 1.0);
}

}  // namespace

Envelope Envelope::gaussian_trace(double a, double b, double c) {
  if (!(a > 0.0)) throw std::invalid_argument("gaussian envelope requires a > 0");
  return Envelope{EnvelopeKind::gaussian_trace, a, b, c};
}

Envelope Envelope::gaussian_hs(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("gaussian envelope requires a > 0");
  return Envelope{EnvelopeKind::gaussian_hs, a, 0.0, 0.0};
}

double log_envelope(const Envelope& env, std::span<const double> x) {
  if (env.kind == EnvelopeKind::uniform) return 0.0;
  double sum_sq = 0.0, sum = 0.0;
  for (double v : x) {
    sum_sq += v * v;
    sum += v;
  }
  if (env.kind == EnvelopeKind::gaussian_hs) return -env.a * sum_sq;
  return -env.a * sum_sq + env.b * sum + env.c;
}

double log_J_linear(const RootDatum& datum, std::span<const double> x) {
  require_len(x.size(), static_cast<std::size_t>(datum.rank));
  double acc = 0.0;
  for (const auto& root : datum.positive_roots)
    acc += root.multiplicity * log_abs(evaluate_root(root.vector, x));
  return acc;
}

double log_J_linear_indefinite(int m, int n, int beta,
                               std::span<const double> x) {
  if (m < n) throw std::invalid_argument("requires m >= n");
  require_len(x.size(), static_cast<std::size_t>(n));
  double acc = (beta - 1) * n * kLog2;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      acc += beta * log_abs(x[r] * x[r] - x[s] * x[s]);
  const double single_exp = beta * (m - n + 1) - 1;
  for (int r = 0; r < n; ++r) acc += pow_term(single_exp, log_abs(x[r]));
  return acc;
}

double log_J_nonlinear(const RootDatum& datum, std::span<const double> x) {
  require_len(x.size(), static_cast<std::size_t>(datum.rank));
  double acc = datum.dim_l * kLog2;
  for (const auto& root : datum.positive_roots) {
    const double lam = evaluate_root(root.vector, x);
    acc += root.multiplicity *
           (log_abs(std::sinh(0.5 * lam)) + 0.5 * std::log(std::cosh(lam)));
  }
  return acc;
}

double log_J_new_transfer_dualform(int n, int beta, std::span<const double> a) {
  require_len(a.size(), static_cast<std::size_t>(n));
  for (double v : a)
    if (!(v > 0.0)) throw std::invalid_argument("requires a_r > 0");
  double acc = -beta * n * (n - 1) * 0.25 * kLog2;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      acc += beta * log_abs(a[r] - a[s]);
      acc += 0.5 * beta *
             std::log(1.0 / (a[r] * a[r]) + 1.0 / (a[s] * a[s]));
    }
  return acc;
}

double log_J_nonlinear_indefinite_dualform(int m, int n, int beta,
                                           std::span<const double> a) {
  if (m < n) throw std::invalid_argument("requires m >= n");
  require_len(a.size(), static_cast<std::size_t>(n));
  for (double v : a)
    if (v < 1.0) throw std::invalid_argument("requires a_r >= 1");
  double acc = 0.5 * n * (beta * (m + 1) - 2) * kLog2;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      acc += beta * log_abs(a[r] - a[s]);
      acc += 0.5 * beta * std::log(a[r] * a[r] + a[s] * a[s] - 1.0);
    }
  for (int r = 0; r < n; ++r) {
    acc += pow_term(0.5 * (beta - 1),
                    log_abs((a[r] * a[r] - 1.0) * (2.0 * a[r] * a[r] - 1.0)));
    acc += pow_term(0.5 * beta * (m - n), log_abs(a[r] * (a[r] - 1.0)));
  }
  return acc;
}

double log_delta_noncompact(const RootDatum& datum, std::span<const double> x) {
  require_len(x.size(), static_cast<std::size_t>(datum.rank));
  double acc = 0.0;
  for (const auto& root : datum.positive_roots)
    acc += root.multiplicity * log_abs(std::sinh(evaluate_root(root.vector, x)));
  return acc;
}

double log_J_compact(const RootDatum& datum, std::span<const double> x) {
  require_len(x.size(), static_cast<std::size_t>(datum.rank));
  double acc = datum.dim_l * kLog2;
  for (const auto& root : datum.positive_roots)
    acc += root.multiplicity *
           log_abs(std::sin(0.5 * evaluate_root(root.vector, x)));
  return acc;
}

double log_J_circular_dualform(int n, int beta, std::span<const double> angles) {
  require_len(angles.size(), static_cast<std::size_t>(n));
  double acc = 0.0;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s)
      acc += beta * log_abs(std::polar(1.0, angles[r]) -
                            std::polar(1.0, angles[s]));
  return acc;
}

double log_J_jacobi(int m, int n, int beta, std::span<const double> a) {
  if (m < n) throw std::invalid_argument("requires m >= n");
  require_len(a.size(), static_cast<std::size_t>(n));
  for (double v : a)
    if (std::abs(v) > 1.0) throw std::invalid_argument("requires a_r in [-1,1]");
  double acc = 0.5 * n * (beta * (m + 1) - 2) * kLog2;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) acc += beta * log_abs(a[r] - a[s]);
  const double plus_exp = 0.5 * (beta - 1);
  const double minus_exp = 0.5 * (beta * (m - n + 1) - 1);
  for (int r = 0; r < n; ++r) {
    acc += pow_term(plus_exp, log_abs(1.0 + a[r]));
    acc += pow_term(minus_exp, log_abs(1.0 - a[r]));
  }
  return acc;
}

double log_delta_compact(const RootDatum& datum, std::span<const double> x) {
  require_len(x.size(), static_cast<std::size_t>(datum.rank));
  double acc = 0.0;
  for (const auto& root : datum.positive_roots)
    acc += root.multiplicity * log_abs(std::sin(evaluate_root(root.vector, x)));
  return acc;
}

double log_J_group_compact(CompactGroup group, std::span<const double> x) {
  const RootDatum datum = build_group_roots(group, static_cast<int>(x.size()));
  // |1-e^{-iλ}|·|1-e^{iλ}| = 4 sin²(λ/2) for each ± pair
  double acc = 0.0;
  for (const auto& root : datum.positive_roots) {
    const double lam = evaluate_root(root.vector, x);
    acc += 2.0 * kLog2 + 2.0 * log_abs(std::sin(0.5 * lam));
  }
  return acc;
}

double log_J_group_compact_closed(CompactGroup group, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  double acc = 0.0;
  switch (group) {
    case CompactGroup::u: {
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          acc += 2.0 * log_abs(std::polar(1.0, x[r]) - std::polar(1.0, x[s]));
      return acc;
    }
    case CompactGroup::so_odd: {
      acc = n * n * kLog2;
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          acc += 2.0 * log_abs(std::cos(x[r]) - std::cos(x[s]));
      for (int r = 0; r < n; ++r) acc += log_abs(1.0 - std::cos(x[r]));
      return acc;
    }
    case CompactGroup::sp: {
      for (int r = 0; r < n; ++r) {
        const std::complex<double> tr = std::polar(1.0, x[r]);
        for (int s = r + 1; s < n; ++s) {
          const std::complex<double> ts = std::polar(1.0, x[s]);
          acc += 2.0 * log_abs(tr - ts);
          acc += 2.0 * log_abs(1.0 - tr * ts);
        }
        acc += 2.0 * log_abs(1.0 - tr * tr);
      }
      return acc;
    }
    case CompactGroup::so_even: {
      acc = n * (n - 1) * kLog2;
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          acc += 2.0 * log_abs(std::cos(x[r]) - std::cos(x[s]));
      return acc;
    }
  }
  throw std::logic_error("unreachable group");
}

double log_J_algebra_compact(CompactGroup group, std::span<const double> x) {
  const RootDatum datum = build_group_roots(group, static_cast<int>(x.size()));
  double acc = 0.0;
  for (const auto& root : datum.positive_roots)
    acc += 2.0 * log_abs(evaluate_root(root.vector, x));
  return acc;
}

double log_J_algebra_compact_closed(CompactGroup group,
                                    std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  double acc = 0.0;
  switch (group) {
    case CompactGroup::u:
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) acc += 2.0 * log_abs(x[r] - x[s]);
      return acc;
    case CompactGroup::sp:
      acc = 2.0 * n * kLog2;
      [[fallthrough]];
    case CompactGroup::so_odd:
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          acc += 2.0 * log_abs(x[r] * x[r] - x[s] * x[s]);
      for (int r = 0; r < n; ++r) acc += 2.0 * log_abs(x[r]);
      return acc;
    case CompactGroup::so_even:
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          acc += 2.0 * log_abs(x[r] * x[r] - x[s] * x[s]);
      return acc;
  }
  throw std::logic_error("unreachable group");
}

double log_J_group_complex(ComplexGroup group,
                           std::span<const std::complex<double>> h) {
  const int n = static_cast<int>(h.size());
  const RootDatum datum = build_complex_roots(group, n);
  if (group == ComplexGroup::sl) {
    std::complex<double> prod = 1.0;
    for (const auto& v : h) prod *= v;
    if (std::abs(prod - 1.0) > 1e-9)
      throw std::invalid_argument("determinant-one torus constraint violated");
  }
  if (group == ComplexGroup::sp)
    for (const auto& v : h)
      if (v == 0.0) throw std::invalid_argument("h_r must be nonzero");
  std::vector<std::complex<double>> w(h.size());
  for (std::size_t r = 0; r < h.size(); ++r)
    w[r] = char_coordinate(group, h[r]);
  double acc = 0.0;
  for (const auto& root : datum.positive_roots) {
    std::complex<double> chi = 1.0;
    for (int r = 0; r < n; ++r) {
      const int c = root.vector.coeffs[static_cast<std::size_t>(r)];
      if (c == 0) continue;
      const std::complex<double> p = std::pow(w[static_cast<std::size_t>(r)],
                                              static_cast<double>(c));
      chi *= p;
    }
    acc += 2.0 * log_abs(1.0 - 1.0 / chi);
    acc += 2.0 * log_abs(1.0 - chi);
  }
  return acc;
}

double log_J_group_complex_closed(ComplexGroup group,
                                  std::span<const std::complex<double>> h) {
  const int n = static_cast<int>(h.size());
  double acc = 0.0;
  switch (group) {
    case ComplexGroup::sl:
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) acc += 4.0 * log_abs(h[r] - h[s]);
      return acc;
    case ComplexGroup::sp:
      for (int r = 0; r < n; ++r) {
        if (h[r] == std::complex<double>(0.0, 0.0))
          throw std::invalid_argument("h_r must be nonzero");
        for (int s = r + 1; s < n; ++s) {
          acc += 4.0 * log_abs(h[r] - h[s]);
          acc += 4.0 * log_abs(1.0 - h[r] * h[s]);
        }
        acc += 4.0 * log_abs(1.0 - h[r] * h[r]);
        acc -= 4.0 * n * log_abs(h[r]);
      }
      return acc;
    case ComplexGroup::so_even:
      acc = 2.0 * n * (n - 1) * kLog2;
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) acc += 4.0 * log_abs(h[r] - h[s]);
      return acc;
    case ComplexGroup::so_odd:
      acc = 2.0 * n * n * kLog2;
      for (int r = 0; r < n; ++r) {
        for (int s = r + 1; s < n; ++s) acc += 4.0 * log_abs(h[r] - h[s]);
        acc += 2.0 * log_abs(1.0 - h[r]);
      }
      return acc;
  }
  throw std::logic_error("unreachable group");
}

double log_J_algebra_complex(ComplexGroup group,
                             std::span<const std::complex<double>> z) {
  const RootDatum datum = build_complex_roots(group, static_cast<int>(z.size()));
  if (group == ComplexGroup::sl) {
    std::complex<double> sum = 0.0;
    for (const auto& v : z) sum += v;
    if (std::abs(sum) > 1e-9)
      throw std::invalid_argument("trace-zero constraint violated");
  }
  double acc = 0.0;
  for (const auto& root : datum.positive_roots)
    acc += 4.0 * log_abs(evaluate_root(root.vector, z));
  return acc;
}

double log_J_algebra_complex_closed(ComplexGroup group,
                                    std::span<const std::complex<double>> z) {
  const int n = static_cast<int>(z.size());
  double acc = 0.0;
  switch (group) {
    case ComplexGroup::sl:
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s) acc += 4.0 * log_abs(z[r] - z[s]);
      return acc;
    case ComplexGroup::sp:
      acc = 4.0 * n * kLog2;
      [[fallthrough]];
    case ComplexGroup::so_odd:
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          acc += 4.0 * log_abs(z[r] * z[r] - z[s] * z[s]);
      for (int r = 0; r < n; ++r) acc += 4.0 * log_abs(z[r]);
      return acc;
    case ComplexGroup::so_even:
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          acc += 4.0 * log_abs(z[r] * z[r] - z[s] * z[s]);
      return acc;
  }
  throw std::logic_error("unreachable group");
}

namespace {

void require_pseudo_params(int n, int j, std::size_t len) {
  if (j < 0 || 2 * j > n) throw std::invalid_argument("requires 0 <= j <= n/2");
  require_len(len, static_cast<std::size_t>(n));
}

// the pair-interaction factors shared by the algebra and group forms;
// v holds either x or h
double pseudo_pair_terms(int n, int j, std::span<const double> v) {
  double acc = 0.0;
  for (int r = 2 * j; r < n; ++r)
    for (int s = r + 1; s < n; ++s) acc += 2.0 * log_abs(v[r] - v[s]);
  for (int r = 0; r < j; ++r)
    for (int s = 2 * j; s < n; ++s) {
      const double d = v[r] - v[s];
      acc += 2.0 * log_abs(d * d + v[j + r] * v[j + r]);
    }
  for (int r = 0; r < j; ++r)
    for (int s = r + 1; s < j; ++s) {
      const double d = v[r] - v[s];
      const double um = v[j + r] - v[j + s];
      const double up = v[j + r] + v[j + s];
      acc += 2.0 * log_abs(d * d + um * um);
      acc += 2.0 * log_abs(d * d + up * up);
    }
  return acc;
}

}  // namespace

double log_J_pseudo_algebra_gl(int n, int j, std::span<const double> x) {
  require_pseudo_params(n, j, x.size());
  double acc = 2.0 * j * kLog2;
  for (int r = 0; r < j; ++r) acc += 2.0 * log_abs(x[j + r]);
  return acc + pseudo_pair_terms(n, j, x);
}

double log_J_pseudo_group_gl(int n, int j, std::span<const double> h) {
  require_pseudo_params(n, j, h.size());
  for (int r = 0; r < j; ++r)
    if (h[r] * h[r] + h[j + r] * h[j + r] == 0.0)
      throw std::invalid_argument("Cartan-subgroup condition violated");
  for (int r = 2 * j; r < n; ++r)
    if (h[r] == 0.0)
      throw std::invalid_argument("Cartan-subgroup condition violated");
  double acc = 2.0 * j * kLog2;
  for (int r = 0; r < j; ++r) {
    acc += 2.0 * log_abs(h[j + r]);
    acc -= (n - 1) * std::log(h[r] * h[r] + h[j + r] * h[j + r]);
  }
  for (int r = 2 * j; r < n; ++r) acc -= (n - 1) * log_abs(h[r]);
  return acc + pseudo_pair_terms(n, j, h);
}

double log_J_sl2r(Sl2rKind kind, double coord) {
  switch (kind) {
    case Sl2rKind::alg1:
    case Sl2rKind::alg2:
      return 2.0 * kLog2 + 2.0 * log_abs(coord);
    case Sl2rKind::grp1: {
      if (coord == 0.0) throw std::invalid_argument("requires a != 0");
      return 2.0 * log_abs(coord - 1.0 / coord);
    }
    case Sl2rKind::grp2:
      return 2.0 * kLog2 + 2.0 * log_abs(std::sin(coord));
  }
  throw std::logic_error("unreachable kind");
}

}  // namespace rmt
