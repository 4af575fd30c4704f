#ifndef RMT_DENSITIES_HPP
#define RMT_DENSITIES_HPP

#include <complex>
#include <limits>
#include <span>

#include "rmt/root_data.hpp"

namespace rmt {

// All densities are returned in log space; a vanishing product factor yields
// exactly -infinity.
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

enum class EnvelopeKind { uniform, gaussian_trace, gaussian_hs };

// log p at eigenvalue coordinates x:
//   uniform         0
//   gaussian_trace  -a Σx² + b Σx + c
//   gaussian_hs     -a Σx²
struct Envelope {
  EnvelopeKind kind = EnvelopeKind::uniform;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  static Envelope uniform() { return {}; }
  static Envelope gaussian_trace(double a, double b = 0.0, double c = 0.0);
  static Envelope gaussian_hs(double a);
};

double log_envelope(const Envelope& env, std::span<const double> x);

// --- flat (linear) coordinates ------------------------------------------

double log_J_linear(const RootDatum& datum, std::span<const double> x);

// closed form 2^{(β-1)n} Π|x_r²-x_s²|^β Π|x_r|^{β(m-n+1)-1}
double log_J_linear_indefinite(int m, int n, int beta, std::span<const double> x);

// --- hyperbolic (log-chart) coordinates ----------------------------------

double log_J_nonlinear(const RootDatum& datum, std::span<const double> x);

// closed form 2^{-βn(n-1)/4} Π|a_r-a_s|^β (a_r⁻²+a_s⁻²)^{β/2}, a_r > 0
double log_J_new_transfer_dualform(int n, int beta, std::span<const double> a);

// closed form on a_r = cosh x_r ≥ 1
double log_J_nonlinear_indefinite_dualform(int m, int n, int beta,
                                           std::span<const double> a);

double log_delta_noncompact(const RootDatum& datum, std::span<const double> x);

// --- angle coordinates ----------------------------------------------------

double log_J_compact(const RootDatum& datum, std::span<const double> x);

// closed form Π|e^{ix_r}-e^{ix_s}|^β
double log_J_circular_dualform(int n, int beta, std::span<const double> angles);

// closed form on a_r = cos x_r ∈ [-1,1]
double log_J_jacobi(int m, int n, int beta, std::span<const double> a);

double log_delta_compact(const RootDatum& datum, std::span<const double> x);

// --- compact group / algebra ensembles -----------------------------------

// generic character engine Π over ± root pairs of |1-e^{-iα(x)}|
double log_J_group_compact(CompactGroup group, std::span<const double> x);
// the per-group closed forms, implemented independently of the engine
double log_J_group_compact_closed(CompactGroup group, std::span<const double> x);

double log_J_algebra_compact(CompactGroup group, std::span<const double> x);
double log_J_algebra_compact_closed(CompactGroup group,
                                    std::span<const double> x);

// --- complex group / algebra ensembles ------------------------------------

// h are Cartan-coordinate values; sl requires Πh_r = 1 within 1e-9,
// sp requires every h_r nonzero.
double log_J_group_complex(ComplexGroup group,
                           std::span<const std::complex<double>> h);
double log_J_group_complex_closed(ComplexGroup group,
                                  std::span<const std::complex<double>> h);

// sl requires Σz_r = 0 within 1e-9
double log_J_algebra_complex(ComplexGroup group,
                             std::span<const std::complex<double>> z);
double log_J_algebra_complex_closed(ComplexGroup group,
                                    std::span<const std::complex<double>> z);

// --- one-Cartan-class pieces of gl(n,R) / GL(n,R) -------------------------

// j = number of complex-conjugate coordinate pairs, 0 ≤ j ≤ n/2; coordinates
// are (x_1..x_j, x_{j+1}..x_{2j}, x_{2j+1}..x_n) = (real parts, imaginary
// parts, real coordinates).
double log_J_pseudo_algebra_gl(int n, int j, std::span<const double> x);
double log_J_pseudo_group_gl(int n, int j, std::span<const double> h);

enum class Sl2rKind { alg1, alg2, grp1, grp2 };

// scalar closed forms 4x², 4y², (a-a⁻¹)², 4sin²y
double log_J_sl2r(Sl2rKind kind, double coord);

}  // namespace rmt

#endif
