#ifndef RMT_VERIFY_HPP
#define RMT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmt/ensemble.hpp"

namespace rmt {

// named Weyl-invariant observables on eigenvalue coordinates
using Observable = GridFunction;
Observable observable_catalog(const std::string& name);
const std::vector<std::string>& observable_names();

enum class CheckKind { pointwise_equality, invariance, mc_vs_quad };

// the printed identities tested point-by-point; parameters come from the
// ensemble record of the owning CheckSpec
enum class DualFormPair {
  transfer_gl,              // sinh/cosh engine vs the a-coordinate form
  transfer_indefinite,      // sinh/cosh engine on the BC datum vs a = cosh x
  circular,                 // half-angle engine vs unit-circle chords
  jacobi,                   // half-angle engine on the BC datum vs a = cos x
  linear_indefinite,        // root engine vs the |x²-x²| closed form
  group_compact_closed,     // character engine vs the per-group form
  algebra_compact_closed,
  group_complex_closed,
  algebra_complex_closed,
  pseudo_algebra_eigen,     // block form vs a Vandermonde over eigenvalues
  pseudo_group_eigen,
};

struct Tolerance {
  double rel = 1e-3;
  double sigma_mult = 5.0;
};

struct CheckSpec {
  std::string name;
  CheckKind kind = CheckKind::mc_vs_quad;
  EnsembleSpec ensemble;
  DualFormPair pair = DualFormPair::transfer_gl;  // pointwise only
  int points = 1000;                              // pointwise/invariance
  std::string observable = "sum_sq";              // mc_vs_quad only
  long sample_count = 100000;
  int nodes_per_dim = 64;
  std::uint64_t seed = 20260823;
  Tolerance tol;
  std::optional<double> analytic_value;  // extra |mc - value| <= σ·stderr gate
  int acceptance_group = 0;              // 0 = not part of the acceptance map
};

struct CheckReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double stderr_of_mean = 0.0;
  std::string criterion;
  bool pass = false;
};

CheckReport check_pointwise(const CheckSpec& spec, std::uint64_t stream_id = 0);
CheckReport check_invariance(const CheckSpec& spec, std::uint64_t stream_id = 0);
CheckReport check_mc_vs_quad(const CheckSpec& spec, std::uint64_t stream_id = 0);

// dispatches on spec.kind
CheckReport run_check(const CheckSpec& spec, std::uint64_t stream_id = 0);

// per-check streams (seed, index); report order follows suite order
// regardless of job count
std::vector<CheckReport> run_suite(const std::vector<CheckSpec>& suite,
                                   int jobs = 1);

// the built-in suite backing the acceptance checklist
std::vector<CheckSpec> default_suite();

}  // namespace rmt

#endif
