#ifndef RMT_ENSEMBLE_HPP
#define RMT_ENSEMBLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rmt/densities.hpp"
#include "rmt/quadrature.hpp"
#include "rmt/rng.hpp"
#include "rmt/spectra.hpp"

namespace rmt {

enum class EnsembleKind {
  linear,
  nonlinear_noncompact,
  compact,
  sym_space_noncompact_delta,
  sym_space_compact_delta,
  group_compact,
  algebra_compact,
  group_complex,
  algebra_complex,
  pseudo_algebra_gl,
  pseudo_group_gl,
  sl2r_alg1,
  sl2r_alg2,
  sl2r_grp1,
  sl2r_grp2,
};

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::linear;
  LinearFamily family = LinearFamily::gl;  // root-datum kinds
  int n = 1;
  int m = -1;  // -1 = absent
  int beta = 2;
  int j = 0;                                 // pseudo kinds
  CompactGroup group = CompactGroup::u;      // group/algebra compact
  ComplexGroup cgroup = ComplexGroup::sl;    // group/algebra complex
  Envelope envelope;
};

// number of real coordinates; complex kinds interleave (re, im) pairs
int coord_arity(const EnsembleSpec& spec);

Chart chart_of(EnsembleKind kind);

// the Weyl family the coordinates fold into
RootFamily fold_family(const EnsembleSpec& spec);

bool has_sampler(const EnsembleSpec& spec);

double log_J(const EnsembleSpec& spec, std::span<const double> coords);

// log J + log p
double log_density(const EnsembleSpec& spec, std::span<const double> coords);

// log_density bound to a prebuilt root datum; use for tight grid loops
GridFunction make_log_density(const EnsembleSpec& spec);

// one matrix draw mapped to folded eigenvalue coordinates
std::vector<double> sample_coords(const EnsembleSpec& spec, Rng& rng);

// integration domain matching the sampler's coordinate range
Domain quadrature_domain(const EnsembleSpec& spec);

std::string kind_name(EnsembleKind kind);
std::optional<EnsembleKind> parse_kind(const std::string& name);
const std::vector<EnsembleKind>& all_kinds();

}  // namespace rmt

#endif
