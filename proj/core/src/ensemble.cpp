#include "rmt/ensemble.hpp"

#include <cmath>
#include <stdexcept>

#include "rmt/samplers.hpp"

namespace rmt {

namespace {

RootDatum datum_for(const EnsembleSpec& spec) {
  const int m = spec.m >= 0 ? spec.m : spec.n;
  return build_restricted_roots(spec.family, spec.n, m, spec.beta);
}

std::vector<std::complex<double>> to_complex(std::span<const double> coords) {
  if (coords.size() % 2 != 0)
    throw std::invalid_argument("complex kinds take interleaved (re, im) pairs");
  std::vector<std::complex<double>> z(coords.size() / 2);
  for (std::size_t k = 0; k < z.size(); ++k)
    z[k] = {coords[2 * k], coords[2 * k + 1]};
  return z;
}

double gaussian_a(const EnsembleSpec& spec) {
  if (spec.envelope.kind == EnvelopeKind::uniform || !(spec.envelope.a > 0.0))
    throw std::invalid_argument("kind requires a Gaussian envelope");
  return spec.envelope.a;
}

}  // namespace

int coord_arity(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case EnsembleKind::group_complex:
    case EnsembleKind::algebra_complex:
      return 2 * spec.n;
    case EnsembleKind::sl2r_alg1:
    case EnsembleKind::sl2r_alg2:
    case EnsembleKind::sl2r_grp1:
    case EnsembleKind::sl2r_grp2:
      return 1;
    default:
      return spec.n;
  }
}

Chart chart_of(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::nonlinear_noncompact:
    case EnsembleKind::sym_space_noncompact_delta:
      return Chart::log_chart;
    case EnsembleKind::compact:
    case EnsembleKind::sym_space_compact_delta:
    case EnsembleKind::group_compact:
    case EnsembleKind::sl2r_grp2:
      return Chart::angle;
    default:
      return Chart::linear;
  }
}

RootFamily fold_family(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case EnsembleKind::linear:
    case EnsembleKind::nonlinear_noncompact:
    case EnsembleKind::compact:
    case EnsembleKind::sym_space_noncompact_delta:
    case EnsembleKind::sym_space_compact_delta:
      return spec.family == LinearFamily::gl ? RootFamily::A : RootFamily::BC;
    case EnsembleKind::group_compact:
    case EnsembleKind::algebra_compact:
      switch (spec.group) {
        case CompactGroup::u: return RootFamily::A;
        case CompactGroup::so_odd: return RootFamily::B;
        case CompactGroup::sp: return RootFamily::C;
        case CompactGroup::so_even: return RootFamily::D;
      }
      return RootFamily::A;
    default:
      return RootFamily::A;
  }
}

bool has_sampler(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case EnsembleKind::linear:
    case EnsembleKind::algebra_compact:
    case EnsembleKind::sym_space_compact_delta:
      return true;
    case EnsembleKind::compact:
      return spec.family == LinearFamily::gl;
    default:
      return false;
  }
}

double log_J(const EnsembleSpec& spec, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != coord_arity(spec))
    throw std::invalid_argument("coordinate arity mismatch");
  switch (spec.kind) {
    case EnsembleKind::linear:
      return log_J_linear(datum_for(spec), coords);
    case EnsembleKind::nonlinear_noncompact:
      return log_J_nonlinear(datum_for(spec), coords);
    case EnsembleKind::compact:
      return log_J_compact(datum_for(spec), coords);
    case EnsembleKind::sym_space_noncompact_delta:
      return log_delta_noncompact(datum_for(spec), coords);
    case EnsembleKind::sym_space_compact_delta:
      return log_delta_compact(datum_for(spec), coords);
    case EnsembleKind::group_compact:
      return log_J_group_compact(spec.group, coords);
    case EnsembleKind::algebra_compact:
      return log_J_algebra_compact(spec.group, coords);
    case EnsembleKind::group_complex:
      return log_J_group_complex(spec.cgroup, to_complex(coords));
    case EnsembleKind::algebra_complex:
      return log_J_algebra_complex(spec.cgroup, to_complex(coords));
    case EnsembleKind::pseudo_algebra_gl:
      return log_J_pseudo_algebra_gl(spec.n, spec.j, coords);
    case EnsembleKind::pseudo_group_gl:
      return log_J_pseudo_group_gl(spec.n, spec.j, coords);
    case EnsembleKind::sl2r_alg1:
      return log_J_sl2r(Sl2rKind::alg1, coords[0]);
    case EnsembleKind::sl2r_alg2:
      return log_J_sl2r(Sl2rKind::alg2, coords[0]);
    case EnsembleKind::sl2r_grp1:
      return log_J_sl2r(Sl2rKind::grp1, coords[0]);
    case EnsembleKind::sl2r_grp2:
      return log_J_sl2r(Sl2rKind::grp2, coords[0]);
  }
  throw std::logic_error("unreachable kind");
}

double log_density(const EnsembleSpec& spec, std::span<const double> coords) {
  return log_J(spec, coords) + log_envelope(spec.envelope, coords);
}

GridFunction make_log_density(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case EnsembleKind::linear:
    case EnsembleKind::nonlinear_noncompact:
    case EnsembleKind::compact:
    case EnsembleKind::sym_space_noncompact_delta:
    case EnsembleKind::sym_space_compact_delta: {
      const RootDatum datum = datum_for(spec);
      const EnsembleKind kind = spec.kind;
      const Envelope env = spec.envelope;
      return [datum, kind, env](std::span<const double> x) {
        double j;
        switch (kind) {
          case EnsembleKind::linear: j = log_J_linear(datum, x); break;
          case EnsembleKind::nonlinear_noncompact:
            j = log_J_nonlinear(datum, x);
            break;
          case EnsembleKind::compact: j = log_J_compact(datum, x); break;
          case EnsembleKind::sym_space_noncompact_delta:
            j = log_delta_noncompact(datum, x);
            break;
          default: j = log_delta_compact(datum, x); break;
        }
        return j + log_envelope(env, x);
      };
    }
    default: {
      const EnsembleSpec copy = spec;
      return [copy](std::span<const double> x) { return log_density(copy, x); };
    }
  }
}

std::vector<double> sample_coords(const EnsembleSpec& spec, Rng& rng) {
  if (!has_sampler(spec))
    throw std::invalid_argument("kind '" + kind_name(spec.kind) +
                                "' is density-evaluation-only");
  switch (spec.kind) {
    case EnsembleKind::linear: {
      if (spec.family == LinearFamily::gl) {
        const MatrixSample s =
            sample_gaussian(spec.beta, spec.n, spec.envelope, rng);
        std::vector<double> ev = hermitian_eigenvalues(s);
        if (spec.beta == 4) ev = dedupe_pairs(std::move(ev), kFoldTol);
        return fold_to_chamber(std::move(ev), Chart::linear, RootFamily::A)
            .coords;
      }
      const MatrixSample s =
          sample_chiral(spec.beta, spec.m, spec.n, spec.envelope, rng);
      std::vector<double> sv = singular_values(s);
      if (spec.beta == 4) sv = dedupe_pairs(std::move(sv), kFoldTol);
      return fold_to_chamber(std::move(sv), Chart::linear, RootFamily::BC)
          .coords;
    }
    case EnsembleKind::compact: {
      const MatrixSample s = sample_circular(spec.beta, spec.n, rng);
      std::vector<double> ang = unitary_eigenangles(s);
      if (spec.beta == 4) ang = dedupe_pairs(std::move(ang), kFoldTol);
      return fold_to_chamber(std::move(ang), Chart::angle, RootFamily::A)
          .coords;
    }
    case EnsembleKind::algebra_compact: {
      switch (spec.group) {
        case CompactGroup::u: {
          const MatrixSample s = sample_algebra_compact(CompactAlgebra::u,
                                                        spec.n, spec.envelope,
                                                        rng);
          return fold_to_chamber(hermitian_eigenvalues(s), Chart::linear,
                                 RootFamily::A)
              .coords;
        }
        case CompactGroup::so_odd: {
          const MatrixSample s = sample_algebra_compact(
              CompactAlgebra::so, 2 * spec.n + 1, spec.envelope, rng);
          return fold_to_chamber(
                     positive_half_spectrum(hermitian_eigenvalues(s), 1,
                                            kFoldTol),
                     Chart::linear, RootFamily::B)
              .coords;
        }
        case CompactGroup::so_even: {
          const MatrixSample s = sample_algebra_compact(
              CompactAlgebra::so, 2 * spec.n, spec.envelope, rng);
          return fold_to_chamber(
                     positive_half_spectrum(hermitian_eigenvalues(s), 0,
                                            kFoldTol),
                     Chart::linear, RootFamily::D)
              .coords;
        }
        case CompactGroup::sp: {
          const MatrixSample s = sample_algebra_compact(CompactAlgebra::sp,
                                                        spec.n, spec.envelope,
                                                        rng);
          return fold_to_chamber(
                     positive_half_spectrum(hermitian_eigenvalues(s), 0,
                                            kFoldTol),
                     Chart::linear, RootFamily::C)
              .coords;
        }
      }
      throw std::logic_error("unreachable group");
    }
    case EnsembleKind::sym_space_compact_delta: {
      SymSpaceFamily fam;
      if (spec.beta == 1) fam = SymSpaceFamily::so;
      else if (spec.beta == 2) fam = SymSpaceFamily::u;
      else if (spec.beta == 4) fam = SymSpaceFamily::sp;
      else throw std::invalid_argument("beta must be 1, 2, or 4");
      const int m = spec.m >= 0 ? spec.m : spec.n;
      const MatrixSample s = sample_symspace_compact(fam, m, spec.n, rng);
      return extract_symspace_coords(s, m, spec.n).coords;
    }
    default:
      throw std::logic_error("unreachable kind");
  }
}

Domain quadrature_domain(const EnsembleSpec& spec) {
  switch (spec.kind) {
    case EnsembleKind::linear:
    case EnsembleKind::algebra_compact:
      return Domain::symmetric_box(spec.n,
                                   8.0 / std::sqrt(2.0 * gaussian_a(spec)));
    case EnsembleKind::compact:
      return Domain::torus(spec.n);
    case EnsembleKind::sym_space_compact_delta:
      // the δ density is π-periodic and sign-symmetric; this box is a union
      // of Weyl copies of the coordinate range [0, π/2]
      return Domain::symmetric_box(spec.n, 1.5707963267948966);
    default:
      throw std::invalid_argument("no canonical quadrature domain for kind");
  }
}

std::string kind_name(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::linear: return "linear";
    case EnsembleKind::nonlinear_noncompact: return "nonlinear_noncompact";
    case EnsembleKind::compact: return "compact";
    case EnsembleKind::sym_space_noncompact_delta:
      return "sym_space_noncompact_delta";
    case EnsembleKind::sym_space_compact_delta:
      return "sym_space_compact_delta";
    case EnsembleKind::group_compact: return "group_compact";
    case EnsembleKind::algebra_compact: return "algebra_compact";
    case EnsembleKind::group_complex: return "group_complex";
    case EnsembleKind::algebra_complex: return "algebra_complex";
    case EnsembleKind::pseudo_algebra_gl: return "pseudo_algebra_gl";
    case EnsembleKind::pseudo_group_gl: return "pseudo_group_gl";
    case EnsembleKind::sl2r_alg1: return "sl2r_alg1";
    case EnsembleKind::sl2r_alg2: return "sl2r_alg2";
    case EnsembleKind::sl2r_grp1: return "sl2r_grp1";
    case EnsembleKind::sl2r_grp2: return "sl2r_grp2";
  }
  throw std::logic_error("unreachable kind");
}

const std::vector<EnsembleKind>& all_kinds() {
  static const std::vector<EnsembleKind> kinds = {
      EnsembleKind::linear,
      EnsembleKind::nonlinear_noncompact,
      EnsembleKind::compact,
      EnsembleKind::sym_space_noncompact_delta,
      EnsembleKind::sym_space_compact_delta,
      EnsembleKind::group_compact,
      EnsembleKind::algebra_compact,
      EnsembleKind::group_complex,
      EnsembleKind::algebra_complex,
      EnsembleKind::pseudo_algebra_gl,
      EnsembleKind::pseudo_group_gl,
      EnsembleKind::sl2r_alg1,
      EnsembleKind::sl2r_alg2,
      EnsembleKind::sl2r_grp1,
      EnsembleKind::sl2r_grp2,
  };
  return kinds;
}

std::optional<EnsembleKind> parse_kind(const std::string& name) {
  for (EnsembleKind k : all_kinds())
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

}  // namespace rmt
