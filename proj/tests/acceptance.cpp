// One pass/fail line per item on the release checklist; exits nonzero if any
// item fails.  Items 1-4 and 6-11 aggregate the tagged groups of the built-in
// verification suite; 5, the extras of 11, and 12 are checked directly.

#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "rmt/ensemble.hpp"
#include "rmt/samplers.hpp"
#include "rmt/spectra.hpp"
#include "rmt/verify.hpp"

namespace {

bool g_all_pass = true;

void report(int item, const std::string& label, bool pass,
            const std::string& detail = "") {
  g_all_pass = g_all_pass && pass;
  std::printf("%s  criterion %02d: %s%s%s\n", pass ? "PASS" : "FAIL", item,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
}

// ---- criterion 5: scalar closed forms match the textbook expressions ------

bool check_sl2r_exact() {
  rmt::Rng rng(123, 5);
  for (int i = 0; i < 100; ++i) {
    const double x = 6.0 * rng.uniform() - 3.0;
    const double a = std::exp(2.0 * rng.uniform() - 1.0) *
                     (rng.uniform() < 0.5 ? -1.0 : 1.0);
    const double y = 6.0 * rng.uniform() - 3.0;
    const struct {
      rmt::Sl2rKind kind;
      double coord;
      double expected;
    } cases[] = {
        {rmt::Sl2rKind::alg1, x, 4.0 * x * x},
        {rmt::Sl2rKind::alg2, y, 4.0 * y * y},
        {rmt::Sl2rKind::grp1, a, (a - 1.0 / a) * (a - 1.0 / a)},
        {rmt::Sl2rKind::grp2, y, 4.0 * std::sin(y) * std::sin(y)},
    };
    for (const auto& c : cases) {
      const double got = std::exp(rmt::log_J_sl2r(c.kind, c.coord));
      if (std::abs(got - c.expected) > 1e-15 * std::max(1.0, std::abs(c.expected)))
        return false;
    }
  }
  return true;
}

// ---- criterion 11 extras ---------------------------------------------------

bool check_wall_vanishing() {
  // coincident coordinates sit on a reflection wall; the density must be
  // exactly -inf there and decay monotonically on approach
  rmt::EnsembleSpec lin;
  lin.n = 3;
  lin.beta = 2;
  const std::vector<double> wall = {1.0, 1.0, -0.5};
  if (rmt::log_J(lin, wall) != rmt::kLogZero) return false;

  rmt::EnsembleSpec indef;
  indef.family = rmt::LinearFamily::indefinite;
  indef.m = 3;
  indef.n = 2;
  indef.beta = 2;
  if (rmt::log_J(indef, std::vector<double>{1.0, 0.0}) != rmt::kLogZero)
    return false;

  rmt::EnsembleSpec circ;
  circ.kind = rmt::EnsembleKind::compact;
  circ.n = 2;
  circ.beta = 1;
  if (rmt::log_J(circ, std::vector<double>{0.7, 0.7}) != rmt::kLogZero)
    return false;

  double prev = rmt::log_J(lin, std::vector<double>{1.0 + 1e-1, 1.0, -0.5});
  for (int d = 2; d <= 8; ++d) {
    const double cur =
        rmt::log_J(lin, std::vector<double>{1.0 + std::pow(10.0, -d), 1.0, -0.5});
    if (!(cur < prev)) return false;
    prev = cur;
  }
  return true;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

bool check_structure_identities() {
  rmt::Rng rng(321, 11);
  const double tol = 1e-10;
  for (int rep = 0; rep < 5; ++rep) {
    const int n = 3 + rep % 2;
    const auto id = Eigen::MatrixXcd::Identity(n, n);
    const auto id2 = Eigen::MatrixXcd::Identity(2 * n, 2 * n);

    const auto u = rmt::sample_haar(rmt::HaarGroup::unitary, n, rng);
    if (max_abs(u.data.adjoint() * u.data - id) > tol) return false;

    const auto o = rmt::sample_haar(rmt::HaarGroup::orthogonal, n, rng);
    if (max_abs(o.data.transpose() * o.data - id) > tol) return false;
    if (max_abs(o.data.imag().cast<std::complex<double>>()) > 0) return false;

    const auto s = rmt::sample_haar(rmt::HaarGroup::symplectic, n, rng);
    if (max_abs(s.data.adjoint() * s.data - id2) > tol) return false;
    if (max_abs(rmt::quaternion_dual(s.data) * s.data - id2) > tol) return false;

    const auto env = rmt::Envelope::gaussian_trace(0.5);
    const auto goe = rmt::sample_gaussian(1, n, env, rng);
    if (max_abs(goe.data - goe.data.transpose()) > tol) return false;
    const auto gue = rmt::sample_gaussian(2, n, env, rng);
    if (max_abs(gue.data - gue.data.adjoint()) > tol) return false;
    const auto gse = rmt::sample_gaussian(4, n, env, rng);
    if (max_abs(gse.data - gse.data.adjoint()) > tol) return false;
    if (max_abs(rmt::quaternion_dual(gse.data) - gse.data) > tol) return false;

    const auto coe = rmt::sample_circular(1, n, rng);
    if (max_abs(coe.data - coe.data.transpose()) > tol) return false;
    if (max_abs(coe.data.adjoint() * coe.data - id) > tol) return false;
    const auto cse = rmt::sample_circular(4, n, rng);
    if (max_abs(rmt::quaternion_dual(cse.data) - cse.data) > tol) return false;
    if (max_abs(cse.data.adjoint() * cse.data - id2) > tol) return false;

    const auto alg = rmt::sample_algebra_compact(rmt::CompactAlgebra::so, 2 * n,
                                                 env, rng);
    if (max_abs(alg.data + alg.data.adjoint()) > tol) return false;

    const auto sym = rmt::sample_symspace_compact(rmt::SymSpaceFamily::u, n + 1,
                                                  n, rng);
    const int d = static_cast<int>(sym.data.rows());
    if (max_abs(sym.data.adjoint() * sym.data -
                Eigen::MatrixXcd::Identity(d, d)) > tol)
      return false;
  }
  return true;
}

bool check_kramers_multiplicity() {
  rmt::Rng rng(77, 4);
  const auto env = rmt::Envelope::gaussian_trace(0.5);
  for (int rep = 0; rep < 20; ++rep) {
    const auto gse = rmt::sample_gaussian(4, 3, env, rng);
    const auto eig = rmt::hermitian_eigenvalues(gse);
    if (rmt::dedupe_pairs(eig, 1e-6).size() * 2 != eig.size()) return false;
    const auto cse = rmt::sample_circular(4, 3, rng);
    const auto ang = rmt::unitary_eigenangles(cse);
    if (rmt::dedupe_pairs(ang, 1e-6).size() * 2 != ang.size()) return false;
  }
  return true;
}

// ---- criterion 12: byte determinism across worker counts -------------------

bool check_determinism() {
  rmt::cli::RunConfig cfg;
  cfg.ensemble.kind = rmt::EnsembleKind::linear;
  cfg.ensemble.n = 3;
  cfg.ensemble.beta = 2;
  cfg.ensemble.envelope = rmt::Envelope::gaussian_trace(0.5);
  cfg.count = 200;
  cfg.seed = 99;

  std::ostringstream s1, s4, err;
  cfg.jobs = 1;
  if (rmt::cli::cmd_sample(cfg, s1, err) != rmt::cli::kExitOk) return false;
  cfg.jobs = 4;
  if (rmt::cli::cmd_sample(cfg, s4, err) != rmt::cli::kExitOk) return false;
  if (s1.str() != s4.str() || s1.str().empty()) return false;

  // a trimmed check suite keeps this criterion fast while still spanning all
  // three check kinds
  const std::string suite_text =
      "[check]\n"
      "name = det_pointwise\n"
      "kind = pointwise\n"
      "pair = circular\n"
      "n = 3\nbeta = 2\npoints = 50\n"
      "[check]\n"
      "name = det_invariance\n"
      "kind = invariance\n"
      "ensemble = linear\n"
      "n = 3\nbeta = 2\npoints = 50\n"
      "[check]\n"
      "name = det_mc\n"
      "kind = mc_vs_quad\n"
      "ensemble = linear\n"
      "n = 2\nbeta = 2\n"
      "env = gaussian_trace\na = 0.5\n"
      "observable = sum_sq\nsamples = 5000\nnodes = 32\n";
  std::istringstream in1(suite_text), in2(suite_text);
  const auto suite1 = rmt::cli::parse_suite(in1);
  const auto r1 = rmt::run_suite(suite1, 1);
  const auto r4 = rmt::run_suite(rmt::cli::parse_suite(in2), 4);
  if (r1.size() != r4.size()) return false;
  for (std::size_t i = 0; i < r1.size(); ++i) {
    if (r1[i].name != r4[i].name || r1[i].lhs != r4[i].lhs ||
        r1[i].rhs != r4[i].rhs || r1[i].pass != r4[i].pass)
      return false;
    if (!r1[i].pass) return false;
  }
  return true;
}

}  // namespace

int main() {
  const auto suite = rmt::default_suite();
  const auto reports = rmt::run_suite(suite, 8);

  std::map<int, std::pair<int, int>> groups;  // group -> {pass, total}
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const int g = suite[i].acceptance_group;
    if (g == 0) continue;
    auto& [pass, total] = groups[g];
    ++total;
    if (reports[i].pass) ++pass;
    else failures.push_back(reports[i].name + " (" + reports[i].criterion + ")");
  }
  const auto group_line = [&](int item, const std::string& label) {
    const auto [pass, total] = groups[item];
    char detail[64];
    std::snprintf(detail, sizeof detail, "%d/%d checks", pass, total);
    report(item, label, total > 0 && pass == total, detail);
  };

  group_line(1, "hyperbolic dual form matches the root engine");
  group_line(2, "indefinite-family dual forms match the root engine");
  group_line(3, "unit-circle dual form matches the half-angle engine");
  group_line(4, "character/root engines match every closed per-group form");
  report(5, "scalar rank-one closed forms are exact", check_sl2r_exact());
  group_line(6, "Gaussian invariant ensembles: matrix MC matches quadrature");
  group_line(7, "circular ensembles: matrix MC matches quadrature");
  group_line(8, "symmetric-space pushforward matches the radial sin-density");
  group_line(9, "singular-value ensembles: matrix MC matches quadrature");
  group_line(10, "compact-algebra Gaussians match quadrature (u(2) = GUE)");
  {
    const auto [pass, total] = groups[11];
    const bool walls = check_wall_vanishing();
    const bool structure = check_structure_identities();
    const bool kramers = check_kramers_multiplicity();
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "%d/%d invariance checks, walls %s, structure %s, pairing %s",
                  pass, total, walls ? "ok" : "bad", structure ? "ok" : "bad",
                  kramers ? "ok" : "bad");
    report(11, "invariance, wall vanishing, structure, even multiplicity",
           total > 0 && pass == total && walls && structure && kramers, detail);
  }
  report(12, "sample and check output byte-identical across worker counts",
         check_determinism());

  for (const auto& f : failures) std::printf("  failed check: %s\n", f.c_str());
  return g_all_pass ? 0 : 1;
}
