#include <doctest.h>

#include <cmath>
#include <complex>

#include "rmt/samplers.hpp"
#include "rmt/spectra.hpp"

using namespace rmt;
using doctest::Approx;

namespace {
double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("ginibre entry moments") {
  Rng rng(11, 0);
  const auto real = ginibre(GinibreKind::real, 64, 64, rng);
  CHECK(max_abs(real.data.imag().cast<std::complex<double>>()) == 0.0);
  CHECK(real.data.real().mean() == Approx(0.0).epsilon(0.05));
  CHECK(real.data.real().array().square().mean() == Approx(1.0).epsilon(0.05));
  const auto cplx = ginibre(GinibreKind::cplx, 64, 64, rng);
  CHECK(cplx.data.array().abs2().mean() == Approx(1.0).epsilon(0.05));
}

TEST_CASE("gaussian ensembles have the advertised structure") {
  Rng rng(12, 0);
  const auto env = Envelope::gaussian_trace(0.5);
  const auto goe = sample_gaussian(1, 5, env, rng);
  CHECK(goe.structure == MatrixStructure::real_symmetric);
  CHECK(max_abs(goe.data - goe.data.transpose()) == 0.0);
  const auto gue = sample_gaussian(2, 5, env, rng);
  CHECK(gue.structure == MatrixStructure::hermitian);
  CHECK(max_abs(gue.data - gue.data.adjoint()) < 1e-15);
  const auto gse = sample_gaussian(4, 3, env, rng);
  CHECK(gse.structure == MatrixStructure::quaternion_selfdual_embedded);
  CHECK(gse.data.rows() == 6);
  CHECK(max_abs(quaternion_dual(gse.data) - gse.data) < 1e-14);
  CHECK_THROWS(sample_gaussian(3, 4, env, rng));
}

TEST_CASE("gaussian entry variances follow the trace weight") {
  // density exp(-a tr xi^2): diagonal variance 1/(2a), off-diagonal
  // component variance 1/(4a)
  Rng rng(13, 0);
  const double a = 2.0;
  const auto env = Envelope::gaussian_trace(a);
  double diag_sq = 0.0, off_sq = 0.0;
  const int reps = 4000, n = 4;
  for (int rep = 0; rep < reps; ++rep) {
    const auto s = sample_gaussian(2, n, env, rng);
    for (int r = 0; r < n; ++r) diag_sq += std::norm(s.data(r, r));
    off_sq += std::norm(s.data(0, 1));
  }
  CHECK(diag_sq / (reps * n) == Approx(1.0 / (2.0 * a)).epsilon(0.05));
  // complex off-diagonal entry: two components of variance 1/(4a)
  CHECK(off_sq / reps == Approx(1.0 / (2.0 * a)).epsilon(0.05));
}

TEST_CASE("gaussian mean shifts with the linear tilt") {
  Rng rng(14, 0);
  const auto env = Envelope::gaussian_trace(1.0, 2.0);
  double diag_sum = 0.0;
  const int reps = 4000;
  for (int rep = 0; rep < reps; ++rep) {
    const auto s = sample_gaussian(1, 3, env, rng);
    diag_sum += s.data.real().diagonal().sum();
  }
  CHECK(diag_sum / (reps * 3) == Approx(1.0).epsilon(0.05));  // b/(2a)
}

TEST_CASE("rectangular blocks have unit-scaled components") {
  Rng rng(15, 0);
  const auto env = Envelope::gaussian_hs(0.5);
  const auto block = sample_chiral(2, 5, 3, env, rng);
  CHECK(block.structure == MatrixStructure::rect_block);
  CHECK(block.data.rows() == 5);
  CHECK(block.data.cols() == 3);
  double sq = 0.0;
  const int reps = 2000;
  for (int rep = 0; rep < reps; ++rep)
    sq += sample_chiral(2, 2, 1, env, rng).data.array().abs2().sum();
  // each complex entry has E|z|^2 = 2 * 1/(2a) = 2 at a = 1/2
  CHECK(sq / (reps * 2) == Approx(2.0).epsilon(0.05));
}

TEST_CASE("haar matrices live on their groups") {
  Rng rng(16, 0);
  const auto u = sample_haar(HaarGroup::unitary, 6, rng);
  CHECK(u.structure == MatrixStructure::unitary);
  CHECK(max_abs(u.data.adjoint() * u.data -
                Eigen::MatrixXcd::Identity(6, 6)) < 1e-12);
  const auto o = sample_haar(HaarGroup::orthogonal, 6, rng);
  CHECK(o.structure == MatrixStructure::orthogonal);
  CHECK(max_abs(o.data.imag().cast<std::complex<double>>()) == 0.0);
  CHECK(std::abs(std::abs(o.data.determinant()) - 1.0) < 1e-12);
  const auto s = sample_haar(HaarGroup::symplectic, 4, rng);
  CHECK(s.structure == MatrixStructure::symplectic_embedded);
  CHECK(max_abs(s.data.adjoint() * s.data -
                Eigen::MatrixXcd::Identity(8, 8)) < 1e-12);
  CHECK(max_abs(quaternion_dual(s.data) * s.data -
                Eigen::MatrixXcd::Identity(8, 8)) < 1e-12);
}

TEST_CASE("haar eigenangle distribution has no locked phase") {
  // a biased QR convention would cluster the first eigenangle
  Rng rng(17, 0);
  double mean_angle = 0.0;
  const int reps = 500;
  for (int rep = 0; rep < reps; ++rep) {
    const auto u = sample_haar(HaarGroup::unitary, 3, rng);
    const auto ang = unitary_eigenangles(u);
    mean_angle += ang[1];
  }
  CHECK(std::abs(mean_angle / reps) < 0.25);
}

TEST_CASE("circular ensembles produce the advertised symmetry classes") {
  Rng rng(18, 0);
  const auto coe = sample_circular(1, 4, rng);
  CHECK(max_abs(coe.data - coe.data.transpose()) < 1e-12);
  CHECK(max_abs(coe.data.adjoint() * coe.data -
                Eigen::MatrixXcd::Identity(4, 4)) < 1e-12);
  const auto cse = sample_circular(4, 3, rng);
  CHECK(max_abs(quaternion_dual(cse.data) - cse.data) < 1e-12);
  // Kramers pairing of the eigenangles
  const auto ang = unitary_eigenangles(cse);
  CHECK(dedupe_pairs(ang, 1e-8).size() == 3);
  CHECK_THROWS(sample_circular(3, 4, rng));
}

TEST_CASE("compact-algebra samples are antihermitian") {
  Rng rng(19, 0);
  const auto env = Envelope::gaussian_hs(0.5);
  const auto u = sample_algebra_compact(CompactAlgebra::u, 4, env, rng);
  CHECK(u.structure == MatrixStructure::antihermitian);
  CHECK(max_abs(u.data + u.data.adjoint()) < 1e-15);
  const auto so = sample_algebra_compact(CompactAlgebra::so, 5, env, rng);
  CHECK(max_abs(so.data + so.data.transpose()) == 0.0);
  CHECK(max_abs(so.data.imag().cast<std::complex<double>>()) == 0.0);
  const auto sp = sample_algebra_compact(CompactAlgebra::sp, 3, env, rng);
  CHECK(max_abs(sp.data + sp.data.adjoint()) < 1e-15);
  // quaternionic + antihermitian: the dual equals the adjoint, i.e. -X
  CHECK(max_abs(quaternion_dual(sp.data) + sp.data) < 1e-14);
}

TEST_CASE("symmetric-space points are involutive up to signature") {
  Rng rng(20, 0);
  for (SymSpaceFamily fam : {SymSpaceFamily::so, SymSpaceFamily::u,
                             SymSpaceFamily::sp}) {
    const auto p = sample_symspace_compact(fam, 3, 2, rng);
    CHECK(p.structure == MatrixStructure::symspace_point);
    const auto d = p.data.rows();
    CHECK(max_abs(p.data.adjoint() * p.data -
                  Eigen::MatrixXcd::Identity(d, d)) < 1e-12);
  }
}

TEST_CASE("samplers replay under equal seeds") {
  const auto env = Envelope::gaussian_trace(0.5);
  Rng a(77, 5), b(77, 5);
  CHECK(max_abs(sample_gaussian(2, 4, env, a).data -
                sample_gaussian(2, 4, env, b).data) == 0.0);
  CHECK(max_abs(sample_haar(HaarGroup::unitary, 4, a).data -
                sample_haar(HaarGroup::unitary, 4, b).data) == 0.0);
}
