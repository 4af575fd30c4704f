#include "rmt/samplers.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rmt {

namespace {

using Complex = std::complex<double>;

double gaussian_scale(const Envelope& env) {
  if (env.kind == EnvelopeKind::uniform || !(env.a > 0.0))
    throw std::invalid_argument("sampler requires a Gaussian envelope with a > 0");
  return env.a;
}

// q = a + b·j; the embedding sends an n x n quaternion matrix (A, B) to
// [[A, B], [-conj(B), conj(A)]]
struct Quat {
  Complex a, b;
};

Quat qmul(const Quat& p, const Quat& q) {
  return {p.a * q.a - p.b * std::conj(q.b), p.a * q.b + p.b * std::conj(q.a)};
}

Quat qconj(const Quat& q) { return {std::conj(q.a), -q.b}; }

Quat qadd(const Quat& p, const Quat& q) { return {p.a + q.a, p.b + q.b}; }

Quat qscale(const Quat& q, double s) { return {q.a * s, q.b * s}; }

double qnorm_sq(const Quat& q) { return std::norm(q.a) + std::norm(q.b); }

using QuatMatrix = std::vector<std::vector<Quat>>;

Eigen::MatrixXcd embed(const QuatMatrix& q) {
  const int rows = static_cast<int>(q.size());
  const int cols = static_cast<int>(q.front().size());
  Eigen::MatrixXcd m(2 * rows, 2 * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Quat& v = q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      m(i, j) = v.a;
      m(i, j + cols) = v.b;
      m(i + rows, j) = -std::conj(v.b);
      m(i + rows, j + cols) = std::conj(v.a);
    }
  return m;
}

QuatMatrix quaternion_ginibre(int n, Rng& rng) {
  QuatMatrix q(static_cast<std::size_t>(n),
               std::vector<Quat>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double c0 = rng.normal(), c1 = rng.normal();
      const double c2 = rng.normal(), c3 = rng.normal();
      q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          Quat{{c0, c1}, {c2, c3}};
    }
  return q;
}

// modified Gram-Schmidt over the quaternions; right scalar multiplication
QuatMatrix quaternion_orthonormalize(QuatMatrix m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < k; ++p) {
      Quat inner{0.0, 0.0};
      for (std::size_t i = 0; i < n; ++i)
        inner = qadd(inner, qmul(qconj(m[i][p]), m[i][k]));
      for (std::size_t i = 0; i < n; ++i) {
        const Quat proj = qmul(m[i][p], inner);
        m[i][k] = {m[i][k].a - proj.a, m[i][k].b - proj.b};
      }
    }
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm_sq += qnorm_sq(m[i][k]);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (std::size_t i = 0; i < n; ++i) m[i][k] = qscale(m[i][k], inv);
  }
  return m;
}

Eigen::MatrixXcd haar_unitary(int n, Rng& rng) {
  Eigen::MatrixXcd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Eigen::MatrixXd haar_orthogonal(int n, Rng& rng) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  return q;
}

Eigen::MatrixXcd signature_matrix(int m, int n) {
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(m + n, m + n);
  for (int i = 0; i < m; ++i) s(i, i) = 1.0;
  for (int i = m; i < m + n; ++i) s(i, i) = -1.0;
  return s;
}

}  // namespace

MatrixSample ginibre(GinibreKind kind, int rows, int cols, Rng& rng) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("shape must be positive");
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = kind == GinibreKind::real ? Complex(rng.normal(), 0.0)
                                          : rng.complex_normal();
  return {std::move(m), MatrixStructure::rect_block,
          kind == GinibreKind::real ? 1 : 2};
}

MatrixSample sample_gaussian(int beta, int n, const Envelope& env, Rng& rng) {
  const double a = gaussian_scale(env);
  const double mean = env.kind == EnvelopeKind::gaussian_trace ? env.b / (2.0 * a)
                                                               : 0.0;
  const double diag_sd = std::sqrt(1.0 / (2.0 * a));
  const double off_sd = std::sqrt(1.0 / (4.0 * a));
  if (beta == 1) {
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i) {
      m(i, i) = mean + diag_sd * rng.normal();
      for (int j = i + 1; j < n; ++j) {
        // tr ξ² counts ξ_ij twice, hence variance 1/(4a)
        const double v = off_sd * rng.normal();
        m(i, j) = v;
        m(j, i) = v;
      }
    }
    return {std::move(m), MatrixStructure::real_symmetric, 1};
  }
  if (beta == 2) {
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i) {
      m(i, i) = mean + diag_sd * rng.normal();
      for (int j = i + 1; j < n; ++j) {
        const Complex v(off_sd * rng.normal(), off_sd * rng.normal());
        m(i, j) = v;
        m(j, i) = std::conj(v);
      }
    }
    return {std::move(m), MatrixStructure::hermitian, 2};
  }
  if (beta == 4) {
    QuatMatrix q(static_cast<std::size_t>(n),
                 std::vector<Quat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
      q[i][i] = Quat{{mean + diag_sd * rng.normal(), 0.0}, {0.0, 0.0}};
      for (int j = i + 1; j < n; ++j) {
        const Quat v{{off_sd * rng.normal(), off_sd * rng.normal()},
                     {off_sd * rng.normal(), off_sd * rng.normal()}};
        q[i][j] = v;
        q[j][i] = qconj(v);
      }
    }
    return {embed(q), MatrixStructure::quaternion_selfdual_embedded, 4};
  }
  throw std::invalid_argument("beta must be 1, 2, or 4");
}

MatrixSample sample_chiral(int beta, int m, int n, const Envelope& env,
                           Rng& rng) {
  if (m < n || n < 1) throw std::invalid_argument("requires m >= n >= 1");
  const double a = gaussian_scale(env);
  const double sd = std::sqrt(1.0 / (2.0 * a));
  if (beta == 1 || beta == 2) {
    Eigen::MatrixXcd b(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        b(i, j) = beta == 1
                      ? Complex(sd * rng.normal(), 0.0)
                      : Complex(sd * rng.normal(), sd * rng.normal());
    MatrixSample s{std::move(b), MatrixStructure::rect_block, beta};
    return s;
  }
  if (beta == 4) {
    QuatMatrix q(static_cast<std::size_t>(m),
                 std::vector<Quat>(static_cast<std::size_t>(n)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        q[i][j] = Quat{{sd * rng.normal(), sd * rng.normal()},
                       {sd * rng.normal(), sd * rng.normal()}};
    return {embed(q), MatrixStructure::rect_block, 4};
  }
  throw std::invalid_argument("beta must be 1, 2, or 4");
}

MatrixSample sample_haar(HaarGroup group, int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  switch (group) {
    case HaarGroup::unitary:
      return {haar_unitary(n, rng), MatrixStructure::unitary, 2};
    case HaarGroup::orthogonal:
      return {haar_orthogonal(n, rng).cast<Complex>(),
              MatrixStructure::orthogonal, 1};
    case HaarGroup::symplectic:
      return {embed(quaternion_orthonormalize(quaternion_ginibre(n, rng))),
              MatrixStructure::symplectic_embedded, 4};
  }
  throw std::logic_error("unreachable group");
}

Eigen::MatrixXcd quaternion_dual(const Eigen::MatrixXcd& embedded) {
  const int two_n = static_cast<int>(embedded.rows());
  if (two_n % 2 != 0 || embedded.cols() != two_n)
    throw std::invalid_argument("expected a square embedded matrix");
  const int n = two_n / 2;
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(two_n, two_n);
  for (int k = 0; k < n; ++k) {
    j(k, n + k) = 1.0;
    j(n + k, k) = -1.0;
  }
  return j * embedded.transpose() * j.transpose();
}

MatrixSample sample_circular(int beta, int n, Rng& rng) {
  if (beta == 2) {
    MatrixSample s = sample_haar(HaarGroup::unitary, n, rng);
    return s;
  }
  if (beta == 1) {
    const Eigen::MatrixXcd u = haar_unitary(n, rng);
    return {u.transpose() * u, MatrixStructure::unitary, 1};
  }
  if (beta == 4) {
    // U must come from the full unitary group: for a symplectic U the dual
    // would be U^{-1} and the product would collapse to the identity
    const Eigen::MatrixXcd u = haar_unitary(2 * n, rng);
    return {quaternion_dual(u) * u, MatrixStructure::symplectic_embedded, 4};
  }
  throw std::invalid_argument("beta must be 1, 2, or 4");
}

MatrixSample sample_algebra_compact(CompactAlgebra algebra, int n,
                                    const Envelope& env, Rng& rng) {
  if (n < 1) throw std::invalid_argument("size must be positive");
  const double a = gaussian_scale(env);
  const double diag_sd = std::sqrt(1.0 / (2.0 * a));
  const double off_sd = std::sqrt(1.0 / (4.0 * a));
  switch (algebra) {
    case CompactAlgebra::u: {
      // i·(Hermitian Gaussian); eigen-coordinates are the Hermitian spectrum
      Eigen::MatrixXcd m(n, n);
      for (int i = 0; i < n; ++i) {
        m(i, i) = Complex(0.0, diag_sd * rng.normal());
        for (int j = i + 1; j < n; ++j) {
          const Complex v(off_sd * rng.normal(), off_sd * rng.normal());
          m(i, j) = Complex(0.0, 1.0) * v;
          m(j, i) = Complex(0.0, 1.0) * std::conj(v);
        }
      }
      return {std::move(m), MatrixStructure::antihermitian, 2};
    }
    case CompactAlgebra::so: {
      // n is the ambient size N of so(N); entry variance 1/(2a) makes the
      // rotation-angle envelope exp(-a Σ x²)
      Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const double v = diag_sd * rng.normal();
          m(i, j) = v;
          m(j, i) = -v;
        }
      return {std::move(m), MatrixStructure::antihermitian, 1};
    }
    case CompactAlgebra::sp: {
      QuatMatrix q(static_cast<std::size_t>(n),
                   std::vector<Quat>(static_cast<std::size_t>(n)));
      for (int i = 0; i < n; ++i) {
        // purely imaginary quaternion on the diagonal
        q[i][i] = Quat{{0.0, diag_sd * rng.normal()},
                       {diag_sd * rng.normal(), diag_sd * rng.normal()}};
        for (int j = i + 1; j < n; ++j) {
          const Quat v{{off_sd * rng.normal(), off_sd * rng.normal()},
                       {off_sd * rng.normal(), off_sd * rng.normal()}};
          q[i][j] = v;
          q[j][i] = {-std::conj(v.a), v.b};  // -conj(q_ij)
        }
      }
      return {embed(q), MatrixStructure::antihermitian, 4};
    }
  }
  throw std::logic_error("unreachable algebra");
}

MatrixSample sample_symspace_compact(SymSpaceFamily family, int m, int n,
                                     Rng& rng) {
  if (m < n || n < 1) throw std::invalid_argument("requires m >= n >= 1");
  switch (family) {
    case SymSpaceFamily::u: {
      const Eigen::MatrixXcd g = haar_unitary(m + n, rng);
      const Eigen::MatrixXcd sig = signature_matrix(m, n);
      return {g * sig * g.adjoint() * sig, MatrixStructure::symspace_point, 2};
    }
    case SymSpaceFamily::so: {
      Eigen::MatrixXd g = haar_orthogonal(m + n, rng);
      if (g.determinant() < 0.0) g.col(m + n - 1) *= -1.0;
      const Eigen::MatrixXcd gc = g.cast<Complex>();
      const Eigen::MatrixXcd sig = signature_matrix(m, n);
      return {gc * sig * gc.transpose() * sig, MatrixStructure::symspace_point,
              1};
    }
    case SymSpaceFamily::sp: {
      const Eigen::MatrixXcd g =
          embed(quaternion_orthonormalize(quaternion_ginibre(m + n, rng)));
      Eigen::MatrixXcd sig = Eigen::MatrixXcd::Zero(2 * (m + n), 2 * (m + n));
      sig.topLeftCorner(m + n, m + n) = signature_matrix(m, n);
      sig.bottomRightCorner(m + n, m + n) = signature_matrix(m, n);
      return {g * sig * g.adjoint() * sig, MatrixStructure::symspace_point, 4};
    }
  }
  throw std::logic_error("unreachable family");
}

}  // namespace rmt
