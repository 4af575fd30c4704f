#ifndef RMT_SAMPLERS_HPP
#define RMT_SAMPLERS_HPP

#include <Eigen/Dense>

#include "rmt/densities.hpp"
#include "rmt/rng.hpp"

namespace rmt {

enum class MatrixStructure {
  real_symmetric,
  hermitian,
  quaternion_selfdual_embedded,
  antihermitian,  // compact-algebra elements ξ = -ξ*, possibly embedded
  unitary,
  orthogonal,
  symplectic_embedded,
  rect_block,
  symspace_point,
};

// Real matrices are stored with zero imaginary parts; quaternion matrices in
// the 2n x 2n complex embedding [[A, B], [-conj(B), conj(A)]].
struct MatrixSample {
  Eigen::MatrixXcd data;
  MatrixStructure structure;
  int beta;
};

enum class GinibreKind { real, cplx };

// i.i.d. standard normal entries; complex entries have independent
// N(0, 1/2) parts so E|entry|^2 = 1
MatrixSample ginibre(GinibreKind kind, int rows, int cols, Rng& rng);

// Invariant Gaussian with matrix density ∝ exp(-a tr ξ² + b tr ξ):
// diagonal N(b/(2a), 1/(2a)), each real off-diagonal component N(0, 1/(4a)).
// β = 1/2/4 gives real symmetric / Hermitian / quaternion self-dual.
MatrixSample sample_gaussian(int beta, int n, const Envelope& env, Rng& rng);

// m x n block B with density ∝ exp(-a tr BB*); every real component
// N(0, 1/(2a)).  Eigenvalue coordinates are the singular values of B.
MatrixSample sample_chiral(int beta, int m, int n, const Envelope& env,
                           Rng& rng);

enum class HaarGroup { unitary, orthogonal, symplectic };

// Ginibre + QR with R-diagonal normalization; symplectic via quaternion
// Gram-Schmidt, returned in the complex embedding.
MatrixSample sample_haar(HaarGroup group, int n, Rng& rng);

// β=2 Haar unitary, β=1 UᵀU (symmetric unitary), β=4 U^R·U (self-dual
// unitary in the embedding)
MatrixSample sample_circular(int beta, int n, Rng& rng);

enum class CompactAlgebra { u, so, sp };

// Gaussian element of the compact algebra with Ad-invariant density scaled so
// the eigenvalue-coordinate envelope is exactly exp(-a Σ x_k²); for u(n) this
// is i·(GUE with the same a).  so takes the ambient size N (so(N)); u and sp
// take the rank n.
MatrixSample sample_algebra_compact(CompactAlgebra algebra, int n,
                                    const Envelope& env, Rng& rng);

enum class SymSpaceFamily { so, u, sp };

// p = g·I_{m,n}·g⁻¹·I_{m,n} for Haar g; the eigen-angle pushforward realizes
// the compact radial density ∏|sin λ|^{β_λ} with β = 1, 2, 4 for so, u, sp.
MatrixSample sample_symspace_compact(SymSpaceFamily family, int m, int n,
                                     Rng& rng);

// the quaternion dual X^R = J Xᵀ J⁻¹ on embedded matrices
Eigen::MatrixXcd quaternion_dual(const Eigen::MatrixXcd& embedded);

}  // namespace rmt

#endif
