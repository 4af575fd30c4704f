#ifndef RMT_ROOT_DATA_HPP
#define RMT_ROOT_DATA_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace rmt {

enum class RootFamily { A, BC, B, C, D };

// A functional Σ c_r e_r in the coordinate basis.  Coefficients stay in
// {-2,...,2} for every family handled here.
struct RootVector {
  std::vector<int> coeffs;
};

struct PositiveRoot {
  RootVector vector;
  int multiplicity;  // β_λ ≥ 1; zero-multiplicity roots are never stored
};

struct RootDatum {
  RootFamily family;
  int rank;
  std::vector<PositiveRoot> positive_roots;
  std::uint64_t weyl_order;
  int dim_l;       // Σ β_λ over the positive half
  bool doubling;   // densities multiply over ±λ (group/algebra/complex kinds)
};

enum class LinearFamily { gl, indefinite };

// gl: type A_{n-1}, every multiplicity = beta.
// indefinite (m ≥ n): type BC_n with mult(e_r ± e_s) = β,
// mult(e_r) = β(m−n), mult(2e_r) = β−1; vanishing multiplicities dropped.
RootDatum build_restricted_roots(LinearFamily family, int n, int m, int beta);
RootDatum build_restricted_roots(LinearFamily family, int n, int beta);

enum class CompactGroup { u, so_odd, sp, so_even };  // U(n), SO(2n+1), Sp(n), SO(2n)

RootDatum build_group_roots(CompactGroup group, int n);

enum class ComplexGroup { sl, sp, so_even, so_odd };  // SL(n,C), Sp(n,C), SO(2n,C), SO(2n+1,C)

RootDatum build_complex_roots(ComplexGroup group, int n);

double evaluate_root(const RootVector& root, std::span<const double> point);
std::complex<double> evaluate_root(const RootVector& root,
                                   std::span<const std::complex<double>> point);

}  // namespace rmt

#endif
