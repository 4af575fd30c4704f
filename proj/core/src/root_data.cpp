#include "rmt/root_data.hpp"

#include <stdexcept>

namespace rmt {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t weyl_order_for(RootFamily family, int n) {
  switch (family) {
    case RootFamily::A:
      return factorial(n);  // rank n-1, acting on n coordinates
    case RootFamily::B:
    case RootFamily::C:
    case RootFamily::BC:
      return (std::uint64_t{1} << n) * factorial(n);
    case RootFamily::D:
      return (n >= 1 ? (std::uint64_t{1} << (n - 1)) : 1) * factorial(n);
  }
  throw std::logic_error("unreachable family");
}

RootVector basis_diff(int n, int r, int s) {
  RootVector v{std::vector<int>(static_cast<std::size_t>(n), 0)};
  v.coeffs[static_cast<std::size_t>(r)] = 1;
  v.coeffs[static_cast<std::size_t>(s)] = -1;
  return v;
}

RootVector basis_sum(int n, int r, int s) {
  RootVector v{std::vector<int>(static_cast<std::size_t>(n), 0)};
  v.coeffs[static_cast<std::size_t>(r)] = 1;
  v.coeffs[static_cast<std::size_t>(s)] = 1;
  return v;
}

RootVector basis_single(int n, int r, int scale) {
  RootVector v{std::vector<int>(static_cast<std::size_t>(n), 0)};
  v.coeffs[static_cast<std::size_t>(r)] = scale;
  return v;
}

void push(std::vector<PositiveRoot>& out, RootVector v, int mult) {
  if (mult > 0) out.push_back(PositiveRoot{std::move(v), mult});
}

int mult_sum(const std::vector<PositiveRoot>& roots) {
  int s = 0;
  for (const auto& r : roots) s += r.multiplicity;
  return s;
}

// BC_n layout shared by B (mult 2e_r = 0) and C (mult e_r = 0) specializations.
std::vector<PositiveRoot> bc_positive_roots(int n, int pair_mult, int short_mult,
                                            int long_mult) {
  std::vector<PositiveRoot> roots;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) {
      push(roots, basis_diff(n, r, s), pair_mult);
      push(roots, basis_sum(n, r, s), pair_mult);
    }
  for (int r = 0; r < n; ++r) {
    push(roots, basis_single(n, r, 1), short_mult);
    push(roots, basis_single(n, r, 2), long_mult);
  }
  return roots;
}

std::vector<PositiveRoot> a_positive_roots(int n, int mult) {
  std::vector<PositiveRoot> roots;
  for (int r = 0; r < n; ++r)
    for (int s = r + 1; s < n; ++s) push(roots, basis_diff(n, r, s), mult);
  return roots;
}

RootDatum finish(RootFamily family, int rank, std::vector<PositiveRoot> roots,
                 bool doubling) {
  const int dim_l = mult_sum(roots);
  return RootDatum{family, rank, std::move(roots), weyl_order_for(family, rank),
                   dim_l, doubling};
}

}  // namespace

RootDatum build_restricted_roots(LinearFamily family, int n, int m, int beta) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (beta != 1 && beta != 2 && beta != 4)
    throw std::invalid_argument("beta must be 1, 2, or 4");
  if (family == LinearFamily::gl)
    return finish(RootFamily::A, n, a_positive_roots(n, beta), false);
  if (m < n) throw std::invalid_argument("indefinite family requires m >= n");
  return finish(RootFamily::BC, n,
                bc_positive_roots(n, beta, beta * (m - n), beta - 1), false);
}

RootDatum build_restricted_roots(LinearFamily family, int n, int beta) {
  if (family != LinearFamily::gl)
    throw std::invalid_argument("indefinite family requires m");
  return build_restricted_roots(family, n, n, beta);
}

RootDatum build_group_roots(CompactGroup group, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  switch (group) {
    case CompactGroup::u:
      return finish(RootFamily::A, n, a_positive_roots(n, 1), true);
    case CompactGroup::so_odd:
      return finish(RootFamily::B, n, bc_positive_roots(n, 1, 1, 0), true);
    case CompactGroup::sp:
      return finish(RootFamily::C, n, bc_positive_roots(n, 1, 0, 1), true);
    case CompactGroup::so_even:
      return finish(RootFamily::D, n, bc_positive_roots(n, 1, 0, 0), true);
  }
  throw std::logic_error("unreachable group");
}

RootDatum build_complex_roots(ComplexGroup group, int n) {
  switch (group) {
    case ComplexGroup::sl:
      if (n < 2) throw std::invalid_argument("sl requires n >= 2");
      return finish(RootFamily::A, n, a_positive_roots(n, 1), true);
    case ComplexGroup::sp:
      if (n < 1) throw std::invalid_argument("n must be positive");
      return finish(RootFamily::C, n, bc_positive_roots(n, 1, 0, 1), true);
    case ComplexGroup::so_even:
      if (n < 1) throw std::invalid_argument("n must be positive");
      return finish(RootFamily::D, n, bc_positive_roots(n, 1, 0, 0), true);
    case ComplexGroup::so_odd:
      if (n < 1) throw std::invalid_argument("n must be positive");
      return finish(RootFamily::B, n, bc_positive_roots(n, 1, 1, 0), true);
  }
  throw std::logic_error("unreachable group");
}

double evaluate_root(const RootVector& root, std::span<const double> point) {
  if (root.coeffs.size() != point.size())
    throw std::invalid_argument("point length does not match root rank");
  double v = 0.0;
  for (std::size_t r = 0; r < point.size(); ++r)
    v += static_cast<double>(root.coeffs[r]) * point[r];
  return v;
}

std::complex<double> evaluate_root(const RootVector& root,
                                   std::span<const std::complex<double>> point) {
  if (root.coeffs.size() != point.size())
    throw std::invalid_argument("point length does not match root rank");
  std::complex<double> v = 0.0;
  for (std::size_t r = 0; r < point.size(); ++r)
    v += static_cast<double>(root.coeffs[r]) * point[r];
  return v;
}

}  // namespace rmt
