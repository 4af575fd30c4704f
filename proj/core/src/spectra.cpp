#include "rmt/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rmt {

namespace {

bool is_selfadjoint_structure(MatrixStructure s) {
  return s == MatrixStructure::real_symmetric ||
         s == MatrixStructure::hermitian ||
         s == MatrixStructure::quaternion_selfdual_embedded;
}

bool is_unitary_structure(MatrixStructure s) {
  return s == MatrixStructure::unitary || s == MatrixStructure::orthogonal ||
         s == MatrixStructure::symplectic_embedded ||
         s == MatrixStructure::symspace_point;
}

double wrap_angle(double x) {
  // principal value in (-π, π]
  double y = std::remainder(x, 2.0 * std::numbers::pi);
  if (y <= -std::numbers::pi) y += 2.0 * std::numbers::pi;
  return y;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const MatrixSample& sample) {
  Eigen::MatrixXcd m = sample.data;
  if (sample.structure == MatrixStructure::antihermitian)
    m *= std::complex<double>(0.0, -1.0);
  else if (!is_selfadjoint_structure(sample.structure))
    throw std::invalid_argument("sample is not self-adjoint structured");
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > 1e-8 * scale)
    throw std::invalid_argument("self-adjointness residual too large");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m,
                                                         Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> unitary_eigenangles(const MatrixSample& sample) {
  const Eigen::MatrixXcd& m = sample.data;
  if (!is_unitary_structure(sample.structure))
    throw std::invalid_argument("sample is not unitary structured");
  const Eigen::MatrixXcd gram = m * m.adjoint();
  if ((gram - Eigen::MatrixXcd::Identity(m.rows(), m.cols())).norm() >
      1e-8 * std::sqrt(static_cast<double>(m.rows())))
    throw std::invalid_argument("unitarity residual too large");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  std::vector<double> angles(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index k = 0; k < m.rows(); ++k)
    angles[static_cast<std::size_t>(k)] = wrap_angle(std::arg(solver.eigenvalues()(k)));
  std::sort(angles.begin(), angles.end());
  return angles;
}

std::vector<double> singular_values(const MatrixSample& sample) {
  if (sample.structure != MatrixStructure::rect_block)
    throw std::invalid_argument("sample is not a rectangular block");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sample.data);
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};  // Eigen returns descending
}

std::vector<double> dedupe_pairs(std::vector<double> values, double tol) {
  if (values.size() % 2 != 0)
    throw std::invalid_argument("pair dedup requires even length");
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  out.reserve(values.size() / 2);
  for (std::size_t k = 0; k + 1 < values.size(); k += 2) {
    if (std::abs(values[k + 1] - values[k]) >
        tol * std::max(1.0, std::abs(values[k])))
      throw std::runtime_error("spectrum does not pair up within tolerance");
    out.push_back(0.5 * (values[k] + values[k + 1]));
  }
  return out;
}

ChamberPoint fold_to_chamber(std::vector<double> x, Chart chart,
                             RootFamily family) {
  if (chart == Chart::angle)
    for (double& v : x) v = wrap_angle(v);
  switch (family) {
    case RootFamily::A:
      std::sort(x.begin(), x.end(), std::greater<>());
      break;
    case RootFamily::B:
    case RootFamily::C:
    case RootFamily::BC:
      for (double& v : x) v = std::abs(v);
      std::sort(x.begin(), x.end(), std::greater<>());
      break;
    case RootFamily::D: {
      int negatives = 0;
      for (double& v : x) {
        if (v < 0.0) ++negatives;
        v = std::abs(v);
      }
      std::sort(x.begin(), x.end(), std::greater<>());
      if (negatives % 2 == 1 && !x.empty()) x.back() = -x.back();
      break;
    }
  }
  return {std::move(x), chart, family};
}

std::vector<double> positive_half_spectrum(std::vector<double> values,
                                           int zeros, double tol) {
  if ((values.size() - static_cast<std::size_t>(zeros)) % 2 != 0)
    throw std::invalid_argument("inconsistent zero count");
  std::sort(values.begin(), values.end());
  const std::size_t pairs = (values.size() - static_cast<std::size_t>(zeros)) / 2;
  std::vector<double> out;
  out.reserve(pairs);
  for (std::size_t k = 0; k < pairs; ++k) {
    const double lo = values[k];
    const double hi = values[values.size() - 1 - k];
    if (std::abs(hi + lo) > tol * std::max(1.0, std::abs(hi)))
      throw std::runtime_error("spectrum is not symmetric about zero");
    out.push_back(0.5 * (hi - lo));
  }
  for (std::size_t k = pairs; k < values.size() - pairs; ++k)
    if (std::abs(values[k]) > tol)
      throw std::runtime_error("expected zero eigenvalue is nonzero");
  return out;
}

ChamberPoint extract_symspace_coords(const MatrixSample& sample, int m, int n) {
  if (sample.structure != MatrixStructure::symspace_point)
    throw std::invalid_argument("sample is not a symmetric-space point");
  std::vector<double> angles = unitary_eigenangles(sample);
  if (sample.beta == 4) angles = dedupe_pairs(std::move(angles), kFoldTol);
  if (angles.size() != static_cast<std::size_t>(m + n))
    throw std::runtime_error("unexpected spectrum size");

  // sorted angles pair off ± from both ends; angles near ±π may both land at
  // +π and pair with each other
  std::vector<double> coords;
  std::size_t lo = 0, hi = angles.size();
  const double pi = std::numbers::pi;
  while (hi - lo >= 2 && static_cast<int>(coords.size()) < n) {
    const double top = angles[hi - 1];
    if (top <= kFoldTol) break;  // only (near-)zeros left
    if (std::abs(angles[lo] + top) <= kFoldTol) {
      coords.push_back(0.25 * (top - angles[lo]));
      ++lo;
      --hi;
    } else if (top >= pi - kFoldTol && angles[hi - 2] >= pi - kFoldTol) {
      coords.push_back(0.5 * pi);
      hi -= 2;
    } else {
      throw std::runtime_error(
          "angle multiset inconsistent with the ±pair pattern");
    }
  }
  int zero_count = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    if (std::abs(angles[k]) > kFoldTol)
      throw std::runtime_error(
          "angle multiset inconsistent with the ±pair pattern");
    ++zero_count;
  }
  if (zero_count < m - n)
    throw std::runtime_error("missing fixed unit eigenvalues");
  while (static_cast<int>(coords.size()) < n) coords.push_back(0.0);
  return fold_to_chamber(std::move(coords), Chart::angle, RootFamily::BC);
}

}  // namespace rmt
