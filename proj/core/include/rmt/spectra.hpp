#ifndef RMT_SPECTRA_HPP
#define RMT_SPECTRA_HPP

#include <vector>

#include "rmt/root_data.hpp"
#include "rmt/samplers.hpp"

namespace rmt {

enum class Chart { linear, log_chart, angle };

struct ChamberPoint {
  std::vector<double> coords;
  Chart chart;
  RootFamily family;
};

// self-adjoint spectra, ascending; antihermitian inputs are mapped through
// ξ -> -iξ first
std::vector<double> hermitian_eigenvalues(const MatrixSample& sample);

// principal arguments in (-π, π], ascending
std::vector<double> unitary_eigenangles(const MatrixSample& sample);

// descending
std::vector<double> singular_values(const MatrixSample& sample);

// collapse a doubly degenerate list to one representative per pair
std::vector<double> dedupe_pairs(std::vector<double> values, double tol);

// canonical Weyl-chamber representative:
//   A        sort descending
//   B/C/BC   absolute values, sort descending
//   D        absolute values descending, residual sign on the last coordinate
// Angle-chart input is reduced into (-π, π] first.
ChamberPoint fold_to_chamber(std::vector<double> x, Chart chart,
                             RootFamily family);

// eigen-angles of p come in ± pairs 2x_k plus at least m-n fixed angles 0;
// returns the n values x_k folded to the BC chamber
ChamberPoint extract_symspace_coords(const MatrixSample& sample, int m, int n);

// split a spectrum symmetric about 0 into its nonnegative half; expects
// pairs ±x plus exactly `zeros` extra zero entries
std::vector<double> positive_half_spectrum(std::vector<double> values,
                                           int zeros, double tol);

inline constexpr double kFoldTol = 1e-7;

}  // namespace rmt

#endif
