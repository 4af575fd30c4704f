#ifndef RMT_QUADRATURE_HPP
#define RMT_QUADRATURE_HPP

#include <functional>
#include <span>
#include <vector>

namespace rmt {

struct Domain {
  enum class Kind { box, torus };
  Kind kind;
  int rank;
  std::vector<double> lo, hi;  // box only

  static Domain box(std::vector<double> lo, std::vector<double> hi);
  static Domain symmetric_box(int rank, double half_width);
  static Domain torus(int rank);
};

struct QuadResult {
  double value;
  double est_error;
  long nodes_used;
};

using GridFunction = std::function<double(std::span<const double>)>;

// box: tensor Gauss-Legendre; torus: equispaced trapezoid.  est_error
// compares against the half-resolution grid.  rank is capped at 4.
QuadResult tensor_quad(const Domain& domain, int nodes_per_dim,
                       const GridFunction& f);

// ∫ f·e^{log_density} / ∫ e^{log_density}, max-shifted for stability;
// the domain covers the full Weyl-symmetric region so chamber copies cancel
QuadResult normalized_expectation(const GridFunction& log_density,
                                  const GridFunction& observable,
                                  const Domain& domain, int nodes_per_dim);

struct MeanStderr {
  double mean;
  double stderr_of_mean;
};

MeanStderr mc_mean(std::span<const double> values);

// Gauss-Legendre nodes/weights on [-1, 1]
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace rmt

#endif
