#include "rmt/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace rmt {

Domain Domain::box(std::vector<double> lo, std::vector<double> hi) {
  if (lo.size() != hi.size() || lo.empty())
    throw std::invalid_argument("box bounds must have equal positive length");
  for (std::size_t k = 0; k < lo.size(); ++k)
    if (!(lo[k] < hi[k])) throw std::invalid_argument("box requires lo < hi");
  Domain d{Kind::box, static_cast<int>(lo.size()), std::move(lo), std::move(hi)};
  return d;
}

Domain Domain::symmetric_box(int rank, double half_width) {
  return box(std::vector<double>(static_cast<std::size_t>(rank), -half_width),
             std::vector<double>(static_cast<std::size_t>(rank), half_width));
}

Domain Domain::torus(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  return Domain{Kind::torus, rank, {}, {}};
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  // Newton iteration on P_n from the Chebyshev initial guess
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
}

namespace {

struct Grid {
  // per-dimension nodes and weights in domain coordinates
  std::vector<std::vector<double>> nodes;
  std::vector<std::vector<double>> weights;
};

Grid make_grid(const Domain& domain, int n) {
  Grid g;
  g.nodes.resize(static_cast<std::size_t>(domain.rank));
  g.weights.resize(static_cast<std::size_t>(domain.rank));
  if (domain.kind == Domain::Kind::torus) {
    const double h = 2.0 * std::numbers::pi / n;
    for (int d = 0; d < domain.rank; ++d) {
      auto& xs = g.nodes[static_cast<std::size_t>(d)];
      auto& ws = g.weights[static_cast<std::size_t>(d)];
      xs.resize(static_cast<std::size_t>(n));
      ws.assign(static_cast<std::size_t>(n), h);
      for (int k = 0; k < n; ++k)
        xs[static_cast<std::size_t>(k)] = -std::numbers::pi + (k + 0.5) * h;
    }
    return g;
  }
  std::vector<double> ref_nodes, ref_weights;
  gauss_legendre(n, ref_nodes, ref_weights);
  for (int d = 0; d < domain.rank; ++d) {
    const double lo = domain.lo[static_cast<std::size_t>(d)];
    const double hi = domain.hi[static_cast<std::size_t>(d)];
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    auto& xs = g.nodes[static_cast<std::size_t>(d)];
    auto& ws = g.weights[static_cast<std::size_t>(d)];
    xs.resize(static_cast<std::size_t>(n));
    ws.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      xs[static_cast<std::size_t>(k)] = mid + half * ref_nodes[static_cast<std::size_t>(k)];
      ws[static_cast<std::size_t>(k)] = half * ref_weights[static_cast<std::size_t>(k)];
    }
  }
  return g;
}

// odometer sweep in lexicographic index order; deterministic accumulation
template <typename Visitor>
void for_each_node(const Grid& g, Visitor&& visit) {
  const std::size_t rank = g.nodes.size();
  const std::size_t n = g.nodes.front().size();
  std::vector<std::size_t> idx(rank, 0);
  std::vector<double> point(rank);
  for (;;) {
    double w = 1.0;
    for (std::size_t d = 0; d < rank; ++d) {
      point[d] = g.nodes[d][idx[d]];
      w *= g.weights[d][idx[d]];
    }
    visit(std::span<const double>(point), w);
    std::size_t d = rank;
    while (d > 0) {
      --d;
      if (++idx[d] < n) break;
      idx[d] = 0;
      if (d == 0) return;
    }
  }
}

double integrate_on(const Grid& g, const GridFunction& f) {
  double acc = 0.0;
  for_each_node(g, [&](std::span<const double> x, double w) { acc += w * f(x); });
  return acc;
}

void check_rank(const Domain& domain, int nodes_per_dim) {
  if (nodes_per_dim < 2) throw std::invalid_argument("need at least 2 nodes");
  if (domain.rank > 4)
    throw std::invalid_argument("tensor grids capped at rank 4; use MC");
}

double expectation_on(const Grid& g, const GridFunction& log_density,
                      const GridFunction& observable) {
  double max_log = -std::numeric_limits<double>::infinity();
  for_each_node(g, [&](std::span<const double> x, double) {
    max_log = std::max(max_log, log_density(x));
  });
  if (!std::isfinite(max_log))
    throw std::runtime_error("density vanishes or is non-finite on the grid");
  double num = 0.0, den = 0.0;
  for_each_node(g, [&](std::span<const double> x, double w) {
    const double l = log_density(x);
    if (l == -std::numeric_limits<double>::infinity()) return;
    const double m = w * std::exp(l - max_log);
    den += m;
    num += m * observable(x);
  });
  if (!(den > 0.0) || !std::isfinite(den) || !std::isfinite(num))
    throw std::runtime_error("normalization is zero or non-finite");
  return num / den;
}

}  // namespace

QuadResult tensor_quad(const Domain& domain, int nodes_per_dim,
                       const GridFunction& f) {
  check_rank(domain, nodes_per_dim);
  const Grid fine = make_grid(domain, nodes_per_dim);
  const int coarse_n = std::max(2, nodes_per_dim / 2);
  const Grid coarse = make_grid(domain, coarse_n);
  const double value = integrate_on(fine, f);
  const double ref = integrate_on(coarse, f);
  long nodes = 1;
  for (int d = 0; d < domain.rank; ++d) nodes *= nodes_per_dim;
  long coarse_nodes = 1;
  for (int d = 0; d < domain.rank; ++d) coarse_nodes *= coarse_n;
  return {value, std::abs(value - ref), nodes + coarse_nodes};
}

QuadResult normalized_expectation(const GridFunction& log_density,
                                  const GridFunction& observable,
                                  const Domain& domain, int nodes_per_dim) {
  check_rank(domain, nodes_per_dim);
  const Grid fine = make_grid(domain, nodes_per_dim);
  const int coarse_n = std::max(2, nodes_per_dim / 2);
  const Grid coarse = make_grid(domain, coarse_n);
  const double value = expectation_on(fine, log_density, observable);
  const double ref = expectation_on(coarse, log_density, observable);
  long nodes = 1;
  for (int d = 0; d < domain.rank; ++d) nodes *= nodes_per_dim;
  long coarse_nodes = 1;
  for (int d = 0; d < domain.rank; ++d) coarse_nodes *= coarse_n;
  return {value, std::abs(value - ref), nodes + coarse_nodes};
}

MeanStderr mc_mean(std::span<const double> values) {
  if (values.size() < 2)
    throw std::invalid_argument("need at least 2 values");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double var = ss / static_cast<double>(values.size() - 1);
  return {mean, std::sqrt(var / static_cast<double>(values.size()))};
}

}  // namespace rmt
