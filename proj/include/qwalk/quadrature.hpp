#pragma once
// Globally adaptive Gauss-Kronrod quadrature (G7/K15), 1D and tensor-cell 2D.
// Nodes are strictly interior, so integrable endpoint/corner singularities
// never get evaluated; refinement is error-driven with a deterministic final
// summation order.

#include <cstddef>
#include <functional>
#include <span>

namespace qwalk::quadrature {

struct Result {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

Result integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol, std::size_t max_intervals = 20000);

/// Tensor-product rule over [ax,bx] x [ay,by].  `x_splits`/`y_splits` seed
/// initial cell boundaries (used to pin known singular lines/points to cell
/// edges so no node lands on them).
Result integrate_2d(const std::function<double(double, double)>& f, double ax,
                    double bx, double ay, double by, double abs_tol,
                    std::size_t max_cells = 200000,
                    std::span<const double> x_splits = {},
                    std::span<const double> y_splits = {});

}  // namespace qwalk::quadrature
