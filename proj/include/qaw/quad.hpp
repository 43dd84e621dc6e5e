#pragma once

// Numerical integration on [-1, 1] used as the independent oracle for every
// density identity.  Integrals are taken in theta = arccos(x), where the
// sqrt(1 - x^2) endpoint behaviour of the densities becomes smooth.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "qaw/parallel.hpp"

namespace qaw {

struct GaussRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;
};

/// Gauss-Legendre rule of the given order, computed once per order by
/// Newton iteration on P_order and cached for the life of the process.
const GaussRule& gauss_nodes(std::size_t order);

/// Computes a Gauss-Legendre rule without touching the cache.
GaussRule compute_gauss_rule(std::size_t order);

struct QuadratureReport {
  double value = 0.0;
  std::size_t nodes_used = 0;
  std::vector<std::pair<std::size_t, double>> refinement_history;  // (nodes, value)
  double err_estimate = 0.0;  // |last - previous| of the history
};

struct QuadOptions {
  double tol = 1e-10;
  std::size_t panel_order = 32;
  std::size_t max_nodes = std::size_t{1} << 16;
  std::size_t min_levels = 3;  // refinement levels evaluated before the stopping test applies
  ExecPolicy policy = ExecPolicy::Parallel;
};

using Integrand = std::function<double(double)>;

/// Integral over theta in [0, pi] of f(cos theta) sin theta using `panels`
/// equal Gauss panels; the per-panel sums are added in panel order so the
/// result does not depend on the policy or the thread count.
double theta_panel_sum(const Integrand& f, std::size_t panels, const GaussRule& rule, ExecPolicy policy);

/// Integral of f over [-1, 1] with panel doubling until two successive values
/// differ by less than tol * max(1, |value|).  Throws NoConvergence when the
/// node cap is reached first.
QuadratureReport integrate_theta(const Integrand& f, const QuadOptions& opts = {});

/// Serial reference of integrate_theta.
QuadratureReport integrate_theta_serial(const Integrand& f, QuadOptions opts = {});

/// f evaluated on each x, in input order.
std::vector<double> evaluate_grid(const Integrand& f, const std::vector<double>& xs,
                                  ExecPolicy policy = ExecPolicy::Parallel);

/// n equispaced points on [-1, 1] including both endpoints.
std::vector<double> uniform_grid(std::size_t n);

}  // namespace qaw
