#include "qaw/quad.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "qaw/errors.hpp"

namespace qaw {

GaussRule compute_gauss_rule(std::size_t order) {
  if (order < 1) throw DomainError("Gauss rule order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const std::size_t half = (order + 1) / 2;
  const double n = static_cast<double>(order);
  for (std::size_t i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 1; j <= order; ++j) {
        const double p2 = p1;
        p1 = p0;
        const double jj = static_cast<double>(j);
        p0 = ((2.0 * jj - 1.0) * z * p1 - (jj - 1.0) * p2) / jj;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0, p1 = 0.0;
    for (std::size_t j = 1; j <= order; ++j) {
      const double p2 = p1;
      p1 = p0;
      const double jj = static_cast<double>(j);
      p0 = ((2.0 * jj - 1.0) * z * p1 - (jj - 1.0) * p2) / jj;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[i] = -z;
    rule.nodes[order - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

const GaussRule& gauss_nodes(std::size_t order) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<const GaussRule>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<const GaussRule>(compute_gauss_rule(order));
  return *slot;
}

double theta_panel_sum(const Integrand& f, std::size_t panels, const GaussRule& rule, ExecPolicy policy) {
  const double width = std::numbers::pi / static_cast<double>(panels);
  const std::size_t m = rule.nodes.size();
  std::vector<double> partial(panels, 0.0);
  parallel_for(
      panels,
      [&](std::size_t p) {
        const double lo = width * static_cast<double>(p);
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          const double theta = lo + 0.5 * width * (rule.nodes[i] + 1.0);
          s += rule.weights[i] * f(std::cos(theta)) * std::sin(theta);
        }
        partial[p] = 0.5 * width * s;
      },
      policy);
  double total = 0.0;
  for (double v : partial) total += v;
  return total;
}

QuadratureReport integrate_theta(const Integrand& f, const QuadOptions& opts) {
  const GaussRule& rule = gauss_nodes(opts.panel_order);
  QuadratureReport report;
  std::size_t panels = 1;
  for (std::size_t level = 0;; ++level, panels *= 2) {
    const std::size_t nodes = panels * opts.panel_order;
    if (nodes > opts.max_nodes) {
      std::ostringstream os;
      os << "quadrature did not converge within " << opts.max_nodes << " nodes (err estimate "
         << report.err_estimate << ", tol " << opts.tol << ")";
      throw NoConvergence(os.str());
    }
    const double value = theta_panel_sum(f, panels, rule, opts.policy);
    if (!std::isfinite(value)) throw NoConvergence("quadrature produced a non-finite value");
    if (!report.refinement_history.empty()) report.err_estimate = std::abs(value - report.value);
    report.refinement_history.emplace_back(nodes, value);
    report.value = value;
    report.nodes_used = nodes;
    if (level + 1 >= std::max<std::size_t>(opts.min_levels, 2) &&
        report.err_estimate < opts.tol * std::max(1.0, std::abs(value)))
      return report;
  }
}

QuadratureReport integrate_theta_serial(const Integrand& f, QuadOptions opts) {
  opts.policy = ExecPolicy::Serial;
  return integrate_theta(f, opts);
}

std::vector<double> evaluate_grid(const Integrand& f, const std::vector<double>& xs, ExecPolicy policy) {
  return parallel_map<double>(xs.size(), [&](std::size_t i) { return f(xs[i]); }, policy);
}

std::vector<double> uniform_grid(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {0.0};
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
  xs.front() = -1.0;
  xs.back() = 1.0;
  return xs;
}

}  // namespace qaw
