#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qaw/density.hpp"
#include "qaw/qpoly.hpp"
#include "qaw/quad.hpp"

using namespace qaw;

TEST_CASE("Gauss-Legendre nodes") {
  const auto& r1 = gauss_nodes(1);
  CHECK(r1.nodes.size() == 1);
  CHECK(std::abs(r1.nodes[0]) < 1e-16);
  CHECK(r1.weights[0] == doctest::Approx(2.0));
  const auto& r2 = gauss_nodes(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(&gauss_nodes(7) == &gauss_nodes(7));
  for (std::size_t order : {5, 16, 32, 64}) {
    const auto& r = gauss_nodes(order);
    for (std::size_t d = 0; d <= 2 * order - 1; ++d) {
      double s = 0.0;
      for (std::size_t i = 0; i < order; ++i) s += r.weights[i] * std::pow(r.nodes[i], double(d));
      const double exact = d % 2 ? 0.0 : 2.0 / double(d + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
  double x8 = 0.0;
  const auto& r5 = gauss_nodes(5);
  for (std::size_t i = 0; i < 5; ++i) x8 += r5.weights[i] * std::pow(r5.nodes[i], 8);
  CHECK(std::abs(x8 - 2.0 / 9.0) < 1e-14);
  const auto fresh = compute_gauss_rule(12);
  CHECK(fresh.nodes == gauss_nodes(12).nodes);
}

TEST_CASE("integrate_theta") {
  const auto semi = integrate_theta([](double x) { return 2 * std::sqrt(1 - x * x) / oracle::pi; });
  CHECK(std::abs(semi.value - 1.0) < 1e-12);
  const auto c5 = QContext::make(0.5);
  CHECK(std::abs(integrate_theta([&](double x) { return f_h_density(x, c5); }).value - 1.0) < 1e-9);
  const auto orth = integrate_theta([&](double x) {
    const double h2 = q_hermite(2, x, c5);
    return h2 * h2 * f_h_density(x, c5);
  });
  CHECK(std::abs(orth.value - 0.375) < 1e-9);
  const auto off = integrate_theta([&](double x) { return q_hermite(2, x, c5) * q_hermite(3, x, c5) * f_h_density(x, c5); });
  CHECK(std::abs(off.value) < 1e-9);
}

TEST_CASE("refinement history") {
  QuadOptions o;
  o.tol = 1e-13;
  const DensitySpec aw(Family::AskeyWilson, ParamVector{0.6, -0.6, 0.5, 0.4}, QContext::make(0.8));
  const auto r = integrate_theta([&](double x) { return density_value(aw, x); }, o);
  REQUIRE(r.refinement_history.size() >= 3);
  const auto& h = r.refinement_history;
  CHECK(h.back().first == r.nodes_used);
  CHECK(r.err_estimate == doctest::Approx(std::abs(h[h.size() - 1].second - h[h.size() - 2].second)));
  const double e1 = std::abs(h[h.size() - 2].second - h[h.size() - 3].second);
  CHECK(r.err_estimate <= e1);
  CHECK(std::abs(r.value - 1.0) < 1e-11);
}

TEST_CASE("node cap") {
  QuadOptions o;
  o.max_nodes = 64;
  o.tol = 1e-15;
  CHECK_THROWS_AS(integrate_theta([](double x) { return std::abs(x - 0.1234); }, o), NoConvergence);
}

TEST_CASE("serial and parallel agree exactly") {
  const auto ctx = QContext::make(0.7);
  const ParamVector p{0.5, -0.4, 0.3, 0.6, -0.2};
  const Integrand f = [&](double x) { return g_density(x, p, ctx); };
  QuadOptions o;
  o.policy = ExecPolicy::Parallel;
  const auto par = integrate_theta(f, o);
  const auto ser = integrate_theta_serial(f, o);
  CHECK(par.value == ser.value);
  CHECK(par.nodes_used == ser.nodes_used);
  const auto xs = uniform_grid(101);
  CHECK(xs.front() == -1.0);
  CHECK(xs.back() == 1.0);
  CHECK(evaluate_grid(f, xs, ExecPolicy::Serial) == evaluate_grid(f, xs, ExecPolicy::Parallel));
  const auto& rule = gauss_nodes(16);
  CHECK(theta_panel_sum(f, 37, rule, ExecPolicy::Serial) == theta_panel_sum(f, 37, rule, ExecPolicy::Parallel));
}
