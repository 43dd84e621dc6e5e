// Serial vs parallel timing of the quadrature and grid kernels.
//
//   qaw_bench [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "qaw/density.hpp"
#include "qaw/expand.hpp"
#include "qaw/parallel.hpp"
#include "qaw/quad.hpp"

using namespace qaw;

namespace {

double seconds(const std::function<void()>& fn, int repeats) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < repeats; ++i) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / repeats;
}

void row(const char* name, double serial, double parallel, double diff) {
  std::printf("%-28s %12.6f %12.6f %8.2fx %12.3g\n", name, serial, parallel, serial / parallel, diff);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 5;
  const auto ctx = QContext::make(0.8);
  const ParamVector aw{0.6, -0.5, 0.4, 0.3};
  const ParamVector five{0.6, -0.5, 0.4, 0.3, -0.55};
  std::printf("threads: %d, repeats: %d\n", max_threads(), repeats);
  std::printf("%-28s %12s %12s %9s %12s\n", "kernel", "serial [s]", "parallel [s]", "speedup", "|diff|");

  // Fixed panel count so both policies do identical work.
  const GaussRule& rule = gauss_nodes(32);
  const Integrand g4 = [&](double x) { return g_density(x, aw, ctx); };
  double vs = 0.0, vp = 0.0;
  const double ts = seconds([&] { vs = theta_panel_sum(g4, 512, rule, ExecPolicy::Serial); }, repeats);
  const double tp = seconds([&] { vp = theta_panel_sum(g4, 512, rule, ExecPolicy::Parallel); }, repeats);
  row("panel sum g_4, 16384 nodes", ts, tp, std::abs(vs - vp));

  QuadOptions opts;
  opts.tol = 1e-13;
  const Integrand g5 = [&](double x) { return g_density(x, five, ctx); };
  opts.policy = ExecPolicy::Serial;
  const double ts2 = seconds([&] { vs = integrate_theta(g5, opts).value; }, repeats);
  opts.policy = ExecPolicy::Parallel;
  const double tp2 = seconds([&] { vp = integrate_theta(g5, opts).value; }, repeats);
  row("integrate_theta g_5", ts2, tp2, std::abs(vs - vp));

  const DensitySpec spec(Family::AskeyWilson, aw, ctx);
  const auto xs = uniform_grid(20001);
  const Integrand dens = [&](double x) { return density_value(spec, x); };
  std::vector<double> gs, gp;
  const double ts3 = seconds([&] { gs = evaluate_grid(dens, xs, ExecPolicy::Serial); }, repeats);
  const double tp3 = seconds([&] { gp = evaluate_grid(dens, xs, ExecPolicy::Parallel); }, repeats);
  double gd = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) gd = std::max(gd, std::abs(gs[i] - gp[i]));
  row("density grid, 20001 points", ts3, tp3, gd);
  return 0;
}
