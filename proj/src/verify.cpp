#include "qaw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "qaw/density.hpp"
#include "qaw/errors.hpp"
#include "qaw/expand.hpp"
#include "qaw/qpoly.hpp"
#include "qaw/quad.hpp"
#include "qaw/rational_poly.hpp"
#include "qaw/symfun.hpp"

namespace qaw {

namespace {

using Rng = std::mt19937_64;

struct Ctx {
  const VerifyOptions& opts;
  SuiteReport& report;

  std::vector<double> qs(std::initializer_list<double> defaults) const {
    return opts.qs.empty() ? std::vector<double>(defaults) : opts.qs;
  }
  std::size_t draws(std::size_t fallback) const { return opts.draws ? opts.draws : fallback; }

  void check(std::string label, double residual, double tol) {
    const bool ok = std::isfinite(residual) && residual <= tol;
    report.checks.push_back({std::move(label), residual, tol, ok});
  }
  void exact(std::string label, std::size_t mismatches) {
    report.checks.push_back({std::move(label), static_cast<double>(mismatches), 0.0, mismatches == 0});
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string label_q(const char* what, double q) { return std::string(what) + " q=" + fmt(q); }

std::vector<double> draw(Rng& rng, std::size_t n, double bound) {
  std::uniform_real_distribution<double> dist(-bound, bound);
  std::vector<double> a(n);
  for (auto& v : a) v = dist(rng);
  return a;
}

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

QuadOptions tight(const VerifyOptions& opts) {
  QuadOptions qo;
  qo.tol = 1e-12;
  qo.policy = opts.policy;
  return qo;
}

const std::vector<Rational>& rational_qs() {
  static const std::vector<Rational> qs = {Rational{0}, Rational{1, 3}, Rational{-1, 2}, Rational{3, 4}};
  return qs;
}

// Suites.

void suite_qbinomial(Ctx& c) {
  auto qs = rational_qs();
  qs.push_back(Rational{1});
  for (const Rational& q : qs) {
    const generic::QBinomialTable<Rational> b(20, q);
    std::size_t bad = 0;
    Rational qk{1};
    for (std::size_t n = 1; n <= 20; ++n)
      for (std::size_t k = 0; k <= n; ++k) {
        if (b(n, k) != b(n, n - k)) ++bad;
        Rational qk_pow{1}, qnk_pow{1};
        for (std::size_t i = 0; i < k; ++i) qk_pow *= q;
        for (std::size_t i = 0; i < n - k; ++i) qnk_pow *= q;
        const long N = static_cast<long>(n), K = static_cast<long>(k);
        if (b(n, k) != b.at(N - 1, K - 1) + qk_pow * b.at(N - 1, K)) ++bad;
        if (b(n, k) != qnk_pow * b.at(N - 1, K - 1) + b.at(N - 1, K)) ++bad;
      }
    c.exact("symmetry and Pascal n<=20 q=" + q.str(), bad);
  }
}

void suite_linearization(Ctx& c) {
  for (const Rational& q : rational_qs()) {
    std::vector<RationalPoly> h;
    for (std::size_t n = 0; n <= 16; ++n) h.push_back(exact::q_hermite_poly(n, q));
    const generic::QBinomialTable<Rational> b(8, q);
    const auto qq = generic::pochhammer_sequence<Rational, Rational>(q, 8, q);
    std::size_t bad = 0;
    for (std::size_t n = 0; n <= 8; ++n)
      for (std::size_t m = 0; m <= 8; ++m) {
        RationalPoly rhs;
        for (std::size_t j = 0; j <= std::min(n, m); ++j) rhs += h[n + m - 2 * j] * (b(n, j) * b(m, j) * qq[j]);
        if (!(h[n] * h[m] == rhs)) ++bad;
      }
    c.exact("h_n h_m expansion n,m<=8 q=" + q.str(), bad);
  }
}

void suite_mu_identities(Ctx& c) {
  for (const Rational& q : rational_qs())
    for (const Rational& a : {Rational{2, 5}, Rational{-1, 3}}) {
      const generic::QBinomialTable<Rational> b(8, q);
      std::size_t bad1 = 0, bad2 = 0;
      for (std::size_t n = 0; n <= 8; ++n) {
        RationalPoly rhs1;
        Rational coef{1};  // (-a)^j q^{j(j-1)/2}
        Rational qj{1};
        for (std::size_t j = 0; j <= n; ++j) {
          rhs1 += exact::rogers_szego_poly(n - j, q) * (b(n, j) * coef);
          coef *= -a * qj;
          qj *= q;
        }
        if (!(exact::mu_poly(n, a, q).reflected(n) == rhs1)) ++bad1;
        RationalPoly rhs2;
        Rational ak{1};
        for (std::size_t k = 0; k <= n; ++k) {
          rhs2 += exact::mu_poly(n - k, a, q).reflected(n - k) * (b(n, k) * ak);
          ak *= a;
        }
        if (!(exact::rogers_szego_poly(n, q) == rhs2)) ++bad2;
      }
      c.exact("reflected mu_n n<=8 q=" + q.str() + " a=" + a.str(), bad1);
      c.exact("w_n from mu n<=8 q=" + q.str() + " a=" + a.str(), bad2);
    }
}

void suite_decomposition(Ctx& c) {
  const std::vector<Rational> a = {Rational{1, 2}, Rational{-1, 3}, Rational{2, 7}, Rational{3, 5}};
  for (const Rational& q : rational_qs()) {
    const generic::QBinomialTable<Rational> b(8, q);
    std::size_t bad = 0;
    for (std::size_t k = 2; k <= 4; ++k) {
      const std::span<const Rational> all(a.data(), k);
      const auto full = generic::s_sequence<Rational, Rational>(all, 8, b);
      for (std::size_t j = 1; j < k; ++j) {
        const auto left = generic::s_sequence<Rational, Rational>(all.first(j), 8, b);
        const auto right = generic::s_sequence<Rational, Rational>(all.subspan(j), 8, b);
        for (std::size_t n = 0; n <= 8; ++n) {
          Rational acc{0};
          for (std::size_t m = 0; m <= n; ++m) acc += b(n, m) * left[m] * right[n - m];
          if (acc != full[n]) ++bad;
        }
      }
    }
    c.exact("S split n<=8 k<=4 q=" + q.str(), bad);
  }
}

void suite_carlitz(Ctx& c) {
  for (double q : c.qs({-0.5, 0.0, 0.5})) {
    const auto ctx = QContext::make(q);
    const auto w = rogers_szego_sequence(800, 1.0, ctx);
    for (double t : {0.3, -0.6}) {
      double s1 = 0.0, s2 = 0.0, weight = 1.0, qk = q;
      for (std::size_t k = 0; k <= 800; ++k) {
        s1 += weight * w[k];
        s2 += weight * w[k] * w[k];
        weight *= t / (1.0 - qk);
        qk *= q;
      }
      const double pt = q_pochhammer_inf(t, ctx).value;
      c.check(label_q("sum w_k(1) t^k/(q)_k", q) + " t=" + fmt(t), rel(s1, 1.0 / (pt * pt)), 1e-10);
      c.check(label_q("sum w_k(1)^2 t^k/(q)_k", q) + " t=" + fmt(t),
              rel(s2, q_pochhammer_inf(t * t, ctx).value / std::pow(pt, 4)), 1e-10);
    }
    for (std::size_t n : {0u, 3u, 7u}) {
      const double z1 = carlitz_zeta(n, 0.4, 0.5, ctx), z2 = carlitz_zeta(n, 0.4, 0.5, ctx, EvalMode::Series);
      c.check(label_q("zeta_n", q) + " n=" + std::to_string(n), rel(z2, z1), 1e-10);
    }
    const double l1 = carlitz_lambda00(0.3, -0.7, 0.6, ctx);
    const double l2 = carlitz_lambda00(0.3, -0.7, 0.6, ctx, EvalMode::Series);
    c.check(label_q("lambda_00", q), rel(l2, l1), 1e-10);
  }
}

void suite_chebyshev(Ctx& c) {
  const auto ctx = QContext::make(0.0);
  double worst = 0.0;
  for (std::size_t i = 1; i < 200; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / 200.0;
    const auto h = q_hermite_sequence(20, std::cos(theta), ctx);
    for (std::size_t n = 0; n <= 20; ++n) {
      const double u = std::sin(static_cast<double>(n + 1) * theta) / std::sin(theta);
      worst = std::max(worst, std::abs(h[n] - u) / static_cast<double>(n + 1));
    }
  }
  c.check("h_n(cos t|0) = sin((n+1)t)/sin t, n<=20", worst, 1e-12);
}

// H_n(x|q) = h_n(x sqrt(1-q)/2 | q)/(1-q)^{n/2} with exact coefficients.
RationalPoly rescaled_hermite(std::size_t n, const Rational& q) {
  const RationalPoly h = exact::q_hermite_poly(n, q);
  std::vector<Rational> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    if ((n - i) % 2 != 0) continue;
    Rational scale{1};
    for (std::size_t k = 0; k < i; ++k) scale /= 2;
    for (std::size_t k = 0; k < (n - i) / 2; ++k) scale /= (Rational{1} - q);
    out[i] = h.coeff(i) * scale;
  }
  return RationalPoly(std::move(out));
}

void suite_hermite_limit(Ctx& c) {
  const RationalPoly x = RationalPoly::monomial(1);
  for (const Rational& q : {Rational{1, 2}, Rational{9, 10}, Rational{-1, 3}}) {
    std::size_t bad = 0;
    for (std::size_t n = 1; n < 10; ++n) {
      const RationalPoly lhs = rescaled_hermite(n + 1, q);
      const RationalPoly rhs = x * rescaled_hermite(n, q) - rescaled_hermite(n - 1, q) * exact::q_number(n, q);
      if (!(lhs == rhs)) ++bad;
    }
    c.exact("rescaled recurrence with [n]_q, n<=10, q=" + q.str(), bad);
  }
  double prev = 1e300;
  bool decreasing = true;
  for (int e = 2; e <= 8; e += 2) {
    Rational one_minus{1};
    for (int i = 0; i < e; ++i) one_minus /= 10;
    const Rational q = Rational{1} - one_minus;
    double worst = 0.0;
    for (std::size_t n = 0; n <= 8; ++n) {
      const RationalPoly H = rescaled_hermite(n, q);
      for (double xv = -3.0; xv <= 3.0; xv += 0.25) {
        const double he = hermite_classical(n, xv);
        worst = std::max(worst, std::abs(H.evaluate(xv) - he) / (1.0 + std::abs(he)));
      }
    }
    decreasing = decreasing && worst < prev;
    prev = worst;
    c.check("H_n(x|q) - He_n(x), n<=8, 1-q=1e-" + std::to_string(e), worst, 50.0 * one_minus.convert_to<double>());
  }
  c.exact("deviation shrinks as q -> 1", decreasing ? 0 : 1);
}

void suite_sup_bound(Ctx& c) {
  const auto xs = uniform_grid(1001);
  for (double q : c.qs({-0.5, 0.0, 0.5, 0.8})) {
    const auto ctx = QContext::make(q);
    const auto absq = QContext::make(std::abs(q));
    for (double t : {0.3, -0.7, 0.9}) {
      const double bound = 1.0 / std::pow(q_pochhammer_inf(std::abs(t), absq).value, 2);
      double mx = 0.0;
      for (double xv : xs) mx = std::max(mx, phi_h(xv, t, ctx));
      c.check(label_q("max phi_h over bound", q) + " t=" + fmt(t), std::max(0.0, mx / bound - 1.0), 1e-12);
      if (q >= 0.0)
        c.check(label_q("phi_h at x=sign t attains bound", q) + " t=" + fmt(t),
                rel(phi_h(t > 0 ? 1.0 : -1.0, t, ctx), bound), 1e-12);
    }
    const auto w = rogers_szego_sequence(30, 1.0, ctx);
    double excess = 0.0;
    for (double xv : xs) {
      const auto h = q_hermite_sequence(30, xv, ctx);
      for (std::size_t n = 0; n <= 30; ++n) excess = std::max(excess, std::abs(h[n]) / w[n] - 1.0);
    }
    c.check(label_q("|h_n| <= w_n(1), n<=30", q), std::max(0.0, excess), 1e-12);
  }
}

const Family kNamed[] = {Family::QHermite, Family::BigQHermite, Family::AlSalamChihara, Family::ContinuousDualHahn,
                         Family::AskeyWilson};

void suite_normalization(Ctx& c) {
  Rng rng(c.opts.seed);
  const auto xs = uniform_grid(1001);
  for (double q : c.qs({-0.5, 0.0, 0.5, 0.8})) {
    const auto ctx = QContext::make(q);
    for (Family f : kNamed) {
      std::vector<std::vector<double>> sets;
      for (std::size_t d = 0; d < c.draws(3); ++d) sets.push_back(draw(rng, family_arity(f), 0.7));
      struct Row { double err, negative; };
      const auto rows = parallel_map<Row>(
          sets.size(),
          [&](std::size_t i) {
            const DensitySpec spec(f, ParamVector::from_reals(sets[i]), ctx);
            QuadOptions qo = tight(c.opts);
            qo.policy = ExecPolicy::Serial;
            const double mass = integrate_theta([&](double xv) { return density_value(spec, xv); }, qo).value;
            double neg = 0.0;
            for (double xv : xs) neg = std::max(neg, -density_value(spec, xv));
            return Row{std::abs(mass - 1.0), neg};
          },
          c.opts.policy);
      double err = 0.0, neg = 0.0;
      for (const auto& r : rows) err = std::max(err, r.err), neg = std::max(neg, r.negative);
      c.check(label_q(to_string(f), q) + " integrates to 1", err, 1e-8);
      c.check(label_q(to_string(f), q) + " nonnegative on grid", std::max(0.0, neg), 0.0);
    }
  }
}

// Runs fn over `count` random parameter sets of the given size, in parallel,
// and returns the worst residual.
double sweep(Ctx& c, Rng& rng, std::size_t count, std::size_t size, double bound,
             const std::function<double(const ParamVector&)>& fn) {
  std::vector<std::vector<double>> sets;
  for (std::size_t d = 0; d < count; ++d) sets.push_back(draw(rng, size, bound));
  const auto res = parallel_map<double>(
      sets.size(), [&](std::size_t i) { return fn(ParamVector::from_reals(sets[i])); }, c.opts.policy);
  double worst = 0.0;
  for (double r : res) worst = std::max(worst, std::isfinite(r) ? r : INFINITY);
  return worst;
}

QuadOptions serial_tight(const VerifyOptions& opts) {
  QuadOptions qo = tight(opts);
  qo.policy = ExecPolicy::Serial;
  return qo;
}

void suite_aw_integral(Ctx& c) {
  Rng rng(c.opts.seed);
  for (double q : c.qs({-0.5, 0.0, 0.3, 0.5, 0.8})) {
    const auto ctx = QContext::make(q);
    const double worst = sweep(c, rng, c.draws(10), 4, 0.7, [&](const ParamVector& p) {
      const double quad =
          integrate_theta([&](double x) { return g_density(x, p, ctx); }, serial_tight(c.opts)).value;
      return rel(quad, closed_form_A(p, ctx).real());
    });
    c.check(label_q("integral of g_4 vs product", q), worst, 1e-8);
  }
}

void suite_aw_moments(Ctx& c) {
  Rng rng(c.opts.seed);
  for (double q : c.qs({-0.5, 0.0, 0.3, 0.5, 0.8})) {
    const auto ctx = QContext::make(q);
    const double worst = sweep(c, rng, c.draws(5), 4, 0.7, [&](const ParamVector& p) {
      const DensitySpec spec(Family::AskeyWilson, p, ctx);
      const auto sigma = sigma4_sequence(10, p[0], p[1], p[2], p[3], ctx);
      double w = 0.0;
      for (std::size_t n = 0; n <= 10; ++n) {
        const double quad = integrate_theta([&](double x) { return q_hermite(n, x, ctx) * density_value(spec, x); },
                                            serial_tight(c.opts))
                                .value;
        w = std::max(w, std::abs(quad - sigma[n].real()));
      }
      return w;
    });
    c.check(label_q("h-moments n<=10 vs sigma^(4)", q), worst, 1e-7);
  }
}

void suite_ladder(Ctx& c) {
  Rng rng(c.opts.seed);
  const auto xs = uniform_grid(501);
  for (double q : c.qs({-0.5, 0.0, 0.3, 0.5})) {
    const auto ctx = QContext::make(q);
    for (Family f : kNamed) {
      if (f == Family::QHermite) continue;
      const double worst = sweep(c, rng, c.draws(3), family_arity(f), 0.5, [&](const ParamVector& p) {
        const DensitySpec spec(f, p, ctx);
        const HSeriesDensity series(spec, 128);
        double w = 0.0;
        for (double x : xs) w = std::max(w, std::abs(series(x) - density_value(spec, x)));
        return w;
      });
      c.check(label_q(to_string(f), q) + " product vs h-series, sup over 501 points", worst, 1e-7);
    }
  }
}

void suite_poisson_mehler(Ctx& c) {
  const auto grid = uniform_grid(21);
  for (double q : c.qs({0.0, 0.5})) {
    const auto ctx = QContext::make(q);
    double worst = 0.0;
    std::size_t asym = 0;
    for (double rho : {-0.7, -0.35, 0.0, 0.35, 0.7}) {
      const auto rows = parallel_map<double>(
          grid.size(),
          [&](std::size_t i) {
            double w = 0.0;
            for (double y : grid) {
              const double a = poisson_mehler(grid[i], y, rho, ctx);
              const double b = poisson_mehler(grid[i], y, rho, ctx, EvalMode::Series);
              w = std::max(w, std::abs(a - b));
            }
            return w;
          },
          c.opts.policy);
      for (double r : rows) worst = std::max(worst, r);
      for (double x : grid)
        for (double y : grid)
          if (poisson_mehler(x, y, rho, ctx) != poisson_mehler(y, x, rho, ctx)) ++asym;
    }
    c.check(label_q("product vs series on 21x21x5 grid", q), worst, 1e-9);
    c.exact(label_q("symmetry in (x, y)", q), asym);
  }
}

void suite_recursion(Ctx& c) {
  Rng rng(c.opts.seed);
  for (double q : c.qs({-0.5, 0.0, 0.5})) {
    const auto ctx = QContext::make(q);
    for (std::size_t n = 1; n <= 4; ++n) {
      const double worst = sweep(c, rng, c.draws(4), n, 0.6, [&](const ParamVector& p) {
        ExpansionTable t = base_table(256);
        for (const Complex& a : p.entries()) t = recursion_step(t, a, ctx, 12);
        const auto cf = closed_form_T_sequence(p, 12, ctx);
        double w = rel(t.A.real(), closed_form_A(p, ctx).real());
        for (std::size_t j = 0; j <= 12; ++j) w = std::max(w, rel(t.T[j].real(), cf[j].real()));
        return w;
      });
      c.check(label_q("chained recursion vs closed forms", q) + " n=" + std::to_string(n), worst, 1e-8);
    }
  }
}

void suite_free(Ctx& c) {
  Rng rng(c.opts.seed);
  const auto ctx = QContext::make(0.0);
  double w_series = 0.0, w_quad = 0.0;
  std::vector<std::vector<double>> sets;
  for (std::size_t d = 0; d < c.draws(20); ++d) sets.push_back(draw(rng, 5, 0.7));
  for (const auto& s : sets) {
    const auto p = ParamVector::from_reals(s);
    const double closed = g5_free(p);
    w_series = std::max(w_series, rel(g5_integral_series(p, ctx), closed));
    const double quad = integrate_theta([&](double x) { return g_density(x, p, ctx); }, tight(c.opts)).value;
    w_quad = std::max(w_quad, rel(quad, closed));
  }
  c.check("q=0 closed form vs sigma series", w_series, 1e-10);
  c.check("q=0 closed form vs quadrature", w_quad, 1e-9);
  double w_sigma = 0.0;
  for (const auto& s : sets) {
    const auto p = ParamVector::from_reals(s);
    const auto seq = sigma4_sequence(12, p[0], p[1], p[2], p[3], ctx);
    for (std::size_t n = 0; n <= 12; ++n)
      w_sigma = std::max(w_sigma, std::abs(sigma4_free(n, p[0], p[1], p[2], p[3]).value - seq[n]));
  }
  c.check("q=0 four-term sigma^(4) vs general formula, n<=12", w_sigma, 1e-12);
}

void suite_q1(Ctx& c) {
  Rng rng(c.opts.seed);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 11);
  std::size_t bad = 0;
  for (std::size_t n = 0; n <= 6; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<Rational> a;
      for (std::size_t i = 0; i < n; ++i) a.emplace_back(num(rng), den(rng) + 9);
      if (exact::pair_sum(a) != exact::gaussian_exponent(a)) ++bad;
    }
  c.exact("pair sum equals ((sum a)^2 - sum a^2)/2, n<=6", bad);
  const auto one = QContext::make(1.0);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto p = ParamVector::from_reals(draw(rng, n, 0.9));
    const auto q1 = q1_closed_form(p);
    const auto cf = closed_form_T_sequence(p, 10, one);
    const auto s = s_nk_sequence(10, p, one);
    worst = std::max(worst, rel(q1.A, closed_form_A(p, one).real()));
    for (std::size_t j = 0; j <= 10; ++j)
      worst = std::max({worst, std::abs(q1.T(j) - cf[j].real()), std::abs(q1.T(j) - s[j].real())});
  }
  c.check("q=1 table vs S_j(a|1) = (sum a)^j", worst, 1e-13);
}

void suite_gasper(Ctx& c) {
  Rng rng(c.opts.seed);
  for (double q : c.qs({0.0, 0.5})) {
    const auto ctx = QContext::make(q);
    const double worst = sweep(c, rng, c.draws(5), 5, 0.6, [&](const ParamVector& p) {
      return gasper_rahman_check(p, ctx, serial_tight(c.opts)).relative_diff();
    });
    c.check(label_q("integral of g_5/phi_h(prod a) vs product", q), worst, 1e-7);
  }
}

void suite_parseval(Ctx& c) {
  Rng rng(c.opts.seed);
  for (double q : c.qs({-0.5, 0.0, 0.5})) {
    const auto ctx = QContext::make(q);
    for (std::size_t n = 1; n <= 5; ++n) {
      const double worst = sweep(c, rng, c.draws(3), n, 0.6, [&](const ParamVector& p) {
        const ExpansionTable t = n <= 4 ? closed_form_table(p, 64, ctx) : build_expansion(p, ctx);
        double w = 0.0;
        for (std::size_t j = 32; j < t.J(); ++j) w = std::max(w, std::norm(t.T[j + 1]) / std::norm(t.T[j]));
        return w;
      });
      c.check(label_q("max T_{j+1}^2/T_j^2 for j>=32", q) + " n=" + std::to_string(n), worst,
              std::nextafter(1.0, 0.0));
    }
  }
}

void suite_conjecture_degenerate(Ctx& c) {
  Rng rng(c.opts.seed);
  const auto zero = QContext::make(0.0);
  c.check("q=0 residual",
          sweep(c, rng, c.draws(10), 5, 0.7, [&](const ParamVector& p) { return conjecture_residual(p, zero).residual; }),
          1e-10);
  for (double q : c.qs({-0.5, 0.3, 0.5, 0.8})) {
    const auto ctx = QContext::make(q);
    const double worst = sweep(c, rng, c.draws(5), 4, 0.7, [&](const ParamVector& p) {
      ParamVector five = p;
      five.push_back(0.0);
      return conjecture_residual(five, ctx).residual;
    });
    c.check(label_q("a_5=0 residual", q), worst, 1e-10);
  }
}

void suite_generating_functions(Ctx& c) {
  Rng rng(c.opts.seed);
  for (double q : c.qs({-0.5, 0.0, 0.5})) {
    const auto ctx = QContext::make(q);
    const std::size_t N = 300;
    const auto qq = generic::pochhammer_sequence<double, double>(q, N, q);
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto p = ParamVector::from_reals(draw(rng, k, 0.7));
      const double t = 0.8;
      const auto S = s_nk_sequence(N, p, ctx);
      Complex sum{0.0, 0.0}, prod{1.0, 0.0};
      for (std::size_t n = 0; n <= N; ++n) sum += std::pow(t, static_cast<double>(n)) / qq[n] * S[n];
      for (const Complex& a : p.entries()) prod *= q_pochhammer_inf(a * t, ctx).value;
      c.check(label_q("sum t^n S_n/(q)_n", q) + " k=" + std::to_string(k), rel(sum.real(), 1.0 / prod.real()),
              1e-10);
    }
    const auto p = draw(rng, 3, 0.7);
    const double t = 0.8;
    const auto s3 = sigma3_sequence(N, p[0], p[1], p[2], ctx);
    double sum = 0.0;
    for (std::size_t n = 0; n <= N; ++n) sum += std::pow(t, static_cast<double>(n)) / qq[n] * s3[n].real();
    const double want = q_pochhammer_inf(p[0] * p[1] * p[2] * t, ctx).value /
                        (q_pochhammer_inf(p[0] * t, ctx).value * q_pochhammer_inf(p[1] * t, ctx).value *
                         q_pochhammer_inf(p[2] * t, ctx).value);
    c.check(label_q("sum t^n sigma3_n/(q)_n", q), rel(sum, want), 1e-10);
  }
}

void suite_conjugate_pair(Ctx& c) {
  for (double q : c.qs({-0.5, 0.0, 0.5})) {
    const auto ctx = QContext::make(q);
    double w_s = 0.0, w_m = 0.0;
    for (double eta : {0.4, 1.3, 2.9}) {
      ParamVector p;
      p.push_conjugate_pair(0.6, eta);
      const auto S = s_nk_sequence(12, p, ctx);
      for (std::size_t n = 0; n <= 12; ++n) {
        const double want = s_nk_conjugate_pair(n, 0.6, std::cos(eta), ctx);
        w_s = std::max({w_s, std::abs(S[n].real() - want), std::abs(S[n].imag())});
      }
      const DensitySpec spec(Family::AlSalamChihara, p, ctx);
      for (std::size_t n = 0; n <= 6; ++n) {
        const double quad =
            integrate_theta([&](double x) { return q_hermite(n, x, ctx) * density_value(spec, x); }, tight(c.opts))
                .value;
        w_m = std::max(w_m, std::abs(quad - s_nk_conjugate_pair(n, 0.6, std::cos(eta), ctx)));
      }
    }
    c.check(label_q("S_n of a conjugate pair vs rho^n h_n(cos eta)", q), w_s, 1e-12);
    c.check(label_q("conjugate-pair h-moments by quadrature", q), w_m, 1e-9);
  }
}

struct SuiteEntry {
  SuiteInfo info;
  void (*run)(Ctx&);
};

const std::vector<SuiteEntry>& entries() {
  static const std::vector<SuiteEntry> list = {
      {{"qbinomial", "q-binomial symmetry and both Pascal rules, exact"}, suite_qbinomial},
      {{"linearization", "product h_n h_m expanded in the h basis, exact"}, suite_linearization},
      {{"mu-identities", "reflected mu_n and Rogers-Szego reconstruction, exact"}, suite_mu_identities},
      {{"decomposition", "S_n^(k) split into two groups of parameters, exact"}, suite_decomposition},
      {{"carlitz", "Carlitz sums and zeta/lambda closed forms vs series"}, suite_carlitz},
      {{"chebyshev", "q = 0 reduction to Chebyshev U_n"}, suite_chebyshev},
      {{"hermite-limit", "rescaled h_n tends to He_n as q -> 1"}, suite_hermite_limit},
      {{"sup-bound", "sup of phi_h and of |h_n| on [-1, 1]"}, suite_sup_bound},
      {{"normalization", "named densities integrate to 1 and are nonnegative"}, suite_normalization},
      {{"aw-integral", "integral of g_4 vs its product form"}, suite_aw_integral},
      {{"aw-moments", "h-moments of the Askey-Wilson density vs sigma^(4)"}, suite_aw_moments},
      {{"ladder", "product vs h-series forms of the ladder densities"}, suite_ladder},
      {{"poisson-mehler", "Poisson-Mehler kernel, product vs series"}, suite_poisson_mehler},
      {{"recursion", "chained recursion vs closed forms for n <= 4"}, suite_recursion},
      {{"free", "q = 0 closed form of the g_5 integral"}, suite_free},
      {{"q1", "q = 1 closed forms"}, suite_q1},
      {{"gasper", "Gasper-Rahman integral"}, suite_gasper},
      {{"parseval", "decay of T_j^2 beyond j = 32"}, suite_parseval},
      {{"conjecture-degenerate", "conjectured g_5 product at q = 0 and a_5 = 0"}, suite_conjecture_degenerate},
      {{"generating-functions", "generating functions of S^(k) and sigma^(3)"}, suite_generating_functions},
      {{"conjugate-pair", "complex conjugate parameter pairs"}, suite_conjugate_pair},
  };
  return list;
}

}  // namespace

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; }));
}

double SuiteReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& opts) {
  for (const auto& e : entries()) {
    if (name != e.info.name) continue;
    SuiteReport report;
    report.suite = e.info.name;
    Ctx c{opts, report};
    e.run(c);
    return report;
  }
  throw DomainError("unknown verification suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_all(const VerifyOptions& opts) {
  std::vector<SuiteReport> out;
  for (const auto& e : entries()) out.push_back(run_suite(e.info.name, opts));
  return out;
}

}  // namespace qaw
