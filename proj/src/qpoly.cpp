#include "qaw/qpoly.hpp"

#include <cmath>
#include <string>

namespace qaw {

namespace {

template <class T>
T rogers_szego_direct(std::size_t n, const T& x, const QContext& ctx) {
  const generic::QBinomialTable<double> binom(n, ctx.q);
  T acc{0};
  T power{1};
  for (std::size_t k = 0; k <= n; ++k) {
    acc += binom(n, k) * power;
    power *= x;
  }
  return acc;
}

}  // namespace

double rogers_szego(std::size_t n, double x, const QContext& ctx) { return rogers_szego_direct(n, x, ctx); }

Complex rogers_szego(std::size_t n, Complex x, const QContext& ctx) { return rogers_szego_direct(n, x, ctx); }

std::vector<double> rogers_szego_sequence(std::size_t nmax, double x, const QContext& ctx) {
  std::vector<double> w(nmax + 1);
  w[0] = 1.0;
  if (nmax == 0) return w;
  w[1] = 1.0 + x;
  double qk = ctx.q;  // q^k for k = 1
  for (std::size_t k = 1; k < nmax; ++k) {
    w[k + 1] = (1.0 + x) * w[k] - (1.0 - qk) * x * w[k - 1];
    qk *= ctx.q;
  }
  return w;
}

std::vector<double> q_hermite_sequence(std::size_t nmax, double x, const QContext& ctx) {
  std::vector<double> h(nmax + 1);
  h[0] = 1.0;
  if (nmax == 0) return h;
  h[1] = 2.0 * x;
  double qn = ctx.q;
  for (std::size_t n = 1; n < nmax; ++n) {
    h[n + 1] = 2.0 * x * h[n] - (1.0 - qn) * h[n - 1];
    qn *= ctx.q;
  }
  return h;
}

double q_hermite(std::size_t n, double x, const QContext& ctx) {
  double prev = 0.0;
  double cur = 1.0;
  double qk = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double next = 2.0 * x * cur - (1.0 - qk) * prev;
    prev = cur;
    cur = next;
    qk *= ctx.q;
  }
  return cur;
}

double hermite_classical(std::size_t n, double x) {
  double prev = 0.0;
  double cur = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double next = x * cur - static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

HermiteBound hermite_bound(std::size_t n, const QContext& ctx) { return {n, rogers_szego(n, 1.0, ctx)}; }

double mu_value(std::size_t n, double x, double a, const QContext& ctx) {
  const generic::QBinomialTable<double> binom(n, ctx.q);
  const auto poch = generic::pochhammer_sequence(a, n, ctx.q);
  double acc = 0.0;
  double power = 1.0;
  for (std::size_t j = 0; j <= n; ++j) {
    acc += binom(n, j) * poch[j] * power;
    power *= x;
  }
  return acc;
}

namespace {

void require_carlitz_domain(double x, double a, const QContext& ctx) {
  ctx.require_inside("Carlitz series");
  if (!(std::abs(a) < 1.0)) throw DomainError("Carlitz series need |a| < 1");
  if (!(std::abs(x) <= 1.0)) throw DomainError("Carlitz series need |x| <= 1");
}

}  // namespace

double carlitz_zeta(std::size_t n, double x, double a, const QContext& ctx, EvalMode mode) {
  require_carlitz_domain(x, a, ctx);
  if (mode == EvalMode::ClosedForm) {
    const double zeta0 = 1.0 / (q_pochhammer_inf(a, ctx).value * q_pochhammer_inf(a * x, ctx).value);
    return zeta0 * mu_value(n, x, a, ctx);
  }
  // Series: w_{n+m}(x) is generated on the fly; |w_k(x)| <= w_k(1).
  double w_prev = 0.0, w_cur = 1.0;  // w_{k-1}(x), w_k(x)
  double u_prev = 0.0, u_cur = 1.0;  // same at x = 1
  double qk = 1.0;
  auto advance = [&] {
    const double wn = (1.0 + x) * w_cur - (1.0 - qk) * x * w_prev;
    const double un = 2.0 * u_cur - (1.0 - qk) * u_prev;
    w_prev = w_cur;
    w_cur = wn;
    u_prev = u_cur;
    u_cur = un;
    qk *= ctx.q;
  };
  for (std::size_t k = 0; k < n; ++k) advance();
  double sum = 0.0, weight = 1.0;  // weight = a^m/(q)_m
  double qm = ctx.q;               // q^{m+1}
  StallCounter stall;
  for (std::size_t m = 0;; ++m) {
    if (m > ctx.max_terms) throw CapExceeded("carlitz_zeta series exceeded max_terms");
    sum += weight * w_cur;
    if (stall.settled(std::abs(weight) * u_cur, ctx.eps_trunc * std::max(1.0, std::abs(sum)))) break;
    advance();
    weight *= a / (1.0 - qm);
    qm *= ctx.q;
  }
  return sum;
}

double carlitz_lambda00(double x, double y, double a, const QContext& ctx, EvalMode mode) {
  require_carlitz_domain(x, a, ctx);
  require_carlitz_domain(y, a, ctx);
  if (mode == EvalMode::ClosedForm) {
    const double num = q_pochhammer_inf(x * y * a * a, ctx).value;
    const double den = q_pochhammer_inf(a, ctx).value * q_pochhammer_inf(a * x, ctx).value *
                       q_pochhammer_inf(a * y, ctx).value * q_pochhammer_inf(a * x * y, ctx).value;
    return num / den;
  }
  double wx_prev = 0.0, wx = 1.0, wy_prev = 0.0, wy = 1.0, u_prev = 0.0, u = 1.0;
  double qk = 1.0;
  double sum = 0.0, weight = 1.0;
  StallCounter stall;
  for (std::size_t k = 0;; ++k) {
    if (k > ctx.max_terms) throw CapExceeded("carlitz_lambda00 series exceeded max_terms");
    sum += weight * wx * wy;
    if (stall.settled(std::abs(weight) * u * u, ctx.eps_trunc * std::max(1.0, std::abs(sum)))) break;
    const double nx = (1.0 + x) * wx - (1.0 - qk) * x * wx_prev;
    const double ny = (1.0 + y) * wy - (1.0 - qk) * y * wy_prev;
    const double nu = 2.0 * u - (1.0 - qk) * u_prev;
    wx_prev = wx, wx = nx, wy_prev = wy, wy = ny, u_prev = u, u = nu;
    qk *= ctx.q;
    weight *= a / (1.0 - qk);
  }
  return sum;
}

namespace exact {

RationalPoly rogers_szego_poly(std::size_t n, const Rational& q) {
  const generic::QBinomialTable<Rational> binom(n, q);
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = binom(n, k);
  return RationalPoly(std::move(c));
}

RationalPoly q_hermite_poly(std::size_t n, const Rational& q) {
  const RationalPoly two_x = RationalPoly::monomial(1, Rational{2});
  RationalPoly prev;
  RationalPoly cur = RationalPoly::constant(Rational{1});
  Rational qk{1};
  for (std::size_t k = 0; k < n; ++k) {
    RationalPoly next = two_x * cur - prev * (Rational{1} - qk);
    prev = std::move(cur);
    cur = std::move(next);
    qk *= q;
  }
  return cur;
}

RationalPoly mu_poly(std::size_t n, const Rational& a, const Rational& q) {
  const generic::QBinomialTable<Rational> binom(n, q);
  const auto poch = generic::pochhammer_sequence(a, n, q);
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c[j] = binom(n, j) * poch[j];
  return RationalPoly(std::move(c));
}

}  // namespace exact

}  // namespace qaw
