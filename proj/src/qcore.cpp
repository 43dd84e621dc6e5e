#include "qaw/qcore.hpp"

#include <cmath>
#include <string>

namespace qaw {

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Generic: return "generic";
    case Regime::FreeZero: return "free-zero";
    case Regime::ClassicalOne: return "classical-one";
  }
  return "?";
}

QContext QContext::make(double q, double eps_trunc, std::size_t max_terms) {
  if (!(q > -1.0 && q <= 1.0)) throw DomainError("q must lie in (-1, 1], got " + std::to_string(q));
  if (!(eps_trunc > 0.0)) throw DomainError("eps_trunc must be positive");
  if (max_terms < 1) throw DomainError("max_terms must be at least 1");
  QContext ctx;
  ctx.q = q;
  ctx.eps_trunc = eps_trunc;
  ctx.max_terms = max_terms;
  if (q == 0.0)
    ctx.regime = Regime::FreeZero;
  else if (q == 1.0)
    ctx.regime = Regime::ClassicalOne;
  else
    ctx.regime = Regime::Generic;
  return ctx;
}

void QContext::require_inside(const char* what) const {
  if (regime == Regime::ClassicalOne)
    throw RegimeError(std::string(what) + " requires |q| < 1 (diverges at q = 1)");
}

std::size_t geometric_cutoff(double lead, const QContext& ctx) {
  ctx.require_inside("infinite product truncation");
  lead = std::abs(lead);
  if (lead == 0.0) return 0;
  const double aq = std::abs(ctx.q);
  if (aq == 0.0) return 1;
  const double target = ctx.eps_trunc * (1.0 - aq);
  std::size_t K = 0;
  if (lead > target) {
    const double k = std::ceil(std::log(target / lead) / std::log(aq));
    if (!(k < static_cast<double>(ctx.max_terms) + 1.0))
      throw CapExceeded("truncation needs more than max_terms = " + std::to_string(ctx.max_terms) +
                        " factors");
    K = static_cast<std::size_t>(std::max(0.0, k));
  }
  // Guard against rounding in the logarithms.
  while (K > 0 && geometric_tail(lead, K - 1, ctx) <= ctx.eps_trunc) --K;
  while (geometric_tail(lead, K, ctx) > ctx.eps_trunc) ++K;
  if (K > ctx.max_terms)
    throw CapExceeded("truncation needs more than max_terms = " + std::to_string(ctx.max_terms) +
                      " factors");
  return K;
}

double geometric_tail(double lead, std::size_t K, const QContext& ctx) {
  const double aq = std::abs(ctx.q);
  if (lead == 0.0) return 0.0;
  if (aq == 0.0) return K == 0 ? std::abs(lead) : 0.0;
  return std::abs(lead) * std::pow(aq, static_cast<double>(K)) / (1.0 - aq);
}

double q_number(std::size_t n, const QContext& ctx) {
  switch (ctx.regime) {
    case Regime::ClassicalOne: return static_cast<double>(n);
    case Regime::FreeZero: return n == 0 ? 0.0 : 1.0;
    case Regime::Generic: break;
  }
  return generic::q_number(n, ctx.q);
}

double q_factorial(std::size_t n, const QContext& ctx) {
  switch (ctx.regime) {
    case Regime::ClassicalOne: return std::tgamma(static_cast<double>(n) + 1.0);
    case Regime::FreeZero: return 1.0;
    case Regime::Generic: break;
  }
  return generic::q_factorial(n, ctx.q);
}

double q_binomial(long n, long k, const QContext& ctx) {
  if (n < 0 || k < 0 || k > n) return 0.0;
  switch (ctx.regime) {
    case Regime::ClassicalOne: {
      double c = 1.0;
      for (long i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
      return c < 9e15 ? std::round(c) : c;
    }
    case Regime::FreeZero: return 1.0;
    case Regime::Generic: break;
  }
  return generic::q_binomial(n, k, ctx.q);
}

namespace {

template <class T>
T pochhammer_dispatch(const T& a, std::size_t n, const QContext& ctx) {
  if (n == 0) return T{1};
  switch (ctx.regime) {
    case Regime::ClassicalOne: return std::pow(T{1} - a, static_cast<double>(n));
    case Regime::FreeZero: return T{1} - a;
    case Regime::Generic: break;
  }
  return generic::q_pochhammer(a, n, ctx.q);
}

template <class T>
QPochhammerValue<T> pochhammer_inf_impl(const T& a, const QContext& ctx) {
  ctx.require_inside("(a;q)_inf");
  QPochhammerValue<T> out;
  const std::size_t K = geometric_cutoff(std::abs(a), ctx);
  out.value = generic::q_pochhammer(a, K, ctx.q);
  out.terms_used = K;
  out.tail_bound = geometric_tail(std::abs(a), K, ctx);
  return out;
}

template <class T>
T multi_impl(std::span<const T> list, std::size_t n, const QContext& ctx) {
  T prod{1};
  for (const T& a : list) {
    if (n == kInfiniteOrder)
      prod *= pochhammer_inf_impl(a, ctx).value;
    else
      prod *= pochhammer_dispatch(a, n, ctx);
  }
  return prod;
}

}  // namespace

double q_pochhammer(double a, std::size_t n, const QContext& ctx) { return pochhammer_dispatch(a, n, ctx); }
Complex q_pochhammer(Complex a, std::size_t n, const QContext& ctx) { return pochhammer_dispatch(a, n, ctx); }

QPochhammerValue<double> q_pochhammer_inf(double a, const QContext& ctx) { return pochhammer_inf_impl(a, ctx); }
QPochhammerValue<Complex> q_pochhammer_inf(Complex a, const QContext& ctx) { return pochhammer_inf_impl(a, ctx); }

double q_multi_pochhammer(std::span<const double> list, std::size_t n, const QContext& ctx) {
  return multi_impl(list, n, ctx);
}
Complex q_multi_pochhammer(std::span<const Complex> list, std::size_t n, const QContext& ctx) {
  return multi_impl(list, n, ctx);
}

namespace exact {

Rational q_number(std::size_t n, const Rational& q) { return generic::q_number(n, q); }
Rational q_factorial(std::size_t n, const Rational& q) { return generic::q_factorial(n, q); }
Rational q_binomial(long n, long k, const Rational& q) { return generic::q_binomial(n, k, q); }
Rational q_pochhammer(const Rational& a, std::size_t n, const Rational& q) {
  return generic::q_pochhammer(a, n, q);
}
Rational q_multi_pochhammer(std::span<const Rational> list, std::size_t n, const Rational& q) {
  if (n == kInfiniteOrder) throw RegimeError("exact track has no infinite Pochhammer products");
  Rational prod{1};
  for (const auto& a : list) prod *= generic::q_pochhammer(a, n, q);
  return prod;
}

}  // namespace exact

}  // namespace qaw
