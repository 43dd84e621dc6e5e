#include "qaw/expand.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qaw/density.hpp"
#include "qaw/errors.hpp"

namespace qaw {

namespace {

double real_or_throw(const Complex& z, const char* what) {
  if (std::abs(z.imag()) > 1e-12 * std::max(1.0, std::abs(z))) {
    std::ostringstream os;
    os << what << " has a non-negligible imaginary part " << z.imag();
    throw DomainError(os.str());
  }
  return z.real();
}

// Coefficient sums cancel heavily for parameters of mixed sign; they are
// accumulated in extended precision and rounded once.
using WideComplex = std::complex<long double>;

WideComplex widen(const Complex& z) { return {z.real(), z.imag()}; }
Complex narrow(const WideComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

Complex poch_inf(Complex a, const QContext& ctx) { return q_pochhammer_inf(a, ctx).value; }

// prod_{j<k} (a_j a_k; q)_inf
Complex pair_pochhammer(const ParamVector& p, const QContext& ctx) {
  Complex prod{1.0, 0.0};
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t k = j + 1; k < p.size(); ++k) prod *= poch_inf(p[j] * p[k], ctx);
  return prod;
}

Complex pair_sum(const ParamVector& p) {
  Complex s{0.0, 0.0};
  for (std::size_t j = 0; j < p.size(); ++j)
    for (std::size_t k = j + 1; k < p.size(); ++k) s += p[j] * p[k];
  return s;
}

Complex param_sum(const ParamVector& p) {
  Complex s{0.0, 0.0};
  for (const Complex& a : p.entries()) s += a;
  return s;
}

void require_five(const ParamVector& p, const char* what) {
  if (p.size() != 5) {
    std::ostringstream os;
    os << what << " takes 5 parameters, got " << p.size();
    throw DomainError(os.str());
  }
}

// Number of inner terms that is usually enough for a weight a^m/(q)_m to
// fall below eps; used only as the first guess of the base table length.
std::size_t inner_guess(double modulus, const QContext& ctx) {
  if (modulus == 0.0) return 1;
  return static_cast<std::size_t>(std::ceil(std::log(ctx.eps_trunc) / std::log(modulus))) + 12;
}

}  // namespace

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::Recursion: return "recursion";
    case Provenance::Series: return "series";
  }
  return "unknown";
}

double ExpansionTable::A_real() const { return real_or_throw(A, "A_n"); }

double ExpansionTable::T_real(std::size_t j) const { return real_or_throw(T.at(j), "T_j"); }

std::vector<double> ExpansionTable::T_reals() const {
  std::vector<double> out(T.size());
  for (std::size_t j = 0; j < T.size(); ++j) out[j] = T_real(j);
  return out;
}

double series_tail(const std::vector<Complex>& T, const QContext& ctx) {
  if (ctx.regime == Regime::ClassicalOne) return 0.0;
  const std::size_t last = std::min<std::size_t>(4, T.size());
  double w_prev = 0.0, w = 1.0, qk = 1.0, qpoch = 1.0;
  double tail = 0.0;
  for (std::size_t j = 0; j < T.size(); ++j) {
    if (j + last >= T.size()) tail = std::max(tail, std::abs(T[j]) * w / std::abs(qpoch));
    const double w_next = 2.0 * w - (1.0 - qk) * w_prev;
    w_prev = w;
    w = w_next;
    qk *= ctx.q;
    qpoch *= 1.0 - qk;
  }
  return tail;
}

Complex closed_form_T(std::size_t n, std::size_t j, const ParamVector& params, const QContext& ctx) {
  if (params.size() != n) {
    std::ostringstream os;
    os << "closed_form_T: n = " << n << " but " << params.size() << " parameters given";
    throw DomainError(os.str());
  }
  return closed_form_T_sequence(params, j, ctx)[j];
}

std::vector<Complex> closed_form_T_sequence(const ParamVector& params, std::size_t jmax, const QContext& ctx) {
  std::vector<Complex> T(jmax + 1, Complex{0.0, 0.0});
  if (ctx.regime == Regime::ClassicalOne) {
    const Complex s = param_sum(params);
    T[0] = 1.0;
    for (std::size_t j = 1; j <= jmax; ++j) T[j] = T[j - 1] * s;
    return T;
  }
  std::vector<WideComplex> a;
  for (const Complex& v : params.entries()) a.push_back(widen(v));
  const long double q = ctx.q;
  std::vector<WideComplex> wide;
  switch (params.size()) {
    case 0:
      T[0] = 1.0;
      return T;
    case 1:
      T[0] = 1.0;
      for (std::size_t j = 1; j <= jmax; ++j) T[j] = T[j - 1] * params[0];
      return T;
    case 2: wide = generic::s_sequence<WideComplex, long double>(std::span<const WideComplex>(a), jmax, q); break;
    case 3: wide = generic::sigma3_sequence<WideComplex, long double>(a[0], a[1], a[2], jmax, q); break;
    case 4: wide = generic::sigma4_sequence<WideComplex, long double>(a[0], a[1], a[2], a[3], jmax, q); break;
    default: {
      std::ostringstream os;
      os << "no closed form for T_j with " << params.size() << " parameters";
      throw UnsupportedFamily(os.str());
    }
  }
  for (std::size_t j = 0; j <= jmax; ++j) T[j] = narrow(wide[j]);
  return T;
}

Complex closed_form_A(const ParamVector& params, const QContext& ctx) {
  if (ctx.regime == Regime::ClassicalOne) return std::exp(pair_sum(params));
  const auto& a = params.entries();
  switch (params.size()) {
    case 0:
    case 1: return 1.0;
    case 2:
    case 3: return 1.0 / pair_pochhammer(params, ctx);
    case 4: return poch_inf(a[0] * a[1] * a[2] * a[3], ctx) / pair_pochhammer(params, ctx);
    default: break;
  }
  std::ostringstream os;
  os << "no closed form for A_n with " << params.size() << " parameters";
  throw UnsupportedFamily(os.str());
}

ExpansionTable closed_form_table(const ParamVector& params, std::size_t J, const QContext& ctx) {
  ExpansionTable table;
  table.params = params;
  table.A = closed_form_A(params, ctx);
  table.T = closed_form_T_sequence(params, J, ctx);
  table.tail_estimate = series_tail(table.T, ctx);
  table.provenance = Provenance::ClosedForm;
  return table;
}

ExpansionTable base_table(std::size_t J) {
  ExpansionTable table;
  table.T.assign(J + 1, Complex{0.0, 0.0});
  table.T[0] = 1.0;
  return table;
}

ExpansionTable recursion_step(const ExpansionTable& prev, Complex a_new, const QContext& ctx,
                              std::size_t min_order) {
  ctx.require_inside("recursion_step");
  if (!(std::abs(a_new) < 1.0)) throw DomainError("recursion_step requires |a_new| < 1");
  const std::size_t L = prev.T.size();
  double tmax = 0.0;
  for (const Complex& t : prev.T) tmax = std::max(tmax, std::abs(t));

  // Inner weights a^m/(q)_m, kept until ten in a row are negligible against D.
  const WideComplex a = widen(a_new);
  std::vector<WideComplex> w;
  WideComplex D{0.0L, 0.0L};
  if (a_new == Complex{0.0, 0.0}) {
    w.push_back(1.0L);
    D = widen(prev.T[0]);
  } else {
    WideComplex weight{1.0L, 0.0L};
    long double qm = ctx.q;
    StallCounter stall;
    for (std::size_t m = 0;; ++m) {
      if (m >= L) {
        std::ostringstream os;
        os << "previous table of order " << L - 1 << " is too short for the inner sums at |a| = "
           << std::abs(a_new);
        throw TailTooLarge(os.str());
      }
      w.push_back(weight);
      D += weight * widen(prev.T[m]);
      if (stall.settled(static_cast<double>(std::abs(weight)) * tmax,
                        ctx.eps_trunc * static_cast<double>(std::abs(D))))
        break;
      weight *= a / (1.0L - qm);
      qm *= ctx.q;
    }
  }
  if (std::abs(D) < 1e-13L) throw DivergenceSuspected("normalizing series of the recursion is below 1e-13");

  const std::size_t M = w.size();
  const std::size_t count = L - M + 1;
  if (count < min_order + 1) {
    std::ostringstream os;
    os << "recursion keeps " << count - 1 << " coefficients, " << min_order << " requested";
    throw TailTooLarge(os.str());
  }

  std::vector<WideComplex> H(count);
  for (std::size_t s = 0; s < count; ++s) {
    WideComplex acc{0.0L, 0.0L};
    for (std::size_t m = 0; m < M; ++m) acc += w[m] * widen(prev.T[s + m]);
    H[s] = acc / D;
  }
  std::vector<WideComplex> apow(count);
  apow[0] = 1.0L;
  for (std::size_t k = 1; k < count; ++k) apow[k] = apow[k - 1] * a;
  const generic::QBinomialTable<long double> binom(count - 1, static_cast<long double>(ctx.q));

  ExpansionTable next;
  next.params = prev.params;
  next.params.push_back(a_new);
  next.A = prev.A * narrow(D);
  next.T.assign(count, Complex{0.0, 0.0});
  for (std::size_t j = 0; j < count; ++j) {
    WideComplex acc{0.0L, 0.0L};
    for (std::size_t s = 0; s <= j; ++s) acc += binom(j, s) * H[s] * apow[j - s];
    next.T[j] = narrow(acc);
  }
  next.tail_estimate = series_tail(next.T, ctx) + ctx.eps_trunc * static_cast<double>(next.params.size());
  next.provenance = Provenance::Recursion;
  return next;
}

ExpansionTable build_expansion(const ParamVector& params, const QContext& ctx, const ExpandOptions& opts) {
  if (ctx.regime == Regime::ClassicalOne) return closed_form_table(params, opts.initial_order, ctx);
  std::size_t extra = 0;
  for (const Complex& a : params.entries()) extra += inner_guess(std::abs(a), ctx);
  for (std::size_t J = std::max<std::size_t>(opts.initial_order, 1);; J *= 2) {
    ExpansionTable table;
    for (;;) {
      const std::size_t L = J + 1 + extra;
      if (L > ctx.max_terms) throw CapExceeded("expansion base table would exceed max_terms");
      try {
        table = base_table(L - 1);
        for (const Complex& a : params.entries()) table = recursion_step(table, a, ctx);
        if (table.T.size() >= J + 1) break;
      } catch (const TailTooLarge&) {
      }
      extra = 2 * extra + 16;
    }
    table.T.resize(J + 1);
    table.tail_estimate = series_tail(table.T, ctx) + ctx.eps_trunc * static_cast<double>(params.size());
    if (table.tail_estimate <= opts.tol || 2 * J > opts.max_order) return table;
  }
}

double g5_integral_series(const ParamVector& params, const QContext& ctx) {
  require_five(params, "g5_integral_series");
  ctx.require_inside("g5_integral_series");
  const ParamVector first = params.prefix(4);
  const Complex a5 = params[4];
  const Complex A4 = closed_form_A(first, ctx);
  if (a5 == Complex{0.0, 0.0}) return real_or_throw(A4, "integral of g_5");
  for (std::size_t N = 64;; N *= 2) {
    if (N > ctx.max_terms) throw CapExceeded("g5_integral_series exceeded max_terms");
    const auto sigma = sigma4_sequence(N, first[0], first[1], first[2], first[3], ctx);
    Complex sum{0.0, 0.0}, weight{1.0, 0.0};
    double w_prev = 0.0, w = 1.0, qk = 1.0;
    StallCounter stall;
    for (std::size_t j = 0; j <= N; ++j) {
      sum += weight * sigma[j];
      // |sigma_j^(4)| <= w_j(1|q), the sup of |h_j|
      if (stall.settled(std::abs(weight) * w, ctx.eps_trunc * std::max(1.0, std::abs(sum))))
        return real_or_throw(A4 * sum, "integral of g_5");
      const double w_next = 2.0 * w - (1.0 - qk) * w_prev;
      w_prev = w;
      w = w_next;
      qk *= ctx.q;
      weight *= a5 / (1.0 - qk);
    }
  }
}

double g5_free(const ParamVector& params) {
  require_five(params, "g5_free");
  const auto chi = generic::elementary_symmetric_all<Complex>(params.span());
  const Complex num = 1.0 - chi[4] + chi[5] * chi[1] - chi[5] * chi[5];
  Complex den{1.0, 0.0};
  for (std::size_t j = 0; j < 5; ++j)
    for (std::size_t k = j + 1; k < 5; ++k) den *= 1.0 - params[j] * params[k];
  return real_or_throw(num / den, "g5_free");
}

double Q1Expansion::T(std::size_t j) const { return std::pow(sum, static_cast<double>(j)); }

Q1Expansion q1_closed_form(const ParamVector& params) {
  const auto a = params.real_entries();
  Q1Expansion out;
  double pairs = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    out.sum += a[j];
    for (std::size_t k = j + 1; k < a.size(); ++k) pairs += a[j] * a[k];
  }
  out.A = std::exp(pairs);
  return out;
}

namespace exact {

Rational pair_sum(std::span<const Rational> a) {
  Rational s{0};
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = j + 1; k < a.size(); ++k) s += a[j] * a[k];
  return s;
}

Rational gaussian_exponent(std::span<const Rational> a) {
  Rational sum{0}, squares{0};
  for (const Rational& x : a) {
    sum += x;
    squares += x * x;
  }
  return (sum * sum - squares) / 2;
}

}  // namespace exact

ConjectureProbe conjecture_residual(const ParamVector& params, const QContext& ctx) {
  require_five(params, "conjecture_residual");
  const auto chi = generic::elementary_symmetric_all<Complex>(params.span());
  const Complex z = chi[4] - chi[5] * chi[1] + chi[5] * chi[5];
  if (!(std::abs(z) < 1.0)) {
    std::ostringstream os;
    os << "conjectured Pochhammer argument has modulus " << std::abs(z) << " >= 1";
    throw DomainError(os.str());
  }
  ConjectureProbe probe;
  probe.series = g5_integral_series(params, ctx);
  probe.conjectured = real_or_throw(poch_inf(z, ctx) / pair_pochhammer(params, ctx), "conjectured value");
  probe.signed_diff = (probe.series - probe.conjectured) / probe.series;
  probe.residual = std::abs(probe.signed_diff);
  return probe;
}

double GasperRahmanResult::relative_diff() const { return std::abs(lhs - rhs) / std::abs(rhs); }

GasperRahmanResult gasper_rahman_check(const ParamVector& params, const QContext& ctx, const QuadOptions& opts) {
  require_five(params, "gasper_rahman_check");
  ctx.require_inside("gasper_rahman_check");
  Complex P{1.0, 0.0};
  for (const Complex& a : params.entries()) P *= a;

  GasperRahmanResult out;
  out.quad = integrate_theta(
      [&](double x) {
        const double fh = f_h_density(x, ctx);
        if (fh == 0.0) return 0.0;
        Complex prod = 1.0 / phi_h(x, P, ctx);
        for (const Complex& a : params.entries()) prod *= phi_h(x, a, ctx);
        return fh * prod.real();
      },
      opts);
  out.lhs = out.quad.value;

  Complex num{1.0, 0.0};
  for (std::size_t j = 0; j < 5; ++j) {
    Complex others{1.0, 0.0};
    for (std::size_t k = 0; k < 5; ++k)
      if (k != j) others *= params[k];
    num *= poch_inf(others, ctx);
  }
  out.rhs = real_or_throw(num / pair_pochhammer(params, ctx), "Gasper-Rahman product");
  return out;
}

}  // namespace qaw
