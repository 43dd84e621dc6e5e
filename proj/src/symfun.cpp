#include "qaw/symfun.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qaw/qpoly.hpp"

namespace qaw {

void ParamVector::check(const Complex& a) {
  if (!(std::abs(a) < 1.0)) {
    std::ostringstream os;
    os << "parameter modulus must be < 1, got |" << a << "| = " << std::abs(a);
    throw DomainError(os.str());
  }
}

ParamVector::ParamVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  for (const auto& a : entries_) check(a);
}

ParamVector::ParamVector(std::initializer_list<double> reals) {
  for (double a : reals) push_back(Complex{a, 0.0});
}

ParamVector ParamVector::from_reals(std::span<const double> reals) {
  ParamVector p;
  for (double a : reals) p.push_back(Complex{a, 0.0});
  return p;
}

ParamVector& ParamVector::push_back(Complex a) {
  check(a);
  entries_.push_back(a);
  return *this;
}

ParamVector& ParamVector::push_conjugate_pair(double rho, double eta) {
  const Complex a = std::polar(rho, eta);
  check(a);
  pair_tags_.emplace_back(entries_.size(), entries_.size() + 1);
  entries_.push_back(a);
  entries_.push_back(std::conj(a));
  return *this;
}

bool ParamVector::is_real() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& a) { return a.imag() == 0.0; });
}

std::vector<double> ParamVector::real_entries() const {
  if (!is_real()) throw DomainError("parameters must be real here");
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& a : entries_) out.push_back(a.real());
  return out;
}

double ParamVector::max_modulus() const {
  double m = 0.0;
  for (const auto& a : entries_) m = std::max(m, std::abs(a));
  return m;
}

ParamVector ParamVector::permuted(std::span<const std::size_t> perm) const {
  std::vector<Complex> out;
  out.reserve(perm.size());
  for (std::size_t i : perm) out.push_back(entries_.at(i));
  return ParamVector(std::move(out));
}

ParamVector ParamVector::prefix(std::size_t k) const {
  ParamVector p(std::vector<Complex>(entries_.begin(), entries_.begin() + std::min(k, entries_.size())));
  for (const auto& tag : pair_tags_)
    if (tag.second < k) p.pair_tags_.push_back(tag);
  return p;
}

double SymValue::real() const {
  if (std::abs(value.imag()) > 1e-12 * std::max(1.0, std::abs(value))) {
    std::ostringstream os;
    os << "symmetric value of order " << n << " is not real: " << value;
    throw DomainError(os.str());
  }
  return value.real();
}

std::vector<Complex> s_nk_sequence(std::size_t nmax, const ParamVector& params, const QContext& ctx) {
  if (ctx.regime == Regime::ClassicalOne) {
    Complex total{0.0, 0.0};
    for (const auto& a : params.entries()) total += a;
    std::vector<Complex> out(nmax + 1);
    out[0] = 1.0;
    for (std::size_t n = 1; n <= nmax; ++n) out[n] = out[n - 1] * total;
    return out;
  }
  return generic::s_sequence<Complex, double>(params.span(), nmax, ctx.q);
}

SymValue s_nk(std::size_t n, const ParamVector& params, const QContext& ctx) {
  return {n, s_nk_sequence(n, params, ctx)[n]};
}

double s_nk_conjugate_pair(std::size_t n, double rho, double y, const QContext& ctx) {
  if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("conjugate pair needs 0 <= rho < 1");
  if (!(std::abs(y) <= 1.0)) throw DomainError("conjugate pair needs |y| <= 1");
  return std::pow(rho, static_cast<double>(n)) * q_hermite(n, y, ctx);
}

std::vector<Complex> sigma3_sequence(std::size_t nmax, Complex a, Complex b, Complex c, const QContext& ctx) {
  ParamVector guard;
  guard.push_back(a).push_back(b).push_back(c);
  return generic::sigma3_sequence<Complex, double>(a, b, c, nmax, ctx.q);
}

SymValue sigma3(std::size_t n, Complex a, Complex b, Complex c, const QContext& ctx) {
  return {n, sigma3_sequence(n, a, b, c, ctx)[n]};
}

std::vector<Complex> sigma4_sequence(std::size_t nmax, Complex a, Complex b, Complex c, Complex d,
                                     const QContext& ctx) {
  ParamVector guard;
  guard.push_back(a).push_back(b).push_back(c).push_back(d);
  return generic::sigma4_sequence<Complex, double>(a, b, c, d, nmax, ctx.q);
}

SymValue sigma4(std::size_t n, Complex a, Complex b, Complex c, Complex d, const QContext& ctx) {
  return {n, sigma4_sequence(n, a, b, c, d, ctx)[n]};
}

SymValue sigma4_free(std::size_t n, Complex a1, Complex a2, Complex a3, Complex a4) {
  const generic::QBinomialTable<double> ones(n, 0.0);
  auto s_at = [&](std::initializer_list<Complex> args, long order) -> Complex {
    if (order < 0) return 0.0;
    const std::vector<Complex> v(args);
    return generic::s_sequence<Complex, double>(v, static_cast<std::size_t>(order), ones)[order];
  };
  const long m = static_cast<long>(n);
  const Complex den = 1.0 - a1 * a2 * a3 * a4;
  Complex value = s_at({a2, a4}, m);
  value += (1.0 - a2 * a4) * (1.0 - a1 * a4) / den * a3 * s_at({a2, a3, a4}, m - 1);
  value += (1.0 - a2 * a4) * (1.0 - a3 * a2) / den * a1 * s_at({a1, a2, a4}, m - 1);
  value += (1.0 - a2 * a4) * (1.0 - a2 * a3) * (1.0 - a1 * a4) * a1 * a3 / den *
           s_at({a1, a2, a3, a4}, m - 2);
  return {n, value};
}

Complex elementary_symmetric(std::size_t j, const ParamVector& params) {
  if (j > params.size()) return 0.0;
  return generic::elementary_symmetric_all(params.span())[j];
}

namespace exact {

Rational s_nk(std::size_t n, std::span<const Rational> params, const Rational& q) {
  return generic::s_sequence<Rational, Rational>(params, n, q)[n];
}

Rational sigma3(std::size_t n, const Rational& a, const Rational& b, const Rational& c, const Rational& q) {
  return generic::sigma3_sequence<Rational, Rational>(a, b, c, n, q)[n];
}

Rational sigma4(std::size_t n, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                const Rational& q) {
  return generic::sigma4_sequence<Rational, Rational>(a, b, c, d, n, q)[n];
}

}  // namespace exact

}  // namespace qaw
