#pragma once

// Symmetric families S_n^(k), sigma_n^(3), sigma_n^(4) and elementary
// symmetric polynomials.
//
// The templates in qaw::generic work for T in {double, Complex, Rational}
// with the matching q type; the public float API is complex throughout so
// that conjugate-pair parameters go through the same code path.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "qaw/qcore.hpp"

namespace qaw {

/// Ordered parameters a_1..a_n, each strictly inside the unit disk.
class ParamVector {
 public:
  ParamVector() = default;
  explicit ParamVector(std::vector<Complex> entries);
  ParamVector(std::initializer_list<double> reals);

  static ParamVector from_reals(std::span<const double> reals);

  ParamVector& push_back(Complex a);
  /// Appends rho e^{i eta} and rho e^{-i eta} and tags them as a pair.
  ParamVector& push_conjugate_pair(double rho, double eta);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Complex>& entries() const { return entries_; }
  std::span<const Complex> span() const { return entries_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& pair_tags() const { return pair_tags_; }

  bool is_real() const;
  /// Real parts; throws DomainError if any entry has a nonzero imaginary part.
  std::vector<double> real_entries() const;
  double max_modulus() const;

  /// Entries reordered as entries()[perm[0]], entries()[perm[1]], ...; pair tags are dropped.
  ParamVector permuted(std::span<const std::size_t> perm) const;
  ParamVector prefix(std::size_t k) const;

 private:
  static void check(const Complex& a);

  std::vector<Complex> entries_;
  std::vector<std::pair<std::size_t, std::size_t>> pair_tags_;
};

/// Value of a symmetric function of order n.
struct SymValue {
  std::size_t n = 0;
  Complex value{0.0, 0.0};

  /// Real value; throws DomainError if |Im| exceeds 1e-12 (relative to max(1, |value|)).
  double real() const;
};

namespace generic {

/// S_0^(k), ..., S_nmax^(k) by the convolution
/// S_n^(k)(a_1..a_k) = sum_m [n m] S_m^(k-1)(a_1..a_{k-1}) a_k^{n-m}.
/// With no parameters the sequence is (1, 0, 0, ...).
template <class T, class Q>
std::vector<T> s_sequence(std::span<const T> a, std::size_t nmax, const QBinomialTable<Q>& binom) {
  std::vector<T> cur(nmax + 1, T{0});
  cur[0] = T{1};
  std::vector<T> next(nmax + 1);
  std::vector<T> powers(nmax + 1);
  for (const T& ak : a) {
    powers[0] = T{1};
    for (std::size_t i = 1; i <= nmax; ++i) powers[i] = powers[i - 1] * ak;
    for (std::size_t n = 0; n <= nmax; ++n) {
      T acc{0};
      for (std::size_t m = 0; m <= n; ++m) acc += cur[m] * binom(n, m) * powers[n - m];
      next[n] = acc;
    }
    std::swap(cur, next);
  }
  return cur;
}

template <class T, class Q>
std::vector<T> s_sequence(std::span<const T> a, std::size_t nmax, const Q& q) {
  return s_sequence(a, nmax, QBinomialTable<Q>(nmax, q));
}

/// sigma_n^(3) = sum_j [n j] q^{j(j-1)/2} (-abc)^j S_{n-j}^(3)(a,b,c).
template <class T, class Q>
std::vector<T> sigma3_sequence(const T& a, const T& b, const T& c, std::size_t nmax, const Q& q) {
  const QBinomialTable<Q> binom(nmax, q);
  const T abc[] = {a, b, c};
  const auto s3 = s_sequence<T, Q>(std::span<const T>(abc), nmax, binom);
  std::vector<T> coef(nmax + 1);  // q^{j(j-1)/2} (-abc)^j
  coef[0] = T{1};
  Q qpow{1};
  for (std::size_t j = 1; j <= nmax; ++j) {
    coef[j] = coef[j - 1] * (-(a * b * c)) * qpow;
    qpow *= q;
  }
  std::vector<T> out(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    T acc{0};
    for (std::size_t j = 0; j <= n; ++j) acc += coef[j] * binom(n, j) * s3[n - j];
    out[n] = acc;
  }
  return out;
}

/// sigma_n^(4) = sum_j [n j] (bd)_j/(abcd)_j S_{n-j}^(2)(b,d)
///               * sum_k [j k] (cb)_k a^k (ad)_{j-k} c^{j-k}.
template <class T, class Q>
std::vector<T> sigma4_sequence(const T& a, const T& b, const T& c, const T& d, std::size_t nmax,
                               const Q& q) {
  const QBinomialTable<Q> binom(nmax, q);
  const T bd_pair[] = {b, d};
  const auto s2 = s_sequence<T, Q>(std::span<const T>(bd_pair), nmax, binom);
  const auto p_bd = pochhammer_sequence<T, Q>(b * d, nmax, q);
  const auto p_abcd = pochhammer_sequence<T, Q>(a * b * c * d, nmax, q);
  const auto p_cb = pochhammer_sequence<T, Q>(c * b, nmax, q);
  const auto p_ad = pochhammer_sequence<T, Q>(a * d, nmax, q);
  std::vector<T> apow(nmax + 1), cpow(nmax + 1);
  apow[0] = cpow[0] = T{1};
  for (std::size_t i = 1; i <= nmax; ++i) {
    apow[i] = apow[i - 1] * a;
    cpow[i] = cpow[i - 1] * c;
  }
  std::vector<T> inner(nmax + 1);
  for (std::size_t j = 0; j <= nmax; ++j) {
    T acc{0};
    for (std::size_t k = 0; k <= j; ++k) acc += binom(j, k) * p_cb[k] * apow[k] * p_ad[j - k] * cpow[j - k];
    inner[j] = acc * p_bd[j] / p_abcd[j];
  }
  std::vector<T> out(nmax + 1);
  for (std::size_t n = 0; n <= nmax; ++n) {
    T acc{0};
    for (std::size_t j = 0; j <= n; ++j) acc += binom(n, j) * inner[j] * s2[n - j];
    out[n] = acc;
  }
  return out;
}

/// chi_0, ..., chi_k of the parameters.
template <class T>
std::vector<T> elementary_symmetric_all(std::span<const T> a) {
  std::vector<T> e(a.size() + 1, T{0});
  e[0] = T{1};
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += a[i] * e[j - 1];
  return e;
}

}  // namespace generic

std::vector<Complex> s_nk_sequence(std::size_t nmax, const ParamVector& params, const QContext& ctx);
SymValue s_nk(std::size_t n, const ParamVector& params, const QContext& ctx);

/// S_n^(2)(rho e^{i eta}, rho e^{-i eta}|q) = rho^n h_n(cos eta|q).
double s_nk_conjugate_pair(std::size_t n, double rho, double y, const QContext& ctx);

std::vector<Complex> sigma3_sequence(std::size_t nmax, Complex a, Complex b, Complex c, const QContext& ctx);
SymValue sigma3(std::size_t n, Complex a, Complex b, Complex c, const QContext& ctx);

std::vector<Complex> sigma4_sequence(std::size_t nmax, Complex a, Complex b, Complex c, Complex d,
                                     const QContext& ctx);
SymValue sigma4(std::size_t n, Complex a, Complex b, Complex c, Complex d, const QContext& ctx);

/// q = 0 closed form of sigma_n^(4) as a four-term combination of S^(2), S^(3), S^(4).
SymValue sigma4_free(std::size_t n, Complex a1, Complex a2, Complex a3, Complex a4);

/// chi_j of the parameters; zero for j > size.
Complex elementary_symmetric(std::size_t j, const ParamVector& params);

namespace exact {

Rational s_nk(std::size_t n, std::span<const Rational> params, const Rational& q);
Rational sigma3(std::size_t n, const Rational& a, const Rational& b, const Rational& c, const Rational& q);
Rational sigma4(std::size_t n, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                const Rational& q);

}  // namespace exact

}  // namespace qaw
