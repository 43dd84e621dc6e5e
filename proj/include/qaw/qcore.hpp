#pragma once

// q-numbers, q-factorials, q-binomials and q-Pochhammer symbols.
//
// Every operation exists twice: a floating-point version driven by a
// QContext, and an exact version in qaw::exact over cpp_rational.  Both are
// instantiations of the templates in qaw::generic, so the two tracks cannot
// drift apart.

#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qaw/errors.hpp"

namespace qaw {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kDefaultEpsTrunc = 1e-14;
inline constexpr std::size_t kDefaultMaxTerms = 100000;

/// Order argument meaning "n = infinity" for q_multi_pochhammer.
inline constexpr std::size_t kInfiniteOrder = std::numeric_limits<std::size_t>::max();

enum class Regime { Generic, FreeZero, ClassicalOne };

const char* to_string(Regime r);

/// The deformation parameter q together with the truncation policy used by
/// every infinite product and series in the library.
struct QContext {
  double q = 0.0;
  Regime regime = Regime::FreeZero;
  double eps_trunc = kDefaultEpsTrunc;
  std::size_t max_terms = kDefaultMaxTerms;

  /// Validates q in (-1, 1], eps_trunc > 0, max_terms >= 1 and tags the regime.
  static QContext make(double q, double eps_trunc = kDefaultEpsTrunc,
                       std::size_t max_terms = kDefaultMaxTerms);

  bool inside_unit_disk() const { return regime != Regime::ClassicalOne; }

  /// Throws RegimeError naming `what` unless |q| < 1.
  void require_inside(const char* what) const;
};

template <class T>
struct QPochhammerValue {
  T value{1};
  std::size_t terms_used = 0;
  double tail_bound = 0.0;  // bound on the relative truncation error
};

/// Smallest K >= 0 with lead * |q|^K / (1 - |q|) <= eps_trunc.
/// Throws CapExceeded when K would exceed ctx.max_terms.
std::size_t geometric_cutoff(double lead, const QContext& ctx);

/// The bound lead * |q|^K / (1 - |q|) itself.
double geometric_tail(double lead, std::size_t K, const QContext& ctx);

namespace generic {

template <class Q>
Q q_number(std::size_t n, const Q& q) {
  Q sum{0};
  Q power{1};
  for (std::size_t i = 0; i < n; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

template <class Q>
Q q_factorial(std::size_t n, const Q& q) {
  Q prod{1};
  for (std::size_t j = 1; j <= n; ++j) prod *= q_number(j, q);
  return prod;
}

/// (a;q)_n as a plain finite product.
template <class T, class Q>
T q_pochhammer(const T& a, std::size_t n, const Q& q) {
  T prod{1};
  T term = a;
  for (std::size_t j = 0; j < n; ++j) {
    prod *= T{1} - term;
    term *= q;
  }
  return prod;
}

/// (a;q)_0, ..., (a;q)_nmax.
template <class T, class Q>
std::vector<T> pochhammer_sequence(const T& a, std::size_t nmax, const Q& q) {
  std::vector<T> out(nmax + 1);
  out[0] = T{1};
  T term = a;
  for (std::size_t j = 1; j <= nmax; ++j) {
    out[j] = out[j - 1] * (T{1} - term);
    term *= q;
  }
  return out;
}

/// Triangle of q-binomial coefficients [n k]_q for 0 <= k <= n <= nmax.
///
/// Built with the Pascal rule [n k] = [n-1 k-1] + q^k [n-1 k], which is
/// exact over the rationals and well defined at q = 1.  For floating q with
/// |q| < 1 the ratio (q)_n / ((q)_k (q)_{n-k}) is used instead.
template <class Q>
class QBinomialTable {
 public:
  QBinomialTable(std::size_t nmax, const Q& q) : nmax_(nmax), rows_((nmax + 1) * (nmax + 2) / 2) {
    bool use_ratio = false;
    if constexpr (std::is_floating_point_v<Q>) use_ratio = (q < Q{1} && q > Q{-1});
    if (use_ratio) {
      auto qq = pochhammer_sequence<Q, Q>(q, nmax, q);
      for (std::size_t n = 0; n <= nmax; ++n)
        for (std::size_t k = 0; k <= n; ++k) rows_[index(n, k)] = qq[n] / (qq[k] * qq[n - k]);
      return;
    }
    std::vector<Q> qpow(nmax + 1);
    qpow[0] = Q{1};
    for (std::size_t k = 1; k <= nmax; ++k) qpow[k] = qpow[k - 1] * q;
    for (std::size_t n = 0; n <= nmax; ++n) {
      rows_[index(n, 0)] = Q{1};
      rows_[index(n, n)] = Q{1};
      for (std::size_t k = 1; k < n; ++k)
        rows_[index(n, k)] = rows_[index(n - 1, k - 1)] + qpow[k] * rows_[index(n - 1, k)];
    }
  }

  std::size_t max_n() const { return nmax_; }

  /// [n k]_q; requires k <= n <= max_n().
  const Q& operator()(std::size_t n, std::size_t k) const { return rows_[index(n, k)]; }

  /// [n k]_q with the "otherwise 0" branch for k outside [0, n].
  Q at(long n, long k) const {
    if (n < 0 || k < 0 || k > n) return Q{0};
    return rows_[index(static_cast<std::size_t>(n), static_cast<std::size_t>(k))];
  }

 private:
  static std::size_t index(std::size_t n, std::size_t k) { return n * (n + 1) / 2 + k; }

  std::size_t nmax_;
  std::vector<Q> rows_;
};

template <class Q>
Q q_binomial(long n, long k, const Q& q) {
  if (n < 0 || k < 0 || k > n) return Q{0};
  return QBinomialTable<Q>(static_cast<std::size_t>(n), q)(static_cast<std::size_t>(n),
                                                           static_cast<std::size_t>(k));
}

}  // namespace generic

// Floating-point track.

double q_number(std::size_t n, const QContext& ctx);
double q_factorial(std::size_t n, const QContext& ctx);
double q_binomial(long n, long k, const QContext& ctx);

double q_pochhammer(double a, std::size_t n, const QContext& ctx);
Complex q_pochhammer(Complex a, std::size_t n, const QContext& ctx);

QPochhammerValue<double> q_pochhammer_inf(double a, const QContext& ctx);
QPochhammerValue<Complex> q_pochhammer_inf(Complex a, const QContext& ctx);

/// Product of (a_i;q)_n over the list; n == kInfiniteOrder selects the
/// infinite product.
double q_multi_pochhammer(std::span<const double> list, std::size_t n, const QContext& ctx);
Complex q_multi_pochhammer(std::span<const Complex> list, std::size_t n, const QContext& ctx);

// Exact-rational track.
namespace exact {

Rational q_number(std::size_t n, const Rational& q);
Rational q_factorial(std::size_t n, const Rational& q);
Rational q_binomial(long n, long k, const Rational& q);
Rational q_pochhammer(const Rational& a, std::size_t n, const Rational& q);
Rational q_multi_pochhammer(std::span<const Rational> list, std::size_t n, const Rational& q);

}  // namespace exact

}  // namespace qaw
