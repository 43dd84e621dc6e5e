#pragma once

// Reference computations used only by the tests.  None of them call the
// library's closed forms: products are plain loops, symmetric sums are
// enumerated term by term, h_n comes from its trigonometric sum and
// integrals use the trapezoid rule in theta (spectrally accurate for the
// smooth periodic integrands that appear here).

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double pi = std::numbers::pi;

/// (a;q)_inf by multiplying until the factors are 1 to double precision.
inline Complex poch_inf(Complex a, double q) {
  Complex prod{1.0};
  Complex term = a;
  for (int k = 0; k < 20000 && std::abs(term) > 1e-18; ++k) {
    prod *= 1.0 - term;
    term *= q;
  }
  return prod;
}

inline double poch_inf(double a, double q) { return poch_inf(Complex{a}, q).real(); }

template <class T, class Q>
T poch(const T& a, std::size_t n, const Q& q) {
  T prod{1};
  T term = a;
  for (std::size_t k = 0; k < n; ++k) {
    prod *= T{1} - term;
    term *= q;
  }
  return prod;
}

/// [n k]_q = (q)_n / ((q)_k (q)_{n-k}) with [m]_q! products, valid at q = 1.
template <class Q>
Q qbinom(long n, long k, const Q& q) {
  if (k < 0 || k > n) return Q{0};
  auto fact = [&](long m) {
    Q f{1};
    for (long i = 1; i <= m; ++i) {
      Q num{0}, p{1};
      for (long j = 0; j < i; ++j) {
        num += p;
        p *= q;
      }
      f *= num;
    }
    return f;
  };
  return fact(n) / (fact(k) * fact(n - k));
}

/// S_n^(k)(a|q) by enumerating all compositions n = m_1 + ... + m_k with the
/// q-multinomial weight [n]!/([m_1]!...[m_k]!).
template <class T, class Q>
T brute_S(std::size_t n, const std::vector<T>& a, const Q& q) {
  if (a.empty()) return n == 0 ? T{1} : T{0};
  T total{0};
  std::vector<std::size_t> m(a.size(), 0);
  std::function<void(std::size_t, std::size_t, Q, T)> rec = [&](std::size_t i, std::size_t left, Q coef, T mono) {
    if (i + 1 == a.size()) {
      T p{1};
      for (std::size_t r = 0; r < left; ++r) p *= a[i];
      total += T(coef) * mono * p;
      return;
    }
    for (std::size_t mi = 0; mi <= left; ++mi) {
      T p{1};
      for (std::size_t r = 0; r < mi; ++r) p *= a[i];
      rec(i + 1, left - mi, coef * qbinom<Q>(static_cast<long>(left), static_cast<long>(mi), q), mono * p);
    }
  };
  rec(0, n, Q{1}, T{1});
  return total;
}

/// h_n(cos theta|q) = sum_k [n k]_q cos((n - 2k) theta).
inline double h_trig(std::size_t n, double theta, double q) {
  double s = 0.0;
  for (std::size_t k = 0; k <= n; ++k)
    s += qbinom<double>(static_cast<long>(n), static_cast<long>(k), q) *
         std::cos((static_cast<double>(n) - 2.0 * static_cast<double>(k)) * theta);
  return s;
}

/// Weight of the ladder in theta: (q)_inf |(e^{2i theta})_inf|^2 / (2 pi prod |(a e^{i theta})_inf|^2),
/// so that the density in x satisfies g(x) dx = weight(theta) dtheta.
inline double ladder_weight(double theta, const std::vector<Complex>& a, double q) {
  const Complex e = std::polar(1.0, theta);
  double w = poch_inf(q, q) * std::norm(poch_inf(e * e, q)) / (2.0 * pi);
  for (const Complex& ai : a) w /= (poch_inf(ai * e, q) * poch_inf(ai * std::conj(e), q)).real();
  return w;
}

/// Trapezoid rule over theta in [0, pi] of an even 2 pi-periodic function.
inline double theta_trapezoid(const std::function<double(double)>& f, std::size_t panels = 2048) {
  const double h = pi / static_cast<double>(panels);
  double s = 0.5 * (f(0.0) + f(pi));
  for (std::size_t i = 1; i < panels; ++i) s += f(h * static_cast<double>(i));
  return s * h;
}

/// prod_{j<k} (a_j a_k; q)_inf
inline double pair_poch(const std::vector<double>& a, double q) {
  double p = 1.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = j + 1; k < a.size(); ++k) p *= poch_inf(a[j] * a[k], q);
  return p;
}

/// Askey-Wilson integral (abcd)_inf / prod_{j<k} (a_j a_k)_inf.
inline double aw_mass(const std::vector<double>& a, double q) {
  return poch_inf(a[0] * a[1] * a[2] * a[3], q) / pair_poch(a, q);
}

inline std::vector<double> draw(std::mt19937_64& rng, std::size_t n, double bound) {
  std::uniform_real_distribution<double> u(-bound, bound);
  std::vector<double> a(n);
  for (double& x : a) x = u(rng);
  return a;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace oracle
