#pragma once

// Rogers-Szego, continuous q-Hermite, Carlitz mu and probabilists' Hermite
// polynomials, plus the Carlitz zeta / lambda generating series.

#include <cstddef>
#include <vector>

#include "qaw/qcore.hpp"
#include "qaw/rational_poly.hpp"

namespace qaw {

enum class EvalMode { ClosedForm, Series };

/// w_n(x|q) = sum_k [n k]_q x^k.
double rogers_szego(std::size_t n, double x, const QContext& ctx);
Complex rogers_szego(std::size_t n, Complex x, const QContext& ctx);

/// w_0(x|q), ..., w_nmax(x|q) via w_{k+1} = (1+x) w_k - (1-q^k) x w_{k-1}.
std::vector<double> rogers_szego_sequence(std::size_t nmax, double x, const QContext& ctx);

/// h_n(x|q) by the forward three-term recurrence from h_{-1} = 0, h_0 = 1.
double q_hermite(std::size_t n, double x, const QContext& ctx);

/// h_0(x|q), ..., h_nmax(x|q).
std::vector<double> q_hermite_sequence(std::size_t nmax, double x, const QContext& ctx);

/// Probabilists' Hermite He_n(x): He_{n+1} = x He_n - n He_{n-1}.
double hermite_classical(std::size_t n, double x);

/// sup over [-1, 1] of |h_n(x|q)| is at most w_n(1|q).
struct HermiteBound {
  std::size_t n = 0;
  double bound = 1.0;
};

HermiteBound hermite_bound(std::size_t n, const QContext& ctx);

/// mu_n(x|a,q) = sum_j [n j]_q (a;q)_j x^j.
double mu_value(std::size_t n, double x, double a, const QContext& ctx);

/// zeta_n(x|a,q) = sum_m a^m/(q)_m w_{n+m}(x|q).  ClosedForm uses
/// zeta_0 mu_n with zeta_0 = 1/(a, ax; q)_inf.
double carlitz_zeta(std::size_t n, double x, double a, const QContext& ctx,
                    EvalMode mode = EvalMode::ClosedForm);

/// lambda_{0,0}(x,y|a,q) = sum_k a^k/(q)_k w_k(x) w_k(y)
///                        = (xya^2)_inf / (a, ax, ay, axy)_inf.
double carlitz_lambda00(double x, double y, double a, const QContext& ctx,
                        EvalMode mode = EvalMode::ClosedForm);

/// Counts consecutive negligible terms of a series; a series is considered
/// summed once `window` bounded terms in a row fall below the threshold.
class StallCounter {
 public:
  explicit StallCounter(std::size_t window = 10) : window_(window) {}

  /// Feed the bound of the newest term; returns true when summation may stop.
  bool settled(double term_bound, double threshold) {
    run_ = term_bound <= threshold ? run_ + 1 : 0;
    return run_ >= window_;
  }

 private:
  std::size_t window_;
  std::size_t run_ = 0;
};

namespace exact {

RationalPoly rogers_szego_poly(std::size_t n, const Rational& q);
RationalPoly q_hermite_poly(std::size_t n, const Rational& q);
RationalPoly mu_poly(std::size_t n, const Rational& a, const Rational& q);

}  // namespace exact

}  // namespace qaw
