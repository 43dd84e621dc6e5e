#pragma once

// The density ladder g_n(x) = f_h(x|q) prod_i phi_h(x|a_i,q) and its named
// rungs: q-Hermite (n=0), big q-Hermite (1), Al-Salam-Chihara (2),
// continuous dual Hahn (3) and Askey-Wilson (4).  Each density has a
// product form and a q-Hermite series form; both are exposed so they can be
// checked against each other.

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qaw/qcore.hpp"
#include "qaw/qpoly.hpp"
#include "qaw/symfun.hpp"

namespace qaw {

struct ExpansionTable;

enum class Family { QHermite, BigQHermite, AlSalamChihara, ContinuousDualHahn, AskeyWilson, GeneralN };

const char* to_string(Family f);
Family family_from_string(const std::string& name);

/// Number of parameters of a named family; GeneralN accepts any count.
std::size_t family_arity(Family f);

/// v(x|t) = 1 - 2tx + t^2.  Nonnegative for |x| <= 1 and real t.
template <class T>
T v_factor(double x, const T& t) {
  return T{1} - T{2} * t * x + t * t;
}

/// l(x|a) = (1+a)^2 - 4ax^2.
inline double l_factor(double x, double a) { return (1.0 + a) * (1.0 + a) - 4.0 * a * x * x; }

/// phi_h(x|t,q) = sum_j t^j h_j(x|q)/(q)_j = 1/prod_k v(x|t q^k).
/// ClosedForm evaluates the truncated product, Series the truncated sum.
Complex phi_h(double x, Complex t, const QContext& ctx, EvalMode mode = EvalMode::ClosedForm);
double phi_h(double x, double t, const QContext& ctx, EvalMode mode = EvalMode::ClosedForm);

/// f_h(x|q) = 2 (q)_inf sqrt(1-x^2)/pi prod_{k>=1} l(x|q^k).
double f_h_density(double x, const QContext& ctx);

/// Unnormalized g_n(x) = f_h(x) prod phi_h(x|a_i).  Real for real or
/// conjugate-paired parameters; the imaginary part is discarded.
double g_density(double x, const ParamVector& params, const QContext& ctx);

/// A density of the ladder.  Immutable except for the lazily computed
/// expansion table of the GeneralN family, which is filled at most once and
/// shared between copies.
class DensitySpec {
 public:
  DensitySpec(Family family, ParamVector params, QContext ctx);

  Family family() const { return family_; }
  const ParamVector& params() const { return params_; }
  const QContext& ctx() const { return ctx_; }

  /// Integral of the unnormalized g_n over [-1, 1] (the normalizer A_n).
  double total_mass() const;

  /// Expansion table of g_n (closed forms for n <= 4, the recursion otherwise).
  const ExpansionTable& expansion() const;

 private:
  struct Cache {
    std::once_flag once;
    std::shared_ptr<const ExpansionTable> table;
  };

  Family family_;
  ParamVector params_;
  QContext ctx_;
  double mass_ = 0.0;  // closed-form A_n; unused for GeneralN
  std::shared_ptr<Cache> cache_;
};

/// Normalized density value g_n(x)/A_n.
double density_value(const DensitySpec& spec, double x);
double density_value_unnormalized(const DensitySpec& spec, double x);

/// Integral of h_n(x|q) against the normalized density.
double q_hermite_moment(const DensitySpec& spec, std::size_t n);

/// The q-Hermite series form f_h(x) sum_{j<N} c_j/(q)_j h_j(x) of a
/// normalized density, with N chosen by the coefficient-bound stall rule
/// (|c_N| w_N(1|q)/(q)_N below eps_trunc for ten consecutive N) and capped
/// at max_order.
class HSeriesDensity {
 public:
  explicit HSeriesDensity(const DensitySpec& spec, std::size_t max_order = 1024);

  double operator()(double x) const;

  /// Number of series terms kept.
  std::size_t order() const { return coeffs_.size(); }
  bool converged() const { return converged_; }

 private:
  QContext ctx_;
  std::vector<double> coeffs_;  // c_j/(q)_j
  bool converged_ = false;
};

/// Moments c_0..c_nmax of the normalized density (c_j = integral of h_j).
std::vector<Complex> h_moment_sequence(const DensitySpec& spec, std::size_t nmax);

/// Poisson-Mehler kernel sum_j rho^j h_j(x) h_j(y)/(q)_j and its product form.
double poisson_mehler(double x, double y, double rho, const QContext& ctx, EvalMode mode = EvalMode::ClosedForm);

}  // namespace qaw
