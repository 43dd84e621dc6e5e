#pragma once

// Expansion of g_n(x) = f_h(x) prod phi_h(x|a_i) in the q-Hermite basis:
//
//   g_n(x) = A_n f_h(x) sum_j T_j/(q)_j h_j(x),   A_n = integral of g_n.
//
// Closed forms exist for n <= 4 and at q = 1; for general n the table is
// built one parameter at a time by the recursion
//
//   D     = sum_m a^m/(q)_m T_m            (A_new = A_prev D)
//   H_s   = sum_m a^m/(q)_m T_{s+m} / D
//   T'_j  = sum_s [j s] H_s a^{j-s}.

#include <cstddef>
#include <span>
#include <vector>

#include "qaw/qcore.hpp"
#include "qaw/quad.hpp"
#include "qaw/symfun.hpp"

namespace qaw {

enum class Provenance { ClosedForm, Recursion, Series };

const char* to_string(Provenance p);

struct ExpansionTable {
  ParamVector params;
  Complex A{1.0, 0.0};
  std::vector<Complex> T{Complex{1.0, 0.0}};  // T_0 .. T_J
  double tail_estimate = 0.0;
  Provenance provenance = Provenance::ClosedForm;

  std::size_t n() const { return params.size(); }
  std::size_t J() const { return T.size() - 1; }

  /// Real parts; throw DomainError when the imaginary part is not negligible.
  double A_real() const;
  double T_real(std::size_t j) const;
  std::vector<double> T_reals() const;
};

struct ExpandOptions {
  std::size_t initial_order = 64;
  std::size_t max_order = 1024;
  double tol = 1e-12;
};

/// T_j for n = params.size() in {0,...,4}: delta_{j0}, a^j, S_j^(2), sigma_j^(3), sigma_j^(4).
/// At q = 1 every n is closed: T_j = (sum a)^j.
Complex closed_form_T(std::size_t n, std::size_t j, const ParamVector& params, const QContext& ctx);
std::vector<Complex> closed_form_T_sequence(const ParamVector& params, std::size_t jmax, const QContext& ctx);

/// A_n for n <= 4 (any n at q = 1).
Complex closed_form_A(const ParamVector& params, const QContext& ctx);

ExpansionTable closed_form_table(const ParamVector& params, std::size_t J, const QContext& ctx);

/// The n = 0 table (A = 1, T = delta) with J + 1 entries.
ExpansionTable base_table(std::size_t J);

/// Adds one parameter.  The output keeps as many coefficients as the inner
/// sums can be evaluated to eps_trunc from prev; TailTooLarge is thrown if
/// that leaves fewer than min_order + 1.
ExpansionTable recursion_step(const ExpansionTable& prev, Complex a_new, const QContext& ctx,
                              std::size_t min_order = 0);

/// Chains recursion_step from n = 0, doubling the order from
/// opts.initial_order until tail_estimate <= opts.tol or opts.max_order.
ExpansionTable build_expansion(const ParamVector& params, const QContext& ctx, const ExpandOptions& opts = {});

/// Size of the h-series terms dropped after T_J: max over the last few j of
/// |T_j| w_j(1|q)/|(q)_j|.
double series_tail(const std::vector<Complex>& T, const QContext& ctx);

/// Integral of g_5 as A_4(a_1..a_4) sum_j a_5^j/(q)_j sigma_j^(4)(a_1..a_4).
double g5_integral_series(const ParamVector& params, const QContext& ctx);

/// q = 0 closed form (1 - chi_4 + chi_5 chi_1 - chi_5^2)/prod_{j<k}(1 - a_j a_k).
double g5_free(const ParamVector& params);

/// q = 1: A_n = exp(sum_{j<k} a_j a_k), T_j = (sum a_k)^j.
struct Q1Expansion {
  double A = 1.0;
  double sum = 0.0;
  double T(std::size_t j) const;
};

Q1Expansion q1_closed_form(const ParamVector& params);

namespace exact {

/// sum_{j<k} a_j a_k.
Rational pair_sum(std::span<const Rational> a);
/// ((sum a)^2 - sum a^2)/2, the exponent of the Gaussian normalizer.
Rational gaussian_exponent(std::span<const Rational> a);

}  // namespace exact

struct ConjectureProbe {
  double series = 0.0;       // g5_integral_series
  double conjectured = 0.0;  // (chi_4 - chi_5 chi_1 + chi_5^2; q)_inf / prod (a_j a_k; q)_inf
  double residual = 0.0;     // |series - conjectured| / |series|
  double signed_diff = 0.0;  // (series - conjectured) / series
};

/// Numeric probe of the conjectured product form of the g_5 integral.
/// Diagnostic only; throws DomainError if the conjectured Pochhammer
/// argument has modulus >= 1.
ConjectureProbe conjecture_residual(const ParamVector& params, const QContext& ctx);

struct GasperRahmanResult {
  double lhs = 0.0;  // quadrature of g_5 / phi_h(x | prod a)
  double rhs = 0.0;  // prod_j (prod_{k != j} a_k)_inf / prod_{j<k} (a_j a_k)_inf
  QuadratureReport quad;
  double relative_diff() const;
};

GasperRahmanResult gasper_rahman_check(const ParamVector& params, const QContext& ctx,
                                       const QuadOptions& opts = {});

}  // namespace qaw
