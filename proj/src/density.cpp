#include "qaw/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qaw/errors.hpp"
#include "qaw/expand.hpp"

namespace qaw {

namespace {

struct FamilyName {
  Family family;
  const char* name;
  const char* alias;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::QHermite, "q-hermite", "qh"},
    {Family::BigQHermite, "big-q-hermite", "bqh"},
    {Family::AlSalamChihara, "al-salam-chihara", "asc"},
    {Family::ContinuousDualHahn, "continuous-dual-hahn", "cdh"},
    {Family::AskeyWilson, "askey-wilson", "aw"},
    {Family::GeneralN, "general", "gn"},
};

double checked_x(double x) {
  if (!(std::abs(x) <= 1.0 + 1e-12)) {
    std::ostringstream os;
    os << "x = " << x << " lies outside [-1, 1]";
    throw DomainError(os.str());
  }
  return std::clamp(x, -1.0, 1.0);
}

// w_{k+1}(1) = 2 w_k(1) - (1 - q^k) w_{k-1}(1), the sup bound of |h_k| on [-1, 1].
class SupBound {
 public:
  explicit SupBound(double q) : q_(q) {}
  double value() const { return cur_; }
  void advance() {
    const double next = 2.0 * cur_ - (1.0 - qk_) * prev_;
    prev_ = cur_;
    cur_ = next;
    qk_ *= q_;
  }

 private:
  double q_;
  double prev_ = 0.0, cur_ = 1.0, qk_ = 1.0;
};

template <class T>
T phi_h_product(double x, const T& t, const QContext& ctx) {
  const double mod = std::abs(t);
  if (mod == 0.0) return T{1};
  const std::size_t K = geometric_cutoff(2.0 * mod + mod * mod, ctx);
  T prod{1};
  T tk = t;
  for (std::size_t k = 0; k < std::max<std::size_t>(K, 1); ++k) {
    const T v = v_factor(x, tk);
    if (v == T{0}) throw DomainError("phi_h: vanishing factor v(x|t q^k)");
    prod *= v;
    tk *= ctx.q;
  }
  return T{1} / prod;
}

template <class T>
T phi_h_series(double x, const T& t, const QContext& ctx) {
  double h_prev = 0.0, h_cur = 1.0, qk = 1.0;
  SupBound bound(ctx.q);
  T sum{0};
  T weight{1};  // t^j/(q)_j
  StallCounter stall;
  for (std::size_t j = 0;; ++j) {
    if (j > ctx.max_terms) throw CapExceeded("phi_h series exceeded max_terms");
    sum += weight * h_cur;
    if (stall.settled(std::abs(weight) * bound.value(), ctx.eps_trunc * std::max(1.0, std::abs(sum)))) break;
    const double h_next = 2.0 * x * h_cur - (1.0 - qk) * h_prev;
    h_prev = h_cur;
    h_cur = h_next;
    bound.advance();
    qk *= ctx.q;
    weight *= t / (1.0 - qk);
  }
  return sum;
}

template <class T>
T phi_h_impl(double x, const T& t, const QContext& ctx, EvalMode mode) {
  ctx.require_inside("phi_h");
  x = checked_x(x);
  if (!(std::abs(t) < 1.0)) throw DomainError("phi_h requires |t| < 1");
  return mode == EvalMode::ClosedForm ? phi_h_product(x, t, ctx) : phi_h_series(x, t, ctx);
}

std::size_t named_order(Family f) {
  switch (f) {
    case Family::QHermite: return 0;
    case Family::BigQHermite: return 1;
    case Family::AlSalamChihara: return 2;
    case Family::ContinuousDualHahn: return 3;
    case Family::AskeyWilson: return 4;
    case Family::GeneralN: break;
  }
  return 0;
}

double real_part(const Complex& z, const char* what) {
  if (std::abs(z.imag()) > 1e-12 * std::max(1.0, std::abs(z))) {
    std::ostringstream os;
    os << what << " has a non-negligible imaginary part " << z.imag();
    throw DomainError(os.str());
  }
  return z.real();
}

// Closed-form T_0..T_J of a named family, with J doubled from 64 until the
// dropped h-series terms fall below eps_trunc.
ExpansionTable named_table(const ParamVector& params, const QContext& ctx) {
  std::size_t J = 64;
  for (;;) {
    ExpansionTable table = closed_form_table(params, J, ctx);
    if (table.tail_estimate <= ctx.eps_trunc || J >= 1024) return table;
    J *= 2;
  }
}

}  // namespace

const char* to_string(Family f) {
  for (const auto& entry : kFamilyNames)
    if (entry.family == f) return entry.name;
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (const auto& entry : kFamilyNames)
    if (name == entry.name || name == entry.alias) return entry.family;
  throw UnsupportedFamily("unknown family '" + name + "'");
}

std::size_t family_arity(Family f) {
  if (f == Family::GeneralN) return std::numeric_limits<std::size_t>::max();
  return named_order(f);
}

Complex phi_h(double x, Complex t, const QContext& ctx, EvalMode mode) { return phi_h_impl(x, t, ctx, mode); }

double phi_h(double x, double t, const QContext& ctx, EvalMode mode) { return phi_h_impl(x, t, ctx, mode); }

double f_h_density(double x, const QContext& ctx) {
  ctx.require_inside("f_h");
  x = checked_x(x);
  const double s = std::sqrt(std::max(0.0, 1.0 - x * x));
  if (s == 0.0) return 0.0;
  double prod = 2.0 * q_pochhammer_inf(ctx.q, ctx).value * s / std::numbers::pi;
  if (ctx.q == 0.0) return prod;
  // |l(x|q^k) - 1| <= 3|q|^k
  const std::size_t K = geometric_cutoff(3.0, ctx);
  double qk = ctx.q;
  for (std::size_t k = 1; k <= std::max<std::size_t>(K, 1); ++k) {
    prod *= l_factor(x, qk);
    qk *= ctx.q;
  }
  return prod;
}

double g_density(double x, const ParamVector& params, const QContext& ctx) {
  const double fh = f_h_density(x, ctx);
  if (fh == 0.0 || params.empty()) return fh;
  Complex prod{1.0, 0.0};
  for (const Complex& a : params.entries()) prod *= phi_h(x, a, ctx);
  return fh * prod.real();
}

DensitySpec::DensitySpec(Family family, ParamVector params, QContext ctx)
    : family_(family), params_(std::move(params)), ctx_(ctx), cache_(std::make_shared<Cache>()) {
  if (family_ != Family::GeneralN && params_.size() != named_order(family_)) {
    std::ostringstream os;
    os << to_string(family_) << " takes " << named_order(family_) << " parameters, got " << params_.size();
    throw DomainError(os.str());
  }
  if (family_ != Family::GeneralN) mass_ = real_part(closed_form_A(params_, ctx_), "A_n");
}

double DensitySpec::total_mass() const {
  if (family_ == Family::GeneralN) return expansion().A_real();
  return mass_;
}

const ExpansionTable& DensitySpec::expansion() const {
  std::call_once(cache_->once, [this] {
    ExpansionTable table =
        family_ == Family::GeneralN ? build_expansion(params_, ctx_) : named_table(params_, ctx_);
    cache_->table = std::make_shared<const ExpansionTable>(std::move(table));
  });
  return *cache_->table;
}

double density_value_unnormalized(const DensitySpec& spec, double x) {
  return g_density(x, spec.params(), spec.ctx());
}

double density_value(const DensitySpec& spec, double x) {
  return density_value_unnormalized(spec, x) / spec.total_mass();
}

double q_hermite_moment(const DensitySpec& spec, std::size_t n) {
  if (spec.family() != Family::GeneralN)
    return real_part(closed_form_T(spec.params().size(), n, spec.params(), spec.ctx()), "moment");
  const ExpansionTable& table = spec.expansion();
  if (n > table.J()) {
    std::ostringstream os;
    os << "moment order " << n << " exceeds the expansion table order " << table.J();
    throw UnsupportedFamily(os.str());
  }
  return table.T_real(n);
}

std::vector<Complex> h_moment_sequence(const DensitySpec& spec, std::size_t nmax) {
  if (spec.family() != Family::GeneralN) return closed_form_T_sequence(spec.params(), nmax, spec.ctx());
  const ExpansionTable& table = spec.expansion();
  if (nmax > table.J()) {
    std::ostringstream os;
    os << "moment order " << nmax << " exceeds the expansion table order " << table.J();
    throw UnsupportedFamily(os.str());
  }
  return {table.T.begin(), table.T.begin() + static_cast<std::ptrdiff_t>(nmax + 1)};
}

HSeriesDensity::HSeriesDensity(const DensitySpec& spec, std::size_t max_order) : ctx_(spec.ctx()) {
  ctx_.require_inside("q-Hermite series density");
  std::vector<Complex> c;
  if (spec.family() == Family::GeneralN) {
    const ExpansionTable& table = spec.expansion();
    c.assign(table.T.begin(), table.T.begin() + static_cast<std::ptrdiff_t>(std::min(max_order, table.J()) + 1));
  } else {
    c = closed_form_T_sequence(spec.params(), max_order, ctx_);
  }
  SupBound bound(ctx_.q);
  StallCounter stall;
  double qpoch = 1.0, qk = ctx_.q;  // (q)_j, q^{j+1}
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double cj = real_part(c[j], "h-series coefficient");
    coeffs_.push_back(cj / qpoch);
    if (stall.settled(std::abs(cj) * bound.value() / std::abs(qpoch), ctx_.eps_trunc)) {
      converged_ = true;
      break;
    }
    bound.advance();
    qpoch *= 1.0 - qk;
    qk *= ctx_.q;
  }
}

double HSeriesDensity::operator()(double x) const {
  const double fh = f_h_density(x, ctx_);
  if (fh == 0.0) return 0.0;
  double h_prev = 0.0, h_cur = 1.0, qk = 1.0, sum = 0.0;
  for (double c : coeffs_) {
    sum += c * h_cur;
    const double h_next = 2.0 * x * h_cur - (1.0 - qk) * h_prev;
    h_prev = h_cur;
    h_cur = h_next;
    qk *= ctx_.q;
  }
  return fh * sum;
}

double poisson_mehler(double x, double y, double rho, const QContext& ctx, EvalMode mode) {
  ctx.require_inside("Poisson-Mehler kernel");
  x = checked_x(x);
  y = checked_x(y);
  if (!(std::abs(rho) < 1.0)) throw DomainError("Poisson-Mehler kernel requires |rho| < 1");
  if (rho == 0.0) return 1.0;
  if (mode == EvalMode::ClosedForm) {
    const double r2 = rho * rho;
    const double lead = 4.0 * std::abs(rho) * (1.0 + r2) + 10.0 * r2 + r2 * r2;
    const std::size_t K = std::max<std::size_t>(geometric_cutoff(lead, ctx), 1);
    const double xy = x * y, sq = x * x + y * y;
    double den = 1.0, rk = rho;  // rk = rho q^k
    for (std::size_t k = 0; k < K; ++k) {
      const double rk2 = rk * rk;
      den *= (1.0 - rk2) * (1.0 - rk2) - 4.0 * xy * rk * (1.0 + rk2) + 4.0 * rk2 * sq;
      rk *= ctx.q;
    }
    return q_pochhammer_inf(r2, ctx).value / den;
  }
  double hx_prev = 0.0, hx = 1.0, hy_prev = 0.0, hy = 1.0, qk = 1.0;
  SupBound bound(ctx.q);
  double sum = 0.0, weight = 1.0;  // rho^j/(q)_j
  StallCounter stall;
  for (std::size_t j = 0;; ++j) {
    if (j > ctx.max_terms) throw CapExceeded("Poisson-Mehler series exceeded max_terms");
    sum += weight * hx * hy;
    if (stall.settled(std::abs(weight) * bound.value() * bound.value(),
                      ctx.eps_trunc * std::max(1.0, std::abs(sum))))
      break;
    const double nx = 2.0 * x * hx - (1.0 - qk) * hx_prev;
    const double ny = 2.0 * y * hy - (1.0 - qk) * hy_prev;
    hx_prev = hx, hx = nx, hy_prev = hy, hy = ny;
    bound.advance();
    qk *= ctx.q;
    weight *= rho / (1.0 - qk);
  }
  return sum;
}

}  // namespace qaw
