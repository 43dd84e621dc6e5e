#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qaw/qcore.hpp"

using namespace qaw;

TEST_CASE("q-numbers and factorials") {
  const auto c1 = QContext::make(1.0);
  const auto c0 = QContext::make(0.0);
  const auto ch = QContext::make(0.5);
  CHECK(q_number(0, ch) == 0.0);
  CHECK(q_number(3, c1) == 3.0);
  CHECK(q_number(3, ch) == doctest::Approx(1.75).epsilon(1e-15));
  CHECK(q_factorial(0, ch) == 1.0);
  CHECK(q_factorial(4, c1) == 24.0);
  CHECK(q_factorial(5, c0) == 1.0);
  CHECK(exact::q_number(3, Rational{1, 2}) == Rational{7, 4});
  CHECK(exact::q_factorial(4, Rational{1}) == 24);
}

TEST_CASE("q-binomials") {
  CHECK(q_binomial(2, 1, QContext::make(0.3)) == doctest::Approx(1.3).epsilon(1e-15));
  CHECK(q_binomial(5, 2, QContext::make(0.0)) == 1.0);
  CHECK(q_binomial(3, 5, QContext::make(0.3)) == 0.0);
  CHECK(q_binomial(3, -1, QContext::make(0.3)) == 0.0);
  CHECK(q_binomial(6, 3, QContext::make(1.0)) == 20.0);
  for (const Rational& q : {Rational{-1, 2}, Rational{2, 3}})
    for (long n = 0; n <= 10; ++n)
      for (long k = 0; k <= n; ++k) CHECK(exact::q_binomial(n, k, q) == oracle::qbinom<Rational>(n, k, q));
  const auto ctx = QContext::make(-0.7);
  for (long n = 0; n <= 15; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(q_binomial(n, k, ctx) == doctest::Approx(oracle::qbinom<double>(n, k, -0.7)).epsilon(1e-12));
}

TEST_CASE("finite q-Pochhammer") {
  CHECK(q_pochhammer(0.7, 0, QContext::make(0.5)) == 1.0);
  CHECK(q_pochhammer(0.5, 3, QContext::make(1.0)) == 0.125);
  CHECK(q_pochhammer(0.5, 2, QContext::make(0.5)) == doctest::Approx(0.375).epsilon(1e-15));
  const Complex z{0.3, 0.4};
  const Complex v = q_pochhammer(z, 4, QContext::make(0.6));
  const Complex ref = oracle::poch<Complex, double>(z, 4, 0.6);
  CHECK(std::abs(v - ref) < 1e-15);
  CHECK(exact::q_pochhammer(Rational{1, 2}, 2, Rational{1, 2}) == Rational{3, 8});
}

TEST_CASE("infinite q-Pochhammer") {
  const auto h = QContext::make(0.5);
  const auto zero = q_pochhammer_inf(0.0, h);
  CHECK(zero.value == 1.0);
  CHECK(zero.tail_bound == 0.0);
  CHECK(q_pochhammer_inf(0.5, QContext::make(0.0)).value == 0.5);
  const auto v = q_pochhammer_inf(0.5, h);
  CHECK(std::abs(v.value - oracle::poch_inf(0.5, 0.5)) < 1e-14);
  CHECK(v.tail_bound <= h.eps_trunc);
  for (double q : {-0.9, -0.3, 0.2, 0.8, 0.95}) {
    const auto ctx = QContext::make(q);
    for (double a : {-0.9, -0.4, 0.3, 0.99}) CHECK(oracle::rel(q_pochhammer_inf(a, ctx).value, oracle::poch_inf(a, q)) < 1e-12);
    const Complex z = std::polar(0.8, 1.1);
    CHECK(std::abs(q_pochhammer_inf(z, ctx).value - oracle::poch_inf(z, q)) < 1e-12);
  }
  CHECK_THROWS_AS(q_pochhammer_inf(0.5, QContext::make(1.0)), RegimeError);
}

TEST_CASE("multi-argument Pochhammer") {
  const auto h = QContext::make(0.5);
  CHECK(q_multi_pochhammer(std::span<const double>{}, 3, h) == 1.0);
  const std::vector<double> ab = {0.2, -0.6};
  CHECK(q_multi_pochhammer(ab, kInfiniteOrder, QContext::make(0.0)) == doctest::Approx(0.8 * 1.6));
  const std::vector<double> three = {0.2, 0.3, 0.4};
  double ref = 1.0;
  for (double a : three) ref *= oracle::poch<double, double>(a, 2, 0.5);
  CHECK(q_multi_pochhammer(three, 2, h) == doctest::Approx(ref).epsilon(1e-15));
  const std::vector<Rational> r = {Rational{1, 2}, Rational{1, 3}};
  CHECK(exact::q_multi_pochhammer(r, 1, Rational{1, 2}) == Rational{1, 3});
}

TEST_CASE("context validation and cutoffs") {
  CHECK(QContext::make(0.0).regime == Regime::FreeZero);
  CHECK(QContext::make(1.0).regime == Regime::ClassicalOne);
  CHECK(QContext::make(-0.5).regime == Regime::Generic);
  CHECK_THROWS_AS(QContext::make(-1.0), DomainError);
  CHECK_THROWS_AS(QContext::make(1.5), DomainError);
  CHECK_THROWS_AS(QContext::make(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(QContext::make(0.5, 1e-14, 0), DomainError);
  const auto ctx = QContext::make(0.5);
  const std::size_t K = geometric_cutoff(1.0, ctx);
  CHECK(geometric_tail(1.0, K, ctx) <= ctx.eps_trunc);
  CHECK(geometric_tail(1.0, K - 1, ctx) > ctx.eps_trunc);
  CHECK_THROWS_AS(geometric_cutoff(1.0, QContext::make(0.999999, 1e-14, 10)), CapExceeded);
}
