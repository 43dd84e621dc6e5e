#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>

#include "oracles.hpp"
#include "qaw/qpoly.hpp"
#include "qaw/symfun.hpp"

using namespace qaw;

TEST_CASE("parameter vectors") {
  const ParamVector p{0.1, -0.2};
  CHECK(p.size() == 2);
  CHECK(p.is_real());
  CHECK(p.max_modulus() == doctest::Approx(0.2));
  CHECK_THROWS_AS(ParamVector({0.1, 1.0}), DomainError);
  ParamVector c;
  c.push_conjugate_pair(0.6, 0.9);
  CHECK(c.size() == 2);
  CHECK(c.pair_tags().size() == 1);
  CHECK(std::abs(c[0] - std::conj(c[1])) < 1e-16);
  CHECK_FALSE(c.is_real());
  CHECK_THROWS_AS(c.real_entries(), DomainError);
  const std::size_t perm[] = {1, 0};
  CHECK(p.permuted(perm)[0] == Complex{-0.2});
  CHECK(p.prefix(1).size() == 1);
}

TEST_CASE("S_n^(k) against the defining multi-sum") {
  const double q = 0.5;
  const auto ctx = QContext::make(q);
  CHECK(s_nk(0, ParamVector{0.3, 0.4}, ctx).real() == 1.0);
  const double a = 0.3, b = -0.7;
  CHECK(s_nk(2, ParamVector{a, b}, ctx).real() == doctest::Approx(a * a + (1 + q) * a * b + b * b));
  CHECK(s_nk(3, ParamVector{0.1, 0.2, 0.3}, QContext::make(1.0)).real() == doctest::Approx(0.216));
  std::mt19937_64 rng(5);
  for (double qq : {-0.6, 0.0, 0.3, 0.9})
    for (std::size_t k = 1; k <= 4; ++k) {
      const auto v = oracle::draw(rng, k, 0.9);
      const auto seq = s_nk_sequence(9, ParamVector::from_reals(v), QContext::make(qq));
      for (std::size_t n = 0; n <= 9; ++n) CHECK(seq[n].real() == doctest::Approx(oracle::brute_S<double, double>(n, v, qq)).epsilon(1e-12));
    }
  const std::vector<Rational> r = {Rational{1, 2}, Rational{-2, 3}, Rational{1, 5}};
  for (std::size_t n = 0; n <= 6; ++n) CHECK(exact::s_nk(n, r, Rational{1, 3}) == oracle::brute_S<Rational, Rational>(n, r, Rational{1, 3}));
}

TEST_CASE("conjugate pair reduces to rho^n h_n") {
  const auto ctx = QContext::make(0.5);
  CHECK(s_nk_conjugate_pair(0, 0.5, 0.3, ctx) == 1.0);
  CHECK(s_nk_conjugate_pair(1, 0.5, 0.3, ctx) == doctest::Approx(0.3));
  const double eta = std::acos(0.2);
  const std::vector<Complex> pair = {std::polar(0.7, eta), std::polar(0.7, -eta)};
  const Complex ref = oracle::brute_S<Complex, double>(4, pair, 0.5);
  CHECK(s_nk_conjugate_pair(4, 0.7, 0.2, ctx) == doctest::Approx(ref.real()).epsilon(1e-10));
  CHECK(std::abs(ref.imag()) < 1e-14);
}

TEST_CASE("sigma^(3)") {
  const auto ctx = QContext::make(0.4);
  const double a = 0.1, b = -0.5, c = 0.6;
  CHECK(sigma3(0, a, b, c, ctx).real() == 1.0);
  CHECK(sigma3(1, a, b, c, ctx).real() == doctest::Approx(a + b + c - a * b * c));
  CHECK(exact::sigma3(1, Rational{1, 2}, Rational{1, 3}, Rational{1, 4}, Rational{1, 2}) ==
        Rational{1, 2} + Rational{1, 3} + Rational{1, 4} - Rational{1, 24});
}

TEST_CASE("sigma^(4)") {
  const auto ctx = QContext::make(0.5);
  const double a = 0.1, b = 0.2, c = 0.3, d = 0.4;
  CHECK(sigma4(0, a, b, c, d, ctx).real() == 1.0);
  const double n1 = (b + d) + (1 - b * d) * ((1 - a * d) * c + (1 - c * b) * a) / (1 - a * b * c * d);
  CHECK(sigma4(1, a, b, c, d, ctx).real() == doctest::Approx(n1).epsilon(1e-15));
  std::array<double, 4> v = {a, b, c, d};
  const double ref = sigma4(2, a, b, c, d, ctx).real();
  std::sort(v.begin(), v.end());
  int perms = 0;
  do {
    CHECK(sigma4(2, v[0], v[1], v[2], v[3], ctx).real() == doctest::Approx(ref).epsilon(1e-10));
    ++perms;
  } while (std::next_permutation(v.begin(), v.end()));
  CHECK(perms == 24);
  // d = 0 collapses to sigma^(3)
  const auto s4 = sigma4_sequence(8, 0.3, -0.4, 0.5, 0.0, ctx);
  const auto s3 = sigma3_sequence(8, 0.3, -0.4, 0.5, ctx);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(std::abs(s4[n] - s3[n]) < 1e-13);
}

TEST_CASE("q = 0 closed form of sigma^(4)") {
  const auto c0 = QContext::make(0.0);
  CHECK(sigma4_free(0, 0.1, 0.2, 0.3, 0.4).real() == 1.0);
  CHECK(sigma4_free(1, 0.1, 0.2, 0.3, 0.4).real() == doctest::Approx(sigma4(1, 0.1, 0.2, 0.3, 0.4, c0).real()).epsilon(1e-12));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) {
    const auto v = oracle::draw(rng, 4, 0.5);
    for (std::size_t n = 0; n <= 8; ++n)
      CHECK(sigma4_free(n, v[0], v[1], v[2], v[3]).real() ==
            doctest::Approx(sigma4(n, v[0], v[1], v[2], v[3], c0).real()).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("elementary symmetric") {
  const ParamVector p{0.1, 0.2, 0.3};
  CHECK(elementary_symmetric(0, p).real() == 1.0);
  CHECK(elementary_symmetric(1, p).real() == doctest::Approx(0.6));
  CHECK(elementary_symmetric(2, p).real() == doctest::Approx(0.11));
  CHECK(elementary_symmetric(3, p).real() == doctest::Approx(0.006));
  CHECK(elementary_symmetric(4, p).real() == 0.0);
}

TEST_CASE("real() rejects complex values") {
  SymValue v{1, Complex{1.0, 0.5}};
  CHECK_THROWS_AS(v.real(), DomainError);
}
