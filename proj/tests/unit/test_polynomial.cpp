#include <doctest.h>

#include <random>

#include "feynman/polynomial.hpp"

using namespace feynman;

namespace {

SparsePolynomial a(EdgeId i) { return SparsePolynomial::variable(i); }

SparsePolynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> var(1, 4);
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> count(0, 4);
  SparsePolynomial p;
  const int n = count(rng);
  for (int t = 0; t < n; ++t) {
    std::vector<Monomial::Factor> f;
    for (EdgeId v = 1; v <= 4; ++v) {
      if (var(rng) <= 2) {
        const int e = exp(rng);
        if (e > 0) f.emplace_back(v, static_cast<unsigned>(e));
      }
    }
    p.add_term(Monomial(f), Rational(coef(rng), 1 + count(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK(to_string((a(1) + a(2)) * (a(1) + a(2))) == "a1^2 + 2*a1*a2 + a2^2");
  const SparsePolynomial p = a(1) * a(3) - Rational(1, 3) * a(2);
  CHECK(p + SparsePolynomial() == p);
  CHECK((p - p).is_zero());
  CHECK(to_string((a(3) + a(4)) * (a(1) + a(2)) + a(3) * a(4)) == "a1*a3 + a1*a4 + a2*a3 + a2*a4 + a3*a4");
  CHECK(to_string(SparsePolynomial()) == "0");
  CHECK(to_string(SparsePolynomial(Rational(-3, 4))) == "-3/4");
  CHECK(to_string(a(2) + 2 * a(1) * a(1) + a(1) * a(3)) == "2*a1^2 + a1*a3 + a2");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    const auto r = random_poly(rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
  }
}

TEST_CASE("exact division") {
  const auto d = a(1) + a(2);
  const auto p = d * (a(3) * a(3) - 2 * a(1));
  CHECK(divide_exact(p, d) == a(3) * a(3) - 2 * a(1));
  CHECK_THROWS_AS(divide_exact(p + a(4), d), std::domain_error);
  CHECK_THROWS_AS(divide_exact(p, SparsePolynomial()), std::domain_error);
}

TEST_CASE("evaluate") {
  const auto psi = (a(3) + a(4)) * (a(1) + a(2)) + a(3) * a(4);
  CHECK(evaluate(a(1) + a(2) + a(3), {{1, 1.0}, {2, 1.0}, {3, 1.0}}) == 3.0);
  CHECK(evaluate(psi, {{1, 1.0}, {2, 1.0}, {3, 1.0}, {4, 1.0}}) == 5.0);
  CHECK(evaluate(psi + 7, {{1, 0.0}, {2, 0.0}, {3, 0.0}, {4, 0.0}}) == 7.0);
  CHECK_THROWS_AS(evaluate(psi, {{1, 1.0}}), std::out_of_range);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    auto p = random_poly(rng);
    auto q = random_poly(rng);
    // keep the comparison well conditioned: positive coefficients only
    SparsePolynomial pp;
    SparsePolynomial qq;
    for (const auto& [m, c] : p.terms()) pp.add_term(m, c < 0 ? Rational(-c) : c);
    for (const auto& [m, c] : q.terms()) qq.add_term(m, c < 0 ? Rational(-c) : c);
    const std::map<EdgeId, double> x{{1, u(rng)}, {2, u(rng)}, {3, u(rng)}, {4, u(rng)}};
    const double lhs = evaluate(pp * qq, x);
    const double rhs = evaluate(pp, x) * evaluate(qq, x);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("compiled polynomial matches evaluate") {
  const auto p = (a(3) + a(4)) * (a(1) + a(2)) + Rational(1, 2) * a(3) * a(4) * a(4);
  const CompiledPolynomial c(p, {1, 2, 3, 4});
  const std::vector<double> x{0.5, 2.0, 3.0, 0.25};
  CHECK(c(x) == evaluate(p, {{1, 0.5}, {2, 2.0}, {3, 3.0}, {4, 0.25}}));
  CHECK(c.max_term(x) == doctest::Approx(6.0));
  CHECK_THROWS(CompiledPolynomial(p, {1, 2, 3}));
}

TEST_CASE("homogeneity and degrees") {
  CHECK(is_homogeneous(a(1) + a(2) + a(3)) == 1u);
  CHECK_FALSE(is_homogeneous(a(1) * a(2) + a(3)).has_value());
  CHECK(is_homogeneous(SparsePolynomial()) == 0u);
  CHECK(degree_in_vars(a(3) * a(4), {3, 4}) == std::pair<unsigned, unsigned>{2, 2});
  CHECK(degree_in_vars(a(1) * a(3) + a(2) * a(3), {1, 2, 3}) == std::pair<unsigned, unsigned>{2, 2});
  const auto psi = (a(3) + a(4)) * (a(1) + a(2)) + a(3) * a(4);
  CHECK(degree_in_vars(psi, {3, 4}) == std::pair<unsigned, unsigned>{1, 2});
  CHECK_THROWS_AS(degree_in_vars(SparsePolynomial(), {1}), std::domain_error);
}

TEST_CASE("parse round trip") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(rng);
    CHECK(parse_polynomial(to_string(p)) == p);
  }
  CHECK(parse_polynomial(" a2 +  a1*a1 - 1/2 ") == a(1) * a(1) + a(2) - Rational(1, 2));
  CHECK(parse_polynomial("3*a1^2*a2") == 3 * a(1) * a(1) * a(2));
  CHECK_THROWS_AS(parse_polynomial("a1 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("b1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_polynomial("a0"), std::invalid_argument);
}
