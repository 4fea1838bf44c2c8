#include <doctest.h>

#include <boost/math/constants/constants.hpp>

#include "feynman/mzv.hpp"
#include "feynman/period.hpp"
#include "support/oracles.hpp"

using namespace feynman;
namespace ts = testing_support;

namespace {

SparsePolynomial a(EdgeId i) { return SparsePolynomial::variable(i); }
FeynmanGraph banana() { return FeynmanGraph::from_edge_list(2, {{0, 1}, {0, 1}}); }
FeynmanGraph k4() { return FeynmanGraph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}); }

// a1^2 / Psi^4 on the banana: int_0^1 t^2 dt = 1/3.
IntegrandSpec banana_moment() { return {a(1) * a(1), 4, 0}; }

IntegrationOptions opts(std::uint64_t samples, std::uint64_t seed, Sampler s = Sampler::kUniform,
                        Chart c = Chart::kSimplex, unsigned workers = 1) {
  IntegrationOptions o;
  o.samples = samples;
  o.seed = seed;
  o.sampler = s;
  o.chart = c;
  o.workers = workers;
  return o;
}

bool within(const PeriodEstimate& e, double exact, double k = 3.0) {
  return std::abs(e.value - exact) <= k * e.std_error + 1e-12 * std::abs(exact);
}

}  // namespace

TEST_CASE("banana period") {
  const auto e = integrate(banana(), IntegrandSpec::period(), opts(10000, 4));
  CHECK(e.samples == 10000);
  CHECK(e.seed == 4);
  CHECK(within(e, 1.0));
  CHECK(e.std_error < 1e-12);
  for (auto s : {Sampler::kUniform, Sampler::kTropical}) {
    for (auto c : {Chart::kSimplex, Chart::kAffine}) {
      CHECK(within(integrate(banana(), banana_moment(), opts(200000, 1, s, c)), 1.0 / 3.0));
    }
  }
}

TEST_CASE("massive bubble") {
  // P = 1, A = 0, B = 1: int_0^1 dt / (q^2 t(1-t) + m1^2 t + m2^2 (1-t))
  const Momentum q{Rational(1), Rational(0), Rational(0), Rational(0)};
  const auto g = banana().with_legs({{0, q}, {1, -q}}).with_masses({{1, Rational(1)}, {2, Rational(2)}});
  const IntegrandSpec spec{SparsePolynomial(1), 0, 1};
  double exact = 0.0;  // Simpson, 2000 panels
  const int n = 2000;
  auto f = [](double t) { return 1.0 / (t * (1 - t) + t + 2 * (1 - t)); };
  for (int i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2);
    exact += w * f(static_cast<double>(i) / n);
  }
  exact /= 3.0 * n;
  CHECK(within(integrate(g, spec, opts(200000, 3)), exact));
  CHECK(within(integrate(g, spec, opts(200000, 3, Sampler::kTropical)), exact));
  CHECK_THROWS_AS(integrate(banana(), spec, opts(10, 1)), GraphError);
}

TEST_CASE("estimator consistency") {
  double ratio_sum = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto e1 = integrate(banana(), banana_moment(), opts(20000, seed));
    const auto e2 = integrate(banana(), banana_moment(), opts(40000, seed + 1000));
    ratio_sum += e2.std_error / e1.std_error;
  }
  const double ratio = ratio_sum / 20.0;
  CHECK(ratio > 1.0 / std::sqrt(2.0) - 0.1);
  CHECK(ratio < 1.0 / std::sqrt(2.0) + 0.1);
}

TEST_CASE("chart invariance") {
  auto agree = [](const PeriodEstimate& x, const PeriodEstimate& y) {
    return std::abs(x.value - y.value) <= 3.0 * std::hypot(x.std_error, y.std_error);
  };
  CHECK(agree(integrate(banana(), banana_moment(), opts(100000, 5)),
              integrate(banana(), banana_moment(), opts(100000, 6, Sampler::kUniform, Chart::kAffine))));
  CHECK(agree(integrate(k4(), IntegrandSpec::period(), opts(400000, 5)),
              integrate(k4(), IntegrandSpec::period(), opts(400000, 6, Sampler::kUniform, Chart::kAffine))));
}

TEST_CASE("tropical sampler on K4") {
  const auto e = integrate(k4(), IntegrandSpec::period(), opts(200000, 2, Sampler::kTropical));
  CHECK(within(e, ts::kSixZeta3));
  CHECK(e.std_error < 0.02);
}

TEST_CASE("edge relabeling leaves the distribution unchanged") {
  const auto relabeled = FeynmanGraph::from_edge_list(4, {{2, 3}, {0, 3}, {1, 2}, {0, 1}, {3, 1}, {0, 2}});
  double sum_a = 0.0;
  double sum_b = 0.0;
  double var = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto x = integrate(k4(), IntegrandSpec::period(), opts(5000, seed, Sampler::kTropical));
    const auto y = integrate(relabeled, IntegrandSpec::period(), opts(5000, seed, Sampler::kTropical));
    sum_a += x.value;
    sum_b += y.value;
    var += x.std_error * x.std_error + y.std_error * y.std_error;
  }
  CHECK(std::abs(sum_a - sum_b) / 20.0 <= 3.0 * std::sqrt(var) / 20.0);
}

TEST_CASE("determinism") {
  const auto o = opts(30000, 77, Sampler::kTropical, Chart::kSimplex, 3);
  const auto x = integrate(k4(), IntegrandSpec::period(), o);
  const auto y = integrate(k4(), IntegrandSpec::period(), o);
  CHECK(x.value == y.value);
  CHECK(x.std_error == y.std_error);
  CHECK(x.samples == 30000);
  const auto z = integrate(k4(), IntegrandSpec::period(), opts(30000, 78, Sampler::kTropical, Chart::kSimplex, 3));
  CHECK(z.value != x.value);
}

TEST_CASE("integration errors") {
  CHECK_THROWS_AS(integrate(k4(), {a(1), 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(integrate(FeynmanGraph::from_edge_list(4, {{0, 1}, {0, 1}, {2, 3}, {2, 3}}), IntegrandSpec::period()),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate(banana(), IntegrandSpec::period(), opts(0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(integrate(banana(), IntegrandSpec::period(), opts(10, 1, Sampler::kUniform, Chart::kSimplex, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate(banana(), {a(1) * a(7), 4, 0}), std::invalid_argument);
  // two bananas in a chain: degree 0 but the sub-bubbles diverge
  const auto chain = FeynmanGraph::from_edge_list(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}});
  CHECK_THROWS_AS(integrate(chain, IntegrandSpec::period(), opts(10, 1, Sampler::kTropical)), std::domain_error);
}

TEST_CASE("g-2 two-loop constant") {
  CHECK(std::abs(g_minus_2_two_loop() - ts::kGMinus2) < 1e-12);
  const double pi = boost::math::constants::pi<double>();
  const double z2 = pi * pi / 6;
  const double closed = 197.0 / 144 + z2 / 2 - 3 * z2 * std::log(2.0) + 0.75 * zeta(3).value;
  CHECK(std::abs(closed - g_minus_2_two_loop()) < 1e-14);
}
