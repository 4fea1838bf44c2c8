#include <doctest.h>

#include <random>

#include "feynman/symanzik.hpp"
#include "support/graph_family.hpp"
#include "support/oracles.hpp"

using namespace feynman;

namespace {

SparsePolynomial a(EdgeId i) { return SparsePolynomial::variable(i); }
Momentum mom(int x, int y, int z = 0, int w = 0) { return {Rational(x), Rational(y), Rational(z), Rational(w)}; }

// v0 is where edges 2 and 3 meet, so q1 (at v0) pairs with a2*a3.
FeynmanGraph triangle() { return FeynmanGraph::from_edge_list(3, {{1, 2}, {2, 0}, {0, 1}}); }
FeynmanGraph banana() { return FeynmanGraph::from_edge_list(2, {{0, 1}, {0, 1}}); }
FeynmanGraph four_edge() { return FeynmanGraph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}, {1, 2}}); }
FeynmanGraph k4() { return FeynmanGraph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}); }

}  // namespace

TEST_CASE("spanning trees and two-forests") {
  CHECK(spanning_trees(triangle()) == std::vector<EdgeSet>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(spanning_trees(FeynmanGraph::from_edge_list(2, {{0, 1}})) == std::vector<EdgeSet>{{1}});
  CHECK(spanning_trees(four_edge()).size() == 5);
  CHECK(spanning_trees(k4()).size() == 16);
  CHECK_THROWS_AS(spanning_trees(FeynmanGraph::from_edge_list(3, {{0, 1}})), GraphError);

  const auto tf = spanning_two_forests(triangle());
  REQUIRE(tf.size() == 3);
  for (const auto& f : tf) {
    CHECK(f.first_edges.size() + f.second_edges.size() == 1);
    CHECK(f.first_vertices.size() + f.second_vertices.size() == 3);
  }
  const auto single = spanning_two_forests(FeynmanGraph::from_edge_list(2, {{0, 1}}));
  REQUIRE(single.size() == 1);
  CHECK(single[0].first_edges.empty());
  CHECK(single[0].second_edges.empty());
  const auto bf = spanning_two_forests(banana());
  REQUIRE(bf.size() == 1);
  CHECK(bf[0].first_vertices == std::vector<std::size_t>{0});
  CHECK(bf[0].second_vertices == std::vector<std::size_t>{1});
}

TEST_CASE("psi") {
  CHECK(to_string(psi_enumerate(triangle())) == "a1 + a2 + a3");
  CHECK(to_string(psi_determinant(triangle())) == "a1 + a2 + a3");
  CHECK(to_string(psi_enumerate(four_edge())) == "a1*a3 + a1*a4 + a2*a3 + a2*a4 + a3*a4");
  CHECK(psi_determinant(banana()) == a(1) + a(2));
  CHECK(psi_enumerate(FeynmanGraph::from_edge_list(2, {{0, 1}})) == SparsePolynomial(1));
  const auto pk4 = psi_determinant(k4());
  CHECK(pk4.size() == 16);
  CHECK(is_homogeneous(pk4) == 3u);
  CHECK(pk4 == psi_enumerate(k4()));
  // a self-loop factors out
  CHECK(psi_determinant(FeynmanGraph::from_edge_list(2, {{0, 0}, {0, 1}, {0, 1}})) == a(1) * (a(2) + a(3)));
  CHECK_THROWS_AS(psi_determinant(FeynmanGraph::from_edge_list(3, {{0, 1}})), GraphError);
}

TEST_CASE("determinant agrees with enumeration on small multigraphs") {
  for (const auto& g : testing_support::connected_multigraphs(4, 6)) {
    const auto p = psi_enumerate(g);
    CHECK(psi_determinant(g) == p);
    CHECK(p.size() == testing_support::spanning_tree_count(g));
    for (const auto& [m, c] : p.terms()) CHECK(c == 1);
    CHECK(is_homogeneous(p) == static_cast<unsigned>(loop_number(g)));
  }
}

TEST_CASE("phi and xi of the triangle") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    const Momentum q1 = mom(d(rng), d(rng), d(rng), d(rng));
    const Momentum q2 = mom(d(rng), d(rng), d(rng), d(rng));
    const Momentum q3 = -(q1 + q2);
    const Rational m1(std::abs(d(rng) * d(rng)), 3);
    const Rational m2(std::abs(d(rng) * d(rng)), 7);
    const Rational m3(std::abs(d(rng)));
    const auto g = triangle().with_legs({{0, q1}, {1, q2}, {2, q3}}).with_masses({{1, m1}, {2, m2}, {3, m3}});
    const auto expected_phi = square(q1) * a(2) * a(3) + square(q2) * a(1) * a(3) + square(q3) * a(1) * a(2);
    CHECK(phi(g) == expected_phi);
    CHECK(xi(g) == expected_phi + (m1 * a(1) + m2 * a(2) + m3 * a(3)) * (a(1) + a(2) + a(3)));
  }
  const auto g = triangle().with_legs({{0, mom(1, 0)}, {1, mom(0, 1)}, {2, mom(-1, -1)}});
  CHECK(to_string(phi(g)) == "2*a1*a2 + a1*a3 + a2*a3");
  CHECK_THROWS_AS(phi(triangle().with_legs({{0, mom(1, 0)}})), GraphError);
  CHECK(phi(triangle().with_legs({{0, mom(0, 0)}, {1, mom(0, 0)}})).is_zero());
  CHECK(xi(triangle()).is_zero());
  const auto zero_momentum = triangle().with_masses({{2, Rational(5)}});
  CHECK(xi(zero_momentum) == 5 * a(2) * (a(1) + a(2) + a(3)));
}

TEST_CASE("phi of the banana") {
  const auto g = banana().with_legs({{0, mom(1, 2, 0, 0)}, {1, mom(-1, -2, 0, 0)}});
  CHECK(phi(g) == 5 * a(1) * a(2));
}

TEST_CASE("symanzik degrees with random kinematics") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const auto& base : testing_support::connected_multigraphs(4, 5)) {
    std::vector<ExternalLeg> legs;
    Momentum total = mom(0, 0);
    for (std::size_t v = 0; v + 1 < base.num_vertices(); ++v) {
      const Momentum q = mom(d(rng), d(rng), d(rng), d(rng));
      legs.push_back({v, q});
      total = total + q;
    }
    legs.push_back({base.num_vertices() - 1, -total});
    std::vector<std::pair<EdgeId, Rational>> masses;
    for (EdgeId e : base.edge_ids()) masses.emplace_back(e, Rational(std::abs(d(rng) * d(rng))));
    const auto g = base.with_legs(legs).with_masses(masses);
    const auto s = symanzik(g);
    const unsigned h = static_cast<unsigned>(loop_number(g));
    CHECK(is_homogeneous(s.psi) == h);
    if (!s.phi.is_zero()) CHECK(is_homogeneous(s.phi) == h + 1);
    if (!s.xi.is_zero()) CHECK(is_homogeneous(s.xi) == h + 1);
    for (const auto& [m, c] : s.xi.terms()) CHECK(c >= 0);
  }
}

TEST_CASE("partial factorization worked examples") {
  const auto g = four_edge();
  auto r = partial_factor_psi(g, {3, 4});
  CHECK(r.psi_gamma == a(3) + a(4));
  CHECK(r.psi_quotient == a(1) + a(2));
  CHECK(r.remainder == a(3) * a(4));
  r = partial_factor_psi(g, {1, 2, 3});
  CHECK(r.psi_gamma == a(1) + a(2) + a(3));
  CHECK(r.psi_quotient == a(4));
  CHECK(r.remainder == a(1) * a(3) + a(2) * a(3));
  CHECK_THROWS_AS(partial_factor_psi(g, {}), GraphError);
  CHECK_THROWS_AS(partial_factor_psi(g, {1, 2, 3, 4}), GraphError);
}

TEST_CASE("partial factorization for a single edge is deletion-contraction") {
  for (const auto& g : testing_support::connected_multigraphs(4, 5)) {
    if (g.num_edges() < 2) continue;
    for (EdgeId e : g.edge_ids()) {
      if (g.edge(e).is_self_loop()) continue;
      const auto r = partial_factor_psi(g, {e});
      CHECK(r.psi_gamma == SparsePolynomial(1));
      CHECK(r.psi_quotient == psi_enumerate(contract_subgraph(g, {e})));
      // R = a_e Psi_{G - e}, zero when e is a bridge
      const auto d = delete_edge(g, e);
      const auto expected = is_connected(d) ? a(e) * psi_enumerate(d) : SparsePolynomial();
      CHECK(r.remainder == expected);
    }
  }
}

TEST_CASE("psi of a one-vertex join is a product") {
  // two triangles sharing vertex 0
  const auto g = FeynmanGraph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  const auto r = partial_factor_psi(g, {1, 2, 3});
  CHECK(r.remainder.is_zero());
  CHECK(psi_determinant(g) == (a(1) + a(2) + a(3)) * (a(4) + a(5) + a(6)));
}

TEST_CASE("xi factorizations") {
  SUBCASE("UV form on the triangle with one massive edge") {
    const auto g = triangle()
                       .with_legs({{0, mom(1, 0)}, {1, mom(0, 1)}, {2, mom(-1, -1)}})
                       .with_masses({{1, Rational(3, 2)}});
    const auto r = xi_partial_factor_uv(g, {2, 3});
    CHECK(r.gamma_factor == SparsePolynomial(1));
    CHECK(r.quotient_factor == Rational(3, 2) * a(1) * a(1));
    CHECK(r.gamma_factor * r.quotient_factor + r.remainder == xi(g));
    CHECK(r.remainder == xi(g) - Rational(3, 2) * a(1) * a(1));
  }
  SUBCASE("IR form on the banana") {
    const auto legs = std::vector<ExternalLeg>{{0, mom(1, 2)}, {1, mom(-1, -2)}};
    const auto g = banana().with_legs(legs).with_masses({{1, Rational(2)}});
    CHECK(is_mass_momentum_spanning(g, {1}));
    const auto r = xi_partial_factor_ir(g, {1});
    CHECK(r.gamma_factor == 7 * a(1));
    CHECK(r.quotient_factor == a(2));
    CHECK(r.remainder == 2 * a(1) * a(1));
    const auto heavy = g.with_masses({{1, Rational(2)}, {2, Rational(1)}});
    CHECK_FALSE(is_mass_momentum_spanning(heavy, {1}));
    CHECK_THROWS_AS(xi_partial_factor_ir(heavy, {1}), GraphError);
  }
  SUBCASE("massless zero-momentum graphs") {
    const auto g = four_edge();
    const auto r = xi_partial_factor_uv(g, {3, 4});
    CHECK(r.quotient_factor.is_zero());
    CHECK(r.remainder.is_zero());
    const auto ir = xi_partial_factor_ir(g, {3, 4});
    CHECK(ir.gamma_factor.is_zero());
    CHECK(ir.remainder.is_zero());
  }
  SUBCASE("identities on random kinematics") {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> d(-2, 2);
    for (const auto& base : testing_support::connected_multigraphs(3, 4)) {
      const Momentum q = mom(d(rng), d(rng), 1, 0);
      const auto g = base.with_legs({{0, q}, {base.num_vertices() - 1, -q}});
      for (const auto& gamma : enumerate_subgraphs(g)) {
        const auto uv = xi_partial_factor_uv(g, gamma);
        CHECK(uv.gamma_factor * uv.quotient_factor + uv.remainder == xi(g));
        if (is_mass_momentum_spanning(g, gamma)) {
          const auto ir = xi_partial_factor_ir(g, gamma);
          CHECK(ir.gamma_factor * ir.quotient_factor + ir.remainder == xi(g));
        }
      }
    }
  }
}
