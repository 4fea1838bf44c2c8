#pragma once

#include <vector>

#include "feynman/graph.hpp"
#include "feynman/polynomial.hpp"

namespace feynman {

/// Spanning 2-forest. first holds the vertex of smallest index, so each
/// unordered pair of trees appears once.
struct TwoForest {
  EdgeSet first_edges;
  std::vector<std::size_t> first_vertices;
  EdgeSet second_edges;
  std::vector<std::size_t> second_vertices;

  friend bool operator==(const TwoForest&, const TwoForest&) = default;
};

struct SpanningForestSet {
  std::vector<EdgeSet> trees;
  std::vector<TwoForest> two_forests;
};

struct SymanzikSet {
  SparsePolynomial psi;
  SparsePolynomial phi;
  SparsePolynomial xi;
};

struct FactorizationResult {
  SparsePolynomial psi_gamma;
  SparsePolynomial psi_quotient;
  SparsePolynomial remainder;
};

/// (left factor, right factor, remainder) of an Xi partial factorization.
struct XiFactorization {
  SparsePolynomial gamma_factor;
  SparsePolynomial quotient_factor;
  SparsePolynomial remainder;
};

/// All spanning trees, as sorted edge sets in lexicographic order.
/// Throws GraphError if the graph is disconnected.
std::vector<EdgeSet> spanning_trees(const FeynmanGraph& g);

/// All spanning 2-forests, sorted lexicographically by (first, second) edges.
std::vector<TwoForest> spanning_two_forests(const FeynmanGraph& g);

SpanningForestSet spanning_forests(const FeynmanGraph& g);

/// First Symanzik polynomial as a sum over spanning trees of the product
/// of the variables of the edges not in the tree.
SparsePolynomial psi_enumerate(const FeynmanGraph& g);

/// First Symanzik polynomial as det(sum_e a_e c_e c_e^T) over a
/// fundamental cycle basis {c}, by fraction-free (Bareiss) elimination.
SparsePolynomial psi_determinant(const FeynmanGraph& g);

/// Second Symanzik polynomial. Throws GraphError if momentum is not conserved.
SparsePolynomial phi(const FeynmanGraph& g);

/// Phi + (sum_e m_e^2 a_e) Psi.
SparsePolynomial xi(const FeynmanGraph& g);

SymanzikSet symanzik(const FeynmanGraph& g);

/// Psi of the subgraph spanned by gamma: product over its connected
/// components (1 for gamma empty).
SparsePolynomial psi_of_subgraph(const FeynmanGraph& g, const EdgeSet& gamma);

/// Psi_G = Psi_gamma * Psi_{G/gamma} + R for a nonempty proper gamma.
/// Self-loops in gamma are deleted when forming G/gamma (same Psi and Xi).
FactorizationResult partial_factor_psi(const FeynmanGraph& g, const EdgeSet& gamma);

/// Xi_G = Psi_gamma * Xi_{G/gamma} + R. Valid for every nonempty proper gamma.
XiFactorization xi_partial_factor_uv(const FeynmanGraph& g, const EdgeSet& gamma);

/// True iff Xi_{G/gamma} vanishes identically.
bool is_mass_momentum_spanning(const FeynmanGraph& g, const EdgeSet& gamma);

/// Xi_G = Xi_gamma * Psi_{G/gamma} + R for mass-momentum spanning gamma.
/// For a disconnected gamma, Xi_gamma = sum_i Xi_{gamma_i} prod_{j != i} Psi_{gamma_j}
/// with each component carrying the legs at its vertices. Throws GraphError
/// when gamma is not mass-momentum spanning.
XiFactorization xi_partial_factor_ir(const FeynmanGraph& g, const EdgeSet& gamma);

}  // namespace feynman
