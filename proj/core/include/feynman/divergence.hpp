#pragma once

#include <optional>

#include "feynman/graph.hpp"
#include "feynman/polynomial.hpp"

namespace feynman {

/// Integrand P / (Psi^psi_power * Xi^xi_power) of a generalized amplitude.
struct IntegrandSpec {
  SparsePolynomial numerator = SparsePolynomial(1);
  int psi_power = 2;
  int xi_power = 0;

  /// 1 / Psi^2, the period integrand.
  static IntegrandSpec period() { return {}; }
};

/// Homogeneity degree of the integrand times Omega_G:
/// deg P + N_G - A h_G - B (h_G + 1). Zero is required for a projective
/// integral. Throws std::invalid_argument for a non-homogeneous numerator.
int projective_degree(const FeynmanGraph& g, const IntegrandSpec& spec);

struct PrimitivityResult {
  bool primitive = true;
  /// First violating subgraph (by size, then lexicographic) when not primitive.
  std::optional<EdgeSet> witness;
};

/// Primitive iff N_gamma > 2 h_gamma for every nonempty proper edge subset.
PrimitivityResult is_primitive(const FeynmanGraph& g);

/// Every vertex has at most four half-edges, legs included.
bool is_phi4(const FeynmanGraph& g);

/// Informational upper bound on the weight of the period: 4 h_G.
inline std::size_t weight_bound(const FeynmanGraph& g) { return 4 * loop_number(g); }

}  // namespace feynman
