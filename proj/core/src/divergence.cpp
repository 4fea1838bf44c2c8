#include "feynman/divergence.hpp"

#include <stdexcept>

namespace feynman {

int projective_degree(const FeynmanGraph& g, const IntegrandSpec& spec) {
  const auto deg = is_homogeneous(spec.numerator);
  if (!deg) throw std::invalid_argument("numerator is not homogeneous");
  const int h = static_cast<int>(loop_number(g));
  const int n = static_cast<int>(g.num_edges());
  return static_cast<int>(*deg) + n - spec.psi_power * h - spec.xi_power * (h + 1);
}

PrimitivityResult is_primitive(const FeynmanGraph& g) {
  for (const EdgeSet& gamma : enumerate_subgraphs(g)) {
    const FeynmanGraph sub = edge_subgraph(g, gamma);
    if (sub.num_edges() <= 2 * loop_number(sub)) return {false, gamma};
  }
  return {};
}

bool is_phi4(const FeynmanGraph& g) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.valency(v) > 4) return false;
  }
  return true;
}

}  // namespace feynman
