#include "feynman/symanzik.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "union_find.hpp"

namespace feynman {
namespace {

void require_connected(const FeynmanGraph& g) {
  if (!is_connected(g)) throw GraphError("graph is not connected");
}

void require_conservation(const FeynmanGraph& g) {
  if (!check_momentum_conservation(g)) throw GraphError("external momenta do not sum to zero");
}

// Acyclic edge subsets with exactly `size` edges, in lexicographic order.
class ForestEnumerator {
 public:
  ForestEnumerator(const FeynmanGraph& g, std::size_t size) : g_(g), size_(size) {
    for (const auto& e : g.edges()) {
      if (!e.is_self_loop()) candidates_.push_back(&e);
    }
  }

  std::vector<EdgeSet> run() {
    EdgeSet current;
    detail::UnionFind uf(g_.num_vertices());
    recurse(0, current, uf);
    return std::move(out_);
  }

 private:
  void recurse(std::size_t next, EdgeSet& current, const detail::UnionFind& uf) {
    if (current.size() == size_) {
      out_.push_back(current);
      return;
    }
    if (candidates_.size() - next < size_ - current.size()) return;
    for (std::size_t i = next; i < candidates_.size(); ++i) {
      if (candidates_.size() - i < size_ - current.size()) return;
      detail::UnionFind extended = uf;
      const Edge& e = *candidates_[i];
      if (!extended.unite(e.ends[0], e.ends[1])) continue;
      current.push_back(e.id);
      recurse(i + 1, current, extended);
      current.pop_back();
    }
  }

  const FeynmanGraph& g_;
  std::size_t size_;
  std::vector<const Edge*> candidates_;
  std::vector<EdgeSet> out_;
};

Monomial complement_monomial(const FeynmanGraph& g, const EdgeSet& kept) {
  std::vector<Monomial::Factor> factors;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(kept.begin(), kept.end(), e.id)) factors.emplace_back(e.id, 1);
  }
  return Monomial(std::move(factors));
}

// Signed incidence of every edge in the fundamental cycles of a spanning
// tree chosen greedily in edge-id order.
std::vector<std::map<EdgeId, int>> fundamental_cycles(const FeynmanGraph& g) {
  detail::UnionFind uf(g.num_vertices());
  std::vector<const Edge*> chords;
  // adjacency of the tree: (neighbour, edge, +1 if traversed along orientation)
  struct Step {
    std::size_t to;
    EdgeId edge;
    int sign;
  };
  std::vector<std::vector<Step>> tree(g.num_vertices());
  for (const auto& e : g.edges()) {
    if (uf.unite(e.ends[0], e.ends[1])) {
      tree[e.ends[0]].push_back({e.ends[1], e.id, +1});
      tree[e.ends[1]].push_back({e.ends[0], e.id, -1});
    } else {
      chords.push_back(&e);
    }
  }

  std::vector<std::map<EdgeId, int>> cycles;
  for (const Edge* chord : chords) {
    // Chord runs u -> v; close the cycle with the tree path v -> u.
    const std::size_t u = chord->ends[0];
    const std::size_t v = chord->ends[1];
    std::map<EdgeId, int> cycle{{chord->id, 1}};
    if (u != v) {
      std::vector<std::ptrdiff_t> parent(g.num_vertices(), -1);
      std::vector<Step> via(g.num_vertices());
      std::vector<std::size_t> queue{v};
      parent[v] = static_cast<std::ptrdiff_t>(v);
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const std::size_t x = queue[qi];
        for (const Step& s : tree[x]) {
          if (parent[s.to] >= 0) continue;
          parent[s.to] = static_cast<std::ptrdiff_t>(x);
          via[s.to] = s;
          queue.push_back(s.to);
        }
      }
      // Walk back from u to v; via[x] was traversed from parent[x] to x,
      // and the cycle traverses it from x to parent[x].
      for (std::size_t x = u; x != v; x = static_cast<std::size_t>(parent[x])) {
        cycle[via[x].edge] = -via[x].sign;
      }
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

SparsePolynomial bareiss_determinant(std::vector<std::vector<SparsePolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return SparsePolynomial(1);
  SparsePolynomial previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return SparsePolynomial();
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        SparsePolynomial numerator = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(numerator, previous);
      }
    }
    previous = m[k][k];
  }
  SparsePolynomial det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

SparsePolynomial psi(const FeynmanGraph& g) { return psi_determinant(g); }

void require_proper_subset(const FeynmanGraph& g, EdgeSet& gamma) {
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  if (gamma.empty()) throw GraphError("subgraph must contain at least one edge");
  for (EdgeId id : gamma) {
    if (!g.has_edge(id)) throw GraphError("unknown edge id " + std::to_string(id));
  }
  if (gamma.size() == g.num_edges()) throw GraphError("subgraph must be a proper subset of the edges");
}

}  // namespace

std::vector<EdgeSet> spanning_trees(const FeynmanGraph& g) {
  require_connected(g);
  auto trees = ForestEnumerator(g, g.num_vertices() - 1).run();
  std::sort(trees.begin(), trees.end());
  return trees;
}

std::vector<TwoForest> spanning_two_forests(const FeynmanGraph& g) {
  require_connected(g);
  std::vector<TwoForest> out;
  if (g.num_vertices() < 2) return out;
  for (const EdgeSet& forest : ForestEnumerator(g, g.num_vertices() - 2).run()) {
    detail::UnionFind uf(g.num_vertices());
    for (EdgeId id : forest) uf.unite(g.edge(id).ends[0], g.edge(id).ends[1]);
    const std::size_t root = uf.find(0);
    TwoForest f;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      (uf.find(v) == root ? f.first_vertices : f.second_vertices).push_back(v);
    }
    for (EdgeId id : forest) {
      (uf.find(g.edge(id).ends[0]) == root ? f.first_edges : f.second_edges).push_back(id);
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const TwoForest& a, const TwoForest& b) {
    return std::tie(a.first_edges, a.second_edges) < std::tie(b.first_edges, b.second_edges);
  });
  return out;
}

SpanningForestSet spanning_forests(const FeynmanGraph& g) { return {spanning_trees(g), spanning_two_forests(g)}; }

SparsePolynomial psi_enumerate(const FeynmanGraph& g) {
  SparsePolynomial result;
  for (const EdgeSet& tree : spanning_trees(g)) result.add_term(complement_monomial(g, tree), 1);
  return result;
}

SparsePolynomial psi_determinant(const FeynmanGraph& g) {
  require_connected(g);
  const auto cycles = fundamental_cycles(g);
  const std::size_t h = cycles.size();
  std::vector<std::vector<SparsePolynomial>> matrix(h, std::vector<SparsePolynomial>(h));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      SparsePolynomial entry;
      for (const auto& [edge, sign] : cycles[i]) {
        auto it = cycles[j].find(edge);
        if (it != cycles[j].end()) entry.add_term(Monomial::variable(edge), Rational(sign * it->second));
      }
      matrix[i][j] = entry;
      matrix[j][i] = std::move(entry);
    }
  }
  return bareiss_determinant(std::move(matrix));
}

SparsePolynomial phi(const FeynmanGraph& g) {
  require_connected(g);
  require_conservation(g);
  SparsePolynomial result;
  if (g.legs().empty()) return result;
  for (const TwoForest& f : spanning_two_forests(g)) {
    Momentum inflow{};
    for (const auto& leg : g.legs()) {
      if (std::binary_search(f.first_vertices.begin(), f.first_vertices.end(), leg.vertex)) {
        inflow = inflow + leg.momentum;
      }
    }
    const Rational q2 = square(inflow);
    if (q2 == 0) continue;
    EdgeSet kept = f.first_edges;
    kept.insert(kept.end(), f.second_edges.begin(), f.second_edges.end());
    std::sort(kept.begin(), kept.end());
    result.add_term(complement_monomial(g, kept), q2);
  }
  return result;
}

namespace {

SparsePolynomial mass_form(const FeynmanGraph& g) {
  SparsePolynomial m;
  for (const auto& e : g.edges()) m.add_term(Monomial::variable(e.id), e.mass_sq);
  return m;
}

}  // namespace

SparsePolynomial xi(const FeynmanGraph& g) {
  SparsePolynomial result = phi(g);
  const SparsePolynomial masses = mass_form(g);
  if (!masses.is_zero()) result += masses * psi(g);
  return result;
}

SymanzikSet symanzik(const FeynmanGraph& g) {
  SymanzikSet s;
  s.psi = psi(g);
  s.phi = phi(g);
  s.xi = s.phi;
  const SparsePolynomial masses = mass_form(g);
  if (!masses.is_zero()) s.xi += masses * s.psi;
  return s;
}

namespace {

// G/gamma where a self-loop of gamma is deleted rather than contracted;
// both give the same Psi and Xi.
FeynmanGraph quotient_graph(const FeynmanGraph& g, const EdgeSet& gamma) {
  EdgeSet loops;
  EdgeSet rest;
  for (EdgeId id : gamma) {
    const Edge& e = g.edge(id);
    (e.ends[0] == e.ends[1] ? loops : rest).push_back(id);
  }
  FeynmanGraph h = loops.empty() ? g : delete_edges(g, loops);
  return rest.empty() ? h : contract_subgraph(h, rest);
}

}  // namespace

SparsePolynomial psi_of_subgraph(const FeynmanGraph& g, const EdgeSet& gamma) {
  SparsePolynomial result(1);
  for (const EdgeSet& component : subgraph_components(g, gamma)) result *= psi(edge_subgraph(g, component));
  return result;
}

FactorizationResult partial_factor_psi(const FeynmanGraph& g, const EdgeSet& gamma_in) {
  EdgeSet gamma = gamma_in;
  require_proper_subset(g, gamma);
  FactorizationResult r;
  r.psi_gamma = psi_of_subgraph(g, gamma);
  r.psi_quotient = psi(quotient_graph(g, gamma));
  r.remainder = psi(g) - r.psi_gamma * r.psi_quotient;
  return r;
}

XiFactorization xi_partial_factor_uv(const FeynmanGraph& g, const EdgeSet& gamma_in) {
  EdgeSet gamma = gamma_in;
  require_proper_subset(g, gamma);
  XiFactorization r;
  r.gamma_factor = psi_of_subgraph(g, gamma);
  r.quotient_factor = xi(quotient_graph(g, gamma));
  r.remainder = xi(g) - r.gamma_factor * r.quotient_factor;
  return r;
}

bool is_mass_momentum_spanning(const FeynmanGraph& g, const EdgeSet& gamma_in) {
  EdgeSet gamma = gamma_in;
  require_proper_subset(g, gamma);
  return xi(quotient_graph(g, gamma)).is_zero();
}

XiFactorization xi_partial_factor_ir(const FeynmanGraph& g, const EdgeSet& gamma_in) {
  EdgeSet gamma = gamma_in;
  require_proper_subset(g, gamma);
  const FeynmanGraph quotient = quotient_graph(g, gamma);
  if (!xi(quotient).is_zero()) {
    throw GraphError("subgraph is not mass-momentum spanning: Xi of the quotient graph is nonzero");
  }
  const auto components = subgraph_components(g, gamma);
  std::vector<FeynmanGraph> parts;
  std::vector<SparsePolynomial> psis;
  for (const EdgeSet& c : components) {
    parts.push_back(edge_subgraph(g, c));
    psis.push_back(psi(parts.back()));
  }
  SparsePolynomial xi_gamma;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!check_momentum_conservation(parts[i])) {
      throw GraphError("component " + std::to_string(i) + " of the subgraph does not conserve momentum");
    }
    SparsePolynomial term = xi(parts[i]);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j != i) term *= psis[j];
    }
    xi_gamma += term;
  }
  XiFactorization r;
  r.gamma_factor = std::move(xi_gamma);
  r.quotient_factor = psi(quotient);
  r.remainder = xi(g) - r.gamma_factor * r.quotient_factor;
  return r;
}

}  // namespace feynman
