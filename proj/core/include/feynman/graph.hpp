#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "feynman/rational.hpp"

namespace feynman {

using EdgeId = int;
/// Sorted, duplicate-free list of edge ids.
using EdgeSet = std::vector<EdgeId>;
/// Euclidean four-momentum with exact components.
using Momentum = std::array<Rational, 4>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  EdgeId id = 0;
  /// Vertex indices (positions in FeynmanGraph::vertices()).
  std::array<std::size_t, 2> ends{};
  /// Squared mass m_e^2.
  Rational mass_sq = 0;

  bool is_self_loop() const { return ends[0] == ends[1]; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct ExternalLeg {
  std::size_t vertex = 0;
  Momentum momentum{};
  friend bool operator==(const ExternalLeg&, const ExternalLeg&) = default;
};

Rational square(const Momentum& q);
Momentum operator+(const Momentum& a, const Momentum& b);
Momentum operator-(const Momentum& q);

/// Multigraph with massive internal edges and external legs carrying
/// momenta. Immutable once built; minor operations return new graphs
/// and keep the ids of surviving edges.
class FeynmanGraph {
 public:
  FeynmanGraph() = default;
  FeynmanGraph(std::vector<std::string> vertices, std::vector<Edge> edges, std::vector<ExternalLeg> legs = {});

  /// Convenience constructor: vertices "v0".."v{n-1}", massless edges with
  /// ids 1..N in the given order, no legs.
  static FeynmanGraph from_edge_list(std::size_t num_vertices,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<ExternalLeg>& legs() const { return legs_; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  bool has_edge(EdgeId id) const;
  const Edge& edge(EdgeId id) const;
  /// Sorted ids of all internal edges.
  EdgeSet edge_ids() const;
  std::optional<std::size_t> vertex_index(const std::string& name) const;

  /// Internal-edge degree plus attached legs.
  std::size_t valency(std::size_t vertex) const;

  FeynmanGraph with_legs(std::vector<ExternalLeg> legs) const;
  FeynmanGraph with_masses(const std::vector<std::pair<EdgeId, Rational>>& masses) const;

  friend bool operator==(const FeynmanGraph&, const FeynmanGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;  // sorted by id
  std::vector<ExternalLeg> legs_;
};

/// Connected components of the internal-edge graph; vertices with no
/// internal edges form singleton components.
std::size_t connected_components(const FeynmanGraph& g);
bool is_connected(const FeynmanGraph& g);

/// h_G = N_G - V_G + components.
std::size_t loop_number(const FeynmanGraph& g);

/// Exact test that the leg momenta sum to zero.
bool check_momentum_conservation(const FeynmanGraph& g);

FeynmanGraph delete_edge(const FeynmanGraph& g, EdgeId e);
FeynmanGraph delete_edges(const FeynmanGraph& g, const EdgeSet& edges);

/// Result of contracting a subgraph: the quotient graph and, for every
/// vertex of the input, the vertex it was identified with.
struct Contraction {
  FeynmanGraph graph;
  std::vector<std::size_t> vertex_map;
};

/// G/gamma: identifies the endpoints of every edge in gamma and removes
/// gamma. Edges outside gamma that become self-loops are kept. Legs follow
/// their vertex. Merged vertices are named "a+b". Throws GraphError if
/// gamma contains a self-loop.
Contraction contract_with_map(const FeynmanGraph& g, const EdgeSet& gamma);
FeynmanGraph contract_subgraph(const FeynmanGraph& g, const EdgeSet& gamma);

/// The subgraph spanned by gamma: its vertices are the endpoints of the
/// edges in gamma; legs attached to those vertices are carried along.
FeynmanGraph edge_subgraph(const FeynmanGraph& g, const EdgeSet& gamma);

/// Edge sets of the connected components of the subgraph spanned by gamma,
/// ordered by their smallest edge id.
std::vector<EdgeSet> subgraph_components(const FeynmanGraph& g, const EdgeSet& gamma);

/// Nonempty proper subsets of the edges with at most max_edges elements,
/// ordered by size and then lexicographically.
std::vector<EdgeSet> enumerate_subgraphs(const FeynmanGraph& g, std::optional<std::size_t> max_edges = std::nullopt);

}  // namespace feynman
