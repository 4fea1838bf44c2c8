#include "feynman/graph.hpp"

#include <algorithm>
#include <map>

#include "union_find.hpp"

namespace feynman {

Rational square(const Momentum& q) {
  Rational s = 0;
  for (const auto& c : q) s += c * c;
  return s;
}

Momentum operator+(const Momentum& a, const Momentum& b) {
  Momentum r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + b[i];
  return r;
}

Momentum operator-(const Momentum& q) {
  Momentum r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = -q[i];
  return r;
}

FeynmanGraph::FeynmanGraph(std::vector<std::string> vertices, std::vector<Edge> edges, std::vector<ExternalLeg> legs)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), legs_(std::move(legs)) {
  std::vector<std::string> names = vertices_;
  std::sort(names.begin(), names.end());
  if (auto dup = std::adjacent_find(names.begin(), names.end()); dup != names.end()) {
    throw GraphError("duplicate vertex name '" + *dup + "'");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.id <= 0) throw GraphError("edge id must be positive, got " + std::to_string(e.id));
    if (i > 0 && edges_[i - 1].id == e.id) throw GraphError("duplicate edge id " + std::to_string(e.id));
    if (e.ends[0] >= vertices_.size() || e.ends[1] >= vertices_.size()) {
      throw GraphError("edge " + std::to_string(e.id) + " references an undeclared vertex");
    }
    if (e.mass_sq < 0) throw GraphError("edge " + std::to_string(e.id) + " has negative squared mass");
  }
  for (const auto& leg : legs_) {
    if (leg.vertex >= vertices_.size()) throw GraphError("external leg attached to an undeclared vertex");
  }
}

FeynmanGraph FeynmanGraph::from_edge_list(std::size_t num_vertices,
                                          const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::string> names;
  names.reserve(num_vertices);
  for (std::size_t i = 0; i < num_vertices; ++i) names.push_back("v" + std::to_string(i));
  std::vector<Edge> es;
  es.reserve(edges.size());
  EdgeId id = 1;
  for (const auto& [a, b] : edges) es.push_back(Edge{id++, {a, b}, 0});
  return FeynmanGraph(std::move(names), std::move(es));
}

bool FeynmanGraph::has_edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Edge& e, EdgeId v) { return e.id < v; });
  return it != edges_.end() && it->id == id;
}

const Edge& FeynmanGraph::edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Edge& e, EdgeId v) { return e.id < v; });
  if (it == edges_.end() || it->id != id) throw GraphError("unknown edge id " + std::to_string(id));
  return *it;
}

EdgeSet FeynmanGraph::edge_ids() const {
  EdgeSet ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  return ids;
}

std::optional<std::size_t> FeynmanGraph::vertex_index(const std::string& name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t FeynmanGraph::valency(std::size_t vertex) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    d += (e.ends[0] == vertex) + (e.ends[1] == vertex);
  }
  for (const auto& leg : legs_) d += leg.vertex == vertex;
  return d;
}

FeynmanGraph FeynmanGraph::with_legs(std::vector<ExternalLeg> legs) const {
  return FeynmanGraph(vertices_, edges_, std::move(legs));
}

FeynmanGraph FeynmanGraph::with_masses(const std::vector<std::pair<EdgeId, Rational>>& masses) const {
  std::vector<Edge> es = edges_;
  for (const auto& [id, m2] : masses) {
    auto it = std::find_if(es.begin(), es.end(), [id = id](const Edge& e) { return e.id == id; });
    if (it == es.end()) throw GraphError("unknown edge id " + std::to_string(id));
    it->mass_sq = m2;
  }
  return FeynmanGraph(vertices_, std::move(es), legs_);
}

std::size_t connected_components(const FeynmanGraph& g) {
  detail::UnionFind uf(g.num_vertices());
  for (const auto& e : g.edges()) uf.unite(e.ends[0], e.ends[1]);
  return uf.components();
}

bool is_connected(const FeynmanGraph& g) { return connected_components(g) == 1; }

std::size_t loop_number(const FeynmanGraph& g) {
  return g.num_edges() + connected_components(g) - g.num_vertices();
}

bool check_momentum_conservation(const FeynmanGraph& g) {
  Momentum total{};
  for (const auto& leg : g.legs()) total = total + leg.momentum;
  return std::all_of(total.begin(), total.end(), [](const Rational& c) { return c == 0; });
}

namespace {

void require_edges(const FeynmanGraph& g, const EdgeSet& edges) {
  for (EdgeId id : edges) {
    if (!g.has_edge(id)) throw GraphError("unknown edge id " + std::to_string(id));
  }
}

bool contains(const EdgeSet& set, EdgeId id) { return std::binary_search(set.begin(), set.end(), id); }

EdgeSet normalized(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

FeynmanGraph delete_edge(const FeynmanGraph& g, EdgeId e) { return delete_edges(g, EdgeSet{e}); }

FeynmanGraph delete_edges(const FeynmanGraph& g, const EdgeSet& edges) {
  const EdgeSet removed = normalized(edges);
  require_edges(g, removed);
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!contains(removed, e.id)) kept.push_back(e);
  }
  return FeynmanGraph(g.vertices(), std::move(kept), g.legs());
}

Contraction contract_with_map(const FeynmanGraph& g, const EdgeSet& gamma_in) {
  const EdgeSet gamma = normalized(gamma_in);
  if (gamma.empty()) throw GraphError("cannot contract an empty edge set");
  require_edges(g, gamma);

  detail::UnionFind uf(g.num_vertices());
  for (EdgeId id : gamma) {
    const Edge& e = g.edge(id);
    if (e.ends[0] == e.ends[1]) throw GraphError("cannot contract self-loop edge " + std::to_string(id));
    uf.unite(e.ends[0], e.ends[1]);
  }

  // New vertices are numbered by the first original vertex of each class.
  std::vector<std::size_t> vertex_map(g.num_vertices());
  std::map<std::size_t, std::size_t> root_to_new;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    const std::size_t root = uf.find(v);
    auto [it, inserted] = root_to_new.try_emplace(root, names.size());
    if (inserted) {
      names.push_back(g.vertices()[v]);
    } else {
      names[it->second] += "+" + g.vertices()[v];
    }
    vertex_map[v] = it->second;
  }

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (contains(gamma, e.id)) continue;
    edges.push_back(Edge{e.id, {vertex_map[e.ends[0]], vertex_map[e.ends[1]]}, e.mass_sq});
  }
  std::vector<ExternalLeg> legs;
  for (const auto& leg : g.legs()) legs.push_back(ExternalLeg{vertex_map[leg.vertex], leg.momentum});
  return Contraction{FeynmanGraph(std::move(names), std::move(edges), std::move(legs)), std::move(vertex_map)};
}

FeynmanGraph contract_subgraph(const FeynmanGraph& g, const EdgeSet& gamma) {
  return contract_with_map(g, gamma).graph;
}

FeynmanGraph edge_subgraph(const FeynmanGraph& g, const EdgeSet& gamma_in) {
  const EdgeSet gamma = normalized(gamma_in);
  require_edges(g, gamma);
  std::vector<char> used(g.num_vertices(), 0);
  for (EdgeId id : gamma) {
    const Edge& e = g.edge(id);
    used[e.ends[0]] = used[e.ends[1]] = 1;
  }
  std::vector<std::size_t> remap(g.num_vertices(), 0);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!used[v]) continue;
    remap[v] = names.size();
    names.push_back(g.vertices()[v]);
  }
  std::vector<Edge> edges;
  for (EdgeId id : gamma) {
    const Edge& e = g.edge(id);
    edges.push_back(Edge{e.id, {remap[e.ends[0]], remap[e.ends[1]]}, e.mass_sq});
  }
  std::vector<ExternalLeg> legs;
  for (const auto& leg : g.legs()) {
    if (used[leg.vertex]) legs.push_back(ExternalLeg{remap[leg.vertex], leg.momentum});
  }
  return FeynmanGraph(std::move(names), std::move(edges), std::move(legs));
}

std::vector<EdgeSet> subgraph_components(const FeynmanGraph& g, const EdgeSet& gamma_in) {
  const EdgeSet gamma = normalized(gamma_in);
  require_edges(g, gamma);
  detail::UnionFind uf(g.num_vertices());
  for (EdgeId id : gamma) {
    const Edge& e = g.edge(id);
    uf.unite(e.ends[0], e.ends[1]);
  }
  std::map<std::size_t, std::size_t> root_to_component;
  std::vector<EdgeSet> components;
  for (EdgeId id : gamma) {
    const std::size_t root = uf.find(g.edge(id).ends[0]);
    auto [it, inserted] = root_to_component.try_emplace(root, components.size());
    if (inserted) components.emplace_back();
    components[it->second].push_back(id);
  }
  return components;
}

std::vector<EdgeSet> enumerate_subgraphs(const FeynmanGraph& g, std::optional<std::size_t> max_edges) {
  const EdgeSet ids = g.edge_ids();
  const std::size_t n = ids.size();
  std::vector<EdgeSet> out;
  if (n < 2) return out;
  const std::size_t top = std::min(n - 1, max_edges.value_or(n - 1));
  for (std::size_t k = 1; k <= top; ++k) {
    // Lexicographic k-combinations of positions.
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      EdgeSet s(k);
      for (std::size_t i = 0; i < k; ++i) s[i] = ids[pick[i]];
      out.push_back(std::move(s));
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace feynman
