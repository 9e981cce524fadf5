#include "dopwalk/graph.hpp"

#include <set>
#include <string>

namespace dopwalk {

DirectedGraph::DirectedGraph(std::vector<VertexId> vertices,
                             std::vector<DirectedEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (VertexId v : vertices_) {
    vertex_set_.emplace(v, 1);
    out_edges_[v];  // ensure every vertex has an (empty) out list
  }
  std::set<VertexPair> seen;
  for (const DirectedEdge& e : edges_) {
    if (!has_vertex(e.from) || !has_vertex(e.to)) {
      throw UnknownVertex("edge (" + std::to_string(e.from) + "," +
                          std::to_string(e.to) + ") references a missing vertex");
    }
    if (!seen.insert({e.from, e.to}).second) {
      throw DuplicateEdge("duplicate edge (" + std::to_string(e.from) + "," +
                          std::to_string(e.to) + ")");
    }
    out_edges_[e.from].push_back(e);
  }
}

bool DirectedGraph::has_edge(VertexId from, VertexId to) const {
  auto it = out_edges_.find(from);
  if (it == out_edges_.end()) return false;
  for (const DirectedEdge& e : it->second) {
    if (e.to == to) return true;
  }
  return false;
}

const std::vector<DirectedEdge>& DirectedGraph::out_edges(VertexId v) const {
  auto it = out_edges_.find(v);
  if (it == out_edges_.end()) {
    throw UnknownVertex("vertex " + std::to_string(v) + " not in graph");
  }
  return it->second;
}

PairBasis::PairBasis(std::vector<VertexPair> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    index_.emplace(pairs_[i], i);
  }
}

std::size_t PairBasis::index_of(const VertexPair& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw PairOutsideBasis("pair (" + std::to_string(p.first) + "," +
                           std::to_string(p.second) + ") outside the basis");
  }
  return it->second;
}

std::size_t PairBasis::swapped_index(std::size_t i) const {
  const VertexPair& p = pairs_.at(i);
  return index_of({p.second, p.first});
}

DirectedGraph build_graph(const std::vector<VertexId>& vertices,
                          const std::vector<VertexPair>& edges) {
  std::vector<DirectedEdge> es;
  es.reserve(edges.size());
  for (const VertexPair& p : edges) es.push_back({p.first, p.second});
  return DirectedGraph(vertices, std::move(es));
}

PairBasis pair_basis(const DirectedGraph& g) {
  std::vector<VertexPair> pairs;
  std::set<VertexPair> seen;
  auto add = [&](VertexPair p) {
    if (seen.insert(p).second) pairs.push_back(p);
  };
  for (const DirectedEdge& e : g.edges()) {
    add({e.from, e.to});
    add({e.to, e.from});
  }
  return PairBasis(std::move(pairs));
}

DirectedGraph line_window(int radius) {
  std::vector<VertexId> vertices;
  std::vector<DirectedEdge> edges;
  for (int j = -radius; j <= radius; ++j) vertices.push_back(j);
  for (int j = -radius; j <= radius; ++j) {
    if (j + 1 <= radius) edges.push_back({j, j + 1});
    if (j - 1 >= -radius) edges.push_back({j, j - 1});
  }
  return DirectedGraph(std::move(vertices), std::move(edges));
}

}  // namespace dopwalk
