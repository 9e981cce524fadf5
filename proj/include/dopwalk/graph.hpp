#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dopwalk/errors.hpp"

namespace dopwalk {

using VertexId = std::int64_t;
using VertexPair = std::pair<VertexId, VertexId>;

struct DirectedEdge {
  VertexId from;
  VertexId to;

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// Directed graph with deterministic (insertion-order) vertex and edge
// ordering. Immutable after construction.
class DirectedGraph {
 public:
  DirectedGraph(std::vector<VertexId> vertices, std::vector<DirectedEdge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<DirectedEdge>& edges() const { return edges_; }

  bool has_vertex(VertexId v) const { return vertex_set_.count(v) != 0; }
  bool has_edge(VertexId from, VertexId to) const;

  // Out-edges of v in edge insertion order; empty for isolated vertices.
  const std::vector<DirectedEdge>& out_edges(VertexId v) const;
  std::size_t out_degree(VertexId v) const { return out_edges(v).size(); }

 private:
  std::vector<VertexId> vertices_;
  std::vector<DirectedEdge> edges_;
  std::map<VertexId, int> vertex_set_;
  std::map<VertexId, std::vector<DirectedEdge>> out_edges_;
};

// Ordered carrier for the |j,k> position basis: the swap closure of the
// edge set. index_of is a bijection onto [0, size).
class PairBasis {
 public:
  explicit PairBasis(std::vector<VertexPair> pairs);

  const std::vector<VertexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

  bool contains(const VertexPair& p) const { return index_.count(p) != 0; }
  std::size_t index_of(const VertexPair& p) const;
  const VertexPair& pair_at(std::size_t i) const { return pairs_.at(i); }
  // Index of the swapped pair; total because the basis is swap-closed.
  std::size_t swapped_index(std::size_t i) const;

  friend bool operator==(const PairBasis& a, const PairBasis& b) {
    return a.pairs_ == b.pairs_;
  }

 private:
  std::vector<VertexPair> pairs_;
  std::map<VertexPair, std::size_t> index_;
};

DirectedGraph build_graph(const std::vector<VertexId>& vertices,
                          const std::vector<VertexPair>& edges);

// Swap closure E ∪ reverse(E), deduplicated, in edge insertion order
// (each edge followed by its reverse if not already present).
PairBasis pair_basis(const DirectedGraph& g);

// Truncated line: vertices -radius..radius, edges (j, j±1) inside the window.
DirectedGraph line_window(int radius);

}  // namespace dopwalk
