#pragma once

#include <map>
#include <vector>

#include "dopwalk/block_operator.hpp"
#include "dopwalk/graph.hpp"

namespace dopwalk {

inline constexpr double kDefaultTol = 1e-10;

// Per-vertex coin column vectors v_j^k, one per outgoing edge. The family is
// valid when every vertex with out-degree >= 1 satisfies
// sum_k ||v_j^k||^2 = 1.
struct CoinFamily {
  int coin_dim = 0;
  std::map<VertexPair, Vec> assign;

  const Vec& vector_for(const DirectedEdge& e) const;
};

struct UnitalViolation {
  VertexId vertex;
  double residual;  // |sum_k ||v_j^k||^2 - 1|
};

struct CoinValidationReport {
  bool ok = true;
  std::vector<UnitalViolation> violations;
};

CoinValidationReport validate_coin_family(const DirectedGraph& g,
                                          const CoinFamily& f,
                                          double tol = kDefaultTol);
// Like validate_coin_family but throws ValidationError on any violation.
void require_valid_coin_family(const DirectedGraph& g, const CoinFamily& f,
                               double tol = kDefaultTol);

// |psi_j> = sum_k v_j^k ⊗ |j,k>, a unit vector supported on the out-edges
// of j. Throws IsolatedVertex when j has no outgoing edge.
StateVector build_psi(const DirectedGraph& g, const CoinFamily& f,
                      const PairBasis& basis, VertexId j);

// Π = sum_j |psi_j><psi_j| over vertices with out-degree >= 1.
BlockOperator build_projector(const DirectedGraph& g, const CoinFamily& f,
                              const PairBasis& basis);

// S: identity coin block at (reverse(p), p) for every basis pair p.
BlockOperator build_swap(const PairBasis& basis, int coin_dim);

// 2Π - I, the reflection through span{psi_j}.
BlockOperator build_reflection(const DirectedGraph& g, const CoinFamily& f,
                               const PairBasis& basis);

struct WalkOperator {
  BlockOperator u;
};

// U = S(2Π - I); throws UnitarityCheckFailed if the unitarity residual
// exceeds tol.
WalkOperator build_walk_unitary(const DirectedGraph& g, const CoinFamily& f,
                                const PairBasis& basis,
                                double tol = kDefaultTol);

bool is_projection(const BlockOperator& op, double tol = kDefaultTol);
bool is_unitary(const BlockOperator& op, double tol = kDefaultTol);

}  // namespace dopwalk
