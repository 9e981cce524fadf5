#include "dopwalk/operator_builder.hpp"

#include <cmath>
#include <string>

namespace dopwalk {

const Vec& CoinFamily::vector_for(const DirectedEdge& e) const {
  auto it = assign.find({e.from, e.to});
  if (it == assign.end()) {
    throw MissingEdgeAssignment("no coin vector for edge (" +
                                std::to_string(e.from) + "," +
                                std::to_string(e.to) + ")");
  }
  return it->second;
}

CoinValidationReport validate_coin_family(const DirectedGraph& g,
                                          const CoinFamily& f, double tol) {
  if (f.coin_dim <= 0) {
    throw WrongCoinDimension("coin dimension must be positive");
  }
  CoinValidationReport report;
  for (VertexId j : g.vertices()) {
    const auto& out = g.out_edges(j);
    if (out.empty()) continue;  // isolated vertices contribute no psi_j
    double total = 0.0;
    for (const DirectedEdge& e : out) {
      const Vec& v = f.vector_for(e);
      if (v.size() != f.coin_dim) {
        throw WrongCoinDimension("coin vector on edge (" +
                                 std::to_string(e.from) + "," +
                                 std::to_string(e.to) + ") has length " +
                                 std::to_string(v.size()) + ", expected " +
                                 std::to_string(f.coin_dim));
      }
      total += v.squaredNorm();
    }
    double residual = std::abs(total - 1.0);
    if (residual > tol) {
      report.ok = false;
      report.violations.push_back({j, residual});
    }
  }
  return report;
}

void require_valid_coin_family(const DirectedGraph& g, const CoinFamily& f,
                               double tol) {
  auto report = validate_coin_family(g, f, tol);
  if (!report.ok) {
    std::string msg = "unital condition violated at";
    for (const auto& v : report.violations) {
      msg += " vertex " + std::to_string(v.vertex) + " (residual " +
             std::to_string(v.residual) + ")";
    }
    throw ValidationError(msg);
  }
}

StateVector build_psi(const DirectedGraph& g, const CoinFamily& f,
                      const PairBasis& basis, VertexId j) {
  const auto& out = g.out_edges(j);
  if (out.empty()) {
    throw IsolatedVertex("vertex " + std::to_string(j) + " has out-degree 0");
  }
  StateVector psi = StateVector::zero(f.coin_dim, basis);
  for (const DirectedEdge& e : out) {
    const Vec& v = f.vector_for(e);
    std::size_t p = basis.index_of({e.from, e.to});
    psi.amps.segment(static_cast<Eigen::Index>(p) * f.coin_dim, f.coin_dim) = v;
  }
  return psi;
}

BlockOperator build_projector(const DirectedGraph& g, const CoinFamily& f,
                              const PairBasis& basis) {
  BlockOperator pi(f.coin_dim, basis);
  for (VertexId j : g.vertices()) {
    const auto& out = g.out_edges(j);
    if (out.empty()) continue;
    // |psi_j><psi_j| has block v_j^k (v_j^l)† at pairs ((j,k),(j,l)).
    for (const DirectedEdge& ek : out) {
      const Vec& vk = f.vector_for(ek);
      std::size_t pk = basis.index_of({ek.from, ek.to});
      for (const DirectedEdge& el : out) {
        const Vec& vl = f.vector_for(el);
        std::size_t pl = basis.index_of({el.from, el.to});
        pi.add_to_block(pk, pl, vk * vl.adjoint());
      }
    }
  }
  pi.drop_small_blocks();
  return pi;
}

BlockOperator build_swap(const PairBasis& basis, int coin_dim) {
  BlockOperator s(coin_dim, basis);
  for (std::size_t p = 0; p < basis.size(); ++p) {
    s.set_block(basis.swapped_index(p), p, Mat::Identity(coin_dim, coin_dim));
  }
  return s;
}

BlockOperator build_reflection(const DirectedGraph& g, const CoinFamily& f,
                               const PairBasis& basis) {
  BlockOperator pi = build_projector(g, f, basis);
  return pi.scaled(2.0).minus(BlockOperator::identity(f.coin_dim, basis));
}

WalkOperator build_walk_unitary(const DirectedGraph& g, const CoinFamily& f,
                                const PairBasis& basis, double tol) {
  require_valid_coin_family(g, f, tol);
  BlockOperator u =
      build_swap(basis, f.coin_dim).multiply(build_reflection(g, f, basis));
  if (!is_unitary(u, tol)) {
    throw UnitarityCheckFailed("walk operator failed the unitarity check");
  }
  return WalkOperator{std::move(u)};
}

bool is_projection(const BlockOperator& op, double tol) {
  return op.multiply(op).max_abs_diff(op) <= tol &&
         op.adjoint().max_abs_diff(op) <= tol;
}

bool is_unitary(const BlockOperator& op, double tol) {
  auto eye = BlockOperator::identity(op.coin_dim(), op.basis());
  return op.adjoint().multiply(op).max_abs_diff(eye) <= tol;
}

}  // namespace dopwalk
