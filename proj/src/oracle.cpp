#include "dopwalk/oracle.hpp"

#include <string>

namespace dopwalk {
namespace oracle {

DenseOperators dense_build(const DirectedGraph& g, const CoinFamily& f,
                           const PairBasis& basis, std::size_t dim_cap) {
  const int n = f.coin_dim;
  const std::size_t dim = basis.size() * n;
  if (dim > dim_cap) {
    throw DimensionTooLarge("dense oracle dimension " + std::to_string(dim) +
                            " exceeds cap " + std::to_string(dim_cap));
  }
  const auto d = static_cast<Eigen::Index>(dim);

  Mat projector = Mat::Zero(d, d);
  for (VertexId j : g.vertices()) {
    const auto& out = g.out_edges(j);
    if (out.empty()) continue;
    Vec psi = Vec::Zero(d);
    for (const DirectedEdge& e : out) {
      const Vec& v = f.vector_for(e);
      auto offset =
          static_cast<Eigen::Index>(basis.index_of({e.from, e.to})) * n;
      psi.segment(offset, n) = v;
    }
    projector += psi * psi.adjoint();
  }

  Mat swap = Mat::Zero(d, d);
  for (std::size_t p = 0; p < basis.size(); ++p) {
    auto row = static_cast<Eigen::Index>(basis.swapped_index(p)) * n;
    auto col = static_cast<Eigen::Index>(p) * n;
    swap.block(row, col, n, n) = Mat::Identity(n, n);
  }

  Mat walk = swap * (2.0 * projector - Mat::Identity(d, d));
  return DenseOperators{std::move(projector), std::move(swap), std::move(walk)};
}

Mat dense_evolve(const Mat& walk, const Mat& rho, int t) {
  if (walk.rows() != rho.rows() || walk.cols() != rho.cols()) {
    throw DimensionMismatch("dense operator and state dimensions differ");
  }
  Mat cur = rho;
  for (int s = 0; s < t; ++s) {
    cur = walk * cur * walk.adjoint();
  }
  return cur;
}

Comparison compare(const Mat& a, const Mat& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("compared matrices have different dimensions");
  }
  Comparison c;
  c.max_deviation = (a - b).cwiseAbs().maxCoeff();
  c.pass = c.max_deviation <= tol;
  return c;
}

}  // namespace oracle
}  // namespace dopwalk
