#pragma once

#include "dopwalk/operator_builder.hpp"

namespace dopwalk {
namespace oracle {

// Dense brute-force reference built straight from the defining formulas,
// with no sparsity shortcuts and no shared matrix-product code. Flattening
// convention: index = pair_index * coin_dim + coin_index.

inline constexpr std::size_t kDefaultDimensionCap = 4096;

struct DenseOperators {
  Mat projector;
  Mat swap;
  Mat walk;  // S(2Π - I)
};

DenseOperators dense_build(const DirectedGraph& g, const CoinFamily& f,
                           const PairBasis& basis,
                           std::size_t dim_cap = kDefaultDimensionCap);

// t-fold conjugation rho -> U rho U† by plain dense multiplication.
Mat dense_evolve(const Mat& walk, const Mat& rho, int t);

struct Comparison {
  double max_deviation = 0.0;
  bool pass = false;
};

Comparison compare(const Mat& a, const Mat& b, double tol);

}  // namespace oracle
}  // namespace dopwalk
