#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <utility>

#include "dopwalk/graph.hpp"

namespace dopwalk {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// Threshold below which blocks produced by operator products are dropped.
inline constexpr double kBlockDropTol = 1e-15;

// State vector on the coin ⊗ pair space, stored dense with the pair-major
// flattening index = pair_index * coin_dim + coin_index.
struct StateVector {
  int coin_dim = 0;
  PairBasis basis{{}};
  Vec amps;

  std::size_t dim() const { return basis.size() * coin_dim; }
  double norm() const { return amps.norm(); }

  Complex& at(std::size_t pair_index, int coin_index) {
    return amps(static_cast<Eigen::Index>(pair_index * coin_dim + coin_index));
  }
  Complex at(std::size_t pair_index, int coin_index) const {
    return amps(static_cast<Eigen::Index>(pair_index * coin_dim + coin_index));
  }

  static StateVector zero(int coin_dim, PairBasis basis);
};

// Block-sparse operator on B(H_C) ⊗ B(H_V ⊗ H_V): a map from
// (ket-pair-index, bra-pair-index) to a dense coin_dim × coin_dim block.
// Absent blocks are zero. Immutable by convention once built.
class BlockOperator {
 public:
  using Key = std::pair<std::size_t, std::size_t>;
  using BlockMap = std::map<Key, Mat>;

  BlockOperator(int coin_dim, PairBasis basis)
      : coin_dim_(coin_dim), basis_(std::move(basis)) {}

  static BlockOperator identity(int coin_dim, PairBasis basis);

  int coin_dim() const { return coin_dim_; }
  const PairBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.size() * coin_dim_; }
  const BlockMap& blocks() const { return blocks_; }

  bool has_block(std::size_t ket, std::size_t bra) const;
  // Returns the stored block, or a zero block if absent.
  Mat block(std::size_t ket, std::size_t bra) const;

  void set_block(std::size_t ket, std::size_t bra, Mat m);
  void add_to_block(std::size_t ket, std::size_t bra, const Mat& m);
  // Removes blocks whose max-entry magnitude is below tol.
  void drop_small_blocks(double tol = kBlockDropTol);

  BlockOperator adjoint() const;
  BlockOperator scaled(Complex factor) const;
  BlockOperator plus(const BlockOperator& other) const;
  BlockOperator minus(const BlockOperator& other) const;

  // Block-sparse product this * other, deterministic summation order.
  BlockOperator multiply(const BlockOperator& other) const;
  StateVector apply(const StateVector& v) const;

  double trace_real() const;
  Complex trace() const;
  // Max entrywise magnitude over stored blocks.
  double max_abs() const;
  double max_abs_diff(const BlockOperator& other) const;

  // Dense matrix in the pair-major flattening, for dumps and comparison.
  Mat to_dense() const;

 private:
  void check_same_space(const BlockOperator& other) const;

  int coin_dim_;
  PairBasis basis_;
  BlockMap blocks_;
};

}  // namespace dopwalk
