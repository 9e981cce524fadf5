#include "dopwalk/block_operator.hpp"

#include <string>

namespace dopwalk {

StateVector StateVector::zero(int coin_dim, PairBasis basis) {
  StateVector v;
  v.coin_dim = coin_dim;
  v.basis = std::move(basis);
  v.amps = Vec::Zero(static_cast<Eigen::Index>(v.basis.size()) * coin_dim);
  return v;
}

BlockOperator BlockOperator::identity(int coin_dim, PairBasis basis) {
  BlockOperator op(coin_dim, std::move(basis));
  for (std::size_t i = 0; i < op.basis_.size(); ++i) {
    op.blocks_[{i, i}] = Mat::Identity(coin_dim, coin_dim);
  }
  return op;
}

bool BlockOperator::has_block(std::size_t ket, std::size_t bra) const {
  return blocks_.count({ket, bra}) != 0;
}

Mat BlockOperator::block(std::size_t ket, std::size_t bra) const {
  auto it = blocks_.find({ket, bra});
  if (it == blocks_.end()) return Mat::Zero(coin_dim_, coin_dim_);
  return it->second;
}

void BlockOperator::set_block(std::size_t ket, std::size_t bra, Mat m) {
  blocks_[{ket, bra}] = std::move(m);
}

void BlockOperator::add_to_block(std::size_t ket, std::size_t bra, const Mat& m) {
  auto it = blocks_.find({ket, bra});
  if (it == blocks_.end()) {
    blocks_[{ket, bra}] = m;
  } else {
    it->second += m;
  }
}

void BlockOperator::drop_small_blocks(double tol) {
  for (auto it = blocks_.begin(); it != blocks_.end();) {
    if (it->second.cwiseAbs().maxCoeff() < tol) {
      it = blocks_.erase(it);
    } else {
      ++it;
    }
  }
}

BlockOperator BlockOperator::adjoint() const {
  BlockOperator out(coin_dim_, basis_);
  for (const auto& [key, m] : blocks_) {
    out.blocks_[{key.second, key.first}] = m.adjoint();
  }
  return out;
}

BlockOperator BlockOperator::scaled(Complex factor) const {
  BlockOperator out(coin_dim_, basis_);
  for (const auto& [key, m] : blocks_) {
    out.blocks_[key] = factor * m;
  }
  return out;
}

BlockOperator BlockOperator::plus(const BlockOperator& other) const {
  check_same_space(other);
  BlockOperator out = *this;
  for (const auto& [key, m] : other.blocks_) {
    out.add_to_block(key.first, key.second, m);
  }
  return out;
}

BlockOperator BlockOperator::minus(const BlockOperator& other) const {
  return plus(other.scaled(-1.0));
}

BlockOperator BlockOperator::multiply(const BlockOperator& other) const {
  check_same_space(other);
  // Group the right factor's blocks by ket index so each output block is
  // accumulated in a fixed order independent of sparsity pattern details.
  std::map<std::size_t, std::vector<std::pair<std::size_t, const Mat*>>> by_ket;
  for (const auto& [key, m] : other.blocks_) {
    by_ket[key.first].emplace_back(key.second, &m);
  }
  BlockOperator out(coin_dim_, basis_);
  for (const auto& [lkey, lm] : blocks_) {
    auto it = by_ket.find(lkey.second);
    if (it == by_ket.end()) continue;
    for (const auto& [bra, rm] : it->second) {
      out.add_to_block(lkey.first, bra, lm * (*rm));
    }
  }
  out.drop_small_blocks();
  return out;
}

StateVector BlockOperator::apply(const StateVector& v) const {
  if (v.coin_dim != coin_dim_ || !(v.basis == basis_)) {
    throw DimensionMismatch("state vector does not match operator space");
  }
  StateVector out = StateVector::zero(coin_dim_, basis_);
  for (const auto& [key, m] : blocks_) {
    out.amps.segment(static_cast<Eigen::Index>(key.first) * coin_dim_, coin_dim_) +=
        m * v.amps.segment(static_cast<Eigen::Index>(key.second) * coin_dim_, coin_dim_);
  }
  return out;
}

Complex BlockOperator::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto it = blocks_.find({i, i});
    if (it != blocks_.end()) t += it->second.trace();
  }
  return t;
}

double BlockOperator::trace_real() const { return trace().real(); }

double BlockOperator::max_abs() const {
  double m = 0.0;
  for (const auto& [key, blk] : blocks_) {
    m = std::max(m, blk.cwiseAbs().maxCoeff());
  }
  return m;
}

double BlockOperator::max_abs_diff(const BlockOperator& other) const {
  return minus(other).max_abs();
}

Mat BlockOperator::to_dense() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Mat m = Mat::Zero(d, d);
  for (const auto& [key, blk] : blocks_) {
    m.block(static_cast<Eigen::Index>(key.first) * coin_dim_,
            static_cast<Eigen::Index>(key.second) * coin_dim_, coin_dim_,
            coin_dim_) = blk;
  }
  return m;
}

void BlockOperator::check_same_space(const BlockOperator& other) const {
  if (other.coin_dim_ != coin_dim_ || !(other.basis_ == basis_)) {
    throw DimensionMismatch("operators act on different spaces");
  }
}

}  // namespace dopwalk
