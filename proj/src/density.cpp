#include "dopwalk/density.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

namespace dopwalk {

namespace {

constexpr double kUnitNormTol = 1e-10;

double hermiticity_residual(const BlockOperator& op) {
  return op.adjoint().max_abs_diff(op);
}

}  // namespace

DensityOperator pure_density(const Vec& u, const VertexPair& pair,
                             const PairBasis& basis) {
  if (std::abs(u.norm() - 1.0) > kUnitNormTol) {
    throw NonUnitCoinVector("coin vector has norm " + std::to_string(u.norm()));
  }
  std::size_t p = basis.index_of(pair);
  BlockOperator op(static_cast<int>(u.size()), basis);
  op.set_block(p, p, u * u.adjoint());
  return DensityOperator{std::move(op)};
}

DensityOperator step(const WalkOperator& walk, const DensityOperator& rho) {
  // (U rho) U†, fixed block-summation order inside multiply.
  return DensityOperator{
      walk.u.multiply(rho.op).multiply(walk.u.adjoint())};
}

WalkTrajectory evolve(const WalkOperator& walk, const DensityOperator& rho0,
                      int t, bool require_density, bool keep_intermediate) {
  if (t < 0) throw WalkError("negative step count");
  if (require_density) {
    double trace_res = std::abs(rho0.op.trace_real() - 1.0);
    double herm_res = hermiticity_residual(rho0.op);
    if (trace_res > kUnitNormTol || herm_res > kUnitNormTol) {
      throw ValidationError("initial state is not a density operator (trace "
                            "residual " + std::to_string(trace_res) +
                            ", hermiticity residual " +
                            std::to_string(herm_res) + ")");
    }
  }
  WalkTrajectory traj;
  traj.step_count = static_cast<std::size_t>(t);
  traj.states.reserve(keep_intermediate ? t + 1 : 2);
  traj.states.push_back(rho0);
  for (int s = 0; s < t; ++s) {
    DensityOperator next = step(walk, traj.states.back());
    if (keep_intermediate || traj.states.size() == 1) {
      traj.states.push_back(std::move(next));
    } else {
      traj.states.back() = std::move(next);
    }
  }
  return traj;
}

StateVector pure_evolve(const WalkOperator& walk, const StateVector& v, int t) {
  if (std::abs(v.norm() - 1.0) > kUnitNormTol) {
    throw NonUnitCoinVector("state vector has norm " + std::to_string(v.norm()));
  }
  StateVector cur = v;
  for (int s = 0; s < t; ++s) {
    cur = walk.u.apply(cur);
  }
  return cur;
}

DensityOperator outer_product(const StateVector& v) {
  const int n = v.coin_dim;
  BlockOperator op(n, v.basis);
  for (std::size_t p = 0; p < v.basis.size(); ++p) {
    Vec vp = v.amps.segment(static_cast<Eigen::Index>(p) * n, n);
    if (vp.cwiseAbs().maxCoeff() == 0.0) continue;
    for (std::size_t q = 0; q < v.basis.size(); ++q) {
      Vec vq = v.amps.segment(static_cast<Eigen::Index>(q) * n, n);
      if (vq.cwiseAbs().maxCoeff() == 0.0) continue;
      op.set_block(p, q, vp * vq.adjoint());
    }
  }
  op.drop_small_blocks();
  return DensityOperator{std::move(op)};
}

double trace(const DensityOperator& rho) { return rho.op.trace_real(); }

double purity(const DensityOperator& rho) {
  return hs_inner(rho.op, rho.op).real();
}

Complex hs_inner(const BlockOperator& a, const BlockOperator& b) {
  if (a.coin_dim() != b.coin_dim() || !(a.basis() == b.basis())) {
    throw DimensionMismatch("hs_inner on mismatched spaces");
  }
  Complex sum = 0.0;
  for (const auto& [key, blk] : a.blocks()) {
    if (!b.has_block(key.first, key.second)) continue;
    sum += (blk.conjugate().cwiseProduct(b.block(key.first, key.second))).sum();
  }
  return sum;
}

StateDiagnostics check_state(const DensityOperator& rho) {
  StateDiagnostics d;
  d.hermiticity_residual = hermiticity_residual(rho.op);
  d.trace_residual = std::abs(rho.op.trace_real() - 1.0);
  Eigen::SelfAdjointEigenSolver<Mat> es(rho.op.to_dense());
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  return d;
}

}  // namespace dopwalk
