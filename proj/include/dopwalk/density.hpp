#pragma once

#include <vector>

#include "dopwalk/operator_builder.hpp"

namespace dopwalk {

// Density operator on the coin ⊗ pair space, stored block-sparse like any
// other operator. The density invariants (Hermiticity, unit trace,
// positivity) are checked via check_state, not enforced on every mutation.
struct DensityOperator {
  BlockOperator op;

  int coin_dim() const { return op.coin_dim(); }
  const PairBasis& basis() const { return op.basis(); }
};

struct StateDiagnostics {
  double hermiticity_residual = 0.0;
  double trace_residual = 0.0;
  double min_eigenvalue = 0.0;
};

struct WalkTrajectory {
  std::vector<DensityOperator> states;  // rho_0 .. rho_T (or just rho_0, rho_T)
  std::size_t step_count = 0;

  const DensityOperator& final_state() const { return states.back(); }
};

// rho = uu† ⊗ |pair><pair| for a unit coin vector u.
DensityOperator pure_density(const Vec& u, const VertexPair& pair,
                             const PairBasis& basis);

// One application of the unitary channel: U rho U†.
DensityOperator step(const WalkOperator& walk, const DensityOperator& rho);

// rho_0 .. rho_t under repeated application of the channel. By default the
// input must be a valid density operator; pass require_density=false to
// evolve arbitrary Hermitian operators (linearity experiments). With
// keep_intermediate=false only rho_0 and rho_t are stored.
WalkTrajectory evolve(const WalkOperator& walk, const DensityOperator& rho0,
                      int t, bool require_density = true,
                      bool keep_intermediate = true);

// U^t v by repeated sparse matrix-vector products.
StateVector pure_evolve(const WalkOperator& walk, const StateVector& v, int t);

// rho = vv† as a block operator, pair-major flattening.
DensityOperator outer_product(const StateVector& v);

double trace(const DensityOperator& rho);
double purity(const DensityOperator& rho);
// <A,B> = tr(A†B), conjugate-linear in the first argument.
Complex hs_inner(const BlockOperator& a, const BlockOperator& b);

StateDiagnostics check_state(const DensityOperator& rho);

}  // namespace dopwalk
