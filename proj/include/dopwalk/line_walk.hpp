#pragma once

#include "dopwalk/measurement.hpp"

namespace dopwalk {

struct LineWalkConfig {
  int steps = 0;
  int window_margin = 1;  // extra radius beyond the light cone
};

// Window radius large enough that the truncation boundary is unreachable
// in t steps: t + 1 + margin.
int required_radius(int t, int margin);

// The two-sided line coins: v_j^{j+1} = [-i/2, 1/2], v_j^{j-1} = [1/2, 1/2]
// at interior vertices; a boundary vertex keeps its single in-window vector
// renormalized to unit norm.
CoinFamily line_coin_family(const DirectedGraph& g);

// rho_0 = [[1/2,1/2],[1/2,1/2]] ⊗ |0,1><0,1|.
DensityOperator line_initial_state(const PairBasis& basis);

struct LineWalkResult {
  DirectedGraph graph;
  PairBasis basis;
  WalkOperator walk;
  WalkTrajectory trajectory;
  std::vector<VertexDistribution> distributions;  // one per time step
};

LineWalkResult run_line_walk(const LineWalkConfig& cfg);

}  // namespace dopwalk
