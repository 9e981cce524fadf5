#include "dopwalk/line_walk.hpp"

namespace dopwalk {

namespace {

const Complex kI{0.0, 1.0};

Vec right_coin() {
  Vec v(2);
  v << -kI / 2.0, 0.5;
  return v;
}

Vec left_coin() {
  Vec v(2);
  v << 0.5, 0.5;
  return v;
}

}  // namespace

int required_radius(int t, int margin) {
  if (t < 0 || margin < 0) throw WalkError("negative steps or margin");
  return t + 1 + margin;
}

CoinFamily line_coin_family(const DirectedGraph& g) {
  CoinFamily f;
  f.coin_dim = 2;
  for (VertexId j : g.vertices()) {
    const auto& out = g.out_edges(j);
    for (const DirectedEdge& e : out) {
      Vec v = (e.to == e.from + 1) ? right_coin() : left_coin();
      if (out.size() == 1) v /= v.norm();  // clipped boundary vertex
      f.assign[{e.from, e.to}] = v;
    }
  }
  return f;
}

DensityOperator line_initial_state(const PairBasis& basis) {
  // [[1/2,1/2],[1/2,1/2]] ⊗ |0,1><0,1|, written out so the entries are
  // exactly representable.
  std::size_t p = basis.index_of({0, 1});
  Mat block(2, 2);
  block << 0.5, 0.5, 0.5, 0.5;
  BlockOperator op(2, basis);
  op.set_block(p, p, block);
  return DensityOperator{std::move(op)};
}

LineWalkResult run_line_walk(const LineWalkConfig& cfg) {
  int radius = required_radius(cfg.steps, cfg.window_margin);
  DirectedGraph graph = line_window(radius);
  CoinFamily coins = line_coin_family(graph);
  PairBasis basis = pair_basis(graph);
  WalkOperator walk = build_walk_unitary(graph, coins, basis);
  WalkTrajectory traj = evolve(walk, line_initial_state(basis), cfg.steps);
  std::vector<VertexDistribution> dists;
  dists.reserve(traj.states.size());
  for (const DensityOperator& rho : traj.states) {
    dists.push_back(vertex_distribution(rho));
  }
  return LineWalkResult{std::move(graph), std::move(basis), std::move(walk),
                        std::move(traj), std::move(dists)};
}

}  // namespace dopwalk
