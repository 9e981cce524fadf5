#include <doctest.h>

#include "test_support.hpp"

using namespace dopwalk;
using dopwalk::testing::kI;
using dopwalk::testing::mat2;

namespace {

LineWalkResult line_result(int steps) {
  return run_line_walk({steps, 1});
}

}  // namespace

TEST_CASE("effect probabilities on the first line states") {
  LineWalkResult r = line_result(1);
  const DensityOperator& rho0 = r.trajectory.states[0];
  const DensityOperator& rho1 = r.trajectory.states[1];
  CHECK(effect_probability(rho0, {0, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(effect_probability(rho1, {1, 0}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(effect_probability(rho1, {-1, 0}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(effect_probability(rho1, {2, 3}) == 0.0);
  CHECK_THROWS_AS(effect_probability(rho1, {99, 100}), PairOutsideBasis);
}

TEST_CASE("collapse keeps one renormalized diagonal block") {
  LineWalkResult r = line_result(1);
  const DensityOperator& rho1 = r.trajectory.states[1];
  DensityOperator collapsed = collapse(rho1, {1, 0});
  std::size_t p = r.basis.index_of({1, 0});
  CHECK((collapsed.op.block(p, p) - mat2(0.5, kI * 0.5, -kI * 0.5, 0.5))
            .cwiseAbs().maxCoeff() < 1e-12);
  CHECK(collapsed.op.blocks().size() == 1);
  CHECK(std::abs(trace(collapsed) - 1.0) < 1e-12);

  // idempotence
  DensityOperator twice = collapse(collapsed, {1, 0});
  CHECK(twice.op.max_abs_diff(collapsed.op) < 1e-12);

  // single-pair states are unchanged
  const DensityOperator& rho0 = r.trajectory.states[0];
  CHECK(collapse(rho0, {0, 1}).op.max_abs_diff(rho0.op) < 1e-12);

  CHECK_THROWS_AS(collapse(rho1, {3, 2}), ZeroProbabilityOutcome);
}

TEST_CASE("vertex distributions at the first three steps") {
  LineWalkResult r = line_result(2);
  const auto& d0 = r.distributions[0];
  const auto& d1 = r.distributions[1];
  const auto& d2 = r.distributions[2];

  CHECK(d0.at(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d0.probs.size() == 1);

  CHECK(d1.at(-1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d1.at(1) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d1.probs.size() == 2);

  CHECK(d2.at(-2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(d2.at(2) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(d2.at(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(d2.probs.size() == 3);
}

TEST_CASE("effect probabilities are complete and nonnegative") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = testing::random_instance(rng);
    WalkOperator walk = build_walk_unitary(inst.graph, inst.coins, inst.basis);
    StateVector v = testing::random_state(rng, inst.coins.coin_dim, inst.basis);
    WalkTrajectory traj = evolve(walk, outer_product(v), 5);
    for (const DensityOperator& rho : traj.states) {
      double total = 0.0;
      for (std::size_t p = 0; p < inst.basis.size(); ++p) {
        double prob = effect_probability(rho, inst.basis.pair_at(p));
        CHECK(prob >= -1e-10);
        total += prob;
      }
      CHECK(std::abs(total - trace(rho)) < 1e-10);
      CHECK(std::abs(vertex_distribution(rho).total() - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("only diagonal blocks feed the distribution") {
  LineWalkResult r = line_result(2);
  const DensityOperator& rho2 = r.trajectory.states[2];

  BlockOperator diag_only(rho2.coin_dim(), rho2.basis());
  for (const auto& [key, blk] : rho2.op.blocks()) {
    if (key.first == key.second) diag_only.set_block(key.first, key.second, blk);
  }
  VertexDistribution full = vertex_distribution(rho2);
  VertexDistribution stripped = vertex_distribution(DensityOperator{diag_only});
  CHECK(full.probs.size() == stripped.probs.size());
  for (const auto& [v, p] : full.probs) {
    CHECK(stripped.at(v) == doctest::Approx(p).epsilon(1e-14));
  }
}
