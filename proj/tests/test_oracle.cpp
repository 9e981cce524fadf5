#include <doctest.h>

#include "dopwalk/oracle.hpp"
#include "test_support.hpp"

using namespace dopwalk;

TEST_CASE("dense build dimensions and caps") {
  DirectedGraph g = build_graph({0}, {{0, 0}});
  CoinFamily f;
  f.coin_dim = 2;
  Vec v(2);
  v << 1.0, 0.0;
  f.assign[{0, 0}] = v;
  PairBasis b = pair_basis(g);
  auto ops = oracle::dense_build(g, f, b);
  CHECK(ops.walk.rows() == 2);

  DirectedGraph line = line_window(4);
  CoinFamily coins = line_coin_family(line);
  PairBasis lb = pair_basis(line);
  auto lops = oracle::dense_build(line, coins, lb);
  CHECK(lops.walk.rows() == 32);

  CHECK_THROWS_AS(oracle::dense_build(line, coins, lb, /*dim_cap=*/16),
                  DimensionTooLarge);
}

TEST_CASE("dense operators satisfy their algebra") {
  auto inst = testing::four_cycle_instance();
  auto ops = oracle::dense_build(inst.graph, inst.coins, inst.basis);
  Mat eye = Mat::Identity(ops.walk.rows(), ops.walk.cols());
  CHECK((ops.projector * ops.projector - ops.projector).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((ops.walk.adjoint() * ops.walk - eye).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((ops.swap * ops.swap - eye).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("dense evolution reproduces the one-step line state") {
  DirectedGraph g = line_window(2);
  CoinFamily f = line_coin_family(g);
  PairBasis b = pair_basis(g);
  auto ops = oracle::dense_build(g, f, b);

  DensityOperator rho0 = line_initial_state(b);
  Mat rho1_dense = oracle::dense_evolve(ops.walk, rho0.op.to_dense(), 1);

  WalkOperator walk = build_walk_unitary(g, f, b);
  DensityOperator rho1 = step(walk, rho0);
  auto cmp = oracle::compare(rho1.op.to_dense(), rho1_dense, 1e-12);
  CHECK(cmp.pass);

  // t=0 leaves the input unchanged
  CHECK(oracle::compare(oracle::dense_evolve(ops.walk, rho0.op.to_dense(), 0),
                        rho0.op.to_dense(), 0.0).pass);
}

TEST_CASE("compare reports the max deviation") {
  Mat a = Mat::Random(6, 6);
  auto cmp = oracle::compare(a, a, 0.0);
  CHECK(cmp.max_deviation == 0.0);
  CHECK(cmp.pass);

  Mat b = a;
  b(2, 3) += Complex(1e-6, 0.0);
  cmp = oracle::compare(a, b, 1e-12);
  CHECK(!cmp.pass);
  CHECK(cmp.max_deviation >= 1e-6);

  CHECK_THROWS_AS(oracle::compare(a, Mat::Zero(3, 3), 1e-12),
                  DimensionMismatch);
}

TEST_CASE("block-sparse evolution matches the dense oracle") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    auto inst = testing::random_instance(rng);
    auto ops = oracle::dense_build(inst.graph, inst.coins, inst.basis);
    WalkOperator walk = build_walk_unitary(inst.graph, inst.coins, inst.basis);
    CHECK(oracle::compare(walk.u.to_dense(), ops.walk, 1e-12).pass);

    StateVector v = testing::random_state(rng, inst.coins.coin_dim, inst.basis);
    DensityOperator rho0 = outer_product(v);
    int t = 1 + trial % 5;
    WalkTrajectory traj = evolve(walk, rho0, t);
    Mat dense = oracle::dense_evolve(ops.walk, rho0.op.to_dense(), t);
    CHECK(oracle::compare(traj.final_state().op.to_dense(), dense, 1e-10).pass);
  }
}
