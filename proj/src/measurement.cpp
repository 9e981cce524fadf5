#include "dopwalk/measurement.hpp"

#include <cmath>
#include <string>

namespace dopwalk {

namespace {

constexpr double kClampTol = 1e-10;
constexpr double kZeroProbTol = 1e-12;

double clamp_probability(double p) {
  if (p < 0.0) {
    if (p < -kClampTol) {
      throw ValidationError("effect probability " + std::to_string(p) +
                            " is negative beyond roundoff");
    }
    return 0.0;
  }
  return std::min(p, 1.0);
}

}  // namespace

double VertexDistribution::total() const {
  double t = 0.0;
  for (const auto& [v, p] : probs) t += p;
  return t;
}

double effect_probability(const DensityOperator& rho, const VertexPair& pair) {
  std::size_t p = rho.basis().index_of(pair);
  if (!rho.op.has_block(p, p)) return 0.0;
  return rho.op.block(p, p).trace().real();
}

DensityOperator collapse(const DensityOperator& rho, const VertexPair& pair) {
  double prob = effect_probability(rho, pair);
  if (prob <= kZeroProbTol) {
    throw ZeroProbabilityOutcome("effect at pair (" +
                                 std::to_string(pair.first) + "," +
                                 std::to_string(pair.second) +
                                 ") has probability " + std::to_string(prob));
  }
  std::size_t p = rho.basis().index_of(pair);
  BlockOperator out(rho.coin_dim(), rho.basis());
  out.set_block(p, p, rho.op.block(p, p) / prob);
  return DensityOperator{std::move(out)};
}

VertexDistribution vertex_distribution(const DensityOperator& rho) {
  VertexDistribution dist;
  for (std::size_t p = 0; p < rho.basis().size(); ++p) {
    if (!rho.op.has_block(p, p)) continue;
    const VertexPair& pair = rho.basis().pair_at(p);
    dist.probs[pair.first] += rho.op.block(p, p).trace().real();
  }
  for (auto it = dist.probs.begin(); it != dist.probs.end();) {
    it->second = clamp_probability(it->second);
    if (it->second == 0.0) {
      it = dist.probs.erase(it);
    } else {
      ++it;
    }
  }
  return dist;
}

}  // namespace dopwalk
