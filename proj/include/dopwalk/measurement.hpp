#pragma once

#include <map>

#include "dopwalk/density.hpp"

namespace dopwalk {

// P(j) for every vertex carrying probability; values clamped to [0,1].
struct VertexDistribution {
  std::map<VertexId, double> probs;

  double at(VertexId j) const {
    auto it = probs.find(j);
    return it == probs.end() ? 0.0 : it->second;
  }
  double total() const;
};

// P(E_jk) = tr(E_jk rho): the real trace of rho's diagonal block at pair.
double effect_probability(const DensityOperator& rho, const VertexPair& pair);

// Post-measurement state E_jk rho E_jk / tr(E_jk rho E_jk).
DensityOperator collapse(const DensityOperator& rho, const VertexPair& pair);

// P(j) = sum_k P(E_jk), marginalizing over the second register.
VertexDistribution vertex_distribution(const DensityOperator& rho);

}  // namespace dopwalk
