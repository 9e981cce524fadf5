#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "dopwalk/density.hpp"
#include "dopwalk/measurement.hpp"

namespace dopwalk {
namespace io {

using nlohmann::json;

// Graph schema: {"vertices": [int...], "edges": [[int,int]...]}
json graph_to_json(const DirectedGraph& g);
DirectedGraph graph_from_json(const json& j);

// Coin schema: {"coin_dim": n, "coins": [{"from","to","re","im"}...]}
json coin_family_to_json(const CoinFamily& f);
CoinFamily coin_family_from_json(const json& j);

// Operator dump: [{"ket":[j,k],"bra":[l,m],"block":[[{"re","im"}...]...]}...]
json operator_to_json(const BlockOperator& op);
BlockOperator operator_from_json(const json& j, int coin_dim,
                                 const PairBasis& basis);

// State dump: {"trace","purity","blocks": <operator dump>}
json state_to_json(const DensityOperator& rho);
DensityOperator state_from_json(const json& j, int coin_dim,
                                const PairBasis& basis);

json distribution_to_json(int t, const VertexDistribution& dist);
std::string distributions_to_csv(const std::vector<VertexDistribution>& dists);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace io
}  // namespace dopwalk
