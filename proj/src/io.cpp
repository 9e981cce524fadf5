#include "dopwalk/io.hpp"

#include <fstream>
#include <sstream>

namespace dopwalk {
namespace io {

namespace {

json complex_to_json(const Complex& z) {
  return json{{"re", z.real()}, {"im", z.imag()}};
}

Complex complex_from_json(const json& j) {
  return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

json block_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat block_from_json(const json& j, int coin_dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != coin_dim) {
    throw ConfigParseError("block is not a " + std::to_string(coin_dim) + "x" +
                           std::to_string(coin_dim) + " matrix");
  }
  Mat m(coin_dim, coin_dim);
  for (int r = 0; r < coin_dim; ++r) {
    const json& row = j.at(r);
    if (static_cast<int>(row.size()) != coin_dim) {
      throw ConfigParseError("ragged block row");
    }
    for (int c = 0; c < coin_dim; ++c) {
      m(r, c) = complex_from_json(row.at(c));
    }
  }
  return m;
}

VertexPair pair_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ConfigParseError("vertex pair must be a two-element array");
  }
  return {j.at(0).get<VertexId>(), j.at(1).get<VertexId>()};
}

}  // namespace

json graph_to_json(const DirectedGraph& g) {
  json edges = json::array();
  for (const DirectedEdge& e : g.edges()) {
    edges.push_back(json::array({e.from, e.to}));
  }
  return json{{"vertices", g.vertices()}, {"edges", std::move(edges)}};
}

DirectedGraph graph_from_json(const json& j) {
  try {
    std::vector<VertexId> vertices =
        j.at("vertices").get<std::vector<VertexId>>();
    std::vector<VertexPair> edges;
    for (const json& e : j.at("edges")) {
      edges.push_back(pair_from_json(e));
    }
    return build_graph(vertices, edges);
  } catch (const json::exception& e) {
    throw ConfigParseError(std::string("bad graph JSON: ") + e.what());
  }
}

json coin_family_to_json(const CoinFamily& f) {
  json coins = json::array();
  for (const auto& [edge, v] : f.assign) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      re.push_back(v(i).real());
      im.push_back(v(i).imag());
    }
    coins.push_back(json{{"from", edge.first},
                         {"to", edge.second},
                         {"re", std::move(re)},
                         {"im", std::move(im)}});
  }
  return json{{"coin_dim", f.coin_dim}, {"coins", std::move(coins)}};
}

CoinFamily coin_family_from_json(const json& j) {
  try {
    CoinFamily f;
    f.coin_dim = j.at("coin_dim").get<int>();
    if (f.coin_dim <= 0) throw ConfigParseError("coin_dim must be positive");
    for (const json& c : j.at("coins")) {
      auto re = c.at("re").get<std::vector<double>>();
      auto im = c.at("im").get<std::vector<double>>();
      if (re.size() != im.size() ||
          static_cast<int>(re.size()) != f.coin_dim) {
        throw ConfigParseError("coin vector length does not match coin_dim");
      }
      Vec v(f.coin_dim);
      for (int i = 0; i < f.coin_dim; ++i) v(i) = Complex(re[i], im[i]);
      f.assign[{c.at("from").get<VertexId>(), c.at("to").get<VertexId>()}] =
          std::move(v);
    }
    return f;
  } catch (const json::exception& e) {
    throw ConfigParseError(std::string("bad coin family JSON: ") + e.what());
  }
}

json operator_to_json(const BlockOperator& op) {
  json blocks = json::array();
  for (const auto& [key, m] : op.blocks()) {
    const VertexPair& ket = op.basis().pair_at(key.first);
    const VertexPair& bra = op.basis().pair_at(key.second);
    blocks.push_back(json{{"ket", json::array({ket.first, ket.second})},
                          {"bra", json::array({bra.first, bra.second})},
                          {"block", block_to_json(m)}});
  }
  return blocks;
}

BlockOperator operator_from_json(const json& j, int coin_dim,
                                 const PairBasis& basis) {
  try {
    BlockOperator op(coin_dim, basis);
    for (const json& entry : j) {
      std::size_t ket = basis.index_of(pair_from_json(entry.at("ket")));
      std::size_t bra = basis.index_of(pair_from_json(entry.at("bra")));
      op.set_block(ket, bra, block_from_json(entry.at("block"), coin_dim));
    }
    return op;
  } catch (const json::exception& e) {
    throw ConfigParseError(std::string("bad operator JSON: ") + e.what());
  }
}

json state_to_json(const DensityOperator& rho) {
  return json{{"trace", trace(rho)},
              {"purity", purity(rho)},
              {"blocks", operator_to_json(rho.op)}};
}

DensityOperator state_from_json(const json& j, int coin_dim,
                                const PairBasis& basis) {
  try {
    return DensityOperator{
        operator_from_json(j.at("blocks"), coin_dim, basis)};
  } catch (const json::exception& e) {
    throw ConfigParseError(std::string("bad state JSON: ") + e.what());
  }
}

json distribution_to_json(int t, const VertexDistribution& dist) {
  json probs = json::object();
  for (const auto& [v, p] : dist.probs) {
    probs[std::to_string(v)] = p;
  }
  return json{{"t", t}, {"P", std::move(probs)}};
}

std::string distributions_to_csv(const std::vector<VertexDistribution>& dists) {
  std::ostringstream out;
  out << "t,vertex,probability\n";
  for (std::size_t t = 0; t < dists.size(); ++t) {
    for (const auto& [v, p] : dists[t].probs) {
      out << t << "," << v << "," << json(p).dump() << "\n";
    }
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << content;
  if (!out) throw IoError("failed writing " + path);
}

}  // namespace io
}  // namespace dopwalk
