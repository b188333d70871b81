#include "json_io.hpp"

#include <fstream>

namespace qlimits::tools {

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw SchemaError("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.front().size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw SchemaError("matrix rows must have equal length");
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& z = row[c];
      if (z.is_number())
        m(r, c) = Complex(z.get<double>(), 0.0);
      else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number())
        m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
      else
        throw SchemaError("matrix entries must be numbers or [re, im] pairs");
    }
  }
  return m;
}

Json state_to_json(const DensityMatrix& rho) {
  Json j;
  j["n"] = rho.shape().n;
  j["d"] = rho.shape().d;
  j["matrix"] = matrix_to_json(rho.matrix());
  return j;
}

DensityMatrix state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("matrix"))
    throw SchemaError("state needs fields n and matrix");
  RegisterShape shape{j.at("n").get<int>(), j.value("d", 2)};
  return DensityMatrix(shape, matrix_from_json(j.at("matrix")));
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw SchemaError("graph needs fields n and edges");
  std::vector<Edge> edges;
  for (const Json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw SchemaError("edges must be [a, b] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j.at("n").get<int>(), std::move(edges));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace qlimits::tools
