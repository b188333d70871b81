#pragma once

#include "qlimits/graph.hpp"
#include "qlimits/quantum.hpp"
#include "report.hpp"

namespace qlimits::tools {

// Complex entries are [re, im] pairs; matrices are arrays of rows.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// {"n": .., "d": .., "matrix": [[[re, im], ...], ...]}
Json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const Json& j);

// {"n": .., "edges": [[a, b], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace qlimits::tools
