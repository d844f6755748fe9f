// Serialization for the documented external formats (docs/formats.md):
// edge-list CSV, JSON summaries/reports, polynomial coefficient arrays as
// decimal strings.
#ifndef QUEENS_IO_HPP
#define QUEENS_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "queens/board.hpp"
#include "queens/cliquepart.hpp"
#include "queens/combinat.hpp"
#include "queens/equipart.hpp"
#include "queens/exactlin.hpp"
#include "queens/spectra.hpp"

namespace queens {

using json = nlohmann::json;

// "u,v" per line, u < v, 1-based linear labels.
std::string edge_list_csv(const QueensGraph& g);

json graph_summary_json(const QueensGraph& g);

// Ascending-degree coefficients as decimal strings.
json poly_json(const IntPoly& p);

json eigen_report_json(const EigenReport& r);

// "n,lambda,multiplicity,certified"
std::string eigen_report_csv(const EigenReport& r);

json ecp_json(const QueensGraph& g, const EdgeCliquePartition& p);

json subset_result_json(const std::string& problem, int n, const VertexSubsetResult& r);

json domination_result_json(int n, const DominationResult& r);

// "i,j,value" rows with n = 9i + j (the paper's table layout).
std::string gamma_table_csv(const std::vector<std::pair<int, int>>& gamma_by_n);

json partition_json(const EquitablePartition& p);

std::string divisor_matrix_csv(const IntMatrix& b);

json chain_report_json(const ChainReport& r);

json scan_result_json(const IntegerScanResult& r);

}  // namespace queens

#endif
