#include "queens/io.hpp"

#include <map>
#include <sstream>

namespace queens {

std::string edge_list_csv(const QueensGraph& g) {
    std::ostringstream os;
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) os << (v + 1) << "," << (u + 1) << "\n";
    return os.str();
}

json graph_summary_json(const QueensGraph& g) {
    const int n = g.n();
    Rat avg = average_degree(n);
    return json{{"n", n},
                {"vertices", g.order()},
                {"edges", edge_count_formula(n).get_str()},
                {"min_degree", min_degree_formula(n)},
                {"max_degree", n == 1 ? 0 : max_degree_formula(n)},
                {"avg_degree", avg.get_str()}};
}

json poly_json(const IntPoly& p) {
    json arr = json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

json eigen_report_json(const EigenReport& r) {
    json clusters = json::array();
    for (const EigenCluster& c : r.clusters)
        clusters.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}});
    json certs = json::array();
    for (const ExactCertificate& c : r.certificates)
        certs.push_back({{"eigenvalue", c.eigenvalue},
                         {"multiplicity_lower_bound", c.multiplicity_lower_bound},
                         {"method", c.method}});
    return json{{"n", r.n},
                {"eigenvalues", r.eigenvalues},
                {"clusters", clusters},
                {"residual_bound", r.residual_bound},
                {"certificates", certs}};
}

std::string eigen_report_csv(const EigenReport& r) {
    std::ostringstream os;
    os << "n,lambda,multiplicity,certified\n";
    for (const EigenCluster& c : r.clusters) {
        bool certified = false;
        for (const ExactCertificate& cert : r.certificates)
            if (std::abs(c.value - double(cert.eigenvalue)) < 1e-6 &&
                cert.multiplicity_lower_bound == c.multiplicity)
                certified = true;
        os << r.n << "," << c.value << "," << c.multiplicity << "," << (certified ? 1 : 0)
           << "\n";
    }
    return os.str();
}

json ecp_json(const QueensGraph& g, const EdgeCliquePartition& p) {
    json parts = json::array();
    for (const auto& part : p.parts) {
        json labels = json::array();
        for (int v : part) labels.push_back(g.linear_label(v));
        parts.push_back(labels);
    }
    std::map<int, int> histogram;
    for (int m : p.clique_degree) ++histogram[m];
    json hist = json::object();
    for (auto [m, count] : histogram) hist[std::to_string(m)] = count;
    return json{{"n", g.n()},
                {"parts", parts},
                {"clique_degree_histogram", hist},
                {"max_clique_degree", p.max_clique_degree}};
}

json subset_result_json(const std::string& problem, int n, const VertexSubsetResult& r) {
    json witness = json::array();
    for (int v : r.vertices) witness.push_back(v + 1);
    return json{{"problem", problem}, {"n", n},       {"value", r.value},
                {"optimal", r.optimal}, {"witness", witness}, {"nodes", r.nodes},
                {"millis", r.millis}};
}

json domination_result_json(int n, const DominationResult& r) {
    json witness = json::array();
    for (int v : r.witness) witness.push_back(v + 1);
    json out{{"problem", "domination"}, {"n", n},       {"optimal", r.exact},
             {"witness", witness},      {"nodes", r.nodes}, {"millis", r.millis}};
    if (r.exact) {
        out["value"] = r.upper;
    } else {
        out["lower"] = r.lower;
        out["upper"] = r.upper;
    }
    return out;
}

std::string gamma_table_csv(const std::vector<std::pair<int, int>>& gamma_by_n) {
    std::ostringstream os;
    os << "i,j,value\n";
    for (auto [n, gamma] : gamma_by_n) os << n / 9 << "," << n % 9 << "," << gamma << "\n";
    return os.str();
}

json partition_json(const EquitablePartition& p) {
    std::vector<int> sizes;
    for (const auto& cell : p.cells) sizes.push_back(int(cell.size()));
    return json{{"n", p.n}, {"K", p.num_cells}, {"cell_of", p.cell_of}, {"cell_sizes", sizes}};
}

std::string divisor_matrix_csv(const IntMatrix& b) {
    std::ostringstream os;
    for (int i = 0; i < b.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            if (j) os << ",";
            os << b(i, j).get_str();
        }
        os << "\n";
    }
    return os.str();
}

json chain_report_json(const ChainReport& r) {
    return json{{"n", r.n},
                {"char_poly", poly_json(r.char_a)},
                {"divisor_char_poly", poly_json(r.p_b)},
                {"main_poly", poly_json(r.main)},
                {"main_divides_divisor", r.main_divides_pb},
                {"divisor_divides_char", r.pb_divides_char},
                {"num_main_eigenvalues", r.num_main}};
}

json scan_result_json(const IntegerScanResult& r) {
    json vals = json::array();
    for (const auto& [value, mult] : r.eigenvalues)
        vals.push_back({{"value", value.get_str()}, {"multiplicity", mult}});
    return json{{"n", r.n}, {"exact", r.exact_path}, {"integer_eigenvalues", vals}};
}

}  // namespace queens
