// Edge clique partitions and the least-eigenvalue machinery they induce:
// every eigenvalue of G is >= -m_G(P), with equality characterized by a
// linear system over the parts.
#ifndef QUEENS_CLIQUEPART_HPP
#define QUEENS_CLIQUEPART_HPP

#include <optional>
#include <string>
#include <vector>

#include "queens/board.hpp"
#include "queens/exactlin.hpp"

namespace queens {

struct EdgeCliquePartition {
    // Each part is the vertex set of its clique (sorted 0-based indices);
    // the edge set of a part is all pairs inside it.
    std::vector<std::vector<int>> parts;
    std::vector<int> clique_degree;  // m_v(P)
    int max_clique_degree = 0;       // m_G(P)
    long long covered_edges = 0;
};

// The board-line ECP of Q(n): n rows, n columns, 2n-3 sum-diagonals and
// 2n-3 difference-diagonals (single-square corner diagonals carry no edge
// and are not parts). Requires n >= 2.
EdgeCliquePartition queens_ecp(const QueensGraph& g);

// Validates that the given parts are cliques whose edge sets partition E(G),
// then fills in the clique degrees. Throws with the first violated part.
EdgeCliquePartition verify_ecp(const QueensGraph& g, std::vector<std::vector<int>> parts);

inline long eigen_lower_bound(const EdgeCliquePartition& p) { return -long(p.max_clique_degree); }

// Coefficient matrix whose kernel is the (-m)-eigenspace: one row per part
// (the clique's entries sum to zero) plus one zero row per vertex whose
// clique degree differs from m. By default m = m_G(P).
RatMatrix minus_m_eigen_system(const QueensGraph& g, const EdgeCliquePartition& p,
                               std::optional<int> m = std::nullopt);

// The Theorem-level instantiation for Q(n): the queens ECP with m fixed at 4,
// i.e. row sums, column sums, both diagonal families and the four corner
// conditions — (6n-2) x n^2.
RatMatrix queens_minus4_system(const QueensGraph& g);

struct ContentBoundReport {
    double lambda_min = 0;
    int max_clique_degree = 0;
    size_t parts = 0;
    bool holds = false;  // -lambda_min <= m_G(P) <= |P| within tolerance
};

ContentBoundReport content_lower_bound(const QueensGraph& g, double lambda_min,
                                       const EdgeCliquePartition& p, double tol = 1e-9);

}  // namespace queens

#endif
