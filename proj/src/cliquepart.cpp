#include "queens/cliquepart.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace queens {

namespace {

void fill_clique_degrees(const QueensGraph& g, EdgeCliquePartition& p) {
    p.clique_degree.assign(g.order(), 0);
    for (const auto& part : p.parts)
        for (int v : part) ++p.clique_degree[v];
    p.max_clique_degree = 0;
    for (int m : p.clique_degree) p.max_clique_degree = std::max(p.max_clique_degree, m);
}

}  // namespace

EdgeCliquePartition queens_ecp(const QueensGraph& g) {
    const int n = g.n();
    if (n < 2) throw std::invalid_argument("queens_ecp: requires n >= 2");
    EdgeCliquePartition p;

    auto add_line = [&](std::vector<int> cells) {
        if (cells.size() < 2) return;  // no edge, not a part
        std::sort(cells.begin(), cells.end());
        p.covered_edges += (long long)cells.size() * (cells.size() - 1) / 2;
        p.parts.push_back(std::move(cells));
    };

    for (int r = 1; r <= n; ++r) {
        std::vector<int> row;
        for (int c = 1; c <= n; ++c) row.push_back(g.index_of({r, c}));
        add_line(std::move(row));
    }
    for (int c = 1; c <= n; ++c) {
        std::vector<int> col;
        for (int r = 1; r <= n; ++r) col.push_back(g.index_of({r, c}));
        add_line(std::move(col));
    }
    for (int s = 3; s <= 2 * n - 1; ++s) {  // anti-diagonals r + c = s
        std::vector<int> diag;
        for (int r = 1; r <= n; ++r) {
            int c = s - r;
            if (c >= 1 && c <= n) diag.push_back(g.index_of({r, c}));
        }
        add_line(std::move(diag));
    }
    for (int d = -(n - 2); d <= n - 2; ++d) {  // diagonals r - c = d
        std::vector<int> diag;
        for (int r = 1; r <= n; ++r) {
            int c = r - d;
            if (c >= 1 && c <= n) diag.push_back(g.index_of({r, c}));
        }
        add_line(std::move(diag));
    }

    fill_clique_degrees(g, p);
    return p;
}

EdgeCliquePartition verify_ecp(const QueensGraph& g, std::vector<std::vector<int>> parts) {
    const int order = g.order();
    // edge key for coverage bookkeeping
    auto key = [order](int u, int v) {
        return (long long)std::min(u, v) * order + std::max(u, v);
    };
    std::unordered_set<long long> seen;
    long long covered = 0;

    for (size_t pi = 0; pi < parts.size(); ++pi) {
        auto& part = parts[pi];
        std::sort(part.begin(), part.end());
        if (part.size() < 2)
            throw std::runtime_error("verify_ecp: part " + std::to_string(pi) +
                                     " has fewer than two vertices");
        for (size_t i = 0; i < part.size(); ++i) {
            if (part[i] < 0 || part[i] >= order)
                throw std::runtime_error("verify_ecp: part " + std::to_string(pi) +
                                         " contains an out-of-range vertex");
            if (i > 0 && part[i] == part[i - 1])
                throw std::runtime_error("verify_ecp: part " + std::to_string(pi) +
                                         " repeats a vertex");
            for (size_t j = i + 1; j < part.size(); ++j) {
                if (!g.adjacent(part[i], part[j]))
                    throw std::runtime_error("verify_ecp: part " + std::to_string(pi) +
                                             " is not a clique (" + std::to_string(part[i] + 1) +
                                             "," + std::to_string(part[j] + 1) + " not adjacent)");
                if (!seen.insert(key(part[i], part[j])).second)
                    throw std::runtime_error("verify_ecp: part " + std::to_string(pi) +
                                             " overlaps an earlier part on edge (" +
                                             std::to_string(part[i] + 1) + "," +
                                             std::to_string(part[j] + 1) + ")");
                ++covered;
            }
        }
    }
    if (covered != g.edges())
        throw std::runtime_error("verify_ecp: parts cover " + std::to_string(covered) +
                                 " edges of " + std::to_string(g.edges()));

    EdgeCliquePartition p;
    p.parts = std::move(parts);
    p.covered_edges = covered;
    fill_clique_degrees(g, p);
    return p;
}

RatMatrix minus_m_eigen_system(const QueensGraph& g, const EdgeCliquePartition& p,
                               std::optional<int> m_opt) {
    const int m = m_opt.value_or(p.max_clique_degree);
    const int order = g.order();
    std::vector<int> zero_vertices;
    for (int v = 0; v < order; ++v)
        if (p.clique_degree[v] != m) zero_vertices.push_back(v);

    RatMatrix sys(int(p.parts.size() + zero_vertices.size()), order);
    int row = 0;
    for (const auto& part : p.parts) {
        for (int v : part) sys(row, v) = 1;
        ++row;
    }
    for (int v : zero_vertices) {
        sys(row, v) = 1;
        ++row;
    }
    return sys;
}

RatMatrix queens_minus4_system(const QueensGraph& g) {
    return minus_m_eigen_system(g, queens_ecp(g), 4);
}

ContentBoundReport content_lower_bound(const QueensGraph& g, double lambda_min,
                                       const EdgeCliquePartition& p, double tol) {
    (void)g;
    ContentBoundReport r;
    r.lambda_min = lambda_min;
    r.max_clique_degree = p.max_clique_degree;
    r.parts = p.parts.size();
    r.holds = (-lambda_min <= double(p.max_clique_degree) + tol) &&
              (p.max_clique_degree <= int(p.parts.size()));
    return r;
}

}  // namespace queens
