#include "queens/equipart.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "queens/spectra.hpp"

namespace queens {

EquitablePartition algorithm1_partition(int n) {
    if (n < 3) throw std::invalid_argument("algorithm1_partition: requires n >= 3");
    const int m = (n + 1) / 2;
    EquitablePartition p;
    p.n = n;
    p.num_cells = m * (m + 1) / 2;
    p.cell_of.resize(size_t(n) * n);
    p.cells.assign(p.num_cells, {});
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int rf = std::min(i, n + 1 - i);
            const int cf = std::min(j, n + 1 - j);
            const int a = std::min(rf, cf);
            const int b = std::max(rf, cf);
            const int cell = b * (b - 1) / 2 + (a - 1);
            const int v = (i - 1) * n + (j - 1);
            p.cell_of[v] = cell;
            p.cells[cell].push_back(v);
        }
    }
    return p;
}

EquitablePartition trivial_partition(const QueensGraph& g) {
    EquitablePartition p;
    p.n = g.n();
    p.num_cells = g.order();
    p.cell_of.resize(g.order());
    p.cells.assign(g.order(), {});
    for (int v = 0; v < g.order(); ++v) {
        p.cell_of[v] = v;
        p.cells[v] = {v};
    }
    return p;
}

EquitableCheck verify_equitable(const QueensGraph& g, const EquitablePartition& p) {
    const int k = p.num_cells;
    std::vector<int> counts(k);
    std::vector<std::vector<int>> reference(k);  // per cell, counts of its first vertex
    std::vector<int> rep(k, -1);

    for (int cell = 0; cell < k; ++cell) {
        for (int v : p.cells[cell]) {
            std::fill(counts.begin(), counts.end(), 0);
            for (int u : g.neighbors(v)) ++counts[p.cell_of[u]];
            if (rep[cell] < 0) {
                rep[cell] = v;
                reference[cell] = counts;
                continue;
            }
            for (int j = 0; j < k; ++j) {
                if (counts[j] != reference[cell][j])
                    return {false, rep[cell], v, j};
            }
        }
    }
    return {};
}

IntMatrix characteristic_matrix(const EquitablePartition& p) {
    IntMatrix c(int(p.cell_of.size()), p.num_cells);
    for (size_t v = 0; v < p.cell_of.size(); ++v) c(int(v), p.cell_of[v]) = 1;
    return c;
}

IntMatrix divisor_matrix(const QueensGraph& g, const EquitablePartition& p) {
    EquitableCheck chk = verify_equitable(g, p);
    if (!chk.ok)
        throw std::runtime_error("divisor_matrix: partition is not equitable (vertices " +
                                 std::to_string(chk.vertex_a + 1) + "," +
                                 std::to_string(chk.vertex_b + 1) + " differ into cell " +
                                 std::to_string(chk.cell) + ")");
    const int k = p.num_cells;
    IntMatrix b(k, k);
    for (int cell = 0; cell < k; ++cell) {
        if (p.cells[cell].empty())
            throw std::runtime_error("divisor_matrix: empty cell " + std::to_string(cell));
        int v = p.cells[cell][0];
        for (int u : g.neighbors(v)) b(cell, p.cell_of[u]) += 1;
    }
    return b;
}

bool verify_ac_equals_cb(const IntMatrix& a, const IntMatrix& c, const IntMatrix& b) {
    return int_mul(a, c) == int_mul(c, b);
}

ChainReport divisibility_chain(int n, int exact_cap_dim) {
    if (n < 2) throw std::invalid_argument("divisibility_chain: requires n >= 2");
    QueensGraph g = build_graph(n);
    if (g.order() > exact_cap_dim)
        throw std::invalid_argument("divisibility_chain: order exceeds the exact cap");

    EquitablePartition p = (n >= 3) ? algorithm1_partition(n) : trivial_partition(g);
    IntMatrix a = g.adjacency_matrix();
    IntMatrix b = divisor_matrix(g, p);

    ChainReport r;
    r.n = n;
    r.char_a = char_poly(a);
    r.p_b = char_poly(b);
    r.main = main_poly(a);
    r.num_main = r.main.degree();
    r.main_divides_pb = poly_divides(r.main, r.p_b);
    r.pb_divides_char = poly_divides(r.p_b, r.char_a);
    if (!r.main_divides_pb)
        throw std::runtime_error("divisibility_chain: M_G does not divide p_B at n = " +
                                 std::to_string(n));
    if (!r.pb_divides_char)
        throw std::runtime_error("divisibility_chain: p_B does not divide char(A) at n = " +
                                 std::to_string(n));
    return r;
}

std::vector<double> divisor_spectrum(const IntMatrix& b, double eps) {
    IntPoly p = char_poly(b);
    std::vector<double> roots = real_roots(p, eps);
    if (int(roots.size()) != b.rows())
        throw std::runtime_error("divisor_spectrum: non-real eigenvalues in a divisor matrix");
    return roots;
}

EigAgreement largest_eig_agreement(const QueensGraph& g, const IntMatrix& b, double tol) {
    EigAgreement r;
    r.mu1_a = dense_spectrum(g, {}).eigenvalues.front();
    std::vector<double> roots = divisor_spectrum(b);
    r.mu1_b = roots.back();
    r.within = std::fabs(r.mu1_a - r.mu1_b) <= tol;
    return r;
}

}  // namespace queens
