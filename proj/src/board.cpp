#include "queens/board.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace queens {

QueensGraph QueensGraph::build(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("build_graph: n must be positive");
    if (n > max_n)
        throw std::invalid_argument("build_graph: n = " + std::to_string(n) +
                                    " exceeds the configured cap " + std::to_string(max_n));
    QueensGraph g;
    g.n_ = n;
    const int order = n * n;
    g.words_ = size_t((order + 63) / 64);
    g.nbrs_.assign(order, {});
    g.bits_.assign(size_t(order) * g.words_, 0);

    auto link = [&g](int u, int v) {
        g.nbrs_[u].push_back(v);
        g.bits_[size_t(u) * g.words_ + size_t(v >> 6)] |= uint64_t(1) << (v & 63);
    };

    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            const int v = g.index_of({r, c});
            for (int j = 1; j <= n; ++j)
                if (j != c) link(v, g.index_of({r, j}));
            for (int i = 1; i <= n; ++i)
                if (i != r) link(v, g.index_of({i, c}));
            for (int i = 1; i <= n; ++i) {
                if (i == r) continue;
                int js = c + (r - i);  // same anti-diagonal: i + js = r + c
                if (js >= 1 && js <= n) link(v, g.index_of({i, js}));
                int jd = c - (r - i);  // same diagonal: i - jd = r - c
                if (jd >= 1 && jd <= n) link(v, g.index_of({i, jd}));
            }
            std::sort(g.nbrs_[v].begin(), g.nbrs_[v].end());
            g.edges_ += g.nbrs_[v].size();
        }
    }
    g.edges_ /= 2;
    return g;
}

IntMatrix QueensGraph::adjacency_matrix() const {
    const int d = order();
    IntMatrix a(d, d);
    for (int v = 0; v < d; ++v)
        for (int u : nbrs_[v]) a(v, u) = 1;
    return a;
}

std::vector<double> QueensGraph::adjacency_dense_double() const {
    const int d = order();
    std::vector<double> a(size_t(d) * d, 0.0);
    for (int v = 0; v < d; ++v)
        for (int u : nbrs_[v]) a[size_t(v) * d + u] = 1.0;
    return a;
}

Int edge_count_formula(int n) {
    if (n < 1) throw std::invalid_argument("edge_count_formula: n must be positive");
    Int nn = n;
    Int num = nn * (nn - 1) * (5 * nn - 1);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), Int(3).get_mpz_t());
    if (r != 0) throw std::logic_error("edge_count_formula: not divisible by 3");
    return q;
}

Rat average_degree(int n) {
    if (n < 1) throw std::invalid_argument("average_degree: n must be positive");
    Rat r(Int(2) * (n - 1) * (5 * n - 1), Int(3) * n);
    r.canonicalize();
    return r;
}

int ring_index(int n, BoardCoord c) {
    return std::min(std::min(c.row, c.col), std::min(n + 1 - c.row, n + 1 - c.col));
}

int degree_formula(int n, BoardCoord c) {
    if (c.row < 1 || c.row > n || c.col < 1 || c.col > n)
        throw std::invalid_argument("degree_formula: coordinate out of range");
    return 3 * (n - 1) + 2 * (ring_index(n, c) - 1);
}

int min_degree_formula(int n) { return 3 * (n - 1); }

int max_degree_formula(int n) { return n % 2 == 0 ? 4 * n - 5 : 4 * n - 4; }

PeripheralPartition peripheral_partition(int n) {
    if (n < 1) throw std::invalid_argument("peripheral_partition: n must be positive");
    PeripheralPartition p;
    p.n = n;
    p.cells.assign((n + 1) / 2, {});
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            p.cells[ring_index(n, {r, c}) - 1].push_back((r - 1) * n + (c - 1));
    return p;
}

std::pair<Rat, int> index_bounds(int n) {
    if (n < 2) throw std::invalid_argument("index_bounds: requires n >= 2");
    return {average_degree(n), max_degree_formula(n)};
}

int diameter(const QueensGraph& g) {
    const int order = g.order();
    int diam = 0;
    std::vector<int> dist(order);
    for (int s = 0; s < order; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    q.push_back(u);
                }
            }
        }
        for (int v = 0; v < order; ++v) {
            if (dist[v] < 0) throw std::logic_error("diameter: graph is disconnected");
            diam = std::max(diam, dist[v]);
        }
    }
    return diam;
}

}  // namespace queens
