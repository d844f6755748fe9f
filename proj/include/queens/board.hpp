// Board geometry and the n-Queens graph: n^2 squares, edges between squares
// sharing a row, column or diagonal.
#ifndef QUEENS_BOARD_HPP
#define QUEENS_BOARD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "queens/exactlin.hpp"

namespace queens {

inline constexpr int kDefaultMaxN = 128;

// 1-based matrix coordinates: (row, col) with row 1 at the top.
struct BoardCoord {
    int row = 0;
    int col = 0;
    bool operator==(const BoardCoord&) const = default;
};

class QueensGraph {
public:
    // Builds Q(n). Rejects n = 0 and anything above max_n (the dense
    // bit-matrix is n^2 x n^2).
    static QueensGraph build(int n, int max_n = kDefaultMaxN);

    int n() const { return n_; }
    int order() const { return n_ * n_; }
    long long edges() const { return edges_; }

    int degree(int v) const { return int(nbrs_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }

    bool adjacent(int u, int v) const {
        return (bits_[size_t(u) * words_ + size_t(v >> 6)] >> (v & 63)) & 1u;
    }

    // 0-based vertex index <-> 1-based board coordinate. The 1-based linear
    // label used in all exports is index + 1 (left-to-right, top-to-bottom).
    int index_of(BoardCoord c) const { return (c.row - 1) * n_ + (c.col - 1); }
    BoardCoord coord_of(int v) const { return {v / n_ + 1, v % n_ + 1}; }
    int linear_label(int v) const { return v + 1; }

    IntMatrix adjacency_matrix() const;
    std::vector<double> adjacency_dense_double() const;

private:
    QueensGraph() = default;
    int n_ = 0;
    long long edges_ = 0;
    size_t words_ = 0;  // 64-bit words per bit-matrix row
    std::vector<std::vector<int>> nbrs_;
    std::vector<uint64_t> bits_;
};

inline QueensGraph build_graph(int n, int max_n = kDefaultMaxN) {
    return QueensGraph::build(n, max_n);
}

// n(n-1)(5n-1)/3, always exact.
Int edge_count_formula(int n);

// 2(n-1)(5n-1)/(3n) as an exact rational.
Rat average_degree(int n);

// Peripheral ring index of a square, 1 = outermost.
int ring_index(int n, BoardCoord c);

// Degree by the closed form 3(n-1) + 2(ring - 1).
int degree_formula(int n, BoardCoord c);

int min_degree_formula(int n);
int max_degree_formula(int n);  // 4n-5 for even n, 4n-4 for odd n

struct PeripheralPartition {
    int n = 0;
    std::vector<std::vector<int>> cells;  // outermost ring first, vertex indices
};

PeripheralPartition peripheral_partition(int n);

// (average degree, max degree): the window containing the largest eigenvalue.
// Requires n >= 2.
std::pair<Rat, int> index_bounds(int n);

int diameter(const QueensGraph& g);  // BFS; intended for small n

}  // namespace queens

#endif
