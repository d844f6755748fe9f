#include <doctest.h>

#include "queens/board.hpp"

using namespace queens;

namespace {

bool same_line(int n, int u, int v) {
    int r1 = u / n, c1 = u % n, r2 = v / n, c2 = v % n;
    return u != v && (r1 == r2 || c1 == c2 || r1 + c1 == r2 + c2 || r1 - c1 == r2 - c2);
}

// independent of the builder: every pair tested against the adjacency rule
long long brute_force_edges(int n) {
    long long e = 0;
    for (int u = 0; u < n * n; ++u)
        for (int v = u + 1; v < n * n; ++v)
            if (same_line(n, u, v)) ++e;
    return e;
}

}  // namespace

TEST_CASE("build_graph basics") {
    CHECK_THROWS(build_graph(0));
    CHECK_THROWS(build_graph(200));  // default cap

    QueensGraph g1 = build_graph(1);
    CHECK(g1.order() == 1);
    CHECK(g1.edges() == 0);

    QueensGraph g2 = build_graph(2);
    CHECK(g2.edges() == 6);  // K4
    for (int v = 0; v < 4; ++v) CHECK(g2.degree(v) == 3);

    CHECK(build_graph(4).edges() == 76);
}

TEST_CASE("adjacency is symmetric, irreflexive and matches the line rule") {
    for (int n : {1, 2, 3, 5, 8}) {
        QueensGraph g = build_graph(n);
        for (int u = 0; u < g.order(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v = 0; v < g.order(); ++v) {
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
                CHECK(g.adjacent(u, v) == same_line(n, u, v));
            }
        }
    }
}

TEST_CASE("edge count formula vs brute force") {
    CHECK(edge_count_formula(1) == 0);
    CHECK(edge_count_formula(2) == 6);
    CHECK(edge_count_formula(8) == 728);
    for (int n = 1; n <= 12; ++n) {
        CHECK(Int(std::to_string(brute_force_edges(n))) == edge_count_formula(n));
        CHECK(Int(std::to_string(build_graph(n).edges())) == edge_count_formula(n));
    }
}

TEST_CASE("average degree") {
    CHECK(average_degree(1) == 0);
    CHECK(average_degree(2) == 3);
    // 2 * e / n^2 with e = brute-force count (160 at n=5)
    CHECK(brute_force_edges(5) == 160);
    CHECK(average_degree(5) == Rat(64, 5));
}

TEST_CASE("degree formula matches adjacency degrees") {
    CHECK(degree_formula(5, {1, 1}) == 12);
    CHECK(degree_formula(5, {3, 3}) == 16);
    CHECK(degree_formula(4, {2, 2}) == 11);  // ring 2 of the even board: 4n-5

    for (int n = 1; n <= 20; ++n) {
        QueensGraph g = build_graph(n);
        long long degree_sum = 0;
        for (int v = 0; v < g.order(); ++v) {
            int d = degree_formula(n, g.coord_of(v));
            CHECK(d == g.degree(v));
            CHECK(d >= min_degree_formula(n));
            if (n >= 2) CHECK(d <= max_degree_formula(n));
            degree_sum += d;
        }
        CHECK(Int(std::to_string(degree_sum)) == 2 * edge_count_formula(n));  // handshake
    }
}

TEST_CASE("peripheral partition cardinalities") {
    auto sizes = [](const PeripheralPartition& p) {
        std::vector<int> s;
        for (const auto& cell : p.cells) s.push_back(int(cell.size()));
        return s;
    };
    CHECK(sizes(peripheral_partition(5)) == std::vector<int>{16, 8, 1});
    CHECK(sizes(peripheral_partition(4)) == std::vector<int>{12, 4});
    CHECK(sizes(peripheral_partition(1)) == std::vector<int>{1});

    for (int n = 1; n <= 20; ++n) {
        PeripheralPartition p = peripheral_partition(n);
        const int last = int(p.cells.size());
        CHECK(last == (n + 1) / 2);
        int total = 0;
        for (int i = 1; i <= last; ++i) {
            int size = int(p.cells[i - 1].size());
            total += size;
            if (i < last)
                CHECK(size == 4 * (n - (2 * i - 1)));
            else
                CHECK(size == (n % 2 == 0 ? 4 : 1));
        }
        CHECK(total == n * n);
    }
}

TEST_CASE("index bounds") {
    CHECK_THROWS(index_bounds(1));
    CHECK(index_bounds(2) == std::pair<Rat, int>{Rat(3), 3});
    CHECK(index_bounds(6) == std::pair<Rat, int>{Rat(145, 9), 19});
    CHECK(index_bounds(5) == std::pair<Rat, int>{Rat(64, 5), 16});
}

TEST_CASE("diameter is 1 up to n=2 and 2 afterwards") {
    CHECK(diameter(build_graph(1)) == 0);  // single vertex
    CHECK(diameter(build_graph(2)) == 1);
    for (int n = 3; n <= 20; ++n) CHECK(diameter(build_graph(n)) == 2);
}

TEST_CASE("linear labels follow the row-major board reading") {
    QueensGraph g = build_graph(4);
    CHECK(g.index_of({1, 1}) == 0);
    CHECK(g.linear_label(g.index_of({1, 1})) == 1);
    CHECK(g.linear_label(g.index_of({4, 4})) == 16);
    CHECK(g.linear_label(g.index_of({2, 3})) == 7);
    for (int v = 0; v < g.order(); ++v) CHECK(g.index_of(g.coord_of(v)) == v);
}
