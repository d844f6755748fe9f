#include <doctest.h>

#include <cmath>
#include <random>

#include "queens/equipart.hpp"
#include "queens/spectra.hpp"

using namespace queens;

TEST_CASE("algorithm 1 reproduces the n=6 labeling square by square") {
    EquitablePartition p = algorithm1_partition(6);
    const int expected[36] = {
        0, 1, 3, 3, 1, 0,
        1, 2, 4, 4, 2, 1,
        3, 4, 5, 5, 4, 3,
        3, 4, 5, 5, 4, 3,
        1, 2, 4, 4, 2, 1,
        0, 1, 3, 3, 1, 0,
    };
    REQUIRE(p.cell_of.size() == 36);
    for (int v = 0; v < 36; ++v) CHECK(p.cell_of[v] == expected[v]);
    CHECK(p.num_cells == 6);
    CHECK(p.cell_of[2 * 6 + 1] == 4);  // square (3,2)
}

TEST_CASE("algorithm 1 cell structure at n=3") {
    EquitablePartition p = algorithm1_partition(3);
    CHECK(p.num_cells == 3);
    CHECK(p.cells[0].size() == 4);  // corners
    CHECK(p.cells[1].size() == 4);  // edge midpoints
    CHECK(p.cells[2].size() == 1);  // center
    CHECK(p.cell_of[4] == 2);       // (2,2)
    CHECK_THROWS(algorithm1_partition(2));
}

TEST_CASE("partition invariants for 3 <= n <= 20") {
    for (int n = 3; n <= 20; ++n) {
        QueensGraph g = build_graph(n);
        EquitablePartition p = algorithm1_partition(n);
        const int m = (n + 1) / 2;
        CHECK(p.num_cells == m * (m + 1) / 2);
        CHECK(verify_equitable(g, p).ok);

        int covered = 0;
        bool has_singleton = false;
        for (const auto& cell : p.cells) {
            size_t s = cell.size();
            CHECK((s == 1 || s == 4 || s == 8));
            if (s == 1) has_singleton = true;
            covered += int(s);
        }
        CHECK(covered == n * n);
        CHECK(has_singleton == (n % 2 == 1));  // only odd boards have a center
    }
}

TEST_CASE("verify_equitable accepts the trivial partition and rejects random splits") {
    QueensGraph g = build_graph(4);
    CHECK(verify_equitable(g, trivial_partition(g)).ok);

    std::mt19937 rng(123);
    bool found_uneven = false;
    for (int attempt = 0; attempt < 32 && !found_uneven; ++attempt) {
        EquitablePartition p;
        p.n = 4;
        p.num_cells = 2;
        p.cell_of.assign(16, 0);
        p.cells.assign(2, {});
        for (int v = 0; v < 16; ++v) {
            p.cell_of[v] = int(rng() % 2);
            p.cells[p.cell_of[v]].push_back(v);
        }
        if (p.cells[0].empty() || p.cells[1].empty()) continue;
        EquitableCheck chk = verify_equitable(g, p);
        if (!chk.ok) {
            found_uneven = true;
            // witness is real: the two vertices differ into the named cell
            auto count_into = [&](int v) {
                int c = 0;
                for (int u : g.neighbors(v))
                    if (p.cell_of[u] == chk.cell) ++c;
                return c;
            };
            CHECK(p.cell_of[chk.vertex_a] == p.cell_of[chk.vertex_b]);
            CHECK(count_into(chk.vertex_a) != count_into(chk.vertex_b));
        }
    }
    CHECK(found_uneven);
}

TEST_CASE("divisor matrix of the n=6 partition matches the worked example") {
    QueensGraph g = build_graph(6);
    EquitablePartition p = algorithm1_partition(6);
    IntMatrix b = divisor_matrix(g, p);
    const int expected[6][6] = {
        {3, 4, 2, 4, 0, 2},
        {2, 4, 2, 2, 4, 1},
        {2, 4, 3, 2, 4, 2},
        {2, 2, 1, 4, 4, 2},
        {0, 4, 2, 4, 4, 3},
        {2, 2, 2, 4, 6, 3},
    };
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(b(i, j) == expected[i][j]);
}

TEST_CASE("trivial partition gives back the adjacency matrix") {
    QueensGraph g = build_graph(3);
    EquitablePartition p = trivial_partition(g);
    CHECK(divisor_matrix(g, p) == g.adjacency_matrix());
    CHECK(verify_ac_equals_cb(g.adjacency_matrix(), characteristic_matrix(p),
                              divisor_matrix(g, p)));
}

TEST_CASE("AC = CB exactly, and perturbing B breaks it") {
    for (int n : {3, 4, 6, 9}) {
        QueensGraph g = build_graph(n);
        EquitablePartition p = algorithm1_partition(n);
        IntMatrix a = g.adjacency_matrix();
        IntMatrix c = characteristic_matrix(p);
        IntMatrix b = divisor_matrix(g, p);
        CHECK(verify_ac_equals_cb(a, c, b));
        IntMatrix corrupted = b;
        corrupted(0, 0) += 1;
        CHECK_FALSE(verify_ac_equals_cb(a, c, corrupted));
    }
}

TEST_CASE("divisor char polynomial at n=6 is the printed polynomial") {
    QueensGraph g = build_graph(6);
    IntMatrix b = divisor_matrix(g, algorithm1_partition(6));
    IntPoly pb = char_poly(b);
    std::vector<Int> expected{-8, 580, -686, 109, 73, -21, 1};
    CHECK(pb.coeffs() == expected);

    // p_B = M_Q(6): the main polynomial computed independently from A
    CHECK(main_poly(g.adjacency_matrix()) == pb);
}

TEST_CASE("sigma(B) at n=6 matches the printed two-decimal values") {
    QueensGraph g = build_graph(6);
    IntMatrix b = divisor_matrix(g, algorithm1_partition(6));
    std::vector<double> roots = divisor_spectrum(b);
    REQUIRE(roots.size() == 6);
    const double printed[6] = {-2.91, 0.01, 1.17, 2.85, 3.63, 16.24};
    for (int i = 0; i < 6; ++i) CHECK(std::fabs(roots[i] - printed[i]) < 0.005);
}

TEST_CASE("divisibility chain") {
    ChainReport r6 = divisibility_chain(6);
    CHECK(r6.main == r6.p_b);
    CHECK(r6.num_main == 6);

    ChainReport r2 = divisibility_chain(2);
    CHECK(r2.main == IntPoly(std::vector<Int>{-3, 1}));
    CHECK(r2.pb_divides_char);

    for (int n = 3; n <= 8; ++n) {
        ChainReport r = divisibility_chain(n);
        CHECK(r.main_divides_pb);
        CHECK(r.pb_divides_char);
        CHECK(poly_divides(r.main, char_poly(
                  divisor_matrix(build_graph(n), n >= 3 ? algorithm1_partition(n)
                                                        : trivial_partition(build_graph(n))))));
    }
}

TEST_CASE("largest eigenvalue agreement between graph and divisor matrix") {
    QueensGraph g6 = build_graph(6);
    IntMatrix b6 = divisor_matrix(g6, algorithm1_partition(6));
    EigAgreement a6 = largest_eig_agreement(g6, b6, 1e-8);
    CHECK(a6.within);
    CHECK(a6.mu1_a == doctest::Approx(16.2449570).epsilon(1e-6));

    QueensGraph g5 = build_graph(5);
    IntMatrix b5 = divisor_matrix(g5, algorithm1_partition(5));
    CHECK(largest_eig_agreement(g5, b5, 1e-8).within);

    QueensGraph g4 = build_graph(4);
    IntMatrix b4 = divisor_matrix(g4, algorithm1_partition(4));
    CHECK(largest_eig_agreement(g4, b4, 1e-8).within);

    // K4 against its trivial quotient: both sides exactly the index 3
    QueensGraph g2 = build_graph(2);
    EigAgreement a2 = largest_eig_agreement(g2, g2.adjacency_matrix(), 1e-9);
    CHECK(a2.within);
    CHECK(a2.mu1_b == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("every root of p_B appears in the spectrum of A") {
    for (int n = 3; n <= 10; ++n) {
        QueensGraph g = build_graph(n);
        IntMatrix b = divisor_matrix(g, algorithm1_partition(n));
        std::vector<double> broots = divisor_spectrum(b);
        EigenReport rep = dense_spectrum(g);
        for (double r : broots) {
            bool present = false;
            for (double ev : rep.eigenvalues)
                if (std::fabs(ev - r) < 1e-7) present = true;
            CHECK(present);
        }
    }
}
