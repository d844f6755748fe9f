// Acceptance suite: one line per criterion, exit code = number of failures.
// Every tolerance is pinned here; nothing is deferred to configuration.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "queens/combinat.hpp"
#include "queens/equipart.hpp"
#include "queens/io.hpp"
#include "queens/spectra.hpp"

using namespace queens;

namespace {

int failures = 0;

void report(int criterion, const char* name, bool ok, const std::string& detail,
            double seconds) {
    std::printf("%s  criterion %2d  %-28s %s  [%.2fs]\n", ok ? "PASS" : "FAIL", criterion,
                name, detail.c_str(), seconds);
    if (!ok) ++failures;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

bool same_line(int n, int u, int v) {
    int r1 = u / n, c1 = u % n, r2 = v / n, c2 = v % n;
    return u != v && (r1 == r2 || c1 == c2 || r1 + c1 == r2 + c2 || r1 - c1 == r2 - c2);
}

// 1. brute-force size vs closed form, n = 1..40
void criterion_size() {
    Timer t;
    bool ok = true;
    std::string detail = "n=1..40";
    for (int n = 1; n <= 40 && ok; ++n) {
        long long brute = 0;
        const int order = n * n;
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                if (same_line(n, u, v)) ++brute;
        QueensGraph g = build_graph(n);
        if (Int(std::to_string(brute)) != edge_count_formula(n) || g.edges() != brute) {
            ok = false;
            detail = "mismatch at n=" + std::to_string(n);
        }
    }
    report(1, "size-formula", ok, detail, t.seconds());
}

// 2. degree theorem and min/max window, n = 1..40
void criterion_degrees() {
    Timer t;
    bool ok = true;
    std::string detail = "n=1..40, every vertex";
    for (int n = 1; n <= 40 && ok; ++n) {
        QueensGraph g = build_graph(n);
        for (int v = 0; v < g.order(); ++v) {
            int expected = degree_formula(n, g.coord_of(v));
            int window_hi = n >= 2 ? max_degree_formula(n) : 0;
            if (g.degree(v) != expected || expected < min_degree_formula(n) ||
                expected > window_hi) {
                ok = false;
                detail = "mismatch at n=" + std::to_string(n) + " v=" + std::to_string(v + 1);
                break;
            }
        }
    }
    report(2, "degree-theorem", ok, detail, t.seconds());
}

// 3. spectra of Q(2), Q(3) against the closed forms, 1e-9
void criterion_small_spectra() {
    Timer t;
    bool ok = true;
    std::string detail = "Q(2), Q(3) to 1e-9";

    EigenReport r2 = dense_spectrum(build_graph(2));
    ok = r2.clusters.size() == 2 && std::fabs(r2.clusters[0].value - 3) < 1e-9 &&
         r2.clusters[0].multiplicity == 1 && std::fabs(r2.clusters[1].value + 1) < 1e-9 &&
         r2.clusters[1].multiplicity == 3;
    if (!ok) detail = "Q(2) clusters wrong";

    if (ok) {
        EigenReport r3 = dense_spectrum(build_graph(3));
        const double s57 = std::sqrt(57.0), s2 = std::sqrt(2.0);
        const std::vector<std::pair<double, int>> expected{
            {(5 + s57) / 2, 1}, {1.0, 1},          {-1 + s2, 2},
            {-1.0, 2},          {(5 - s57) / 2, 1}, {-1 - s2, 2},
        };
        for (auto [value, mult] : expected) {
            int found = 0;
            for (double ev : r3.eigenvalues)
                if (std::fabs(ev - value) <= 1e-9) ++found;
            if (found != mult) {
                ok = false;
                detail = "Q(3) eigenvalue " + std::to_string(value) + " multiplicity " +
                         std::to_string(found) + " != " + std::to_string(mult);
                break;
            }
        }
    }
    report(3, "small-spectra", ok, detail, t.seconds());
}

// 4. -4 certificates for 4..12, least-eigenvalue floor for n <= 16
void criterion_minus4() {
    Timer t;
    bool ok = true;
    std::string detail = "corank+basis 4..12, floor to n=16";
    for (int n = 4; n <= 12 && ok; ++n) {
        try {
            int m = certify_minus4_multiplicity(n);  // throws unless all exact checks hold
            if (m != (n - 3) * (n - 3)) ok = false;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
    }
    for (int n = 2; n <= 16 && ok; ++n) {
        EigenReport r = dense_spectrum(build_graph(n));
        if (r.eigenvalues.back() < -4.0 - 1e-6) {
            ok = false;
            detail = "lambda_min below -4 at n=" + std::to_string(n);
        }
    }
    report(4, "minus4-multiplicity", ok, detail, t.seconds());
}

// 5. n-4 family certificates for 3..16
void criterion_n_minus_4() {
    Timer t;
    bool ok = true;
    std::string detail = "Y/Z verified, ranks 3..16";
    for (int n = 3; n <= 16 && ok; ++n) {
        try {
            int rank = certify_n_minus_4_lower_bound(n);
            int expected = (n % 2 == 0) ? (n - 2) / 2 : (n + 1) / 2;
            if (rank != expected) {
                ok = false;
                detail = "rank mismatch at n=" + std::to_string(n);
            }
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
    }
    report(5, "n-minus-4-family", ok, detail, t.seconds());
}

// 6. integer eigenvalues reproduce the published table for 3..11
void criterion_integer_table() {
    Timer t;
    const std::map<int, std::vector<long>> table{
        {3, {1, -1}},
        {4, {0, -4}},
        {5, {1, 0, -3, -4}},
        {6, {2, -4}},
        {7, {3, 2, 1, -2, -3, -4}},
        {8, {4, -4}},
        {9, {5, 4, 3, 2, -1, -2, -3, -4}},
        {10, {6, -4}},
        {11, {7, 6, 5, 4, 3, 0, -1, -2, -3, -4}},
    };
    bool ok = true;
    std::string detail = "table rows n=3..11";
    for (const auto& [n, expected] : table) {
        IntegerScanResult scan = integer_eigenvalue_scan(build_graph(n));
        std::vector<long> got;
        for (const auto& [value, mult] : scan.eigenvalues) got.push_back(value.get_si());
        if (got != expected) {
            ok = false;
            detail = "mismatch at n=" + std::to_string(n);
            break;
        }
    }
    report(6, "integer-eigenvalue-table", ok, detail, t.seconds());
}

// 7. alpha, omega, chi, modular coloring, 92 solutions
void criterion_combinatorics() {
    Timer t;
    bool ok = true;
    std::string detail = "alpha, omega, chi, colorings, 92";

    auto expect = [&](bool cond, const std::string& what) {
        if (ok && !cond) {
            ok = false;
            detail = what;
        }
    };

    expect(max_stable_set(build_graph(2)).value == 1, "alpha(2)");
    expect(max_stable_set(build_graph(3)).value == 2, "alpha(3)");
    for (int n = 4; n <= 9; ++n) {
        VertexSubsetResult r = max_stable_set(build_graph(n));
        expect(r.optimal && r.value == n, "alpha(" + std::to_string(n) + ")");
    }

    expect(max_clique(build_graph(2)).value == 4, "omega(2)");
    expect(max_clique(build_graph(3)).value == 5, "omega(3)");
    expect(max_clique(build_graph(4)).value == 5, "omega(4)");
    for (int n = 5; n <= 8; ++n) {
        VertexSubsetResult r = max_clique(build_graph(n));
        expect(r.optimal && r.value == n, "omega(" + std::to_string(n) + ")");
    }

    const std::pair<int, int> chis[] = {{2, 4}, {3, 5}, {4, 5}, {5, 5}};
    for (auto [n, chi] : chis) {
        ChromaticResult r = chromatic_number_exact(build_graph(n));
        expect(r.exact && r.upper == chi, "chi(" + std::to_string(n) + ")");
        expect(verify_coloring(build_graph(n), r.witness).proper,
               "chi witness " + std::to_string(n));
    }

    for (int n = 1; n <= 30; ++n) {
        bool proper = verify_coloring(build_graph(n), modular_coloring(n)).proper;
        expect(proper == (n % 6 == 1 || n % 6 == 5), "modular(" + std::to_string(n) + ")");
    }

    expect(count_stable_sets_of_size(build_graph(8), 8) == 92, "92 maximum stable sets");
    report(7, "combinatorial-numbers", ok, detail, t.seconds());
}

// 8. domination table; node caps documented in the detail string
void criterion_domination() {
    Timer t;
    bool ok = true;
    SearchCaps caps;          // 2e8 nodes, 300s per instance
    caps.node_cap = 50'000'000;
    std::string detail = "n=1..11, node cap 5e7/instance";

    const int expected[] = {1, 1, 1, 2, 3, 3, 4, 5, 5, 5, 5};
    std::vector<std::pair<int, int>> gamma;
    for (int n = 1; n <= 11 && ok; ++n) {
        DominationResult r = domination_number(build_graph(n), caps);
        if (!r.exact) {
            // capped runs may return a verified bracket, never a wrong value
            if (r.lower > expected[n - 1] || r.upper < expected[n - 1]) {
                ok = false;
                detail = "bracket excludes gamma at n=" + std::to_string(n);
            } else {
                detail = "skipped-slow at n=" + std::to_string(n) + " (bracket [" +
                         std::to_string(r.lower) + "," + std::to_string(r.upper) + "])";
            }
            continue;
        }
        if (r.upper != expected[n - 1] || !is_dominating_set(build_graph(n), r.witness)) {
            ok = false;
            detail = "gamma wrong at n=" + std::to_string(n);
            break;
        }
        auto [lo, hi] = domination_bounds(n);
        if (r.upper < lo || r.upper > hi) {
            ok = false;
            detail = "outside the bound window at n=" + std::to_string(n);
            break;
        }
        gamma.emplace_back(n, r.upper);
    }
    if (ok && !monotonicity_check(gamma).proposition_holds) {
        ok = false;
        detail = "monotonicity proposition violated";
    }
    report(8, "domination-table", ok, detail, t.seconds());
}

// 9. equitable partitions for 3..20 and the full n=6 worked example
void criterion_equipart() {
    Timer t;
    bool ok = true;
    std::string detail = "cells+AC=CB 3..20, n=6 example exact";
    for (int n = 3; n <= 20 && ok; ++n) {
        QueensGraph g = build_graph(n);
        EquitablePartition p = algorithm1_partition(n);
        const int m = (n + 1) / 2;
        if (p.num_cells != m * (m + 1) / 2 || !verify_equitable(g, p).ok) {
            ok = false;
            detail = "partition failed at n=" + std::to_string(n);
            break;
        }
        IntMatrix a = g.adjacency_matrix();
        if (!verify_ac_equals_cb(a, characteristic_matrix(p), divisor_matrix(g, p))) {
            ok = false;
            detail = "AC != CB at n=" + std::to_string(n);
        }
    }

    if (ok) {
        QueensGraph g = build_graph(6);
        IntMatrix b = divisor_matrix(g, algorithm1_partition(6));
        const int expected[6][6] = {
            {3, 4, 2, 4, 0, 2}, {2, 4, 2, 2, 4, 1}, {2, 4, 3, 2, 4, 2},
            {2, 2, 1, 4, 4, 2}, {0, 4, 2, 4, 4, 3}, {2, 2, 2, 4, 6, 3},
        };
        for (int i = 0; i < 6 && ok; ++i)
            for (int j = 0; j < 6 && ok; ++j)
                if (b(i, j) != expected[i][j]) {
                    ok = false;
                    detail = "divisor matrix entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ")";
                }

        IntPoly pb = char_poly(b);
        const std::vector<Int> printed{-8, 580, -686, 109, 73, -21, 1};
        if (ok && pb.coeffs() != printed) {
            ok = false;
            detail = "p_B coefficients differ";
        }
        if (ok && main_poly(g.adjacency_matrix()) != pb) {
            ok = false;
            detail = "main polynomial != p_B at n=6";
        }
        if (ok) {
            std::vector<double> roots = divisor_spectrum(b);
            const double approx[6] = {-2.91, 0.01, 1.17, 2.85, 3.63, 16.24};
            for (int i = 0; i < 6; ++i)
                if (std::fabs(roots[i] - approx[i]) >= 0.005) {
                    ok = false;
                    detail = "sigma(B) differs from the printed 2 d.p. values";
                }
        }
    }
    report(9, "equitable-partition", ok, detail, t.seconds());
}

// 10. divisibility chain 3..8 and -4 non-main 4..12
void criterion_chain() {
    Timer t;
    bool ok = true;
    std::string detail = "M|p_B|char 3..8, -4 non-main 4..12";
    for (int n = 3; n <= 8 && ok; ++n) {
        try {
            ChainReport r = divisibility_chain(n);
            if (!r.main_divides_pb || !r.pb_divides_char) ok = false;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
    }
    for (int n = 4; n <= 12 && ok; ++n) {
        EigenvectorFamily f = build_F_family(n);
        for (const auto& v : f.vectors) {
            Int sum = 0;
            for (const Int& x : v) sum += x;
            if (sum != 0) {
                ok = false;
                detail = "an F vector is not orthogonal to all-ones at n=" + std::to_string(n);
            }
        }
    }
    report(10, "divisibility-chain", ok, detail, t.seconds());
}

}  // namespace

int main() {
    Timer total;
    criterion_size();
    criterion_degrees();
    criterion_small_spectra();
    criterion_minus4();
    criterion_n_minus_4();
    criterion_integer_table();
    criterion_combinatorics();
    criterion_domination();
    criterion_equipart();
    criterion_chain();
    std::printf("%s: %d of 10 criteria passed  [%.2fs total]\n",
                failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", 10 - failures,
                total.seconds());
    return failures;
}
