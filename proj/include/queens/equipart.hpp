// Equitable partition of Q(n) by board folding, its divisor matrix, and the
// M_G | p_B | char(A) divisibility chain.
#ifndef QUEENS_EQUIPART_HPP
#define QUEENS_EQUIPART_HPP

#include <vector>

#include "queens/board.hpp"
#include "queens/exactlin.hpp"

namespace queens {

struct EquitablePartition {
    int n = 0;
    int num_cells = 0;
    std::vector<int> cell_of;             // per vertex, row-major
    std::vector<std::vector<int>> cells;  // vertex indices per cell
};

// Fold-and-label closed form of the reflection algorithm: with
// r' = min(i, n+1-i), c' = min(j, n+1-j), a = min(r',c'), b = max(r',c'),
// the cell is b(b-1)/2 + (a-1). Produces ceil(n/2)(ceil(n/2)+1)/2 cells.
// Requires n >= 3.
EquitablePartition algorithm1_partition(int n);

// Every cell a singleton (C = I, B = A).
EquitablePartition trivial_partition(const QueensGraph& g);

struct EquitableCheck {
    bool ok = true;
    // witness when !ok: two vertices of the same cell with different
    // neighbor counts into cell `cell`
    int vertex_a = -1, vertex_b = -1, cell = -1;
};

EquitableCheck verify_equitable(const QueensGraph& g, const EquitablePartition& p);

// 0/1 characteristic matrix, one column per cell.
IntMatrix characteristic_matrix(const EquitablePartition& p);

// b_ij = neighbors any vertex of cell i has in cell j. Throws if p is not
// equitable.
IntMatrix divisor_matrix(const QueensGraph& g, const EquitablePartition& p);

bool verify_ac_equals_cb(const IntMatrix& a, const IntMatrix& c, const IntMatrix& b);

struct ChainReport {
    int n = 0;
    IntPoly char_a;   // char polynomial of the adjacency matrix
    IntPoly p_b;      // char polynomial of the divisor matrix
    IntPoly main;     // main characteristic polynomial
    bool main_divides_pb = false;
    bool pb_divides_char = false;
    int num_main = 0;  // deg(main)
};

// Computes the three polynomials and asserts the chain M_G | p_B | char(A).
// n = 2 uses the trivial partition (Algorithm 1 starts at n = 3).
ChainReport divisibility_chain(int n, int exact_cap_dim = 144);

struct EigAgreement {
    double mu1_a = 0, mu1_b = 0;
    bool within = false;
};

// Largest eigenvalue of the graph vs largest eigenvalue of the divisor matrix
// (real roots of p_B by exact Sturm bisection).
EigAgreement largest_eig_agreement(const QueensGraph& g, const IntMatrix& b, double tol);

// Real spectrum of a divisor matrix via its characteristic polynomial.
// Throws if any root is non-real (cannot happen when p_B | char(A)).
std::vector<double> divisor_spectrum(const IntMatrix& b, double eps = 1e-12);

}  // namespace queens

#endif
