// Exact small-n solvers: stability, clique, chromatic and domination numbers,
// the modular coloring construction, and the 0-1 LP domination model.
#ifndef QUEENS_COMBINAT_HPP
#define QUEENS_COMBINAT_HPP

#include <cstdint>
#include <vector>

#include "queens/board.hpp"

namespace queens {

struct SearchCaps {
    long long node_cap = 200'000'000;
    double time_cap_ms = 300'000;
};

enum class SubsetKind { stable, clique, dominating };

struct VertexSubsetResult {
    SubsetKind kind;
    std::vector<int> vertices;  // 0-based indices
    int value = 0;
    bool optimal = false;
    long long nodes = 0;
    double millis = 0;
};

// Independent definitional checks, used by tests and the CLI to re-verify
// every witness a solver returns.
bool is_stable_set(const QueensGraph& g, const std::vector<int>& vs);
bool is_clique(const QueensGraph& g, const std::vector<int>& vs);
bool is_dominating_set(const QueensGraph& g, const std::vector<int>& vs);

// Exact stability number by row-by-row backtracking (a row may stay empty).
VertexSubsetResult max_stable_set(const QueensGraph& g, const SearchCaps& caps = {});

// Number of stable sets of the given size. With size = alpha(Q(n)) and n >= 4
// this counts the n-Queens solutions.
long long count_stable_sets_of_size(const QueensGraph& g, int size, const SearchCaps& caps = {});

// Exact clique number, branch and bound with a greedy-coloring bound.
VertexSubsetResult max_clique(const QueensGraph& g, const SearchCaps& caps = {});

struct Coloring {
    int k = 0;                // number of colors used
    std::vector<int> color;   // per vertex, in [0, k)
};

// c(i,j) = (j - 2i) mod n over 0-based coordinates. Proper only when
// n = 1, 5 mod 6; the verifier decides.
Coloring modular_coloring(int n);

struct ColoringCheck {
    bool proper = true;
    int u = -1, v = -1;  // first monochromatic edge when improper
};

ColoringCheck verify_coloring(const QueensGraph& g, const Coloring& c);

struct ChromaticResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;  // lower == upper and the search completed
    Coloring witness;    // a proper coloring with `upper` colors
    long long nodes = 0;
};

// Exact chromatic number by iterative deepening over k with DSATUR-ordered
// backtracking. On cap overrun the bracket [lower, upper] is still valid.
ChromaticResult chromatic_number_exact(const QueensGraph& g, const SearchCaps& caps = {});

// max sum(x) s.t. (A+I)x <= d, x binary; D* = {v : x*_v = 0} is a minimum
// dominating set and gamma = n^2 - eta(x*).
struct BlpModel {
    int num_vars = 0;
    std::vector<std::vector<int>> closed_neighborhoods;  // constraint rows of A+I
    std::vector<int> rhs;                                // vertex degrees
};

BlpModel build_blp(const QueensGraph& g);
bool blp_feasible(const BlpModel& m, const std::vector<int>& x);
long blp_objective(const std::vector<int>& x);
// x encoding of a dominating set: 0 on the set, 1 elsewhere.
std::vector<int> blp_point_from_dominating(const BlpModel& m, const std::vector<int>& ds);

struct DominationResult {
    int lower = 0;
    int upper = 0;
    bool exact = false;
    std::vector<int> witness;  // dominating set of size `upper`
    long long nodes = 0;
    double millis = 0;
};

// Iterative deepening from the theorem lower bound; branch and bound on the
// least-coverable uncovered square, dihedral symmetry at the root only.
DominationResult domination_number(const QueensGraph& g, const SearchCaps& caps = {});

// (lower, upper) = (ceil((n-1)/2) lifted to 2k+1 when n = 4k+1, 2p + q with n = 3p + q).
std::pair<int, int> domination_bounds(int n);

struct MonotonicityReport {
    bool proposition_holds = true;   // gamma(n+1) <= gamma(n) + 1 on all pairs
    int first_violation_n = -1;
    bool cockayne_observed = true;   // gamma non-decreasing on the data (reported, not asserted)
};

MonotonicityReport monotonicity_check(const std::vector<std::pair<int, int>>& gamma_by_n);

}  // namespace queens

#endif
