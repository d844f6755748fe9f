#include "queens/combinat.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <stdexcept>

namespace queens {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct CapTracker {
    long long nodes = 0;
    long long node_cap;
    double time_cap_ms;
    Clock::time_point t0 = Clock::now();
    bool hit = false;

    explicit CapTracker(const SearchCaps& caps)
        : node_cap(caps.node_cap), time_cap_ms(caps.time_cap_ms) {}

    // returns false once a cap is exceeded
    bool tick() {
        if (hit) return false;
        ++nodes;
        if (nodes > node_cap) { hit = true; return false; }
        if ((nodes & 0x3ff) == 0 && ms_since(t0) > time_cap_ms) { hit = true; return false; }
        return true;
    }
};

struct Bitset {
    std::vector<uint64_t> w;

    explicit Bitset(int bits = 0) : w((bits + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    bool none() const {
        for (uint64_t x : w) if (x) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    int count_and(const Bitset& o) const {
        int c = 0;
        for (size_t i = 0; i < w.size(); ++i) c += __builtin_popcountll(w[i] & o.w[i]);
        return c;
    }
    void and_not_inplace(const Bitset& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    }
    void and_inplace(const Bitset& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    int first() const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i]) return int(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }
    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w.size(); ++i) {
            uint64_t x = w[i];
            while (x) {
                f(int(i * 64 + __builtin_ctzll(x)));
                x &= x - 1;
            }
        }
    }
};

std::vector<Bitset> neighbor_masks(const QueensGraph& g) {
    std::vector<Bitset> m(g.order(), Bitset(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v)) m[v].set(u);
    return m;
}

}  // namespace

bool is_stable_set(const QueensGraph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_clique(const QueensGraph& g, const std::vector<int>& vs) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

bool is_dominating_set(const QueensGraph& g, const std::vector<int>& vs) {
    std::vector<char> covered(g.order(), 0);
    for (int v : vs) {
        covered[v] = 1;
        for (int u : g.neighbors(v)) covered[u] = 1;
    }
    for (char c : covered)
        if (!c) return false;
    return true;
}

// ---------------------------------------------------------------------------
// stability

namespace {

// Queens placed top row down; a row may be skipped. Masks track attacked
// columns and diagonals.
struct StableSearch {
    int n;
    CapTracker cap;
    int best = -1;
    std::vector<int> best_cols;   // per row, column or -1
    std::vector<int> cur;

    StableSearch(int n_, const SearchCaps& caps) : n(n_), cap(caps), cur(n_, -1) {}

    void dfs(int row, int placed, uint64_t cols, uint64_t diag, uint64_t anti) {
        if (!cap.tick()) return;
        if (placed + (n - row) <= best) return;
        if (row == n) {
            if (placed > best) {
                best = placed;
                best_cols = cur;
            }
            return;
        }
        for (int c = 0; c < n; ++c) {
            uint64_t cb = uint64_t(1) << c;
            uint64_t db = uint64_t(1) << (row + c);
            uint64_t ab = uint64_t(1) << (row - c + n - 1);
            if ((cols & cb) || (diag & db) || (anti & ab)) continue;
            cur[row] = c;
            dfs(row + 1, placed + 1, cols | cb, diag | db, anti | ab);
            cur[row] = -1;
        }
        dfs(row + 1, placed, cols, diag, anti);  // leave the row empty
    }
};

}  // namespace

VertexSubsetResult max_stable_set(const QueensGraph& g, const SearchCaps& caps) {
    const int n = g.n();
    // diagonal masks need 2n-1 bits
    if (n > 32) throw std::invalid_argument("max_stable_set: n too large for bitmask search");
    StableSearch s(n, caps);
    s.dfs(0, 0, 0, 0, 0);

    VertexSubsetResult r;
    r.kind = SubsetKind::stable;
    r.value = std::max(s.best, 0);
    r.optimal = !s.cap.hit;
    r.nodes = s.cap.nodes;
    r.millis = ms_since(s.cap.t0);
    for (int row = 0; row < n; ++row)
        if (s.best_cols.size() == size_t(n) && s.best_cols[row] >= 0)
            r.vertices.push_back(row * n + s.best_cols[row]);
    return r;
}

long long count_stable_sets_of_size(const QueensGraph& g, int size, const SearchCaps& caps) {
    const int n = g.n();
    if (n > 32) throw std::invalid_argument("count_stable_sets_of_size: n too large");
    CapTracker cap(caps);
    long long count = 0;

    // row by row, empty rows allowed, prune when the target is out of reach
    auto dfs = [&](auto&& self, int row, int placed, uint64_t cols, uint64_t diag,
                   uint64_t anti) -> void {
        if (!cap.tick()) return;
        if (placed == size) { ++count; return; }
        if (row == n || placed + (n - row) < size) return;
        for (int c = 0; c < n; ++c) {
            uint64_t cb = uint64_t(1) << c;
            uint64_t db = uint64_t(1) << (row + c);
            uint64_t ab = uint64_t(1) << (row - c + n - 1);
            if ((cols & cb) || (diag & db) || (anti & ab)) continue;
            self(self, row + 1, placed + 1, cols | cb, diag | db, anti | ab);
        }
        self(self, row + 1, placed, cols, diag, anti);
    };
    dfs(dfs, 0, 0, 0, 0, 0);
    if (cap.hit) throw std::runtime_error("count_stable_sets_of_size: search cap exceeded");
    return count;
}

// ---------------------------------------------------------------------------
// clique

namespace {

struct CliqueSearch {
    const QueensGraph& g;
    std::vector<Bitset> nbr;
    CapTracker cap;
    int best = 0;
    std::vector<int> best_set;
    std::vector<int> stack;

    CliqueSearch(const QueensGraph& g_, const SearchCaps& caps)
        : g(g_), nbr(neighbor_masks(g_)), cap(caps) {}

    // greedy coloring of P; returns vertices ordered by color with their bounds
    void color_order(const Bitset& p, std::vector<int>& order, std::vector<int>& bound) {
        order.clear();
        bound.clear();
        Bitset left = p;
        int color = 0;
        while (!left.none()) {
            ++color;
            Bitset cand = left;
            while (true) {
                int v = cand.first();
                if (v < 0) break;
                cand.reset(v);
                cand.and_not_inplace(nbr[v]);
                left.reset(v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    void expand(const Bitset& p) {
        if (!cap.tick()) return;
        std::vector<int> order, bound;
        color_order(p, order, bound);
        Bitset left = p;
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (int(stack.size()) + bound[i] <= best) return;
            int v = order[i];
            stack.push_back(v);
            Bitset next = left;
            next.and_inplace(nbr[v]);
            if (next.none()) {
                if (int(stack.size()) > best) {
                    best = int(stack.size());
                    best_set = stack;
                }
            } else {
                expand(next);
            }
            stack.pop_back();
            left.reset(v);
        }
    }
};

}  // namespace

VertexSubsetResult max_clique(const QueensGraph& g, const SearchCaps& caps) {
    CliqueSearch s(g, caps);
    Bitset all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    s.expand(all);

    VertexSubsetResult r;
    r.kind = SubsetKind::clique;
    r.vertices = s.best_set;
    r.value = s.best;
    r.optimal = !s.cap.hit;
    r.nodes = s.cap.nodes;
    r.millis = ms_since(s.cap.t0);
    return r;
}

// ---------------------------------------------------------------------------
// coloring

Coloring modular_coloring(int n) {
    if (n < 1) throw std::invalid_argument("modular_coloring: n must be positive");
    Coloring c;
    c.k = n;
    c.color.resize(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            c.color[size_t(i) * n + j] = ((j - 2 * i) % n + 2 * n) % n;
    return c;
}

ColoringCheck verify_coloring(const QueensGraph& g, const Coloring& c) {
    if (c.color.size() != size_t(g.order()))
        throw std::invalid_argument("verify_coloring: size mismatch");
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            if (u > v && c.color[u] == c.color[v]) return {false, v, u};
    return {};
}

namespace {

struct KColorSearch {
    const QueensGraph& g;
    int k;
    CapTracker& cap;
    std::vector<int> color;        // -1 = unassigned
    std::vector<int> sat_count;    // distinct neighbor colors
    std::vector<uint64_t> sat_mask;  // k <= 64 colors supported
    int assigned = 0;
    int used_colors = 0;

    KColorSearch(const QueensGraph& g_, int k_, CapTracker& cap_)
        : g(g_), k(k_), cap(cap_), color(g_.order(), -1), sat_count(g_.order(), 0),
          sat_mask(g_.order(), 0) {}

    bool dfs() {
        if (!cap.tick()) return false;
        if (assigned == g.order()) return true;
        // DSATUR choice: max saturation, then max degree, then min index
        int pick = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (color[v] >= 0) continue;
            if (pick < 0 || sat_count[v] > sat_count[pick] ||
                (sat_count[v] == sat_count[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        const int limit = std::min(k - 1, used_colors);  // at most one fresh color
        for (int c = 0; c <= limit; ++c) {
            if ((sat_mask[pick] >> c) & 1u) continue;
            color[pick] = c;
            ++assigned;
            int prev_used = used_colors;
            used_colors = std::max(used_colors, c + 1);
            std::vector<int> bumped;
            for (int u : g.neighbors(pick)) {
                if (color[u] >= 0) continue;
                if (!((sat_mask[u] >> c) & 1u)) {
                    sat_mask[u] |= uint64_t(1) << c;
                    ++sat_count[u];
                    bumped.push_back(u);
                }
            }
            if (dfs()) return true;
            for (int u : bumped) {
                sat_mask[u] &= ~(uint64_t(1) << c);
                --sat_count[u];
            }
            color[pick] = -1;
            --assigned;
            used_colors = prev_used;
            if (cap.hit) return false;
        }
        return false;
    }
};

Coloring greedy_dsatur(const QueensGraph& g) {
    Coloring c;
    c.color.assign(g.order(), -1);
    std::vector<int> sat_count(g.order(), 0);
    std::vector<int> forbidden(g.order(), -1);  // stamp per color per step
    for (int step = 0; step < g.order(); ++step) {
        int pick = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (c.color[v] >= 0) continue;
            if (pick < 0 || sat_count[v] > sat_count[pick] ||
                (sat_count[v] == sat_count[pick] && g.degree(v) > g.degree(pick)))
                pick = v;
        }
        for (int u : g.neighbors(pick))
            if (c.color[u] >= 0) forbidden[c.color[u]] = step;
        int col = 0;
        while (forbidden[col] == step) ++col;
        c.color[pick] = col;
        c.k = std::max(c.k, col + 1);
        for (int u : g.neighbors(pick)) {
            if (c.color[u] >= 0) continue;
            // saturation gains only when this color is new around u
            bool seen = false;
            for (int w : g.neighbors(u))
                if (w != pick && c.color[w] == col) { seen = true; break; }
            if (!seen) ++sat_count[u];
        }
    }
    return c;
}

}  // namespace

ChromaticResult chromatic_number_exact(const QueensGraph& g, const SearchCaps& caps) {
    ChromaticResult r;
    const int n = g.n();

    VertexSubsetResult cl = max_clique(g, caps);
    int lower = cl.value;  // valid lower bound even if the clique search capped
    if (n >= 5) lower = std::max(lower, n);

    Coloring best = greedy_dsatur(g);
    Coloring mod = modular_coloring(n);
    if (verify_coloring(g, mod).proper && mod.k < best.k) best = mod;
    int upper = best.k;

    CapTracker cap(caps);
    cap.nodes = cl.nodes;  // clique work counts against the same budget
    for (int k = lower; k < upper && k <= 64; ++k) {
        KColorSearch s(g, k, cap);
        if (s.dfs()) {
            best.color = s.color;
            best.k = k;
            upper = k;
            break;
        }
        if (cap.hit) break;  // k not refuted, bracket stays [k, upper]
        lower = k + 1;
    }

    r.lower = lower;
    r.upper = upper;
    r.exact = (lower == upper);
    r.witness = best;
    r.nodes = cap.nodes;
    if (r.exact && n >= 5 && (r.upper < n || r.upper > n + 3))
        throw std::logic_error("chromatic_number_exact: result outside the [n, n+3] window");
    return r;
}

// ---------------------------------------------------------------------------
// domination

BlpModel build_blp(const QueensGraph& g) {
    BlpModel m;
    m.num_vars = g.order();
    m.closed_neighborhoods.resize(g.order());
    m.rhs.resize(g.order());
    for (int v = 0; v < g.order(); ++v) {
        m.closed_neighborhoods[v] = g.neighbors(v);
        m.closed_neighborhoods[v].push_back(v);
        std::sort(m.closed_neighborhoods[v].begin(), m.closed_neighborhoods[v].end());
        m.rhs[v] = g.degree(v);
    }
    return m;
}

bool blp_feasible(const BlpModel& m, const std::vector<int>& x) {
    if (int(x.size()) != m.num_vars) return false;
    for (int v : x)
        if (v != 0 && v != 1) return false;
    for (int i = 0; i < m.num_vars; ++i) {
        long sum = 0;
        for (int j : m.closed_neighborhoods[i]) sum += x[j];
        if (sum > m.rhs[i]) return false;
    }
    return true;
}

long blp_objective(const std::vector<int>& x) {
    long s = 0;
    for (int v : x) s += v;
    return s;
}

std::vector<int> blp_point_from_dominating(const BlpModel& m, const std::vector<int>& ds) {
    std::vector<int> x(m.num_vars, 1);
    for (int v : ds) x[v] = 0;
    return x;
}

std::pair<int, int> domination_bounds(int n) {
    if (n < 1) throw std::invalid_argument("domination_bounds: n must be positive");
    int lower = (n - 1 + 1) / 2;  // ceil((n-1)/2)
    if (n % 4 == 1) lower = std::max(lower, 2 * ((n - 1) / 4) + 1);
    int p = n / 3, q = n % 3;
    return {lower, 2 * p + q};
}

namespace {

// index permutations of the dihedral group acting on the board
std::vector<std::vector<int>> board_symmetries(int n) {
    auto idx = [n](int r, int c) { return (r - 1) * n + (c - 1); };
    std::vector<std::vector<int>> maps;
    using XY = std::pair<int, int>;
    std::vector<XY (*)(int, int, int)> fns = {
        [](int r, int c, int) { return XY{r, c}; },
        [](int r, int c, int n_) { return XY{c, n_ + 1 - r}; },          // rot90
        [](int r, int c, int n_) { return XY{n_ + 1 - r, n_ + 1 - c}; }, // rot180
        [](int r, int c, int n_) { return XY{n_ + 1 - c, r}; },          // rot270
        [](int r, int c, int n_) { return XY{r, n_ + 1 - c}; },          // mirror cols
        [](int r, int c, int n_) { return XY{n_ + 1 - r, c}; },          // mirror rows
        [](int r, int c, int) { return XY{c, r}; },                      // transpose
        [](int r, int c, int n_) { return XY{n_ + 1 - c, n_ + 1 - r}; }, // anti-transpose
    };
    for (auto fn : fns) {
        std::vector<int> perm(size_t(n) * n);
        for (int r = 1; r <= n; ++r)
            for (int c = 1; c <= n; ++c) {
                auto [rr, cc] = fn(r, c, n);
                perm[idx(r, c)] = idx(rr, cc);
            }
        maps.push_back(std::move(perm));
    }
    return maps;
}

struct DominationSearch {
    const QueensGraph& g;
    int order;
    std::vector<Bitset> cover;  // closed neighborhoods
    CapTracker cap;
    std::vector<int> chosen;
    std::vector<int> found;
    std::vector<int> root_candidates;  // symmetry-reduced, computed once

    DominationSearch(const QueensGraph& g_, const SearchCaps& caps)
        : g(g_), order(g_.order()), cover(order, Bitset(order)), cap(caps) {
        for (int v = 0; v < order; ++v) {
            cover[v].set(v);
            for (int u : g.neighbors(v)) cover[v].set(u);
        }
        build_root_candidates();
    }

    // Root vertex: the center for odd n (full dihedral stabilizer), corner
    // (1,1) otherwise (transpose stabilizer). Every dominating set covers it,
    // and symmetric choices of its coverer are interchangeable.
    void build_root_candidates() {
        const int n = g.n();
        auto syms = board_symmetries(n);
        int root;
        std::vector<const std::vector<int>*> stab;
        if (n % 2 == 1) {
            root = g.index_of({(n + 1) / 2, (n + 1) / 2});
            for (const auto& s : syms) stab.push_back(&s);
        } else {
            root = g.index_of({1, 1});
            stab.push_back(&syms[0]);
            stab.push_back(&syms[6]);  // transpose fixes (1,1)
        }
        cover[root].for_each([&](int c) {
            for (const auto* s : stab)
                if ((*s)[c] < c) return;
            root_candidates.push_back(c);
        });
    }

    enum class Outcome { found, refuted, capped };

    Outcome exists(int k) {
        chosen.clear();
        Bitset uncovered(order);
        for (int v = 0; v < order; ++v) uncovered.set(v);
        bool ok = dfs(uncovered, k, true);
        if (ok) return Outcome::found;
        return cap.hit ? Outcome::capped : Outcome::refuted;
    }

    bool dfs(const Bitset& uncovered, int remaining, bool at_root) {
        if (uncovered.none()) {
            found = chosen;
            return true;
        }
        if (remaining == 0) return false;
        if (!cap.tick()) return false;

        // strongest coverage any single queen can still provide
        int maxcov = 0;
        for (int v = 0; v < order; ++v)
            maxcov = std::max(maxcov, cover[v].count_and(uncovered));
        if (uncovered.count() > remaining * maxcov) return false;

        // branch on the uncovered square with the fewest coverers
        int target = -1, target_opts = INT_MAX;
        uncovered.for_each([&](int u) {
            int opts = cover[u].count();
            if (opts < target_opts) { target = u; target_opts = opts; }
        });

        std::vector<int> candidates;
        if (at_root) {
            candidates = root_candidates;
        } else {
            cover[target].for_each([&](int c) { candidates.push_back(c); });
        }
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            return cover[a].count_and(uncovered) > cover[b].count_and(uncovered);
        });

        for (int c : candidates) {
            chosen.push_back(c);
            Bitset next = uncovered;
            next.and_not_inplace(cover[c]);
            if (dfs(next, remaining - 1, false)) return true;
            chosen.pop_back();
            if (cap.hit) return false;
        }
        return false;
    }
};

std::vector<int> greedy_dominating_set(const QueensGraph& g) {
    const int order = g.order();
    Bitset uncovered(order);
    for (int v = 0; v < order; ++v) uncovered.set(v);
    std::vector<Bitset> cover(order, Bitset(order));
    for (int v = 0; v < order; ++v) {
        cover[v].set(v);
        for (int u : g.neighbors(v)) cover[v].set(u);
    }
    std::vector<int> ds;
    while (!uncovered.none()) {
        int best = -1, bestc = -1;
        for (int v = 0; v < order; ++v) {
            int c = cover[v].count_and(uncovered);
            if (c > bestc) { bestc = c; best = v; }
        }
        ds.push_back(best);
        uncovered.and_not_inplace(cover[best]);
    }
    return ds;
}

}  // namespace

DominationResult domination_number(const QueensGraph& g, const SearchCaps& caps) {
    DominationResult r;
    const int n = g.n();
    auto [lb, formula_ub] = domination_bounds(n);
    lb = std::max(lb, 1);

    std::vector<int> greedy = greedy_dominating_set(g);
    r.upper = int(greedy.size());
    r.witness = greedy;
    if (formula_ub < r.upper) {  // theorem bound beats the greedy witness
        r.upper = formula_ub;
        r.witness.clear();
    }
    r.lower = lb;

    DominationSearch s(g, caps);
    for (int k = lb; k <= int(greedy.size()); ++k) {
        DominationSearch::Outcome out = s.exists(k);
        if (out == DominationSearch::Outcome::found) {
            r.lower = k;
            r.upper = k;
            r.witness = s.found;
            r.exact = true;
            break;
        }
        if (out == DominationSearch::Outcome::capped) {
            r.lower = k;  // k not refuted; everything below k was
            break;
        }
        r.lower = k + 1;
    }
    r.nodes = s.cap.nodes;
    r.millis = ms_since(s.cap.t0);
    return r;
}

MonotonicityReport monotonicity_check(const std::vector<std::pair<int, int>>& gamma_by_n) {
    MonotonicityReport r;
    for (size_t i = 0; i + 1 < gamma_by_n.size(); ++i) {
        const auto& [na, ga] = gamma_by_n[i];
        const auto& [nb, gb] = gamma_by_n[i + 1];
        if (nb != na + 1) continue;
        if (gb > ga + 1 && r.first_violation_n < 0) {
            r.proposition_holds = false;
            r.first_violation_n = na;
        }
        if (gb < ga) r.cockayne_observed = false;
    }
    return r;
}

}  // namespace queens
