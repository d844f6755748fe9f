#include "queens/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace queens {

SymmetricEigen jacobi_eigen(std::vector<double> a, int d, int max_sweeps) {
    if (int(a.size()) != d * d) throw std::invalid_argument("jacobi_eigen: bad dimension");
    std::vector<double> v(size_t(d) * d, 0.0);
    for (int i = 0; i < d; ++i) v[size_t(i) * d + i] = 1.0;

    auto at = [&a, d](int i, int j) -> double& { return a[size_t(i) * d + j]; };

    double norm = 0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);
    const double stop = (norm > 0 ? norm : 1.0) * 1e-15;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) off += at(p, q) * at(p, q);
        if (std::sqrt(2 * off) <= stop) break;

        for (int p = 0; p < d; ++p) {
            for (int q = p + 1; q < d; ++q) {
                const double apq = at(p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int r = 0; r < d; ++r) {
                    double& vrp = v[size_t(r) * d + p];
                    double& vrq = v[size_t(r) * d + q];
                    const double tp = vrp, tq = vrq;
                    vrp = tp - s * (tq + tau * tp);
                    vrq = tq + s * (tp - tau * tq);
                    if (r == p || r == q) continue;
                    const double arp = at(r, p), arq = at(r, q);
                    at(r, p) = at(p, r) = arp - s * (arq + tau * arp);
                    at(r, q) = at(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }
    if (sweep >= max_sweeps)
        throw std::runtime_error("jacobi_eigen: no convergence within " +
                                 std::to_string(max_sweeps) + " sweeps");

    SymmetricEigen e;
    e.dim = d;
    e.sweeps = sweep;
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return at(i, i) > at(j, j); });
    e.values.resize(d);
    e.vectors.assign(d, std::vector<double>(d));
    for (int k = 0; k < d; ++k) {
        e.values[k] = at(order[k], order[k]);
        for (int i = 0; i < d; ++i) e.vectors[k][i] = v[size_t(i) * d + order[k]];
    }
    return e;
}

namespace {

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<double>& desc, double gap) {
    std::vector<EigenCluster> out;
    size_t i = 0;
    while (i < desc.size()) {
        size_t j = i + 1;
        double sum = desc[i];
        while (j < desc.size() && desc[j - 1] - desc[j] < gap) {
            sum += desc[j];
            ++j;
        }
        out.push_back({sum / double(j - i), int(j - i)});
        i = j;
    }
    return out;
}

int exact_family_rank(const std::vector<std::vector<Int>>& vectors, int dim) {
    RatMatrix m(int(vectors.size()), dim);
    for (size_t i = 0; i < vectors.size(); ++i)
        for (int j = 0; j < dim; ++j) m(int(i), j) = vectors[i][j];
    return rat_rank(m);
}

bool is_exact_eigenvector(const IntMatrix& a, const std::vector<Int>& v, long lambda) {
    std::vector<Int> av = int_matvec(a, v);
    for (size_t i = 0; i < v.size(); ++i)
        if (av[i] != lambda * v[i]) return false;
    return true;
}

}  // namespace

SpectrumResult dense_spectrum_full(const QueensGraph& g, const SpectrumOptions& opts) {
    const int d = g.order();
    if (d > opts.max_dim)
        throw std::invalid_argument("dense_spectrum: order " + std::to_string(d) +
                                    " exceeds the dense cap " + std::to_string(opts.max_dim));
    std::vector<double> a = g.adjacency_dense_double();
    SpectrumResult res;
    res.eigen = jacobi_eigen(a, d, opts.max_sweeps);

    EigenReport& rep = res.report;
    rep.n = g.n();
    rep.eigenvalues = res.eigen.values;

    double norm_inf = 0;
    for (int v = 0; v < d; ++v) norm_inf = std::max(norm_inf, double(g.degree(v)));
    rep.clusters = cluster_eigenvalues(rep.eigenvalues, opts.cluster_tol * std::max(1.0, norm_inf));

    // residuals against the untouched adjacency
    double worst = 0;
    for (int k = 0; k < d; ++k) {
        const auto& vec = res.eigen.vectors[k];
        for (int i = 0; i < d; ++i) {
            double av = 0;
            for (int u : g.neighbors(i)) av += vec[u];
            worst = std::max(worst, std::fabs(av - rep.eigenvalues[k] * vec[i]));
        }
    }
    rep.residual_bound = worst;

    if (opts.with_certificates) {
        const int n = g.n();
        if (n >= 4) {
            int rank = rat_rank(queens_minus4_system(g));
            int corank = d - rank;
            rep.certificates.push_back({-4, corank, "corank of the line-sum system"});
        }
        if (n >= 3) {
            auto [y, z] = build_YZ_families(n);
            IntMatrix a_int = g.adjacency_matrix();
            std::vector<std::vector<Int>> verified;
            for (const auto& vec : y.vectors)
                if (is_exact_eigenvector(a_int, vec, n - 4)) verified.push_back(vec);
            if (z.eigen_usable && is_exact_eigenvector(a_int, z.vectors[0], n - 4))
                verified.push_back(z.vectors[0]);
            if (!verified.empty())
                rep.certificates.push_back(
                    {n - 4, exact_family_rank(verified, d), "rank of verified Y/Z family"});
        }
    }
    return res;
}

EigenReport dense_spectrum(const QueensGraph& g, const SpectrumOptions& opts) {
    return dense_spectrum_full(g, opts).report;
}

EigenvectorFamily build_F_family(int n) {
    if (n < 4) throw std::invalid_argument("build_F_family: requires n >= 4");
    static const int stencil[4][4] = {
        {0, 1, -1, 0},
        {-1, 0, 0, 1},
        {1, 0, 0, -1},
        {0, -1, 1, 0},
    };
    EigenvectorFamily f;
    f.kind = EigenvectorFamily::Kind::F;
    f.n = n;
    f.eigenvalue = -4;
    for (int a = 1; a <= n - 3; ++a) {
        for (int b = 1; b <= n - 3; ++b) {
            std::vector<Int> v(size_t(n) * n);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    v[size_t(a - 1 + i) * n + (b - 1 + j)] = stencil[i][j];
            f.vectors.push_back(std::move(v));
        }
    }
    return f;
}

std::pair<EigenvectorFamily, EigenvectorFamily> build_YZ_families(int n) {
    if (n < 3) throw std::invalid_argument("build_YZ_families: requires n >= 3");
    EigenvectorFamily y, z;
    y.kind = EigenvectorFamily::Kind::Y;
    z.kind = EigenvectorFamily::Kind::Z;
    y.n = z.n = n;
    y.eigenvalue = z.eigenvalue = n - 4;
    z.eigen_usable = (n % 2 == 1);

    const int half = (n + 1) / 2;
    for (int i = 1; i <= half; ++i) {
        std::vector<Int> v(size_t(n) * n);
        for (int r = 1; r <= n; ++r) {
            for (int c = 1; c <= n; ++c) {
                int val = 0;
                if (c == i) ++val;
                if (c == n + 1 - i) ++val;
                if (r == i) --val;
                if (r == n + 1 - i) --val;
                v[size_t(r - 1) * n + (c - 1)] = val;
            }
        }
        y.vectors.push_back(std::move(v));
    }

    std::vector<Int> zv(size_t(n) * n);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            int val = 0;
            if (r == c) ++val;             // D_0
            if (r + c == n + 1) --val;     // S_{n+1}
            zv[size_t(r - 1) * n + (c - 1)] = val;
        }
    }
    z.vectors.push_back(std::move(zv));
    return {std::move(y), std::move(z)};
}

int certify_minus4_multiplicity(int n) {
    if (n < 4) throw std::invalid_argument("certify_minus4_multiplicity: requires n >= 4");
    QueensGraph g = build_graph(n);
    const int d = g.order();
    const int expected = (n - 3) * (n - 3);

    int rank = rat_rank(queens_minus4_system(g));
    int corank = d - rank;
    if (corank != expected)
        throw std::runtime_error("certify_minus4_multiplicity: corank " + std::to_string(corank) +
                                 " != (n-3)^2 = " + std::to_string(expected));

    EigenvectorFamily f = build_F_family(n);
    if (int(f.vectors.size()) != expected)
        throw std::runtime_error("certify_minus4_multiplicity: family size mismatch");
    IntMatrix a = g.adjacency_matrix();
    for (const auto& v : f.vectors)
        if (!is_exact_eigenvector(a, v, -4))
            throw std::runtime_error("certify_minus4_multiplicity: family member fails A v = -4 v");
    if (exact_family_rank(f.vectors, d) != expected)
        throw std::runtime_error("certify_minus4_multiplicity: family rank != (n-3)^2");

    return corank;
}

int certify_n_minus_4_lower_bound(int n) {
    if (n < 3) throw std::invalid_argument("certify_n_minus_4_lower_bound: requires n >= 3");
    QueensGraph g = build_graph(n);
    IntMatrix a = g.adjacency_matrix();
    auto [y, z] = build_YZ_families(n);

    std::vector<std::vector<Int>> verified;
    for (const auto& v : y.vectors) {
        if (!is_exact_eigenvector(a, v, n - 4))
            throw std::runtime_error("certify_n_minus_4_lower_bound: Y vector fails A v = (n-4) v");
        verified.push_back(v);
    }
    const bool z_is_eigen = is_exact_eigenvector(a, z.vectors[0], n - 4);
    if (n % 2 == 1) {
        if (!z_is_eigen)
            throw std::runtime_error("certify_n_minus_4_lower_bound: Z fails on an odd board");
        verified.push_back(z.vectors[0]);
    } else if (z_is_eigen) {
        throw std::runtime_error(
            "certify_n_minus_4_lower_bound: Z unexpectedly is an eigenvector on an even board");
    }

    const int rank = exact_family_rank(verified, g.order());
    const int expected = (n % 2 == 0) ? (n - 2) / 2 : (n + 1) / 2;
    if (rank != expected)
        throw std::runtime_error("certify_n_minus_4_lower_bound: rank " + std::to_string(rank) +
                                 " != expected " + std::to_string(expected));
    return rank;
}

std::vector<ClusterMainFlag> classify_main(const QueensGraph& g, const SpectrumResult& s,
                                           double tol) {
    const int d = s.eigen.dim;
    const double jnorm = std::sqrt(double(d));
    std::vector<ClusterMainFlag> flags;

    bool minus4_exact_nonmain = false;
    if (g.n() >= 4) {
        // every F basis vector sums to zero, so E(-4) _|_ j
        EigenvectorFamily f = build_F_family(g.n());
        minus4_exact_nonmain = true;
        for (const auto& v : f.vectors) {
            Int sum = 0;
            for (const Int& x : v) sum += x;
            if (sum != 0) minus4_exact_nonmain = false;
        }
    }

    size_t k = 0;
    for (const EigenCluster& cl : s.report.clusters) {
        double proj_sq = 0;
        for (int t = 0; t < cl.multiplicity; ++t, ++k) {
            double dot = 0;
            for (double x : s.eigen.vectors[k]) dot += x;
            proj_sq += dot * dot;
        }
        ClusterMainFlag flag;
        flag.value = cl.value;
        flag.main = std::sqrt(proj_sq) > tol * jnorm;
        if (minus4_exact_nonmain && std::fabs(cl.value + 4.0) < 1e-6) {
            flag.main = false;
            flag.exact = true;
        }
        flags.push_back(flag);
    }
    return flags;
}

IntegerScanResult integer_eigenvalue_scan(const QueensGraph& g, const ScanOptions& opts) {
    IntegerScanResult res;
    res.n = g.n();
    const int d = g.order();

    if (d <= opts.exact_cap_dim) {
        res.exact_path = true;
        IntPoly p = char_poly(g.adjacency_matrix());
        res.eigenvalues = integer_roots(p);
        return res;
    }

    res.exact_path = false;
    EigenReport rep = dense_spectrum(g, opts.spectrum);
    std::vector<Int> candidates;
    for (double ev : rep.eigenvalues) {
        double r = std::round(ev);
        if (std::fabs(ev - r) <= opts.integrality_tol) {
            Int k{static_cast<long>(r)};
            if (candidates.empty() || candidates.back() != k) candidates.push_back(k);
        }
    }
    IntMatrix a = g.adjacency_matrix();
    for (const Int& k : candidates) {
        IntMatrix shifted = a;
        for (int i = 0; i < d; ++i) shifted(i, i) -= k;
        int corank = d - rat_rank(RatMatrix(shifted));
        if (corank > 0) res.eigenvalues.emplace_back(k, corank);
    }
    std::sort(res.eigenvalues.begin(), res.eigenvalues.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    return res;
}

std::vector<Int> conjectured_integer_set(int n) {
    if (n < 4) throw std::invalid_argument("conjectured_integer_set: stated for n >= 4");
    std::vector<Int> s;
    if (n % 2 == 0) {
        s.push_back(n - 4);
        s.push_back(-4);
    } else {
        for (long v = n - 4; v >= (n - 5) / 2; --v) s.push_back(v);
        for (long v = (n - 11) / 2; v >= -4; --v) s.push_back(v);
    }
    return s;  // descending
}

}  // namespace queens
