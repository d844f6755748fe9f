#include "queens/exactlin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace queens {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Int IntMatrix::trace() const {
    if (rows_ != cols_) throw std::invalid_argument("trace: non-square matrix");
    Int t = 0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("int_mul: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    const int m = b.cols();
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Int& s = a(i, k);
            const int sg = sgn(s);
            if (sg == 0) continue;
            if (s == 1) {
                for (int j = 0; j < m; ++j) c(i, j) += b(k, j);
            } else if (s == -1) {
                for (int j = 0; j < m; ++j) c(i, j) -= b(k, j);
            } else {
                for (int j = 0; j < m; ++j)
                    mpz_addmul(c(i, j).get_mpz_t(), s.get_mpz_t(), b(k, j).get_mpz_t());
            }
        }
    }
    return c;
}

std::vector<Int> int_matvec(const IntMatrix& m, const std::vector<Int>& x) {
    if (size_t(m.cols()) != x.size()) throw std::invalid_argument("int_matvec: dimension mismatch");
    std::vector<Int> y(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Int& acc = y[i];
        for (int j = 0; j < m.cols(); ++j) {
            const Int& s = m(i, j);
            const int sg = sgn(s);
            if (sg == 0) continue;
            if (s == 1) acc += x[j];
            else if (s == -1) acc -= x[j];
            else mpz_addmul(acc.get_mpz_t(), s.get_mpz_t(), x[j].get_mpz_t());
        }
    }
    return y;
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

int rat_rank(const RatMatrix& m) {
    RatMatrix w = m;
    const int rows = w.rows(), cols = w.cols();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (sgn(w(r, col)) != 0) { piv = r; break; }
        }
        if (piv < 0) continue;
        if (piv != rank)
            for (int j = col; j < cols; ++j) std::swap(w(rank, j), w(piv, j));
        for (int r = rank + 1; r < rows; ++r) {
            if (sgn(w(r, col)) == 0) continue;
            Rat f = w(r, col) / w(rank, col);
            w(r, col) = 0;
            for (int j = col + 1; j < cols; ++j) w(r, j) -= f * w(rank, j);
        }
        ++rank;
    }
    return rank;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::from_roots(const std::vector<Int>& roots) {
    std::vector<Int> c{1};
    for (const Int& r : roots) {
        c.push_back(0);
        for (size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
        c[0] = -r * c[0];
    }
    return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& x) const {
    Int v = 0;
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            a = abs(a);
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly char_poly(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square matrix");
    const int d = m.rows();
    // p(x) = x^d + c[1] x^{d-1} + ... + c[d]
    std::vector<Int> c(size_t(d) + 1);
    c[0] = 1;
    IntMatrix n = m;
    for (int k = 1; k <= d; ++k) {
        if (k > 1) {
            for (int i = 0; i < d; ++i) n(i, i) += c[k - 1];
            n = int_mul(m, n);
        }
        Int t = n.trace();
        // c[k] = -tr(N_k)/k, always an exact division
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), Int(-t).get_mpz_t(), Int(k).get_mpz_t());
        if (r != 0) throw std::logic_error("char_poly: inexact Faddeev-LeVerrier division");
        c[k] = q;
    }
    std::vector<Int> asc(size_t(d) + 1);
    for (int i = 0; i <= d; ++i) asc[d - i] = c[i];
    return IntPoly(std::move(asc));
}

IntPoly main_poly(const IntMatrix& a) {
    return main_poly(a, std::vector<Int>(a.rows(), 1));
}

IntPoly main_poly(const IntMatrix& a, const std::vector<Int>& j) {
    if (a.rows() != a.cols()) throw std::invalid_argument("main_poly: non-square matrix");
    const int d = a.rows();
    if (size_t(d) != j.size()) throw std::invalid_argument("main_poly: vector dimension mismatch");

    // Krylov vectors v_p = A^p j with a tracked row-echelon basis: every echelon
    // row carries the combination of Krylov vectors it came from.
    struct EchRow {
        std::vector<Rat> v;
        std::vector<Rat> comb;
        int pivot;
    };
    std::vector<EchRow> ech;
    std::vector<Int> vp = j;

    for (int p = 0; p <= d; ++p) {
        std::vector<Rat> w(vp.begin(), vp.end());
        std::vector<Rat> comb(size_t(p) + 1);
        comb[p] = 1;
        for (const EchRow& r : ech) {
            if (sgn(w[r.pivot]) == 0) continue;
            Rat f = w[r.pivot] / r.v[r.pivot];
            for (int i = 0; i < d; ++i)
                if (sgn(r.v[i]) != 0) w[i] -= f * r.v[i];
            for (size_t i = 0; i < r.comb.size(); ++i) comb[i] -= f * r.comb[i];
        }
        int pivot = -1;
        for (int i = 0; i < d; ++i)
            if (sgn(w[i]) != 0) { pivot = i; break; }
        if (pivot < 0) {
            // sum_i comb[i] * A^i j = 0 with comb[p] = 1: the main polynomial.
            std::vector<Int> coeffs(size_t(p) + 1);
            for (int i = 0; i <= p; ++i) {
                if (comb[i].get_den() != 1)
                    throw std::logic_error(
                        "main_poly: non-integral coefficient (contradicts integrality of the "
                        "main characteristic polynomial)");
                coeffs[i] = comb[i].get_num();
            }
            return IntPoly(std::move(coeffs));
        }
        ech.push_back(EchRow{std::move(w), std::move(comb), pivot});
        vp = int_matvec(a, vp);
    }
    throw std::logic_error("main_poly: no Krylov dependency up to full dimension");
}

namespace {

using RatPoly = std::vector<Rat>;  // ascending degree, trimmed

void rp_trim(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly rp_from(const IntPoly& p) {
    RatPoly r(p.coeffs().begin(), p.coeffs().end());
    return r;
}

RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * int(i));
    rp_trim(d);
    return d;
}

// Remainder of u / v (v nonzero); quotient discarded.
RatPoly rp_rem(RatPoly u, const RatPoly& v) {
    rp_trim(u);
    while (u.size() >= v.size() && !u.empty()) {
        Rat f = u.back() / v.back();
        size_t off = u.size() - v.size();
        for (size_t i = 0; i < v.size(); ++i) u[off + i] -= f * v[i];
        rp_trim(u);
    }
    return u;
}

RatPoly rp_divexact(RatPoly u, const RatPoly& v) {
    rp_trim(u);
    RatPoly q(u.size() >= v.size() ? u.size() - v.size() + 1 : 0);
    while (u.size() >= v.size() && !u.empty()) {
        Rat f = u.back() / v.back();
        size_t off = u.size() - v.size();
        q[off] = f;
        for (size_t i = 0; i < v.size(); ++i) u[off + i] -= f * v[i];
        rp_trim(u);
    }
    if (!u.empty()) throw std::logic_error("rp_divexact: division not exact");
    rp_trim(q);
    return q;
}

RatPoly rp_monic_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

Rat rp_eval(const RatPoly& p, const Rat& x) {
    Rat v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

// Yun squarefree decomposition: p = lc * prod u_i^i, u_i squarefree and coprime.
std::vector<RatPoly> yun_squarefree(const RatPoly& p) {
    std::vector<RatPoly> parts;
    RatPoly dp = rp_derivative(p);
    RatPoly g = rp_monic_gcd(p, dp);
    if (g.size() <= 1) {
        parts.push_back(p);
        return parts;
    }
    RatPoly b = rp_divexact(p, g);
    RatPoly c = rp_divexact(dp, g);
    RatPoly d = c;
    {
        RatPoly db = rp_derivative(b);
        d.resize(std::max(d.size(), db.size()));
        for (size_t i = 0; i < db.size(); ++i) d[i] -= db[i];
        rp_trim(d);
    }
    while (b.size() > 1) {
        RatPoly u = rp_monic_gcd(b, d);
        parts.push_back(u);
        b = rp_divexact(b, u);
        RatPoly cnew = rp_divexact(d, u);
        RatPoly db = rp_derivative(b);
        d = cnew;
        d.resize(std::max(d.size(), db.size()));
        for (size_t i = 0; i < db.size(); ++i) d[i] -= db[i];
        rp_trim(d);
    }
    return parts;
}

int rp_sign_changes(const std::vector<RatPoly>& sturm, const Rat& x) {
    int changes = 0, prev = 0;
    for (const RatPoly& s : sturm) {
        int sg = sgn(rp_eval(s, x));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++changes;
        prev = sg;
    }
    return changes;
}

// Distinct real roots of a squarefree polynomial, exact isolation then bisection.
std::vector<double> sturm_roots(const RatPoly& u, double eps) {
    std::vector<double> out;
    if (u.size() <= 1) return out;
    if (u.size() == 2) {  // linear
        Rat r = -u[0] / u[1];
        out.push_back(r.get_d());
        return out;
    }
    std::vector<RatPoly> chain;
    chain.push_back(u);
    chain.push_back(rp_derivative(u));
    while (chain.back().size() > 1) {
        RatPoly r = rp_rem(chain[chain.size() - 2], chain.back());
        for (Rat& c : r) c = -c;
        rp_trim(r);
        if (r.empty()) break;  // cannot happen for squarefree input
        chain.push_back(std::move(r));
    }

    // Cauchy bound on root magnitude
    Rat bound = 1;
    for (size_t i = 0; i + 1 < u.size(); ++i) {
        Rat t = abs(u[i] / u.back());
        if (t > bound) bound = t;
    }
    bound += 1;

    struct Iv { Rat a, b; int na, nb; };
    std::vector<Iv> stack;
    Rat lo = -bound, hi = bound;
    stack.push_back({lo, hi, rp_sign_changes(chain, lo), rp_sign_changes(chain, hi)});
    while (!stack.empty()) {
        Iv iv = stack.back();
        stack.pop_back();
        int count = iv.na - iv.nb;
        if (count <= 0) continue;
        if (count == 1) {
            // one simple root strictly inside; endpoints are never roots here
            Rat a = iv.a, b = iv.b;
            int sa = sgn(rp_eval(u, a));
            while (Rat(b - a).get_d() > eps) {
                Rat m = (a + b) / 2;
                int sm = sgn(rp_eval(u, m));
                if (sm == 0) { a = m; b = m; break; }
                if (sm == sa) a = m; else b = m;
            }
            out.push_back((Rat((a + b) / 2)).get_d());
            continue;
        }
        // split at a point where u does not vanish; u has < denom roots,
        // so one of the denom-1 candidates is guaranteed non-root
        const int denom = int(u.size()) + 1;
        Rat split;
        for (int j = 1; j < denom; ++j) {
            Rat cand = iv.a + (iv.b - iv.a) * j / denom;
            if (sgn(rp_eval(u, cand)) != 0) { split = cand; break; }
        }
        int nm = rp_sign_changes(chain, split);
        stack.push_back({iv.a, split, iv.na, nm});
        stack.push_back({split, iv.b, nm, iv.nb});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool poly_divides(const IntPoly& d, const IntPoly& p) {
    if (d.is_zero()) throw std::invalid_argument("poly_divides: zero divisor");
    if (p.is_zero()) return true;
    if (p.degree() < d.degree()) return false;
    RatPoly r = rp_rem(rp_from(p), rp_from(d));
    return r.empty();
}

namespace {

// Exact integer upper bound on |roots|: Fujiwara, B = 2 max_i (|a_{d-i}|/|a_d|)^{1/i}.
Int integer_root_bound(const IntPoly& p) {
    const int d = p.degree();
    Int lead = abs(p.leading());
    Int best = 1;
    for (int i = 1; i <= d; ++i) {
        Int num = abs(p[size_t(d - i)]);
        if (num == 0) continue;
        Int q = num / lead + 1;  // ceil-ish, only an upper bound is needed
        Int root;
        mpz_root(root.get_mpz_t(), q.get_mpz_t(), i);
        root += 1;
        if (root > best) best = root;
    }
    return 2 * best;
}

// p / (x - r), remainder must be zero.
bool synthetic_divide(const std::vector<Int>& c, const Int& r, std::vector<Int>& quot) {
    const size_t n = c.size();
    quot.assign(n - 1, 0);
    Int carry = c[n - 1];
    for (size_t i = n - 1; i-- > 0;) {
        quot[i] = carry;
        carry = c[i] + r * carry;
    }
    return carry == 0;
}

}  // namespace

std::vector<std::pair<Int, int>> integer_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
    std::vector<std::pair<Int, int>> roots;

    std::vector<Int> c = p.coeffs();
    size_t zero_mult = 0;
    while (zero_mult < c.size() && c[zero_mult] == 0) ++zero_mult;
    if (zero_mult > 0) {
        roots.emplace_back(0, int(zero_mult));
        c.erase(c.begin(), c.begin() + zero_mult);
    }

    auto divide_out = [&c](const Int& r) {
        int mult = 0;
        std::vector<Int> q;
        while (c.size() > 1 && synthetic_divide(c, r, q)) {
            c = q;
            ++mult;
        }
        return mult;
    };

    if (c.size() == 2) {
        // a1 x + a0
        if (c[0] % c[1] == 0) {
            Int r = -c[0] / c[1];
            roots.emplace_back(r, 1);
        }
    } else if (c.size() > 2) {
        IntPoly stripped{std::vector<Int>(c)};
        Int bound = integer_root_bound(stripped);
        constexpr long kScanCap = 10'000'000;
        if (bound > kScanCap)
            throw std::runtime_error("integer_roots: root bound " + Int(bound).get_str() +
                                     " exceeds the scan cap");
        const long b = bound.get_si();
        for (long k = -b; k <= b && c.size() > 1; ++k) {
            if (k == 0) continue;
            if (c[0] % k != 0) continue;  // rational root theorem prune
            int mult = divide_out(Int(k));
            if (mult > 0) roots.emplace_back(k, mult);
        }
    }

    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return roots;
}

std::vector<double> real_roots(const IntPoly& p, double eps) {
    if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
    std::vector<double> out;
    if (p.degree() == 0) return out;
    std::vector<RatPoly> parts = yun_squarefree(rp_from(p));
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size() <= 1) continue;
        std::vector<double> rs = sturm_roots(parts[i], eps);
        for (double r : rs)
            for (size_t m = 0; m <= i; ++m) out.push_back(r);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace queens
