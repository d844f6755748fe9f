// Exact integer/rational dense linear algebra and integer polynomials.
// Everything here is arbitrary precision; no operation ever rounds.
#ifndef QUEENS_EXACTLIN_HPP
#define QUEENS_EXACTLIN_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace queens {

using Int = mpz_class;
using Rat = mpq_class;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    Int trace() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// C = A * B. Entries of A that are 0/±1 short-circuit to add/sub, which makes
// products against adjacency and characteristic matrices cheap.
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);

std::vector<Int> int_matvec(const IntMatrix& m, const std::vector<Int>& x);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    explicit RatMatrix(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Exact rank by rational Gaussian elimination (destroys a working copy).
int rat_rank(const RatMatrix& m);

// Integer polynomial, coefficients in ascending degree, canonical form
// (no trailing zero coefficients; the zero polynomial has an empty vector).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly from_roots(const std::vector<Int>& roots);  // monic product of (x - r)

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; }  // -1 for the zero polynomial
    const Int& leading() const { return c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const Int& operator[](size_t i) const { return c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const = default;

    Int eval(const Int& x) const;
    std::string to_string() const;  // human-readable, highest degree first

private:
    void trim();
    std::vector<Int> c_;
};

// det(xI - M) by Faddeev–LeVerrier; all intermediate divisions are exact.
IntPoly char_poly(const IntMatrix& m);

// Minimal monic polynomial annihilating `a` on the walk space span{j, Aj, A²j, ...}.
// The coefficients must come out integral; a non-integral Krylov dependency is a
// hard error, not a value to coerce.
IntPoly main_poly(const IntMatrix& a);
IntPoly main_poly(const IntMatrix& a, const std::vector<Int>& j);

// True iff d divides p exactly (division over the rationals, zero remainder).
bool poly_divides(const IntPoly& d, const IntPoly& p);

// All integer roots of p with multiplicities, largest root first.
// Candidates are the integers within an exact Fujiwara-type root bound that
// divide the trailing nonzero coefficient; deg <= 2 is solved directly.
std::vector<std::pair<Int, int>> integer_roots(const IntPoly& p);

// All real roots of p with multiplicities expanded, ascending, each within
// `eps` of the true root. Sturm isolation on the Yun squarefree factors;
// every sign evaluation is exact.
std::vector<double> real_roots(const IntPoly& p, double eps = 1e-12);

}  // namespace queens

#endif
