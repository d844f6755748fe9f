// Floating spectrum of Q(n) plus the exact side: integer eigenvector families
// for -4 and n-4, corank certificates, main/non-main classification and the
// integer-eigenvalue scanner.
#ifndef QUEENS_SPECTRA_HPP
#define QUEENS_SPECTRA_HPP

#include <string>
#include <utility>
#include <vector>

#include "queens/board.hpp"
#include "queens/cliquepart.hpp"
#include "queens/exactlin.hpp"

namespace queens {

// Dense symmetric eigensolver (cyclic Jacobi). `a` is row-major d x d.
// Throws if the sweep cap is exceeded. Eigenpairs sorted by descending value;
// vectors[k] is the k-th eigenvector.
struct SymmetricEigen {
    int dim = 0;
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
    int sweeps = 0;
};

SymmetricEigen jacobi_eigen(std::vector<double> a, int d, int max_sweeps = 100);

struct EigenCluster {
    double value = 0;
    int multiplicity = 0;
};

struct ExactCertificate {
    long eigenvalue = 0;
    int multiplicity_lower_bound = 0;
    std::string method;
};

struct EigenReport {
    int n = 0;
    std::vector<double> eigenvalues;  // descending
    std::vector<EigenCluster> clusters;
    double residual_bound = 0;  // max over pairs of ||Av - lambda v||_inf
    std::vector<ExactCertificate> certificates;
};

struct SpectrumOptions {
    double cluster_tol = 1e-8;  // gap threshold is cluster_tol * max(1, ||A||_inf)
    int max_sweeps = 100;
    int max_dim = 1024;
    bool with_certificates = true;
};

struct SpectrumResult {
    EigenReport report;
    SymmetricEigen eigen;
};

SpectrumResult dense_spectrum_full(const QueensGraph& g, const SpectrumOptions& opts = {});
EigenReport dense_spectrum(const QueensGraph& g, const SpectrumOptions& opts = {});

struct EigenvectorFamily {
    enum class Kind { F, Y, Z };
    Kind kind;
    int n = 0;
    long eigenvalue = 0;  // -4 for F; n-4 for Y/Z
    std::vector<std::vector<Int>> vectors;
    bool eigen_usable = true;  // false for Z on even boards
};

// The (n-3)^2 translates of the X4 stencil; a basis of the (-4)-eigenspace.
EigenvectorFamily build_F_family(int n);

// Y_i = C_i + C_{n+1-i} - R_i - R_{n+1-i} (i = 1..ceil(n/2)) and Z = D_0 - S_{n+1}.
std::pair<EigenvectorFamily, EigenvectorFamily> build_YZ_families(int n);

// Exact corank of the Theorem system == (n-3)^2, F vectors are exact
// (-4)-eigenvectors of exact rank (n-3)^2. Throws on any mismatch.
int certify_minus4_multiplicity(int n);

// Exact rank of the verified (n-4)-eigenvector family: (n-2)/2 even, (n+1)/2 odd.
// Also checks that Z fails the eigenvector equation on even boards.
int certify_n_minus_4_lower_bound(int n);

struct ClusterMainFlag {
    double value = 0;
    bool main = false;
    bool exact = false;  // true when decided by an exact certificate
};

// A cluster is main iff the all-ones vector has a nonzero projection on its
// eigenspace. The -4 cluster is decided exactly: every F basis vector sums to
// zero, so the eigenspace is orthogonal to all-ones.
std::vector<ClusterMainFlag> classify_main(const QueensGraph& g, const SpectrumResult& s,
                                           double tol = 1e-6);

struct ScanOptions {
    int exact_cap_dim = 144;  // char_poly path up to this matrix dimension
    SpectrumOptions spectrum;
    double integrality_tol = 1e-6;
};

struct IntegerScanResult {
    int n = 0;
    bool exact_path = true;
    std::vector<std::pair<Int, int>> eigenvalues;  // (value, multiplicity), descending
};

IntegerScanResult integer_eigenvalue_scan(const QueensGraph& g, const ScanOptions& opts = {});

// The conjectured integer spectrum for n >= 4: {-4, n-4} for even n,
// {-4..(n-11)/2} u {(n-5)/2..n-4} for odd n.
std::vector<Int> conjectured_integer_set(int n);

}  // namespace queens

#endif
