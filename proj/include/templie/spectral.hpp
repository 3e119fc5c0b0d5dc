#pragma once

#include "templie/matrix.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace templie {

enum class CheckStatus { Pass, Fail, Inconclusive };

struct SpectralReport {
    std::string matrix_id;
    std::vector<std::complex<double>> eigenvalues;
    double max_imag = 0.0;
    bool diagonalisable = true;  // rank evidence per eigenvalue cluster
    double tolerance = 0.0;
    CheckStatus status = CheckStatus::Fail;
    std::string note;
};

// Eigenvalue reality via a general eigensolve; solver failure is
// inconclusive, never a pass.
SpectralReport check_reality(const Eigen::MatrixXcd& m, double tol, std::string matrix_id = {});
SpectralReport check_reality(const Eigen::MatrixXd& m, double tol, std::string matrix_id = {});

// Similarity route: when S evaluates positive definite, certify H through
// the symmetric eigensolve of S^{1/2} H S^{-1/2}; falls back to the general
// solver otherwise.
SpectralReport check_reality_similar(const PolyMatrix& h, const PolyMatrix& s, double beta,
                                     double tol, std::string matrix_id = {});

struct PdFailure {
    double beta = 0.0;
    double pivot = 0.0;
};

struct PdReport {
    bool ok = false;
    std::vector<double> samples;
    std::optional<PdFailure> failure;  // first failing sample
};

// Symmetric indefinite factorization at each beta sample; passes iff every
// pivot exceeds tol everywhere.
PdReport check_positive_definite(const PolyMatrix& s, const std::vector<double>& betas,
                                 double tol);

// S H = H^T S as an exact polynomial identity.
bool check_pseudo_hermitian(int n, int d);

struct InclusionReport {
    CheckStatus status = CheckStatus::Fail;
    bool equality_ok = false;   // spec H_XXZ = union of spec H_{n,d}
    bool inclusion_ok = false;  // both contained in spec of the hermitian chain
    bool strict = false;        // hermitian chain has an eigenvalue outside the union
    std::vector<double> xxz;
    std::vector<double> standard_union;
    std::vector<double> hermitian;
    double tolerance = 0.0;
    std::string note;
};

// Distinct-eigenvalue comparison of the three Hamiltonians at one beta.
InclusionReport spectral_inclusion(int n, double beta, double tol);

struct JordanCluster {
    std::complex<double> eigenvalue;
    int algebraic = 0;
    int geometric = 0;
};

struct JordanReport {
    CheckStatus status = CheckStatus::Fail;
    std::vector<JordanCluster> clusters;
    bool any_defective = false;
    std::string note;
};

// Eigenvalue clustering plus SVD rank of M - lambda I per cluster; a
// singular value inside the threshold band makes the report inconclusive.
JordanReport jordan_detect(const Eigen::MatrixXcd& m, double tol);

struct GramScanReport {
    double positive_from = 0.0;  // left edge of the trailing positive-definite run
    bool positive_at_end = false;
    std::vector<double> det_zeros;  // grid hits and sign-change midpoints
};

// Determinant and minimum-eigenvalue scan of G_{n,d} over a beta grid.
GramScanReport gram_positivity_scan(int n, int d, double lo, double hi, double step);

// Max |Im lambda| of the XXZ sector Hamiltonian computed in long double.
double xxz_sector_max_imag_ld(int n, int twice_s, double beta);

}  // namespace templie
