#pragma once

#include "templie/poly.hpp"

#include <Eigen/Dense>
#include <vector>

namespace templie {

// Dense matrix over Z[beta], row-major.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols);
    static PolyMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Poly& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator*(const Poly& s) const;
    PolyMatrix operator-() const;
    PolyMatrix transpose() const;
    bool operator==(const PolyMatrix& o) const;
    bool is_zero() const;
    bool is_symmetric() const;

    Eigen::MatrixXd eval(double beta) const;
    Eigen::MatrixXcd eval(const std::complex<double>& beta) const;
    std::vector<std::vector<Rational>> eval(const Rational& beta) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> data_;
};

// Exact linear algebra over Q.
long rational_rank(std::vector<std::vector<Rational>> m);
long rank_at(const PolyMatrix& M, const Rational& beta);
Rational det_at(const PolyMatrix& M, const Rational& beta);

// LDL^T pivots of a symmetric matrix evaluated at a rational beta; true iff
// every pivot is strictly positive (positive definite).
bool positive_definite_at(const PolyMatrix& S, const Rational& beta);

}  // namespace templie
