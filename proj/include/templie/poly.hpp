#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace templie {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when a requested size exceeds the configured cap.
struct SizeCapError : std::runtime_error {
    explicit SizeCapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Element of Z[beta].  coeffs()[k] holds the coefficient of beta^k; trailing
// zeros are trimmed, so the zero polynomial has an empty list.
class Poly {
  public:
    Poly() = default;
    explicit Poly(long c);
    explicit Poly(Int c);
    static Poly beta();
    static Poly beta_power(std::size_t k);
    static Poly from_coeffs(std::vector<Int> coeffs);

    const std::vector<Int>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(std::size_t k) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o);
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    Rational eval(const Rational& beta) const;
    double eval(double beta) const;
    std::complex<double> eval(const std::complex<double>& beta) const;

    // Exact quotient num/den over Z[beta]; throws std::domain_error if the
    // division leaves a remainder.
    static Poly div_exact(const Poly& num, const Poly& den);

    std::string str(const std::string& var = "β") const;

  private:
    void trim();
    std::vector<Int> c_;
};

// q + 1/q = beta with the square-root branch chosen so Im(q) >= 0.
struct QValue {
    std::complex<double> q;
    double beta;
};

QValue q_from_beta(double beta);

}  // namespace templie
