#include "templie/poly.hpp"

#include <sstream>
#include <utility>

namespace templie {

Poly::Poly(long c) {
    if (c != 0) c_.push_back(Int(c));
}

Poly::Poly(Int c) {
    if (c != 0) c_.push_back(std::move(c));
}

Poly Poly::beta() { return beta_power(1); }

Poly Poly::beta_power(std::size_t k) {
    Poly p;
    p.c_.assign(k + 1, Int(0));
    p.c_[k] = 1;
    return p;
}

Poly Poly::from_coeffs(std::vector<Int> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Int Poly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Int(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Rational Poly::eval(const Rational& beta) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * beta + Rational(*it);
    return r;
}

double Poly::eval(double beta) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * beta + it->convert_to<double>();
    return r;
}

std::complex<double> Poly::eval(const std::complex<double>& beta) const {
    std::complex<double> r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * beta + it->convert_to<double>();
    return r;
}

Poly Poly::div_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return Poly();
    if (num.degree() < den.degree())
        throw std::domain_error("inexact polynomial division");
    std::vector<Int> rem = num.c_;
    std::vector<Int> quot(num.c_.size() - den.c_.size() + 1, Int(0));
    const Int& lead = den.c_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
        Int top = rem[k + den.c_.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) throw std::domain_error("inexact polynomial division");
        Int q = top / lead;
        quot[k] = q;
        for (std::size_t j = 0; j < den.c_.size(); ++j)
            rem[k + j] -= q * den.c_[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::domain_error("inexact polynomial division");
    return from_coeffs(std::move(quot));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str();
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

QValue q_from_beta(double beta) {
    std::complex<double> disc(beta * beta - 4.0, 0.0);
    std::complex<double> q = (beta + std::sqrt(disc)) / 2.0;  // principal sqrt: Im >= 0
    return QValue{q, beta};
}

}  // namespace templie
