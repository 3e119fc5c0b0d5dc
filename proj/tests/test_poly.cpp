#include "templie/poly.hpp"

#include <gtest/gtest.h>

#include <complex>

using namespace templie;

TEST(Poly, ArithmeticAndTrim) {
    Poly b = Poly::beta();
    Poly p = b * b - Poly(1);           // beta^2 - 1
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p.coeff(0), Int(-1));
    EXPECT_EQ(p.coeff(1), Int(0));
    EXPECT_EQ(p.coeff(2), Int(1));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(-p + p, Poly());
    EXPECT_EQ(Poly::beta_power(3), b * b * b);
}

TEST(Poly, ProductDistributes) {
    Poly b = Poly::beta();
    Poly x = Poly(3) - b;
    Poly y = b * b + Poly(2);
    Poly z = b - Poly(7);
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x * y, y * x);
}

TEST(Poly, EvalBridges) {
    Poly p = Poly::from_coeffs({Int(4), Int(0), Int(1)});  // beta^2 + 4
    EXPECT_EQ(p.eval(Rational(1, 2)), Rational(17, 4));
    EXPECT_DOUBLE_EQ(p.eval(0.5), 4.25);
    std::complex<double> z = p.eval(std::complex<double>(0, 1));
    EXPECT_DOUBLE_EQ(z.real(), 3.0);
    EXPECT_DOUBLE_EQ(z.imag(), 0.0);
}

TEST(Poly, DivExact) {
    Poly b = Poly::beta();
    Poly num = (b * b - Poly(1)) * (b + Poly(3));
    EXPECT_EQ(Poly::div_exact(num, b + Poly(3)), b * b - Poly(1));
    EXPECT_THROW(Poly::div_exact(b * b + Poly(1), b + Poly(1)), std::domain_error);
    EXPECT_THROW(Poly::div_exact(Poly(1), Poly()), std::domain_error);
    EXPECT_TRUE(Poly::div_exact(Poly(), b).is_zero());
}

TEST(Poly, Str) {
    Poly b = Poly::beta();
    EXPECT_EQ(Poly().str(), "0");
    EXPECT_EQ((-b).str(), "-β");
    EXPECT_EQ((b * b + Poly(4)).str(), "β^2 + 4");
}

TEST(QFromBeta, PinnedBranchValues) {
    EXPECT_NEAR(std::abs(q_from_beta(2.0).q - std::complex<double>(1, 0)), 0, 1e-12);
    EXPECT_NEAR(std::abs(q_from_beta(-2.0).q - std::complex<double>(-1, 0)), 0, 1e-12);
    EXPECT_NEAR(std::abs(q_from_beta(0.0).q - std::complex<double>(0, 1)), 0, 1e-12);
    EXPECT_NEAR(std::abs(q_from_beta(2.5).q - std::complex<double>(2, 0)), 0, 1e-12);
}

TEST(QFromBeta, InvertsOnGrid) {
    for (double beta : {-2.5, -2.0, -1.0, -0.3, 0.0, 0.5, 1.0, 1.99, 2.0, 3.0}) {
        QValue qv = q_from_beta(beta);
        std::complex<double> back = qv.q + 1.0 / qv.q;
        EXPECT_NEAR(back.real(), beta, 1e-12) << "beta=" << beta;
        EXPECT_NEAR(back.imag(), 0.0, 1e-12) << "beta=" << beta;
        EXPECT_GE(qv.q.imag(), -1e-15) << "beta=" << beta;
    }
}
