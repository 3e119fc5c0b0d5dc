#include "templie/spectral.hpp"
#include "templie/intertwiner.hpp"
#include "templie/link.hpp"
#include "templie/spin.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

using namespace templie;

TEST(Spectral, RealityOfStandardHamiltonians) {
    for (double beta : {-2.0, -0.3, 0.5, 1.99, 3.0}) {
        Eigen::MatrixXd h = hamiltonian_matrix(6, 0).eval(beta);
        SpectralReport rep = check_reality(h, 1e-8, "H_{6,0}");
        EXPECT_EQ(rep.status, CheckStatus::Pass) << "beta=" << beta;
        EXPECT_LT(rep.max_imag, 1e-8);
        EXPECT_TRUE(rep.diagonalisable);
    }
}

TEST(Spectral, SimilarityRouteNote) {
    PolyMatrix h = hamiltonian_matrix(6, 0);
    PolyMatrix s = f_matrix(6, 0).S;
    SpectralReport rep = check_reality_similar(h, s, 1.3, 1e-10, "H_{6,0}");
    EXPECT_EQ(rep.status, CheckStatus::Pass);
    EXPECT_NE(rep.note.find("similarity route"), std::string::npos);
    EXPECT_EQ(rep.eigenvalues.size(), 5u);
    for (const auto& ev : rep.eigenvalues) EXPECT_EQ(ev.imag(), 0.0);
}

TEST(Spectral, PositiveDefiniteS) {
    std::vector<double> grid = {-2.5, -2.0, -1.0, -0.3, 0.0, 0.5, 1.0, 1.99, 2.0, 3.0};
    PdReport rep = check_positive_definite(f_matrix(6, 0).S, grid, 1e-9);
    EXPECT_TRUE(rep.ok);
    EXPECT_FALSE(rep.failure.has_value());
    PdReport rep82 = check_positive_definite(f_matrix(8, 2).S, grid, 1e-9);
    EXPECT_TRUE(rep82.ok);
}

TEST(Spectral, PositiveDefiniteCatchesFailure) {
    // the loop Gram G_{4,0} = [[b^2, b], [b, b^2]] degenerates at beta = 1
    PdReport rep = check_positive_definite(gram_matrix(4, 0), {0.5, 1.0, 2.0}, 1e-9);
    EXPECT_FALSE(rep.ok);
    ASSERT_TRUE(rep.failure.has_value());
    EXPECT_LE(rep.failure->beta, 1.0);
}

TEST(Spectral, PseudoHermitianExact) {
    EXPECT_TRUE(check_pseudo_hermitian(2, 0));
    EXPECT_TRUE(check_pseudo_hermitian(6, 0));
    for (int n = 2; n <= 6; ++n)
        for (int d = n % 2; d <= n; d += 2)
            EXPECT_TRUE(check_pseudo_hermitian(n, d)) << "n=" << n << " d=" << d;
}

TEST(Spectral, InclusionExactSmall) {
    // n = 2: spec H_XXZ = {0, -beta} matches the d = 0 and d = 2 sectors,
    // and the one-site hermitian chain contributes {0, -beta} as well.
    InclusionReport rep = spectral_inclusion(2, 0.7, 1e-9);
    EXPECT_EQ(rep.status, CheckStatus::Pass);
    EXPECT_TRUE(rep.equality_ok);
    EXPECT_TRUE(rep.inclusion_ok);
    std::vector<double> want = {-0.7, 0.0};
    ASSERT_EQ(rep.xxz.size(), 2u);
    EXPECT_NEAR(rep.xxz[0], want[0], 1e-9);
    EXPECT_NEAR(rep.xxz[1], want[1], 1e-9);
}

TEST(Spectral, InclusionHoldsOnGrid) {
    bool any_strict = false;
    for (int n : {4, 5, 6}) {
        for (double beta : {-1.0, 0.7, 1.7}) {
            InclusionReport rep = spectral_inclusion(n, beta, 1e-7);
            EXPECT_EQ(rep.status, CheckStatus::Pass) << "n=" << n << " beta=" << beta;
            EXPECT_TRUE(rep.equality_ok) << "n=" << n << " beta=" << beta;
            EXPECT_TRUE(rep.inclusion_ok) << "n=" << n << " beta=" << beta;
            any_strict = any_strict || rep.strict;
        }
    }
    EXPECT_TRUE(any_strict);
}

TEST(Spectral, JordanBlockAtQImaginary) {
    // q = i (beta = 0): the full XXZ chain on two sites is nilpotent of
    // rank one on the zero eigenvalue with a genuine Jordan block.
    QValue qv;
    qv.q = std::complex<double>(0, 1);
    qv.beta = 0.0;
    Eigen::MatrixXcd h = h_xxz_matrix(2, qv);
    JordanReport rep = jordan_detect(h, 1e-9);
    EXPECT_EQ(rep.status, CheckStatus::Pass);
    EXPECT_TRUE(rep.any_defective);
    ASSERT_EQ(rep.clusters.size(), 1u);
    EXPECT_LT(std::abs(rep.clusters[0].eigenvalue), 1e-9);
    EXPECT_EQ(rep.clusters[0].algebraic, 4);
    EXPECT_EQ(rep.clusters[0].geometric, 3);
}

TEST(Spectral, JordanCleanOnSymmetric) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(0, 0) = 1.0; m(1, 1) = 2.0; m(2, 2) = 2.0;
    JordanReport rep = jordan_detect(m, 1e-9);
    EXPECT_EQ(rep.status, CheckStatus::Pass);
    EXPECT_FALSE(rep.any_defective);
}

TEST(Spectral, GramScanN40) {
    GramScanReport rep = gram_positivity_scan(4, 0, -3.0, 3.0, 0.1);
    ASSERT_EQ(rep.det_zeros.size(), 3u);
    EXPECT_NEAR(rep.det_zeros[0], -1.0, 0.06);
    EXPECT_NEAR(rep.det_zeros[1], 0.0, 0.06);
    EXPECT_NEAR(rep.det_zeros[2], 1.0, 0.06);
    EXPECT_TRUE(rep.positive_at_end);
    EXPECT_NEAR(rep.positive_from, 1.0, 0.11);
}

// Root-of-unity points (beta = -1 here) are the worst case: clustered,
// sometimes defective eigenvalues push the solver's imaginary parts to
// ~1e-9, still well under the 1e-7 sweep tolerance.
TEST(Spectral, LongDoubleSectorImag) {
    for (double beta : {-1.0, 0.5, 1.99}) {
        double worst = 0;
        for (int t = -5; t <= 5; t += 2)
            worst = std::max(worst, xxz_sector_max_imag_ld(5, t, beta));
        EXPECT_LT(worst, 1e-8) << "beta=" << beta;
    }
}

// Float bridge: the exact intertwining identity must survive evaluation.
TEST(Spectral, EvaluatedIntertwining) {
    for (double beta : {-2.5, -0.3, 0.0, 1.0, 3.0}) {
        IntertwinerSet set = f_matrix(7, 1);
        Eigen::MatrixXd f = set.f.eval(beta);
        Eigen::MatrixXd h = hamiltonian_matrix(7, 1).eval(beta);
        Eigen::MatrixXd hs = h_spin_sector(set.sector).eval(beta);
        EXPECT_LT((f * h - hs * f).cwiseAbs().maxCoeff(), 1e-9) << "beta=" << beta;
    }
}
