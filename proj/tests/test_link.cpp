#include "templie/link.hpp"
#include "templie/qnum.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

using namespace templie;

namespace {

PolyMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    PolyMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Poly(rows[i][j]);
    return m;
}

PolyMatrix one_by_one(Poly p) {
    PolyMatrix m(1, 1);
    m.at(0, 0) = std::move(p);
    return m;
}

}  // namespace

TEST(Link, DimensionFormula) {
    EXPECT_EQ(link_dim(6, 0), 5);
    EXPECT_EQ(link_dim(6, 2), 9);
    EXPECT_EQ(link_dim(6, 4), 5);
    EXPECT_EQ(link_dim(6, 6), 1);
    EXPECT_EQ(link_dim(2, 0), 1);
    EXPECT_EQ(link_dim(10, 0), 42);
    for (int n = 2; n <= 9; ++n) {
        for (int d = n % 2; d <= n; d += 2)
            EXPECT_EQ(enumerate_links(n, d).size(), static_cast<std::size_t>(link_dim(n, d)))
                << "n=" << n << " d=" << d;
        EXPECT_EQ(link_dim(n, n), 1);
    }
}

TEST(Link, BasisOrderAndDyadicsN6) {
    std::vector<Link> basis = enumerate_links(6, 0);
    ASSERT_EQ(basis.size(), 5u);
    std::vector<std::vector<std::pair<int, int>>> want = {
        {{1, 2}, {3, 4}, {5, 6}},
        {{1, 2}, {4, 5}, {3, 6}},
        {{2, 3}, {5, 6}, {1, 4}},
        {{2, 3}, {4, 5}, {1, 6}},
        {{3, 4}, {2, 5}, {1, 6}},
    };
    std::uint64_t numerators[] = {42, 44, 50, 52, 56};  // of d_link * 2^6
    for (int k = 0; k < 5; ++k) {
        EXPECT_EQ(basis[k], Link::from_arcs1(6, want[k])) << "k=" << k;
        EXPECT_EQ(basis[k].dyadic_numerator(), numerators[k]) << "k=" << k;
    }
}

TEST(Link, BasisOrderN6D4) {
    std::vector<Link> basis = enumerate_links(6, 4);
    ASSERT_EQ(basis.size(), 5u);
    std::vector<std::pair<int, int>> arcs[] = {{{5, 6}}, {{4, 5}}, {{3, 4}}, {{2, 3}}, {{1, 2}}};
    for (int k = 0; k < 5; ++k)
        EXPECT_EQ(basis[k], Link::from_arcs1(6, arcs[k])) << "k=" << k;
}

TEST(Link, ActionWorkedExamples) {
    Diagram a1 = Diagram::from_pairs1(6, {{2, 3}, {4, 5}, {1, 7}, {6, 12}, {9, 10}, {8, 11}});
    Diagram a2 = Diagram::from_pairs1(6, {{2, 5}, {3, 4}, {1, 11}, {6, 12}, {7, 8}, {9, 10}});
    Link v = Link::from_arcs1(6, {{3, 4}, {5, 6}});

    ActResult r1 = act(a1, v);
    ASSERT_FALSE(r1.zero);
    EXPECT_EQ(r1.loops, 1);
    EXPECT_EQ(*r1.link, Link::from_arcs1(6, {{2, 3}, {4, 5}}));

    ActResult r2 = act(a2, v);
    EXPECT_TRUE(r2.zero);
}

TEST(Link, HamiltonianSmall) {
    EXPECT_EQ(hamiltonian_matrix(2, 0), one_by_one(-Poly::beta()));
    EXPECT_EQ(hamiltonian_matrix(2, 2), PolyMatrix(1, 1));

    Poly b = Poly::beta();
    PolyMatrix h40(2, 2);
    h40.at(0, 0) = Poly(2) * b; h40.at(0, 1) = Poly(2);
    h40.at(1, 0) = Poly(1);     h40.at(1, 1) = b;
    EXPECT_EQ(hamiltonian_matrix(4, 0), -h40);

    PolyMatrix h42 = from_ints({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    for (std::size_t k = 0; k < 3; ++k) h42.at(k, k) = b;
    EXPECT_EQ(hamiltonian_matrix(4, 2), -h42);
}

TEST(Link, HamiltonianN6Frozen) {
    Poly b = Poly::beta();
    PolyMatrix want = from_ints({{0, 2, 2, 0, 2},
                                 {1, 0, 0, 1, 0},
                                 {1, 0, 0, 1, 0},
                                 {0, 1, 1, 0, 2},
                                 {0, 0, 0, 1, 0}});
    long diag[] = {3, 2, 2, 2, 1};
    for (std::size_t k = 0; k < 5; ++k) want.at(k, k) = Poly(diag[k]) * b;
    EXPECT_EQ(hamiltonian_matrix(6, 0), -want);
}

TEST(Link, GramSmall) {
    Poly b = Poly::beta();
    PolyMatrix g40(2, 2);
    g40.at(0, 0) = b * b; g40.at(0, 1) = b;
    g40.at(1, 0) = b;     g40.at(1, 1) = b * b;
    EXPECT_EQ(gram_matrix(4, 0), g40);
    // full-defect sector: single link, empty pairing, determinant one
    EXPECT_EQ(gram_matrix(5, 5), one_by_one(Poly(1)));
}

// <e_i v, w> = <v, e_i w> for the loop bilinear form.
TEST(Link, GramAdjointProperty) {
    for (int n = 2; n <= 6; ++n) {
        for (int d = n % 2; d <= n; d += 2) {
            PolyMatrix g = gram_matrix(n, d);
            EXPECT_TRUE(g.is_symmetric());
            for (int i = 1; i < n; ++i) {
                PolyMatrix ei = representation_generator(n, d, i);
                EXPECT_TRUE((ei.transpose() * g - g * ei).is_zero())
                    << "n=" << n << " d=" << d << " i=" << i;
            }
        }
    }
}

TEST(Link, SublinkRestriction) {
    Link w = Link::from_arcs1(6, {{3, 4}, {2, 5}, {1, 6}});
    Link inner = sublink(w, 1, 4);          // nodes 2..5, arcs (3,4),(2,5)
    EXPECT_EQ(inner, Link::from_arcs1(4, {{2, 3}, {1, 4}}));
    Link under = sublink(w, 2, 3);          // under the enclosing arcs
    EXPECT_EQ(under, Link::from_arcs1(2, {{1, 2}}));
    EXPECT_THROW(sublink(w, 0, 2), std::invalid_argument);  // cuts arc (2,5)
}
