#include "templie/structure.hpp"
#include "templie/link.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace templie;

TEST(Structure, OrbitPartitionN20Ell5) {
    OrbitPartition part = orbit_partition(20, 5);
    EXPECT_EQ(part.critical, (std::vector<int>{4, 14}));
    ASSERT_EQ(part.orbits.size(), 2u);
    EXPECT_EQ(part.orbits[0], (std::vector<int>{0, 8, 10, 18, 20}));
    EXPECT_EQ(part.orbits[1], (std::vector<int>{2, 6, 12, 16}));
}

// Every admissible d appears exactly once; orbits are closed under the
// mirror at each critical line they straddle.
TEST(Structure, PartitionInvariants) {
    for (int n = 2; n <= 14; ++n) {
        for (int ell = 2; ell <= 6; ++ell) {
            OrbitPartition part = orbit_partition(n, ell);
            std::set<int> seen;
            for (int d : part.critical) {
                EXPECT_EQ(d % ell, ell - 1);
                EXPECT_TRUE(seen.insert(d).second);
            }
            for (const auto& orbit : part.orbits) {
                EXPECT_TRUE(std::is_sorted(orbit.begin(), orbit.end()));
                for (int d : orbit) {
                    EXPECT_NE(d % ell, ell - 1);
                    EXPECT_TRUE(seen.insert(d).second);
                }
                // reflection closure: mirror about any critical line lands
                // back in the same orbit when it stays in range
                for (int d : orbit) {
                    for (int c = ell - 1; c <= 2 * n; c += ell) {
                        int refl = 2 * c - d;
                        if (refl < 0 || refl > n) continue;
                        EXPECT_TRUE(std::find(orbit.begin(), orbit.end(), refl) != orbit.end())
                            << "n=" << n << " ell=" << ell << " d=" << d << " refl=" << refl;
                    }
                }
            }
            int count = 0;
            for (int d = n % 2; d <= n; d += 2)
                if (seen.count(d)) ++count;
            EXPECT_EQ(static_cast<int>(seen.size()), count);
            EXPECT_EQ(count, n / 2 + 1);
        }
    }
}

TEST(Structure, SemisimpleRegimes) {
    EXPECT_TRUE(is_semisimple(6, kGenericEll));
    EXPECT_TRUE(is_semisimple(9, 1));
    EXPECT_TRUE(is_semisimple(7, 2));   // ell=2, n odd
    EXPECT_FALSE(is_semisimple(6, 2));
    EXPECT_TRUE(is_semisimple(4, 5));   // n < ell
    EXPECT_FALSE(is_semisimple(5, 5));
    EXPECT_FALSE(is_semisimple(6, 3));
}

TEST(Structure, SectorDecompositionN20S3Ell5) {
    Decomposition dec = sector_decomposition(20, 6, 5);
    ASSERT_EQ(dec.entries.size(), 5u);

    EXPECT_EQ(dec.entries[0].kind, ModuleKind::Projective);
    EXPECT_EQ(dec.entries[0].d, 10);
    EXPECT_EQ(dec.entries[0].d_minus, 8);

    EXPECT_EQ(dec.entries[1].kind, ModuleKind::Projective);
    EXPECT_EQ(dec.entries[1].d, 12);
    EXPECT_EQ(dec.entries[1].d_minus, 6);

    EXPECT_EQ(dec.entries[2].kind, ModuleKind::Standard);
    EXPECT_EQ(dec.entries[2].d, 14);

    EXPECT_EQ(dec.entries[3].kind, ModuleKind::Standard);
    EXPECT_EQ(dec.entries[3].d, 16);

    EXPECT_EQ(dec.entries[4].kind, ModuleKind::Projective);
    EXPECT_EQ(dec.entries[4].d, 20);
    EXPECT_EQ(dec.entries[4].d_minus, 18);

    EXPECT_FALSE(dec.beta0_caveat);
}

TEST(Structure, GenericDecompositionIsIrreducibles) {
    Decomposition dec = sector_decomposition(8, 0, kGenericEll);
    ASSERT_EQ(dec.entries.size(), 5u);
    for (std::size_t k = 0; k < dec.entries.size(); ++k) {
        EXPECT_EQ(dec.entries[k].kind, ModuleKind::Irreducible);
        EXPECT_EQ(dec.entries[k].d, static_cast<int>(2 * k));
    }
}

TEST(Structure, BetaZeroCaveatFlag) {
    Decomposition dec = sector_decomposition(6, 0, 2);
    EXPECT_TRUE(dec.beta0_caveat);
    Decomposition odd = sector_decomposition(6, 2, 2);
    EXPECT_FALSE(odd.beta0_caveat);
}

TEST(Structure, DimensionAudits) {
    for (int n = 2; n <= 12; ++n)
        for (int twice_s = n % 2; twice_s <= n; twice_s += 2)
            for (int ell : {2, 3, 4, 5})
                EXPECT_TRUE(dimension_audit(n, twice_s, ell))
                    << "n=" << n << " 2s=" << twice_s << " ell=" << ell;
}

TEST(Structure, GenericDimensionAudits) {
    for (int n = 2; n <= 9; ++n)
        for (int twice_s = n % 2; twice_s <= n; twice_s += 2)
            EXPECT_TRUE(dimension_audit(n, twice_s, kGenericEll))
                << "n=" << n << " 2s=" << twice_s;
}

TEST(Structure, GenericIrreducibleDims) {
    EXPECT_EQ(dim_irreducible_generic(4, 0), 2);
    EXPECT_EQ(dim_irreducible_generic(4, 2), 3);
    EXPECT_EQ(dim_irreducible_generic(4, 4), 1);
    for (int d = 0; d <= 6; d += 2)
        EXPECT_EQ(dim_irreducible_generic(6, d), link_dim(6, d)) << "d=" << d;
}
