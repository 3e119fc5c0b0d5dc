#pragma once

#include "templie/qnum.hpp"

#include <vector>

namespace templie {

// ell marker for generic q (q not a root of unity).
inline constexpr int kGenericEll = 0;

// Critical defect numbers and reflection orbits at a root of unity, where
// ell is the smallest positive integer with q^{2 ell} = 1.
struct OrbitPartition {
    int n = 0;
    int ell = 0;
    std::vector<int> critical;               // ascending
    std::vector<std::vector<int>> orbits;    // each ascending, ordered by first element
};

// Partition of {d : 0 <= d <= n, d = n mod 2} into critical values
// (d = ell-1 mod ell) and orbits of the reflection group generated by all
// mirrors at c = ell-1 mod ell.
OrbitPartition orbit_partition(int n, int ell);

// Semi-simple regimes: generic q, ell = 1, ell = 2 with n odd, and
// ell >= 3 with n < ell.
bool is_semisimple(int n, int ell);

enum class ModuleKind { Projective, Standard, Irreducible };

// One direct summand; multiplicities are all one, absent entries are zero.
struct DecompEntry {
    ModuleKind kind = ModuleKind::Standard;
    int d = 0;
    int d_minus = -1;  // submodule label inside a projective, else -1
};

struct Decomposition {
    int n = 0;
    int twice_s = 0;
    int ell = 0;
    std::vector<DecompEntry> entries;  // ascending in d
    // ell = 2 with d = 0 in range: V_{n,0} coincides with the d = 2
    // irreducible there, and the entries are reported without relabelling.
    bool beta0_caveat = false;
};

// Sector magnetisation s (as twice_s) keeps defect numbers d >= |2s|;
// critical d give standard modules, truncated orbits pair left-to-right
// into projectives, an unpaired largest element stays standard.  Semi-simple
// regimes decompose into irreducibles instead.
Decomposition sector_decomposition(int n, int twice_s, int ell);

// Summand dimensions against the sector dimension C(n, (n - |2s|)/2).
bool dimension_audit(int n, int twice_s, int ell);

// dim I_{n,d} as the Gram rank at a generic rational beta sample.
long dim_irreducible_generic(int n, int d);

}  // namespace templie
