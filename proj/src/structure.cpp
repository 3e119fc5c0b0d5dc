#include "templie/structure.hpp"

#include "templie/link.hpp"
#include "templie/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace templie {

namespace {

void check_ell(int ell) {
    if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
}

void check_sector(int n, int twice_s) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (std::abs(twice_s) > n || (n - twice_s) % 2 != 0)
        throw std::invalid_argument("invalid sector");
}

bool is_critical(int d, int ell) { return d % ell == ell - 1; }

}  // namespace

OrbitPartition orbit_partition(int n, int ell) {
    check_ell(ell);
    if (ell == kGenericEll) throw std::invalid_argument("orbit_partition needs a root of unity");
    OrbitPartition part;
    part.n = n;
    part.ell = ell;
    std::vector<int> pending;
    for (int d = n % 2; d <= n; d += 2)
        (is_critical(d, ell) ? part.critical : pending).push_back(d);
    std::vector<bool> used(pending.size(), false);
    for (std::size_t k = 0; k < pending.size(); ++k) {
        if (used[k]) continue;
        // The mirror group is generated by d -> 2c - d over all c = ell-1
        // mod ell, so the orbit of d is d mod 2 ell together with its
        // reflection through ell-1, repeated with period 2 ell.
        const int d0 = pending[k];
        const int refl = ((2 * (ell - 1) - d0) % (2 * ell) + 2 * ell) % (2 * ell);
        std::vector<int> orbit;
        for (std::size_t j = k; j < pending.size(); ++j) {
            if (used[j]) continue;
            int r = pending[j] % (2 * ell);
            if (r == d0 % (2 * ell) || r == refl) {
                orbit.push_back(pending[j]);
                used[j] = true;
            }
        }
        part.orbits.push_back(std::move(orbit));
    }
    return part;
}

bool is_semisimple(int n, int ell) {
    check_ell(ell);
    if (ell == kGenericEll || ell == 1) return true;
    if (ell == 2) return n % 2 != 0;
    return n < ell;
}

Decomposition sector_decomposition(int n, int twice_s, int ell) {
    check_sector(n, twice_s);
    check_ell(ell);
    Decomposition dec;
    dec.n = n;
    dec.twice_s = twice_s;
    dec.ell = ell;
    const int dmin = std::abs(twice_s);
    if (is_semisimple(n, ell)) {
        for (int d = dmin; d <= n; d += 2)
            dec.entries.push_back({ModuleKind::Irreducible, d, -1});
        return dec;
    }
    OrbitPartition part = orbit_partition(n, ell);
    for (int c : part.critical)
        if (c >= dmin) dec.entries.push_back({ModuleKind::Standard, c, -1});
    for (const std::vector<int>& orbit : part.orbits) {
        std::vector<int> kept;
        for (int d : orbit)
            if (d >= dmin) kept.push_back(d);
        std::size_t k = 0;
        for (; k + 1 < kept.size(); k += 2)
            dec.entries.push_back({ModuleKind::Projective, kept[k + 1], kept[k]});
        if (k < kept.size()) dec.entries.push_back({ModuleKind::Standard, kept[k], -1});
    }
    std::sort(dec.entries.begin(), dec.entries.end(),
              [](const DecompEntry& x, const DecompEntry& y) { return x.d < y.d; });
    dec.beta0_caveat = ell == 2 && dmin == 0;
    return dec;
}

bool dimension_audit(int n, int twice_s, int ell) {
    Decomposition dec = sector_decomposition(n, twice_s, ell);
    Int total = 0;
    for (const DecompEntry& e : dec.entries) {
        switch (e.kind) {
            case ModuleKind::Projective:
                total += Int(link_dim(n, e.d_minus)) + Int(link_dim(n, e.d));
                break;
            case ModuleKind::Standard:
                total += Int(link_dim(n, e.d));
                break;
            case ModuleKind::Irreducible:
                total += Int(dim_irreducible_generic(n, e.d));
                break;
        }
    }
    return total == binomial(n, (n - std::abs(twice_s)) / 2);
}

long dim_irreducible_generic(int n, int d) {
    return rank_at(gram_matrix(n, d), Rational(7, 3));
}

}  // namespace templie
