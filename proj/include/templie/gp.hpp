#pragma once

#include "templie/link.hpp"
#include "templie/matrix.hpp"
#include "templie/spin.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace templie {

// Vector over Z[beta] in an ordered spin sector basis.
struct SectorVec {
    SpinSector sector;
    std::vector<Poly> c;
};

SectorVec zero_sector_vec(int L, int twice_s);
bool operator==(const SectorVec& x, const SectorVec& y);
SectorVec& operator+=(SectorVec& x, const SectorVec& y);
SectorVec operator*(const Poly& s, SectorVec v);

// sigma^-_pos; lands one magnetisation step lower.
SectorVec apply_sigma_minus(const SectorVec& v, int pos);

// Applies a sector-basis square matrix.
SectorVec apply_matrix(const PolyMatrix& m, const SectorVec& v);

// All g^p(w) for w in B_{n,0}, as columns over the magnetisation -(2p+1)/2
// sector of n-1 spins.
struct GPImage {
    int n = 0, p = 0;
    std::vector<Link> basis;
    SpinSector sector;
    PolyMatrix columns;  // sector.dim() x basis.size()

    SectorVec column(std::size_t j) const;
};

// Direct definition: the overarched intertwiner column, outer spins frozen
// up, divided exactly by {p}!.
GPImage gp_direct(int n, int p);
std::optional<SectorVec> gp_direct_link(const Link& w, int p);  // nullopt when g^p = 0

// Two-family recursion; agrees with the direct form.
SectorVec gp_recursive(const Link& w, int p);

// H g^p(w) - g^p(hw) = (sigma^-_1 + sigma^-_{n-1}) g^{p-1}(w) for all w.
bool verify_gp_identity(int n, int p);

// gp_direct == gp_recursive column by column, every valid p.
bool verify_gp_consistency(int n);

struct SufReport {
    bool suf1 = false, suf2 = false, suf3 = false;
    bool all() const { return suf1 && suf2 && suf3; }
};

// The three exact operator identities on Omega_4, Omega_5, Omega_6 swept
// over p <= p_max, a <= a_max, b <= b_max.
SufReport verify_sufficient_conditions(int p_max, int a_max, int b_max);

struct SpecialFormsReport {
    std::array<int, 6> instances{};  // fixtures evaluated per closed form
    std::array<bool, 6> ok{};
    bool all_ok = false;
};

// The six closed forms for g^p on special link shapes, against the direct
// definition.  Each form is instantiated at every admissible split of n with
// nonzero-length sublinks; forms whose minimal size exceeds n report zero
// instances.
SpecialFormsReport special_link_formulas_check(int n, int p);

}  // namespace templie
