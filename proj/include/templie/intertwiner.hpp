#pragma once

#include "templie/link.hpp"
#include "templie/matrix.hpp"
#include "templie/spin.hpp"

#include <string>
#include <utility>
#include <vector>

namespace templie {

// Depth of one arc (i,j) of w under the spin word s on n-1 sites:
// m = (1 - sum_{k=i..j-1} s_k)/2.  The arc is given 1-based.
int arc_depth(const Link& w, std::pair<int, int> arc1, SpinState s);

struct CsResult {
    Poly value;
    bool negative_depth = false;  // some arc had m < 0, odd extension used
};

// c_s = prod over arcs of {m}; zero polynomial iff some depth is 0.
CsResult coefficient_cs(const Link& w, SpinState s);

struct IntertwinerSet {
    int n = 0, d = 0;
    std::vector<Link> basis;  // ordered B_{n,d}, the columns
    SpinSector sector;        // magnetisation (d-1)/2 on n-1 sites, the rows
    PolyMatrix f;             // entry (s, w) = c_s(w)
    PolyMatrix S;             // f^T f
};

IntertwinerSet f_matrix(int n, int d);

struct IntertwineReport {
    bool ok = false;
    PolyMatrix residual;  // f H - H_spin f
};

IntertwineReport verify_intertwining(int n, int d);

struct PivotCertificate {
    bool ok = false;
    std::vector<std::size_t> pivot_rows;  // per column, row of the unit pivot
    Int dim_gap_expected, dim_gap_actual;
    std::string failure;  // empty when ok
};

// Certifies injectivity of f: each column has entry 1 at the row whose down
// spins sit exactly at the arc openers, with every other nonzero entry at a
// strictly smaller dyadic row.
PivotCertificate verify_injectivity(int n, int d);

}  // namespace templie
