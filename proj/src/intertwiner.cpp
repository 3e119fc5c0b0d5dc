#include "templie/intertwiner.hpp"

#include "templie/qnum.hpp"

#include <sstream>
#include <stdexcept>

namespace templie {

int arc_depth(const Link& w, std::pair<int, int> arc1, SpinState s) {
    auto [i, j] = arc1;
    if (i > j) std::swap(i, j);
    if (i < 1 || j > w.n() || w.partner(i - 1) != j - 1)
        throw std::invalid_argument("arc_depth: arc not in link");
    const int L = w.n() - 1;
    int sum = 0;
    for (int k = i; k <= j - 1; ++k) sum += spin_is_down(s, L, k) ? -1 : 1;
    return (1 - sum) / 2;
}

CsResult coefficient_cs(const Link& w, SpinState s) {
    CsResult r{Poly(1), false};
    for (auto [i, j] : w.arcs1()) {
        int m = arc_depth(w, {i, j}, s);
        if (m < 0) r.negative_depth = true;
        r.value = r.value * qnum(m);
        if (r.value.is_zero()) break;
    }
    return r;
}

IntertwinerSet f_matrix(int n, int d) {
    IntertwinerSet set;
    set.n = n;
    set.d = d;
    set.basis = enumerate_links(n, d);
    set.sector = enumerate_sector(n - 1, d - 1);
    set.f = PolyMatrix(set.sector.dim(), set.basis.size());
    for (std::size_t col = 0; col < set.basis.size(); ++col) {
        for (std::size_t row = 0; row < set.sector.dim(); ++row) {
            CsResult c = coefficient_cs(set.basis[col], set.sector.states[row]);
            if (c.negative_depth && !c.value.is_zero()) {
                std::ostringstream msg;
                msg << "f_matrix: negative arc depth with nonzero product at (" << n << "," << d
                    << "), column " << col << ", row " << row;
                throw std::logic_error(msg.str());
            }
            set.f.at(row, col) = std::move(c.value);
        }
    }
    set.S = set.f.transpose() * set.f;
    return set;
}

IntertwineReport verify_intertwining(int n, int d) {
    IntertwinerSet set = f_matrix(n, d);
    PolyMatrix h = hamiltonian_matrix(n, d);
    PolyMatrix hs = h_spin_sector(set.sector);
    IntertwineReport rep;
    rep.residual = set.f * h - hs * set.f;
    rep.ok = rep.residual.is_zero();
    return rep;
}

PivotCertificate verify_injectivity(int n, int d) {
    IntertwinerSet set = f_matrix(n, d);
    const int L = n - 1;
    PivotCertificate cert;
    cert.dim_gap_expected = binomial(L, (n - d - 4) / 2);
    cert.dim_gap_actual = Int(set.sector.dim()) - Int(set.basis.size());
    if (cert.dim_gap_expected != cert.dim_gap_actual) {
        cert.failure = "dimension gap mismatch";
        return cert;
    }
    for (std::size_t col = 0; col < set.basis.size(); ++col) {
        SpinState sw = 0;
        for (int node : set.basis[col].openers()) sw |= SpinState(1) << (L - 1 - node);
        std::size_t prow = set.sector.index_of(sw);
        if (set.f.at(prow, col) != Poly(1)) {
            cert.failure = "pivot entry is not 1";
            return cert;
        }
        for (std::size_t row = prow + 1; row < set.sector.dim(); ++row) {
            if (!set.f.at(row, col).is_zero()) {
                cert.failure = "nonzero entry below the pivot row";
                return cert;
            }
        }
        cert.pivot_rows.push_back(prow);
    }
    cert.ok = true;
    return cert;
}

}  // namespace templie
