#include "templie/gp.hpp"

#include "templie/intertwiner.hpp"
#include "templie/qnum.hpp"

#include <stdexcept>

namespace templie {

SectorVec zero_sector_vec(int L, int twice_s) {
    SectorVec v;
    v.sector = enumerate_sector(L, twice_s);
    v.c.assign(v.sector.dim(), Poly());
    return v;
}

bool operator==(const SectorVec& x, const SectorVec& y) {
    return x.sector.L == y.sector.L && x.sector.twice_s == y.sector.twice_s && x.c == y.c;
}

SectorVec& operator+=(SectorVec& x, const SectorVec& y) {
    if (x.sector.L != y.sector.L || x.sector.twice_s != y.sector.twice_s)
        throw std::invalid_argument("SectorVec: sector mismatch");
    for (std::size_t k = 0; k < x.c.size(); ++k) x.c[k] += y.c[k];
    return x;
}

SectorVec operator*(const Poly& s, SectorVec v) {
    for (Poly& e : v.c) e = s * e;
    return v;
}

SectorVec apply_sigma_minus(const SectorVec& v, int pos) {
    const int L = v.sector.L;
    if (pos < 1 || pos > L) throw std::invalid_argument("apply_sigma_minus: position out of range");
    SectorVec out = zero_sector_vec(L, v.sector.twice_s - 2);
    for (std::size_t k = 0; k < v.c.size(); ++k) {
        if (v.c[k].is_zero()) continue;
        SpinState s = v.sector.states[k];
        if (spin_is_down(s, L, pos)) continue;
        out.c[out.sector.index_of(spin_flip(s, L, pos))] += v.c[k];
    }
    return out;
}

SectorVec apply_matrix(const PolyMatrix& m, const SectorVec& v) {
    if (m.rows() != m.cols() || m.cols() != v.c.size())
        throw std::invalid_argument("apply_matrix: dimension mismatch");
    SectorVec out{v.sector, std::vector<Poly>(v.c.size())};
    for (std::size_t j = 0; j < v.c.size(); ++j) {
        if (v.c[j].is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Poly& e = m.at(i, j);
            if (!e.is_zero()) out.c[i] += e * v.c[j];
        }
    }
    return out;
}

SectorVec GPImage::column(std::size_t j) const {
    SectorVec v{sector, std::vector<Poly>(sector.dim())};
    for (std::size_t i = 0; i < sector.dim(); ++i) v.c[i] = columns.at(i, j);
    return v;
}

std::optional<SectorVec> gp_direct_link(const Link& w, int p) {
    const int m = w.n();
    if (w.d() != 0) throw std::invalid_argument("gp_direct_link: link has defects");
    if (p < 0 || 2 * p >= m) return std::nullopt;
    // Overarched link on m + 2p nodes: w shifted right by p, under p nested
    // outer arcs.
    const int N = m + 2 * p;
    std::vector<std::pair<int, int>> arcs;
    for (auto [i, j] : w.arcs()) arcs.emplace_back(i + p, j + p);
    for (int k = 0; k < p; ++k) arcs.emplace_back(k, 2 * p + m - 1 - k);
    Link hat(N, std::move(arcs));
    const Poly fact = qnum_factorial(p);
    SectorVec out = zero_sector_vec(m - 1, -(2 * p + 1));
    for (std::size_t k = 0; k < out.sector.dim(); ++k) {
        // Outer spins frozen up: the full state is the middle state shifted.
        SpinState full = out.sector.states[k] << p;
        CsResult cs = coefficient_cs(hat, full);
        if (cs.negative_depth && !cs.value.is_zero())
            throw std::logic_error("gp_direct_link: negative arc depth with nonzero product");
        if (!cs.value.is_zero()) out.c[k] = Poly::div_exact(cs.value, fact);
    }
    return out;
}

GPImage gp_direct(int n, int p) {
    if (n < 2 || n % 2 != 0 || p < 0 || 2 * p > n - 2)
        throw std::invalid_argument("gp_direct: invalid (n, p)");
    GPImage img;
    img.n = n;
    img.p = p;
    img.basis = enumerate_links(n, 0);
    img.sector = enumerate_sector(n - 1, -(2 * p + 1));
    img.columns = PolyMatrix(img.sector.dim(), img.basis.size());
    for (std::size_t j = 0; j < img.basis.size(); ++j) {
        SectorVec col = gp_direct_link(img.basis[j], p).value();
        for (std::size_t i = 0; i < img.sector.dim(); ++i)
            img.columns.at(i, j) = std::move(col.c[i]);
    }
    return img;
}

namespace {

constexpr int kSpin[2] = {1, -1};

inline SpinState down_bit(int value, int shift) {
    return value < 0 ? SpinState(1) << shift : SpinState(0);
}

std::optional<SectorVec> gp_rec(const Link& w, int p) {
    const int m = w.n();
    if (p < 0 || 2 * p >= m) return std::nullopt;
    if (m == 2) {
        SectorVec base = zero_sector_vec(1, -1);
        base.c[0] = Poly(1);
        return base;
    }
    SectorVec out = zero_sector_vec(m - 1, -(2 * p + 1));
    const int i0 = w.partner(0);
    if (i0 == m - 1) {
        // Arc over the whole link.
        Link w1 = sublink(w, 1, m - 2);
        const Poly pref = qnum(p + 1);
        for (int l : kSpin) {
            for (int r : kSpin) {
                auto sub = gp_rec(w1, p + (l + r) / 2);
                if (!sub) continue;
                for (std::size_t k = 0; k < sub->c.size(); ++k) {
                    if (sub->c[k].is_zero()) continue;
                    SpinState state = down_bit(l, m - 2) | (sub->sector.states[k] << 1) |
                                      down_bit(r, 0);
                    out.c[out.sector.index_of(state)] += pref * sub->c[k];
                }
            }
        }
    } else {
        // Concatenation split after the first arc's closure.
        const int i = i0 + 1;  // 1-based split point
        Link w1 = sublink(w, 0, i0);
        Link w2 = sublink(w, i0 + 1, m - 1);
        for (int a = 0; a <= p; ++a) {
            auto sub1 = gp_rec(w1, a);
            if (!sub1) continue;
            for (int s : kSpin) {
                auto sub2 = gp_rec(w2, p - a + (s - 1) / 2);
                if (!sub2) continue;
                for (std::size_t k1 = 0; k1 < sub1->c.size(); ++k1) {
                    if (sub1->c[k1].is_zero()) continue;
                    for (std::size_t k2 = 0; k2 < sub2->c.size(); ++k2) {
                        if (sub2->c[k2].is_zero()) continue;
                        SpinState state = (sub1->sector.states[k1] << (m - i)) |
                                          down_bit(s, m - 1 - i) | sub2->sector.states[k2];
                        out.c[out.sector.index_of(state)] += sub1->c[k1] * sub2->c[k2];
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

SectorVec gp_recursive(const Link& w, int p) {
    if (w.d() != 0 || p < 0 || 2 * p > w.n() - 2)
        throw std::invalid_argument("gp_recursive: invalid (w, p)");
    return gp_rec(w, p).value();
}

bool verify_gp_identity(int n, int p) {
    GPImage img = gp_direct(n, p);
    PolyMatrix h = hamiltonian_matrix(n, 0);
    PolyMatrix hs = h_spin_sector(img.sector);
    std::optional<GPImage> lower;
    if (p >= 1) lower = gp_direct(n, p - 1);
    const int L = n - 1;
    for (std::size_t col = 0; col < img.basis.size(); ++col) {
        SectorVec lhs = apply_matrix(hs, img.column(col));
        for (std::size_t u = 0; u < img.basis.size(); ++u) {
            const Poly& huc = h.at(u, col);
            if (!huc.is_zero()) lhs += (-huc) * img.column(u);
        }
        SectorVec rhs = zero_sector_vec(L, -(2 * p + 1));
        if (lower) {
            SectorVec g = lower->column(col);
            rhs += apply_sigma_minus(g, 1);
            rhs += apply_sigma_minus(g, L);
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool verify_gp_consistency(int n) {
    for (int p = 0; 2 * p <= n - 2; ++p) {
        GPImage img = gp_direct(n, p);
        for (std::size_t j = 0; j < img.basis.size(); ++j)
            if (!(gp_recursive(img.basis[j], p) == img.column(j))) return false;
    }
    return true;
}

namespace {

// Full-space vectors over all 2^L spin states, for the Omega_k identities.
using FullVec = std::vector<Poly>;

FullVec omega(int L) { return FullVec(std::size_t(1) << L, Poly(1)); }

int zval(SpinState s, int L, int pos) { return spin_is_down(s, L, pos) ? -1 : 1; }

FullVec sminus(const FullVec& v, int L, int pos) {
    FullVec out(v.size());
    for (SpinState s = 0; s < v.size(); ++s) {
        if (v[s].is_zero() || spin_is_down(s, L, pos)) continue;
        out[spin_flip(s, L, pos)] += v[s];
    }
    return out;
}

template <typename F>
FullVec bracket(const FullVec& v, F depth) {
    FullVec out(v.size());
    for (SpinState s = 0; s < v.size(); ++s)
        if (!v[s].is_zero()) out[s] = v[s] * qnum(depth(s));
    return out;
}

// Local hermitian term: both hops around site i plus the {2}-weighted
// projector part, all indices outside [1, L] dropped.
FullVec local_h(const FullVec& v, int L, int i) {
    FullVec out(v.size());
    const Poly two = qnum(2);
    for (SpinState s = 0; s < v.size(); ++s) {
        if (v[s].is_zero()) continue;
        bool di = spin_is_down(s, L, i);
        if (i - 1 >= 1 && spin_is_down(s, L, i - 1) != di)
            out[spin_flip(spin_flip(s, L, i - 1), L, i)] += v[s];
        if (i + 1 <= L && spin_is_down(s, L, i + 1) != di)
            out[spin_flip(spin_flip(s, L, i), L, i + 1)] += v[s];
        long cnt = -long(di);
        if (i - 1 >= 1 && di && spin_is_down(s, L, i - 1)) ++cnt;
        if (i + 1 <= L && di && spin_is_down(s, L, i + 1)) ++cnt;
        if (cnt != 0) out[s] += two * Poly(cnt) * v[s];
    }
    return out;
}

FullVec scale(const Poly& a, FullVec v) {
    for (Poly& e : v) e = a * e;
    return v;
}

FullVec vadd(FullVec x, const FullVec& y) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
    return x;
}

FullVec vsub(FullVec x, const FullVec& y) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= y[k];
    return x;
}

bool all_zero(const FullVec& v) {
    for (const Poly& e : v)
        if (!e.is_zero()) return false;
    return true;
}

bool suf1_holds(int p) {
    const int L = 4;
    FullVec om = omega(L);
    FullVec b1 = bracket(om, [p, L](SpinState s) { return p + (zval(s, L, 1) + zval(s, L, 4)) / 2; });
    FullVec t1 = vsub(scale(qnum(p + 1), sminus(b1, L, 2)), scale(qnum(p), sminus(b1, L, 1)));
    FullVec b2 =
        bracket(om, [p, L](SpinState s) { return p + 1 + (zval(s, L, 1) + zval(s, L, 4)) / 2; });
    FullVec t2 = local_h(scale(qnum(p + 1), b2), L, 1);
    FullVec t3 = sminus(sminus(om, L, 4), L, 1);
    return all_zero(vadd(vsub(t1, t2), t3));
}

bool suf2_holds(int p, int a) {
    const int L = 5;
    FullVec om = omega(L);
    FullVec A =
        bracket(om, [a, L](SpinState s) { return a + 1 - (zval(s, L, 2) + zval(s, L, 3)) / 2; });
    FullVec ta = vsub(scale(qnum(p + 1), vsub(sminus(A, L, 2), local_h(A, L, 1))),
                      scale(qnum(p), sminus(A, L, 1)));
    FullVec B = bracket(
        om, [p, a, L](SpinState s) { return p - a + (zval(s, L, 2) + zval(s, L, 3)) / 2; });
    return all_zero(vadd(ta, sminus(B, L, 1)));
}

bool suf3_holds(int a, int b) {
    const int L = 6;
    FullVec om = omega(L);
    FullVec A =
        bracket(bracket(om, [a, L](SpinState s) {
                    return a + 1 - (zval(s, L, 1) + zval(s, L, 2)) / 2;
                }),
                [b, L](SpinState s) { return b + 1 - (zval(s, L, 4) + zval(s, L, 5)) / 2; });
    FullVec ta = vsub(vadd(sminus(A, L, 2), sminus(A, L, 4)), local_h(A, L, 3));
    FullVec B = bracket(om, [a, b, L](SpinState s) {
        return a + b - (zval(s, L, 1) + zval(s, L, 2) + zval(s, L, 4) + zval(s, L, 5) - 4) / 2;
    });
    return all_zero(vadd(ta, sminus(B, L, 3)));
}

}  // namespace

SufReport verify_sufficient_conditions(int p_max, int a_max, int b_max) {
    SufReport rep;
    rep.suf1 = true;
    for (int p = 0; p <= p_max; ++p) rep.suf1 = rep.suf1 && suf1_holds(p);
    rep.suf2 = true;
    for (int p = 0; p <= p_max; ++p)
        for (int a = 0; a <= a_max; ++a) rep.suf2 = rep.suf2 && suf2_holds(p, a);
    rep.suf3 = true;
    for (int a = 0; a <= a_max; ++a)
        for (int b = 0; b <= b_max; ++b) rep.suf3 = rep.suf3 && suf3_holds(a, b);
    return rep;
}

namespace {

void append_shifted(std::vector<std::pair<int, int>>& arcs, const Link& v, int offset) {
    for (auto [i, j] : v.arcs()) arcs.emplace_back(i + offset, j + offset);
}

// Closed form 1: two nested overarches around v.
bool check_form1(int n, int p, const Link& v) {
    std::vector<std::pair<int, int>> arcs = {{0, n - 1}, {1, n - 2}};
    append_shifted(arcs, v, 2);
    SectorVec lhs = gp_direct_link(Link(n, std::move(arcs)), p).value();
    const int L = n - 1;
    SectorVec rhs = zero_sector_vec(L, -(2 * p + 1));
    for (int r : kSpin)
        for (int s : kSpin)
            for (int t : kSpin)
                for (int u : kSpin) {
                    auto img = gp_direct_link(v, p + (r + s + t + u) / 2);
                    if (!img) continue;
                    Poly pref = qnum(p + 1) * qnum(p + 1 + (r + u) / 2);
                    if (pref.is_zero()) continue;
                    for (std::size_t k = 0; k < img->c.size(); ++k) {
                        if (img->c[k].is_zero()) continue;
                        SpinState state = down_bit(r, L - 1) | down_bit(s, L - 2) |
                                          (img->sector.states[k] << 2) | down_bit(t, 1) |
                                          down_bit(u, 0);
                        rhs.c[rhs.sector.index_of(state)] += pref * img->c[k];
                    }
                }
    return lhs == rhs;
}

// Closed form 2: cups at both ends around v.
bool check_form2(int n, int p, const Link& v) {
    std::vector<std::pair<int, int>> arcs = {{0, 1}, {n - 2, n - 1}};
    append_shifted(arcs, v, 2);
    SectorVec lhs = gp_direct_link(Link(n, std::move(arcs)), p).value();
    const int L = n - 1;
    SectorVec pre = zero_sector_vec(L, 3 - 2 * p);
    for (int r : kSpin)
        for (int s : kSpin)
            for (int t : kSpin)
                for (int u : kSpin) {
                    auto img = gp_direct_link(v, p + (r + s + t + u) / 2 - 2);
                    if (!img) continue;
                    for (std::size_t k = 0; k < img->c.size(); ++k) {
                        if (img->c[k].is_zero()) continue;
                        SpinState state = down_bit(r, L - 1) | down_bit(s, L - 2) |
                                          (img->sector.states[k] << 2) | down_bit(t, 1) |
                                          down_bit(u, 0);
                        pre.c[pre.sector.index_of(state)] += img->c[k];
                    }
                }
    return lhs == apply_sigma_minus(apply_sigma_minus(pre, 1), L);
}

// Closed form 3: full overarch over [inner overarch over v1 | v2].  The
// a-sum runs over every depth where g^a(v1) is nonzero: terms with a > p
// survive here (the bracket does not vanish when both flanking spins are
// up), so the range cannot be clipped at p.
bool check_form3(int n, int p, int i, const Link& v1, const Link& v2) {
    std::vector<std::pair<int, int>> arcs = {{0, n - 1}, {1, i - 1}};
    append_shifted(arcs, v1, 2);
    append_shifted(arcs, v2, i);
    SectorVec lhs = gp_direct_link(Link(n, std::move(arcs)), p).value();
    const int L = n - 1;
    SectorVec rhs = zero_sector_vec(L, -(2 * p + 1));
    for (int a = 0; 2 * a <= v1.n() - 2; ++a) {
        auto img1 = gp_direct_link(v1, a);
        if (!img1) continue;
        for (int l : kSpin)
            for (int r : kSpin)
                for (int s : kSpin)
                    for (int t : kSpin)
                        for (int u : kSpin) {
                            int lam2 = p + (l + r + s + t + u - 1) / 2;
                            auto img2 = gp_direct_link(v2, lam2 - a);
                            if (!img2) continue;
                            Poly pref = qnum(p + 1) * qnum(a + 1 - (r + s) / 2);
                            if (pref.is_zero()) continue;
                            for (std::size_t k1 = 0; k1 < img1->c.size(); ++k1) {
                                if (img1->c[k1].is_zero()) continue;
                                for (std::size_t k2 = 0; k2 < img2->c.size(); ++k2) {
                                    if (img2->c[k2].is_zero()) continue;
                                    SpinState state =
                                        down_bit(l, L - 1) | down_bit(r, L - 2) |
                                        (img1->sector.states[k1] << (n - i + 1)) |
                                        down_bit(s, n - i) | down_bit(t, n - i - 1) |
                                        (img2->sector.states[k2] << 1) | down_bit(u, 0);
                                    rhs.c[rhs.sector.index_of(state)] +=
                                        pref * img1->c[k1] * img2->c[k2];
                                }
                            }
                        }
    }
    return lhs == rhs;
}

// Closed form 4: leading cup, then v1, then an overarch over v2.
bool check_form4(int n, int p, int i, const Link& v1, const Link& v2) {
    std::vector<std::pair<int, int>> arcs = {{0, 1}, {i - 1, n - 1}};
    append_shifted(arcs, v1, 2);
    append_shifted(arcs, v2, i);
    SectorVec lhs = gp_direct_link(Link(n, std::move(arcs)), p).value();
    const int L = n - 1;
    SectorVec pre = zero_sector_vec(L, 1 - 2 * p);
    for (int a = 0; 2 * a <= v1.n() - 2; ++a) {
        auto img1 = gp_direct_link(v1, a);
        if (!img1) continue;
        for (int l : kSpin)
            for (int r : kSpin)
                for (int s : kSpin)
                    for (int t : kSpin)
                        for (int u : kSpin) {
                            int lam2 = p + (l + r + s + t + u - 1) / 2;
                            auto img2 = gp_direct_link(v2, lam2 - a - 1);
                            if (!img2) continue;
                            Poly pref = qnum(p - a + (r + s) / 2);
                            if (pref.is_zero()) continue;
                            for (std::size_t k1 = 0; k1 < img1->c.size(); ++k1) {
                                if (img1->c[k1].is_zero()) continue;
                                for (std::size_t k2 = 0; k2 < img2->c.size(); ++k2) {
                                    if (img2->c[k2].is_zero()) continue;
                                    SpinState state =
                                        down_bit(l, L - 1) | down_bit(r, L - 2) |
                                        (img1->sector.states[k1] << (n - i + 1)) |
                                        down_bit(s, n - i) | down_bit(t, n - i - 1) |
                                        (img2->sector.states[k2] << 1) | down_bit(u, 0);
                                    pre.c[pre.sector.index_of(state)] +=
                                        pref * img1->c[k1] * img2->c[k2];
                                }
                            }
                        }
    }
    return lhs == apply_sigma_minus(pre, 1);
}

// Closed forms 5 and 6 share the node layout: blocks v1, v2, v3 split by
// positions i and j.  Form 5 has adjacent overarches (1,i), (i+1,j); form 6
// has an arch (1,j) over v1, a cup (i,i+1) and v2, then v3.
template <typename Pref, typename Expo>
SectorVec assemble_form56(int n, int p, int i, int j, const Link& v1, const Link& v2,
                          const Link& v3, int twice_s, Pref pref_of, Expo expo_of) {
    const int L = n - 1;
    SectorVec acc = zero_sector_vec(L, twice_s);
    for (int a = 0; 2 * a <= v1.n() - 2; ++a) {
        auto img1 = gp_direct_link(v1, a);
        if (!img1) continue;
        for (int b = 0; 2 * b <= v2.n() - 2; ++b) {
            auto img2 = gp_direct_link(v2, b);
            if (!img2) continue;
            for (int k = 0; k < 64; ++k) {
                const int kk = kSpin[k & 1], l = kSpin[(k >> 1) & 1], r = kSpin[(k >> 2) & 1],
                          s = kSpin[(k >> 3) & 1], t = kSpin[(k >> 4) & 1], u = kSpin[(k >> 5) & 1];
                int lam3 = p + (kk + l + r + s + t + u - 2) / 2;
                auto img3 = gp_direct_link(v3, expo_of(lam3, a, b));
                if (!img3) continue;
                Poly pref = pref_of(a, b, kk, l, r, s, t, u);
                if (pref.is_zero()) continue;
                for (std::size_t k1 = 0; k1 < img1->c.size(); ++k1) {
                    if (img1->c[k1].is_zero()) continue;
                    for (std::size_t k2 = 0; k2 < img2->c.size(); ++k2) {
                        if (img2->c[k2].is_zero()) continue;
                        for (std::size_t k3 = 0; k3 < img3->c.size(); ++k3) {
                            if (img3->c[k3].is_zero()) continue;
                            SpinState state = down_bit(kk, L - 1) |
                                              (img1->sector.states[k1] << (n - i + 1)) |
                                              down_bit(l, n - i) | down_bit(r, n - i - 1) |
                                              down_bit(s, n - i - 2) |
                                              (img2->sector.states[k2] << (n - j + 1)) |
                                              down_bit(t, n - j) | down_bit(u, n - j - 1) |
                                              img3->sector.states[k3];
                            acc.c[acc.sector.index_of(state)] +=
                                pref * img1->c[k1] * img2->c[k2] * img3->c[k3];
                        }
                    }
                }
            }
        }
    }
    return acc;
}

bool check_form5(int n, int p, int i, int j, const Link& v1, const Link& v2, const Link& v3) {
    std::vector<std::pair<int, int>> arcs = {{0, i - 1}, {i, j - 1}};
    append_shifted(arcs, v1, 1);
    append_shifted(arcs, v2, i + 1);
    append_shifted(arcs, v3, j);
    SectorVec lhs = gp_direct_link(Link(n, std::move(arcs)), p).value();
    SectorVec rhs = assemble_form56(
        n, p, i, j, v1, v2, v3, -(2 * p + 1),
        [](int a, int b, int kk, int l, int, int s, int t, int) {
            return qnum(a - (kk + l - 2) / 2) * qnum(b - (s + t - 2) / 2);
        },
        [](int lam3, int a, int b) { return lam3 - a - b; });
    return lhs == rhs;
}

bool check_form6(int n, int p, int i, int j, const Link& v1, const Link& v2, const Link& v3) {
    std::vector<std::pair<int, int>> arcs = {{0, j - 1}, {i - 1, i}};
    append_shifted(arcs, v1, 1);
    append_shifted(arcs, v2, i + 1);
    append_shifted(arcs, v3, j);
    SectorVec lhs = gp_direct_link(Link(n, std::move(arcs)), p).value();
    SectorVec pre = assemble_form56(
        n, p, i, j, v1, v2, v3, 1 - 2 * p,
        [](int a, int b, int kk, int l, int, int s, int t, int) {
            return qnum(a + b - (kk + l + s + t - 4) / 2);
        },
        [](int lam3, int a, int b) { return lam3 - a - b - 1; });
    return lhs == apply_sigma_minus(pre, i);
}

}  // namespace

SpecialFormsReport special_link_formulas_check(int n, int p) {
    if (n < 6 || n % 2 != 0 || p < 0 || 2 * p > n - 2)
        throw std::invalid_argument("special_link_formulas_check: invalid (n, p)");
    SpecialFormsReport rep;
    rep.ok.fill(true);
    for (const Link& v : enumerate_links(n - 4, 0)) {
        rep.ok[0] = rep.ok[0] && check_form1(n, p, v);
        ++rep.instances[0];
        rep.ok[1] = rep.ok[1] && check_form2(n, p, v);
        ++rep.instances[1];
    }
    for (int i = 5; i <= n - 3; i += 2) {
        for (const Link& v1 : enumerate_links(i - 3, 0)) {
            for (const Link& v2 : enumerate_links(n - i - 1, 0)) {
                rep.ok[2] = rep.ok[2] && check_form3(n, p, i, v1, v2);
                ++rep.instances[2];
                rep.ok[3] = rep.ok[3] && check_form4(n, p, i, v1, v2);
                ++rep.instances[3];
            }
        }
    }
    for (int i = 4; i + 6 <= n; i += 2) {
        for (int j = i + 4; j + 2 <= n; j += 2) {
            for (const Link& v1 : enumerate_links(i - 2, 0)) {
                for (const Link& v2 : enumerate_links(j - i - 2, 0)) {
                    for (const Link& v3 : enumerate_links(n - j, 0)) {
                        rep.ok[4] = rep.ok[4] && check_form5(n, p, i, j, v1, v2, v3);
                        ++rep.instances[4];
                        rep.ok[5] = rep.ok[5] && check_form6(n, p, i, j, v1, v2, v3);
                        ++rep.instances[5];
                    }
                }
            }
        }
    }
    rep.all_ok = true;
    for (bool b : rep.ok) rep.all_ok = rep.all_ok && b;
    return rep;
}

}  // namespace templie
