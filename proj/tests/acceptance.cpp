// Acceptance gate: one criterion per invocation (1..11), one PASS/FAIL line
// each, wall-clock budgets enforced.  Run with no argument to sweep all.

#include "templie/gp.hpp"
#include "templie/intertwiner.hpp"
#include "templie/link.hpp"
#include "templie/qnum.hpp"
#include "templie/spectral.hpp"
#include "templie/spin.hpp"
#include "templie/structure.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

using namespace templie;

namespace {

// pinned numeric tolerances
constexpr double kRealityTol = 1e-8;   // max |Im lambda| for the loop sweep
constexpr double kRankTol = 1e-7;      // defectiveness rank evidence
constexpr double kXxzImagTol = 1e-7;   // max |Im lambda| for the XXZ sweep
constexpr double kPdPivotTol = 1e-9;   // smallest admissible LDL^T pivot
constexpr double kClusterTol = 1e-7;   // spectral inclusion clustering

const std::vector<double> kBetaGrid = {-2.5, -2.0, -1.0, -0.3, 0.0, 0.5, 1.0, 1.99, 2.0, 3.0};

PolyMatrix from_ints(const std::vector<std::vector<long>>& rows) {
    PolyMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Poly(rows[i][j]);
    return m;
}

// ---------------------------------------------------------------------------
// 1. exact reproduction of H_{6,0}, S_{6,0}, f_{6,0}

bool crit1(std::string& detail) {
    Poly b = Poly::beta();

    PolyMatrix h = from_ints({{0, 2, 2, 0, 2},
                              {1, 0, 0, 1, 0},
                              {1, 0, 0, 1, 0},
                              {0, 1, 1, 0, 2},
                              {0, 0, 0, 1, 0}});
    long diag[] = {3, 2, 2, 2, 1};
    for (std::size_t k = 0; k < 5; ++k) h.at(k, k) = Poly(diag[k]) * b;
    if (!(hamiltonian_matrix(6, 0) == -h)) {
        detail = "H_{6,0} mismatch";
        return false;
    }

    IntertwinerSet set = f_matrix(6, 0);
    PolyMatrix s(5, 5);
    s.at(0, 0) = Poly(1);
    s.at(1, 1) = Poly(2); s.at(1, 4) = Poly(1);
    s.at(2, 2) = Poly(2); s.at(2, 4) = Poly(1);
    s.at(3, 3) = Poly(3); s.at(3, 4) = -b;
    s.at(4, 1) = Poly(1); s.at(4, 2) = Poly(1); s.at(4, 3) = -b;
    s.at(4, 4) = b * b + Poly(4);
    if (!(set.S == s)) {
        detail = "S_{6,0} mismatch";
        return false;
    }

    PolyMatrix f = from_ints({{0, 0, 0, 0, 1},
                              {0, 0, 0, 1, 0},
                              {0, 0, 1, 0, 1},
                              {0, 0, 0, 1, 0},
                              {0, 1, 0, 0, 0},
                              {1, 0, 0, 0, 0},
                              {0, 1, 0, 0, 1},
                              {0, 0, 1, 0, 0},
                              {0, 0, 0, 1, 0},
                              {0, 0, 0, 0, 1}});
    f.at(3, 4) = -b;  // {2} entry at |+---+>
    if (!(set.f == f)) {
        detail = "f_{6,0} mismatch";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 2. f H = H_spin f exactly, n <= 9

bool crit2(std::string& detail) {
    for (int n = 2; n <= 9; ++n)
        for (int d = n % 2; d <= n; d += 2)
            if (!verify_intertwining(n, d).ok) {
                detail = "n=" + std::to_string(n) + " d=" + std::to_string(d);
                return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// 3. S H = H^T S exactly, n <= 9

bool crit3(std::string& detail) {
    for (int n = 2; n <= 9; ++n)
        for (int d = n % 2; d <= n; d += 2)
            if (!check_pseudo_hermitian(n, d)) {
                detail = "n=" + std::to_string(n) + " d=" + std::to_string(d);
                return false;
            }
    return true;
}

// ---------------------------------------------------------------------------
// 4. injectivity pivots and the dimension gap, n <= 10

bool crit4(std::string& detail) {
    for (int n = 2; n <= 10; ++n)
        for (int d = n % 2; d <= n; d += 2) {
            PivotCertificate cert = verify_injectivity(n, d);
            if (!cert.ok || cert.dim_gap_expected != cert.dim_gap_actual) {
                detail = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " " +
                         cert.failure;
                return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// 5. reality and diagonalisability on the beta grid

bool crit5(std::string& detail) {
    for (int n = 2; n <= 9; ++n)
        for (int d = n % 2; d <= n; d += 2) {
            PolyMatrix h = hamiltonian_matrix(n, d);
            PolyMatrix s = f_matrix(n, d).S;
            for (double beta : kBetaGrid) {
                std::string id = "H[" + std::to_string(n) + "," + std::to_string(d) +
                                 "] beta=" + std::to_string(beta);
                SpectralReport sim = check_reality_similar(h, s, beta, kRealityTol, id);
                if (sim.status != CheckStatus::Pass || sim.max_imag >= kRealityTol) {
                    detail = id + ": " + sim.note;
                    return false;
                }
                SpectralReport gen = check_reality(h.eval(beta), kRankTol, id);
                if (gen.status == CheckStatus::Inconclusive || !gen.diagonalisable) {
                    detail = id + ": " + gen.note;
                    return false;
                }
            }
        }
    for (int n = 2; n <= 6; ++n)
        for (double beta : kBetaGrid)
            for (int t = -n; t <= n; t += 2) {
                double mi = xxz_sector_max_imag_ld(n, t, beta);
                if (!(mi < kXxzImagTol)) {
                    detail = "XXZ n=" + std::to_string(n) + " 2s=" + std::to_string(t) +
                             " beta=" + std::to_string(beta) +
                             " max|Im|=" + std::to_string(mi);
                    return false;
                }
            }
    return true;
}

// ---------------------------------------------------------------------------
// 6. S positive definite on the beta grid, n <= 9

bool crit6(std::string& detail) {
    for (int n = 2; n <= 9; ++n)
        for (int d = n % 2; d <= n; d += 2) {
            PdReport rep = check_positive_definite(f_matrix(n, d).S, kBetaGrid, kPdPivotTol);
            if (!rep.ok) {
                detail = "S[" + std::to_string(n) + "," + std::to_string(d) + "]";
                if (rep.failure)
                    detail += " beta=" + std::to_string(rep.failure->beta) +
                              " pivot=" + std::to_string(rep.failure->pivot);
                return false;
            }
        }
    return true;
}

// ---------------------------------------------------------------------------
// 7. spectral inclusion with at least one strict instance

bool crit7(std::string& detail) {
    bool any_strict = false;
    for (int n = 2; n <= 6; ++n)
        for (double beta : {-1.0, 0.7, 1.7}) {
            InclusionReport rep = spectral_inclusion(n, beta, kClusterTol);
            if (rep.status != CheckStatus::Pass || !rep.equality_ok || !rep.inclusion_ok) {
                detail = "n=" + std::to_string(n) + " beta=" + std::to_string(beta) + ": " +
                         rep.note;
                return false;
            }
            any_strict = any_strict || rep.strict;
        }
    if (!any_strict) {
        detail = "no strict inclusion instance found";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 8. Jordan block of H_XXZ at n=2, q=i

bool crit8(std::string& detail) {
    QValue qv;
    qv.q = std::complex<double>(0, 1);
    qv.beta = 0.0;
    JordanReport rep = jordan_detect(h_xxz_matrix(2, qv), 1e-9);
    if (rep.status != CheckStatus::Pass) {
        detail = rep.note;
        return false;
    }
    int defective = 0;
    for (const JordanCluster& c : rep.clusters)
        if (c.geometric < c.algebraic) ++defective;
    if (defective != 1 || rep.clusters.size() != 1) {
        detail = "expected exactly one defective cluster";
        return false;
    }
    const JordanCluster& c = rep.clusters.front();
    if (std::abs(c.eigenvalue) > 1e-9 || c.algebraic != 4 || c.geometric != 3) {
        detail = "cluster alg=" + std::to_string(c.algebraic) +
                 " geo=" + std::to_string(c.geometric);
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// 9. appendix identities

bool crit9(std::string& detail) {
    for (int n : {2, 4, 6, 8}) {
        if (!verify_gp_consistency(n)) {
            detail = "direct/recursive mismatch at n=" + std::to_string(n);
            return false;
        }
        for (int p = 0; 2 * p <= n - 2; ++p)
            if (!verify_gp_identity(n, p)) {
                detail = "ladder identity n=" + std::to_string(n) + " p=" + std::to_string(p);
                return false;
            }
    }

    // the three worked n=6 images, entry by entry
    Link w = Link::from_arcs1(6, {{3, 4}, {2, 5}, {1, 6}});
    auto image = [&](int p) {
        std::map<std::string, Poly> out;
        auto g = gp_direct_link(w, p);
        if (g)
            for (std::size_t k = 0; k < g->sector.dim(); ++k)
                if (!g->c[k].is_zero())
                    out[spin_string(g->sector.states[k], g->sector.L)] = g->c[k];
        return out;
    };
    Poly q2 = qnum(2);
    std::map<std::string, Poly> want0 = {{"---++", Poly(1)}, {"-+--+", Poly(1)},
                                         {"+--+-", Poly(1)}, {"++---", Poly(1)},
                                         {"+---+", q2}};
    std::map<std::string, Poly> want1 = {{"----+", q2 * q2}, {"+----", q2 * q2},
                                         {"-+---", q2},      {"---+-", q2}};
    std::map<std::string, Poly> want2 = {{"-----", qnum(2) * qnum(3)}};
    if (image(0) != want0 || image(1) != want1 || image(2) != want2) {
        detail = "n=6 worked images differ";
        return false;
    }

    SufReport suf = verify_sufficient_conditions(6, 6, 6);
    if (!suf.all()) {
        detail = std::string("sufficient condition ") +
                 (!suf.suf1 ? "1" : !suf.suf2 ? "2" : "3") + " failed";
        return false;
    }

    int totals[6] = {0, 0, 0, 0, 0, 0};
    for (int n : {6, 8, 10})
        for (int p = 0; 2 * p <= n - 2; ++p) {
            SpecialFormsReport rep = special_link_formulas_check(n, p);
            if (!rep.all_ok) {
                detail = "closed forms n=" + std::to_string(n) + " p=" + std::to_string(p);
                return false;
            }
            for (int f = 0; f < 6; ++f) totals[f] += rep.instances[f];
        }
    for (int f = 0; f < 6; ++f)
        if (totals[f] == 0) {
            detail = "form " + std::to_string(f + 1) + " never instantiated";
            return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// 10. decomposition rule and dimension audits

bool crit10(std::string& detail) {
    Decomposition dec = sector_decomposition(20, 6, 5);
    struct Want {
        ModuleKind kind;
        int d, d_minus;
    };
    const Want want[] = {{ModuleKind::Projective, 10, 8},
                         {ModuleKind::Projective, 12, 6},
                         {ModuleKind::Standard, 14, -1},
                         {ModuleKind::Standard, 16, -1},
                         {ModuleKind::Projective, 20, 18}};
    if (dec.entries.size() != 5) {
        detail = "n=20 s=3 ell=5: wrong summand count";
        return false;
    }
    for (std::size_t k = 0; k < 5; ++k) {
        const DecompEntry& e = dec.entries[k];
        if (e.kind != want[k].kind || e.d != want[k].d || e.d_minus != want[k].d_minus) {
            detail = "n=20 s=3 ell=5: summand " + std::to_string(k + 1) + " differs";
            return false;
        }
    }
    for (int n = 2; n <= 14; ++n)
        for (int twice_s = n % 2; twice_s <= n; twice_s += 2)
            for (int ell : {2, 3, 4, 5})
                if (!dimension_audit(n, twice_s, ell)) {
                    detail = "audit n=" + std::to_string(n) + " 2s=" + std::to_string(twice_s) +
                             " ell=" + std::to_string(ell);
                    return false;
                }
    return true;
}

// ---------------------------------------------------------------------------
// 11. Gram self-adjointness, unit determinant, large-beta positivity

bool crit11(std::string& detail) {
    for (int n = 2; n <= 8; ++n) {
        for (int d = n % 2; d <= n; d += 2) {
            PolyMatrix g = gram_matrix(n, d);
            for (int i = 1; i < n; ++i) {
                PolyMatrix e = representation_generator(n, d, i);
                if (!(g * e - e.transpose() * g).is_zero()) {
                    detail = "adjointness n=" + std::to_string(n) + " d=" + std::to_string(d) +
                             " i=" + std::to_string(i);
                    return false;
                }
            }
        }
        PolyMatrix gn = gram_matrix(n, n);
        if (gn.rows() != 1 || !(gn.at(0, 0) == Poly(1))) {
            detail = "det G(" + std::to_string(n) + "," + std::to_string(n) + ") != 1";
            return false;
        }
    }
    if (!positive_definite_at(gram_matrix(6, 0), Rational(10))) {
        detail = "G_{6,0} not positive definite at beta=10";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

struct Criterion {
    int id;
    const char* what;
    double budget_s;
    bool (*fn)(std::string&);
};

const Criterion kCriteria[] = {
    {1, "exact H_{6,0}, S_{6,0}, f_{6,0} reproduction", 1.0, crit1},
    {2, "intertwining fH = H_spin f exact, n <= 9", 120.0, crit2},
    {3, "pseudo-hermiticity SH = H^T S exact, n <= 9", 120.0, crit3},
    {4, "injectivity pivots and dimension gap, n <= 10", 60.0, crit4},
    {5, "reality and diagonalisability on the beta grid", 300.0, crit5},
    {6, "S positive definite on the beta grid, n <= 9", 300.0, crit6},
    {7, "spectral inclusion with a strict instance", 120.0, crit7},
    {8, "Jordan block of H_XXZ at n=2, q=i", 1.0, crit8},
    {9, "appendix g^p identities and closed forms", 300.0, crit9},
    {10, "sector decomposition rule and audits", 30.0, crit10},
    {11, "Gram adjointness, determinant, positivity", 60.0, crit11},
};

int run_one(const Criterion& c) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_budget = secs <= c.budget_s;
    if (ok && in_budget) {
        std::printf("PASS criterion %d: %s [%.2f s <= %.0f s]\n", c.id, c.what, secs,
                    c.budget_s);
        return 0;
    }
    if (ok) detail = "budget exceeded";
    std::printf("FAIL criterion %d: %s [%.2f s, budget %.0f s]%s%s\n", c.id, c.what, secs,
                c.budget_s, detail.empty() ? "" : " ", detail.c_str());
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        int id = std::atoi(argv[1]);
        for (const Criterion& c : kCriteria)
            if (c.id == id) return run_one(c);
        std::fprintf(stderr, "unknown criterion %s (1..11)\n", argv[1]);
        return 2;
    }
    int rc = 0;
    for (const Criterion& c : kCriteria) rc |= run_one(c);
    return rc;
}
