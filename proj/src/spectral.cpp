#include "templie/spectral.hpp"

#include "templie/caps.hpp"
#include "templie/intertwiner.hpp"
#include "templie/link.hpp"
#include "templie/spin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace templie {

namespace {

struct Cluster {
    std::complex<double> center;
    int count = 0;
};

struct Clustering {
    std::vector<Cluster> clusters;
    bool ambiguous = false;  // members within 2 tol across a cluster boundary
};

Clustering cluster_eigs(std::vector<std::complex<double>> eigs, double tol) {
    std::sort(eigs.begin(), eigs.end(), [](const auto& x, const auto& y) {
        return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
    });
    Clustering out;
    std::size_t k = 0;
    while (k < eigs.size()) {
        std::complex<double> sum = eigs[k];
        std::size_t start = k++;
        while (k < eigs.size() && std::abs(eigs[k] - eigs[k - 1]) < tol) sum += eigs[k++];
        if (k < eigs.size() && std::abs(eigs[k] - eigs[k - 1]) < 2 * tol) out.ambiguous = true;
        out.clusters.push_back({sum / double(k - start), int(k - start)});
    }
    return out;
}

// Numeric rank of m - lambda I.  Returns -1 when a singular value falls in
// the threshold band and the rank is not trustworthy.
int shifted_rank(const Eigen::MatrixXcd& m, std::complex<double> lambda, double tol) {
    Eigen::MatrixXcd shifted = m;
    shifted.diagonal().array() -= lambda;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(shifted);
    const auto& sv = svd.singularValues();
    double thr = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > thr) ++rank;
        if (sv(i) > thr / 2 && sv(i) < 2 * thr) return -1;
    }
    return rank;
}

std::vector<std::complex<double>> to_vector(const Eigen::VectorXcd& v) {
    return {v.data(), v.data() + v.size()};
}

}  // namespace

SpectralReport check_reality(const Eigen::MatrixXcd& m, double tol, std::string matrix_id) {
    SpectralReport rep;
    rep.matrix_id = std::move(matrix_id);
    rep.tolerance = tol;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    if (es.info() != Eigen::Success) {
        rep.status = CheckStatus::Inconclusive;
        rep.note = "eigensolver failed";
        return rep;
    }
    rep.eigenvalues = to_vector(es.eigenvalues());
    rep.max_imag = 0.0;
    for (const auto& z : rep.eigenvalues) rep.max_imag = std::max(rep.max_imag, std::abs(z.imag()));
    rep.status = rep.max_imag < tol ? CheckStatus::Pass : CheckStatus::Fail;
    for (const Cluster& c : cluster_eigs(rep.eigenvalues, tol).clusters) {
        if (c.count == 1) continue;
        int rank = shifted_rank(m, c.center, tol);
        if (rank < 0) {
            rep.diagonalisable = false;
            rep.note = "rank evidence borderline";
        } else if (int(m.rows()) - rank < c.count) {
            rep.diagonalisable = false;
            rep.note = "defective cluster detected";
        }
    }
    return rep;
}

SpectralReport check_reality(const Eigen::MatrixXd& m, double tol, std::string matrix_id) {
    return check_reality(Eigen::MatrixXcd(m.cast<std::complex<double>>()), tol,
                         std::move(matrix_id));
}

SpectralReport check_reality_similar(const PolyMatrix& h, const PolyMatrix& s, double beta,
                                     double tol, std::string matrix_id) {
    Eigen::MatrixXd hd = h.eval(beta);
    Eigen::MatrixXd sd = s.eval(beta);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ses(sd);
    double pd_floor = 1e-10 * std::max(1.0, ses.eigenvalues().cwiseAbs().maxCoeff());
    if (ses.info() != Eigen::Success || ses.eigenvalues().minCoeff() <= pd_floor) {
        SpectralReport rep = check_reality(hd, tol, std::move(matrix_id));
        rep.note += rep.note.empty() ? "" : "; ";
        rep.note += "similarity route unavailable";
        return rep;
    }
    Eigen::VectorXd root = ses.eigenvalues().cwiseSqrt();
    Eigen::MatrixXd half = ses.eigenvectors() * root.asDiagonal() * ses.eigenvectors().transpose();
    Eigen::MatrixXd ihalf = ses.eigenvectors() * root.cwiseInverse().asDiagonal() *
                            ses.eigenvectors().transpose();
    Eigen::MatrixXd sim = half * hd * ihalf;
    double scale = std::max(1.0, sim.cwiseAbs().maxCoeff());
    double residual = (sim - sim.transpose()).cwiseAbs().maxCoeff();
    SpectralReport rep;
    rep.matrix_id = std::move(matrix_id);
    rep.tolerance = tol;
    if (residual >= tol * scale) {
        rep.status = CheckStatus::Inconclusive;
        rep.note = "similarity transform not symmetric within tolerance";
        return rep;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> hes(0.5 * (sim + sim.transpose()));
    if (hes.info() != Eigen::Success) {
        rep.status = CheckStatus::Inconclusive;
        rep.note = "eigensolver failed";
        return rep;
    }
    rep.eigenvalues = to_vector(hes.eigenvalues().cast<std::complex<double>>());
    rep.max_imag = 0.0;
    rep.status = CheckStatus::Pass;
    rep.note = "similarity route";
    return rep;
}

PdReport check_positive_definite(const PolyMatrix& s, const std::vector<double>& betas,
                                 double tol) {
    PdReport rep;
    rep.samples = betas;
    for (double beta : betas) {
        Eigen::MatrixXd sd = s.eval(beta);
        Eigen::LDLT<Eigen::MatrixXd> ldlt(sd);
        if (ldlt.info() != Eigen::Success) {
            rep.failure = PdFailure{beta, std::numeric_limits<double>::quiet_NaN()};
            return rep;
        }
        double min_pivot = ldlt.vectorD().minCoeff();
        if (!(min_pivot > tol)) {
            rep.failure = PdFailure{beta, min_pivot};
            return rep;
        }
    }
    rep.ok = true;
    return rep;
}

bool check_pseudo_hermitian(int n, int d) {
    PolyMatrix h = hamiltonian_matrix(n, d);
    PolyMatrix s = f_matrix(n, d).S;
    return (s * h - h.transpose() * s).is_zero();
}

namespace {

std::vector<double> centers_real(const Clustering& cl) {
    std::vector<double> out;
    out.reserve(cl.clusters.size());
    for (const Cluster& c : cl.clusters) out.push_back(c.center.real());
    return out;
}

bool covered(const std::vector<Cluster>& xs, const std::vector<Cluster>& within, double tol) {
    for (const Cluster& x : xs) {
        bool hit = false;
        for (const Cluster& y : within)
            if (std::abs(x.center - y.center) < tol) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

InclusionReport spectral_inclusion(int n, double beta, double tol) {
    if (n < 2) throw std::invalid_argument("spectral_inclusion: n must be at least 2");
    if (n > env_max_n(10)) throw SizeCapError("spectral_inclusion: n above cap");
    InclusionReport rep;
    rep.tolerance = tol;
    QValue qv = q_from_beta(beta);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> xs(h_xxz_matrix(n, qv), false);
    if (xs.info() != Eigen::Success) {
        rep.status = CheckStatus::Inconclusive;
        rep.note = "xxz eigensolver failed";
        return rep;
    }
    std::vector<std::complex<double>> union_eigs;
    for (int d = n % 2; d <= n; d += 2) {
        Eigen::EigenSolver<Eigen::MatrixXd> es(hamiltonian_matrix(n, d).eval(beta), false);
        if (es.info() != Eigen::Success) {
            rep.status = CheckStatus::Inconclusive;
            rep.note = "standard-module eigensolver failed";
            return rep;
        }
        for (const auto& z : to_vector(es.eigenvalues())) union_eigs.push_back(z);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> hs(h_spin_matrix(n - 1).eval(beta));
    if (hs.info() != Eigen::Success) {
        rep.status = CheckStatus::Inconclusive;
        rep.note = "hermitian-chain eigensolver failed";
        return rep;
    }
    Clustering cx = cluster_eigs(to_vector(xs.eigenvalues()), tol);
    Clustering cu = cluster_eigs(union_eigs, tol);
    Clustering ch = cluster_eigs(to_vector(hs.eigenvalues().cast<std::complex<double>>()), tol);
    rep.xxz = centers_real(cx);
    rep.standard_union = centers_real(cu);
    rep.hermitian = centers_real(ch);
    if (cx.ambiguous || cu.ambiguous || ch.ambiguous) {
        rep.status = CheckStatus::Inconclusive;
        rep.note = "eigenvalues straddle a cluster boundary";
        return rep;
    }
    rep.equality_ok = covered(cx.clusters, cu.clusters, tol) && covered(cu.clusters, cx.clusters, tol);
    rep.inclusion_ok = covered(cx.clusters, ch.clusters, tol) && covered(cu.clusters, ch.clusters, tol);
    rep.strict = !covered(ch.clusters, cu.clusters, tol);
    rep.status = rep.equality_ok && rep.inclusion_ok ? CheckStatus::Pass : CheckStatus::Fail;
    return rep;
}

JordanReport jordan_detect(const Eigen::MatrixXcd& m, double tol) {
    JordanReport rep;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    if (es.info() != Eigen::Success) {
        rep.status = CheckStatus::Inconclusive;
        rep.note = "eigensolver failed";
        return rep;
    }
    Clustering cl = cluster_eigs(to_vector(es.eigenvalues()), tol);
    if (cl.ambiguous) {
        rep.status = CheckStatus::Inconclusive;
        rep.note = "eigenvalues straddle a cluster boundary";
        return rep;
    }
    for (const Cluster& c : cl.clusters) {
        JordanCluster jc;
        jc.eigenvalue = c.center;
        jc.algebraic = c.count;
        if (c.count == 1) {
            jc.geometric = 1;
        } else {
            int rank = shifted_rank(m, c.center, tol);
            if (rank < 0) {
                rep.status = CheckStatus::Inconclusive;
                rep.note = "singular value in the threshold band";
                return rep;
            }
            jc.geometric = int(m.rows()) - rank;
        }
        if (jc.geometric < jc.algebraic) rep.any_defective = true;
        rep.clusters.push_back(jc);
    }
    rep.status = CheckStatus::Pass;
    return rep;
}

GramScanReport gram_positivity_scan(int n, int d, double lo, double hi, double step) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(step > 0) || hi < lo)
        throw std::invalid_argument("gram_positivity_scan: bad window");
    PolyMatrix g = gram_matrix(n, d);
    std::vector<double> grid;
    for (double b = lo; b <= hi + step / 2; b += step) grid.push_back(b);
    std::vector<double> dets(grid.size()), mins(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        Eigen::MatrixXd gd = g.eval(grid[k]);
        dets[k] = gd.determinant();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gd, Eigen::EigenvaluesOnly);
        mins[k] = es.eigenvalues().minCoeff();
    }
    GramScanReport rep;
    double det_scale = 0.0;
    for (double v : dets) det_scale = std::max(det_scale, std::abs(v));
    double zero_tol = 1e-12 * std::max(1.0, det_scale);
    std::vector<bool> at_zero(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        at_zero[k] = std::abs(dets[k]) <= zero_tol;
        if (at_zero[k]) rep.det_zeros.push_back(grid[k]);
    }
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        if (!at_zero[k] && !at_zero[k + 1] && dets[k] * dets[k + 1] < 0)
            rep.det_zeros.push_back(0.5 * (grid[k] + grid[k + 1]));
    std::sort(rep.det_zeros.begin(), rep.det_zeros.end());
    std::size_t first_good = grid.size();
    for (std::size_t k = grid.size(); k-- > 0;) {
        if (mins[k] > 0)
            first_good = k;
        else
            break;
    }
    rep.positive_at_end = first_good < grid.size();
    rep.positive_from =
        rep.positive_at_end ? grid[first_good] : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

double xxz_sector_max_imag_ld(int n, int twice_s, double beta) {
    MatrixXcl m = h_xxz_sector_ld(n, twice_s, static_cast<long double>(beta));
    Eigen::ComplexEigenSolver<MatrixXcl> es(m, false);
    if (es.info() != Eigen::Success) return std::numeric_limits<double>::quiet_NaN();
    long double mi = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
        mi = std::max(mi, std::abs(es.eigenvalues()(i).imag()));
    return static_cast<double>(mi);
}

}  // namespace templie
