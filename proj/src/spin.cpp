#include "templie/spin.hpp"

#include "templie/caps.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace templie {

int down_count(SpinState s) { return std::popcount(s); }

bool spin_is_down(SpinState s, int L, int pos) {
    return (s >> (L - pos)) & 1u;
}

SpinState spin_flip(SpinState s, int L, int pos) {
    return s ^ (SpinState(1) << (L - pos));
}

std::string spin_string(SpinState s, int L) {
    std::string out(static_cast<std::size_t>(L), '+');
    for (int pos = 1; pos <= L; ++pos)
        if (spin_is_down(s, L, pos)) out[static_cast<std::size_t>(pos - 1)] = '-';
    return out;
}

SpinState spin_from_string(const std::string& str) {
    const int L = static_cast<int>(str.size());
    if (L > 24) throw SizeCapError("spin_from_string: word too long");
    SpinState s = 0;
    for (int pos = 1; pos <= L; ++pos) {
        char c = str[static_cast<std::size_t>(pos - 1)];
        if (c == '-') s |= SpinState(1) << (L - pos);
        else if (c != '+') throw std::invalid_argument("spin_from_string: expected + or -");
    }
    return s;
}

std::size_t SpinSector::index_of(SpinState s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || *it != s) throw std::out_of_range("SpinSector: state not in sector");
    return static_cast<std::size_t>(it - states.begin());
}

SpinSector enumerate_sector(int L, int twice_s) {
    if (L < 0 || std::abs(twice_s) > L || (L - twice_s) % 2 != 0)
        throw std::invalid_argument("enumerate_sector: invalid (L, s)");
    if (L > 24) throw SizeCapError("enumerate_sector: L exceeds cap");
    const int downs = (L - twice_s) / 2;
    SpinSector sec{L, twice_s, {}};
    for (SpinState s = 0; s < (SpinState(1) << L); ++s)
        if (std::popcount(s) == downs) sec.states.push_back(s);
    return sec;
}

namespace {

void check_dense_cap(int L, const char* op) {
    if (L > env_max_n(12)) throw SizeCapError(std::string(op) + ": L exceeds cap");
}

// Adjacent down pairs minus downs, the beta coefficient on the diagonal.
long h_diag_count(SpinState s) {
    return std::popcount(s & (s >> 1)) - std::popcount(s);
}

}  // namespace

PolyMatrix h_spin_matrix(int L) {
    if (L < 1) throw std::invalid_argument("h_spin_matrix: L must be positive");
    check_dense_cap(L, "h_spin_matrix");
    const std::size_t dim = std::size_t(1) << L;
    PolyMatrix m(dim, dim);
    const Poly beta = Poly::beta();
    for (SpinState s = 0; s < dim; ++s) {
        long c = h_diag_count(s);
        if (c != 0) m.at(s, s) = beta * Poly(c);
        for (int j = 1; j < L; ++j) {
            if (spin_is_down(s, L, j) == spin_is_down(s, L, j + 1)) continue;
            SpinState t = spin_flip(spin_flip(s, L, j), L, j + 1);
            m.at(t, s) -= Poly(1);
        }
    }
    return m;
}

PolyMatrix h_spin_sector(const SpinSector& sec) {
    const std::size_t dim = sec.dim();
    PolyMatrix m(dim, dim);
    const Poly beta = Poly::beta();
    for (std::size_t col = 0; col < dim; ++col) {
        SpinState s = sec.states[col];
        long c = h_diag_count(s);
        if (c != 0) m.at(col, col) = beta * Poly(c);
        for (int j = 1; j < sec.L; ++j) {
            if (spin_is_down(s, sec.L, j) == spin_is_down(s, sec.L, j + 1)) continue;
            SpinState t = spin_flip(spin_flip(s, sec.L, j), sec.L, j + 1);
            m.at(sec.index_of(t), col) -= Poly(1);
        }
    }
    return m;
}

PolyMatrix h_spin_sector(int L, int twice_s) {
    return h_spin_sector(enumerate_sector(L, twice_s));
}

namespace {

// chi(e_i) on two sites: zero on like spins; on {+-, -+} the block
// [[beta/2 + delta, 1], [1, beta/2 - delta]] with delta = (q - 1/q)/2.
template <typename Scalar, typename Mat>
void add_xxz_generator(Mat& m, const std::vector<SpinState>* states, int L, int i,
                       Scalar beta_half, Scalar delta, Scalar weight,
                       const SpinSector* sec) {
    const std::size_t dim = states ? states->size() : (std::size_t(1) << L);
    for (std::size_t col = 0; col < dim; ++col) {
        SpinState s = states ? (*states)[col] : static_cast<SpinState>(col);
        bool d1 = spin_is_down(s, L, i), d2 = spin_is_down(s, L, i + 1);
        if (d1 == d2) continue;
        Scalar diag = d1 ? beta_half - delta : beta_half + delta;
        m(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) += weight * diag;
        SpinState t = spin_flip(spin_flip(s, L, i), L, i + 1);
        std::size_t row = sec ? sec->index_of(t) : t;
        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += weight;
    }
}

}  // namespace

Eigen::MatrixXcd xxz_generator(int n, int i, const QValue& qv) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("xxz_generator: index out of range");
    check_dense_cap(n, "xxz_generator");
    const std::size_t dim = std::size_t(1) << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    std::complex<double> delta = (qv.q - 1.0 / qv.q) / 2.0;
    add_xxz_generator<std::complex<double>>(m, nullptr, n, i, qv.beta / 2.0, delta,
                                            std::complex<double>(1.0), nullptr);
    return m;
}

Eigen::MatrixXcd h_xxz_matrix(int n, const QValue& qv) {
    if (n < 2) throw std::invalid_argument("h_xxz_matrix: n must be at least 2");
    check_dense_cap(n, "h_xxz_matrix");
    const std::size_t dim = std::size_t(1) << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    std::complex<double> delta = (qv.q - 1.0 / qv.q) / 2.0;
    for (int i = 1; i < n; ++i)
        add_xxz_generator<std::complex<double>>(m, nullptr, n, i, qv.beta / 2.0, delta,
                                                std::complex<double>(-1.0), nullptr);
    return m;
}

Eigen::MatrixXcd h_xxz_sector(int n, int twice_s, const QValue& qv) {
    if (n < 2) throw std::invalid_argument("h_xxz_sector: n must be at least 2");
    SpinSector sec = enumerate_sector(n, twice_s);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(sec.dim(), sec.dim());
    std::complex<double> delta = (qv.q - 1.0 / qv.q) / 2.0;
    for (int i = 1; i < n; ++i)
        add_xxz_generator<std::complex<double>>(m, &sec.states, n, i, qv.beta / 2.0, delta,
                                                std::complex<double>(-1.0), &sec);
    return m;
}

MatrixXcl h_xxz_sector_ld(int n, int twice_s, long double beta) {
    if (n < 2) throw std::invalid_argument("h_xxz_sector_ld: n must be at least 2");
    SpinSector sec = enumerate_sector(n, twice_s);
    MatrixXcl m = MatrixXcl::Zero(sec.dim(), sec.dim());
    using C = std::complex<long double>;
    long double disc = beta * beta - 4.0L;
    C q = disc >= 0.0L ? C((beta + std::sqrt(disc)) / 2.0L)
                       : C(beta / 2.0L, std::sqrt(-disc) / 2.0L);
    C delta = (q - C(1.0L) / q) / C(2.0L);
    for (int i = 1; i < n; ++i)
        add_xxz_generator<C>(m, &sec.states, n, i, C(beta / 2.0L), delta, C(-1.0L), &sec);
    return m;
}

PolyMatrix tau_matrix(int n, int i) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("tau_matrix: index out of range");
    const int L = n - 1;
    check_dense_cap(L, "tau_matrix");
    const std::size_t dim = std::size_t(1) << L;
    PolyMatrix m(dim, dim);
    for (SpinState s = 0; s < dim; ++s) {
        // sigma^-_{i-1} sigma^+_i: moves a down spin from i to i-1.
        if (i - 1 >= 1 && spin_is_down(s, L, i) && !spin_is_down(s, L, i - 1))
            m.at(spin_flip(spin_flip(s, L, i), L, i - 1), s) += Poly(1);
        // sigma^+_i sigma^-_{i+1}: moves a down spin from i to i+1.
        if (i + 1 <= L && spin_is_down(s, L, i) && !spin_is_down(s, L, i + 1))
            m.at(spin_flip(spin_flip(s, L, i), L, i + 1), s) += Poly(1);
    }
    return m;
}

Eigen::MatrixXcd bethe_hamiltonian(const BetheTuple& t) {
    if (t.L < 1) throw std::invalid_argument("bethe_hamiltonian: L must be positive");
    check_dense_cap(t.L, "bethe_hamiltonian");
    const std::size_t dim = std::size_t(1) << t.L;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    auto z = [&t](SpinState s, int pos) { return spin_is_down(s, t.L, pos) ? -1.0 : 1.0; };
    for (SpinState s = 0; s < dim; ++s) {
        std::complex<double> diag = -t.alpha;
        diag -= t.p / 2.0 * z(s, 1);
        diag -= t.pprime / 2.0 * z(s, t.L);
        for (int j = 1; j < t.L; ++j) {
            diag -= t.delta / 2.0 * (z(s, j) * z(s, j + 1));
            if (spin_is_down(s, t.L, j) != spin_is_down(s, t.L, j + 1))
                m(spin_flip(spin_flip(s, t.L, j), t.L, j + 1), s) -= 1.0;
        }
        m(s, s) += diag;
    }
    return m;
}

BetheMap bethe_parameter_map(int n, const QValue& qv) {
    if (n < 2) throw std::invalid_argument("bethe_parameter_map: n must be at least 2");
    BetheMap out;
    std::complex<double> dq = (qv.q - 1.0 / qv.q) / 2.0;
    out.xxz = BetheTuple{n, -qv.beta / 2.0, dq, -dq, (n - 1) * qv.beta / 4.0};
    out.spin = BetheTuple{n - 1, std::complex<double>(-qv.beta / 2.0),
                          std::complex<double>(-qv.beta / 2.0),
                          std::complex<double>(-qv.beta / 2.0), n * qv.beta / 4.0};
    out.err_xxz = (h_xxz_matrix(n, qv) - bethe_hamiltonian(out.xxz)).cwiseAbs().maxCoeff();
    Eigen::MatrixXd hs = h_spin_matrix(n - 1).eval(qv.beta);
    out.err_spin =
        (hs.cast<std::complex<double>>() - bethe_hamiltonian(out.spin)).cwiseAbs().maxCoeff();
    out.verified = out.err_xxz < 1e-12 && out.err_spin < 1e-12;
    return out;
}

}  // namespace templie
