#pragma once

#include "templie/matrix.hpp"
#include "templie/poly.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace templie {

// Length-L word over {+,-}; position i (1-based, leftmost) is bit L-i and a
// set bit means spin down.  The integer order is then the dyadic order
// d_spin(s) = sum_i 2^{-i}[s_i = -], with |+...+> = 0.
using SpinState = std::uint32_t;

int down_count(SpinState s);
bool spin_is_down(SpinState s, int L, int pos);  // pos 1-based
SpinState spin_flip(SpinState s, int L, int pos);
std::string spin_string(SpinState s, int L);
SpinState spin_from_string(const std::string& str);

// Magnetisation stored doubled so it stays integral: twice_s = L - 2*downs.
struct SpinSector {
    int L = 0;
    int twice_s = 0;
    std::vector<SpinState> states;  // ascending, i.e. increasing d_spin

    std::size_t dim() const { return states.size(); }
    std::size_t index_of(SpinState s) const;
};

SpinSector enumerate_sector(int L, int twice_s);

// The hermitian chain on L sites, exact in beta.
PolyMatrix h_spin_matrix(int L);
PolyMatrix h_spin_sector(const SpinSector& sec);
PolyMatrix h_spin_sector(int L, int twice_s);

// The XXZ chain on n sites, floating complex only.
Eigen::MatrixXcd xxz_generator(int n, int i, const QValue& qv);
Eigen::MatrixXcd h_xxz_matrix(int n, const QValue& qv);
Eigen::MatrixXcd h_xxz_sector(int n, int twice_s, const QValue& qv);

// Extended-precision sector build used by the reality sweeps; recomputes q
// from beta with the same principal branch.
using MatrixXcl = Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;
MatrixXcl h_xxz_sector_ld(int n, int twice_s, long double beta);

// The beta=0 representation on n-1 sites.
PolyMatrix tau_matrix(int n, int i);

// Open-boundary comparison Hamiltonian with diagonal boundary fields.
struct BetheTuple {
    int L = 0;
    std::complex<double> delta, p, pprime, alpha;
};

Eigen::MatrixXcd bethe_hamiltonian(const BetheTuple& t);

struct BetheMap {
    BetheTuple xxz;   // matches h_xxz_matrix(n)
    BetheTuple spin;  // matches h_spin_matrix(n-1) at the same beta
    double err_xxz = 0.0;
    double err_spin = 0.0;
    bool verified = false;
};

BetheMap bethe_parameter_map(int n, const QValue& qv);

}  // namespace templie
