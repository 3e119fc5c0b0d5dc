#include "templie/qnum.hpp"

#include <cstdlib>
#include <mutex>
#include <vector>

namespace templie {

namespace {

std::mutex table_mutex;
std::vector<Poly> qnum_table;       // index m
std::vector<Poly> factorial_table;  // index p

void grow_tables(int m) {
    if (qnum_table.empty()) {
        qnum_table.push_back(Poly());   // {0}
        qnum_table.push_back(Poly(1));  // {1}
        factorial_table.push_back(Poly(1));
        factorial_table.push_back(Poly(1));
    }
    while (static_cast<int>(qnum_table.size()) <= m) {
        std::size_t k = qnum_table.size();
        Poly next = -(Poly::beta() * qnum_table[k - 1]) - qnum_table[k - 2];
        qnum_table.push_back(next);
        factorial_table.push_back(factorial_table[k - 1] * qnum_table[k]);
    }
}

}  // namespace

Poly qnum(int m) {
    if (m < 0) return -qnum(-m);
    std::lock_guard<std::mutex> lock(table_mutex);
    grow_tables(m);
    return qnum_table[static_cast<std::size_t>(m)];
}

Poly qnum_factorial(int p) {
    if (p < 0) throw std::domain_error("qnum_factorial: negative argument");
    std::lock_guard<std::mutex> lock(table_mutex);
    grow_tables(p);
    return factorial_table[static_cast<std::size_t>(p)];
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

Int catalan(int n) {
    return binomial(2L * n, n) / (n + 1);
}

}  // namespace templie
