#pragma once

#include "templie/diagram.hpp"
#include "templie/matrix.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace templie {

// (n,d)-link: (n-d)/2 noncrossing arcs on nodes 0..n-1 plus d defects; no
// defect sits under an arc.  L(w), the set of leftmost arc endpoints,
// determines the link and drives the dyadic ordering.
class Link {
  public:
    Link(int n, std::vector<std::pair<int, int>> arcs);  // 0-based nodes
    static Link from_arcs1(int n, std::vector<std::pair<int, int>> arcs);  // 1-based

    int n() const { return n_; }
    int d() const { return d_; }
    bool is_defect(int node) const { return arc_[static_cast<std::size_t>(node)] < 0; }
    int partner(int node) const { return arc_[static_cast<std::size_t>(node)]; }
    std::vector<std::pair<int, int>> arcs() const;   // sorted, 0-based
    std::vector<std::pair<int, int>> arcs1() const;  // sorted, 1-based
    std::vector<int> defects() const;                // 0-based
    std::vector<int> openers() const;                // L(w), 0-based, sorted

    // d_link(w) * 2^n, an integer; increasing values give the basis order.
    std::uint64_t dyadic_numerator() const;

    bool operator==(const Link& o) const { return n_ == o.n_ && arc_ == o.arc_; }
    bool operator<(const Link& o) const { return dyadic_numerator() < o.dyadic_numerator(); }

  private:
    int n_, d_;
    std::vector<int> arc_;  // partner node, or -1 for a defect
};

long link_dim(int n, int d);  // C(n,(n-d)/2) - C(n,(n-d)/2-1)

std::vector<Link> enumerate_links(int n, int d);  // increasing d_link

// Restriction of w to the node range [lo, hi]; no arc may have exactly one
// endpoint inside the range.
Link sublink(const Link& w, int lo, int hi);

struct ActResult {
    bool zero = false;
    int loops = 0;
    std::optional<Link> link;
};

// w glued atop the diagram a; zero when two defects become connected.
ActResult act(const Diagram& a, const Link& w);

PolyMatrix representation_generator(int n, int d, int i);  // rho(e_i)
PolyMatrix representation_matrix(const TLElement& x, int n, int d);
PolyMatrix hamiltonian_matrix(int n, int d);  // rho(-sum_i e_i)
PolyMatrix gram_matrix(int n, int d);

}  // namespace templie
