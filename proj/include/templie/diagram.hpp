#pragma once

#include "templie/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace templie {

// Planar pairing of 2n nodes on a rectangle: bottom row 0..n-1 and top row
// n..2n-1, both left to right.  I/O helpers use the 1-based labels 1..2n.
class Diagram {
  public:
    Diagram(int n, std::vector<int> pairing);
    static Diagram identity(int n);
    static Diagram generator(int n, int i);  // e_i, 1 <= i <= n-1
    // Build from 1-based node pairs (bottom 1..n, top n+1..2n).
    static Diagram from_pairs1(int n, const std::vector<std::pair<int, int>>& pairs);

    int n() const { return n_; }
    int partner(int node) const { return pair_[static_cast<std::size_t>(node)]; }
    std::vector<std::pair<int, int>> pairs() const;   // sorted, 0-based
    std::vector<std::pair<int, int>> pairs1() const;  // sorted, 1-based

    bool operator==(const Diagram& o) const { return n_ == o.n_ && pair_ == o.pair_; }
    // Lexicographic on the sorted pair list; the canonical enumeration order.
    bool operator<(const Diagram& o) const;

  private:
    int n_;
    std::vector<int> pair_;
};

// All n-diagrams in canonical order; Catalan(n) of them.  Capped (default
// n <= 10, overridable via TEMPLIE_MAX_N).
std::vector<Diagram> enumerate_diagrams(int n);

// Draws a2 atop a1; returns the composite diagram and the number of closed
// loops, so that the algebra product is beta^loops * diagram.
std::pair<Diagram, int> concat(const Diagram& a1, const Diagram& a2);

// Formal linear combination of n-diagrams over Z[beta].
class TLElement {
  public:
    explicit TLElement(int n) : n_(n) {}
    static TLElement from_diagram(const Diagram& d, Poly coeff = Poly(1));

    int n() const { return n_; }
    const std::map<Diagram, Poly>& terms() const { return terms_; }
    void add_term(const Diagram& d, const Poly& c);

    TLElement& operator+=(const TLElement& o);
    friend TLElement operator+(TLElement a, const TLElement& b) { a += b; return a; }
    TLElement operator*(const TLElement& o) const;
    TLElement operator*(const Poly& s) const;
    bool operator==(const TLElement& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  private:
    int n_;
    std::map<Diagram, Poly> terms_;
};

// Product of generators e_{word[0]} e_{word[1]} ... scaled by coeff.  The
// empty word gives the identity diagram.
TLElement word_to_element(int n, const std::vector<int>& word, Poly coeff = Poly(1));

}  // namespace templie
