#include "templie/diagram.hpp"

#include "templie/caps.hpp"

#include <algorithm>
#include <stdexcept>

namespace templie {

namespace {

// Circular boundary order of the rectangle: bottom left-to-right, then top
// right-to-left.  Chords are noncrossing in the rectangle iff they are
// noncrossing in this circular order.
inline int circular_pos(int node, int n) {
    return node < n ? node : 3 * n - 1 - node;
}

inline int node_at_pos(int pos, int n) {
    return pos < n ? pos : 3 * n - 1 - pos;
}

}  // namespace

Diagram::Diagram(int n, std::vector<int> pairing) : n_(n), pair_(std::move(pairing)) {
    if (n_ < 1) throw std::invalid_argument("Diagram: n must be positive");
    const std::size_t m = static_cast<std::size_t>(2 * n_);
    if (pair_.size() != m) throw std::invalid_argument("Diagram: pairing size mismatch");
    for (std::size_t v = 0; v < m; ++v) {
        int p = pair_[v];
        if (p < 0 || p >= static_cast<int>(m) || p == static_cast<int>(v) ||
            pair_[static_cast<std::size_t>(p)] != static_cast<int>(v))
            throw std::invalid_argument("Diagram: not a fixed-point-free involution");
    }
    // Planarity: stack walk over the circular order.
    std::vector<int> stack;
    for (int pos = 0; pos < 2 * n_; ++pos) {
        int v = node_at_pos(pos, n_);
        int q = circular_pos(pair_[static_cast<std::size_t>(v)], n_);
        if (q > pos) {
            stack.push_back(q);
        } else {
            if (stack.empty() || stack.back() != pos)
                throw std::invalid_argument("Diagram: crossing chords");
            stack.pop_back();
        }
    }
}

Diagram Diagram::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
        p[static_cast<std::size_t>(k)] = n + k;
        p[static_cast<std::size_t>(n + k)] = k;
    }
    return Diagram(n, std::move(p));
}

Diagram Diagram::from_pairs1(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> p(static_cast<std::size_t>(2 * n), -1);
    for (auto [i, j] : pairs) {
        if (i < 1 || j < 1 || i > 2 * n || j > 2 * n)
            throw std::invalid_argument("from_pairs1: node out of range");
        p[static_cast<std::size_t>(i - 1)] = j - 1;
        p[static_cast<std::size_t>(j - 1)] = i - 1;
    }
    return Diagram(n, std::move(p));
}

Diagram Diagram::generator(int n, int i) {
    if (i < 1 || i > n - 1) throw std::out_of_range("generator index out of range");
    std::vector<int> p(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) {
        p[static_cast<std::size_t>(k)] = n + k;
        p[static_cast<std::size_t>(n + k)] = k;
    }
    // cup at bottom (i-1, i), cap at top (n+i-1, n+i), 0-based
    p[static_cast<std::size_t>(i - 1)] = i;
    p[static_cast<std::size_t>(i)] = i - 1;
    p[static_cast<std::size_t>(n + i - 1)] = n + i;
    p[static_cast<std::size_t>(n + i)] = n + i - 1;
    return Diagram(n, std::move(p));
}

std::vector<std::pair<int, int>> Diagram::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < 2 * n_; ++v)
        if (pair_[static_cast<std::size_t>(v)] > v)
            out.emplace_back(v, pair_[static_cast<std::size_t>(v)]);
    return out;  // already sorted by first component
}

std::vector<std::pair<int, int>> Diagram::pairs1() const {
    auto out = pairs();
    for (auto& pr : out) {
        ++pr.first;
        ++pr.second;
    }
    return out;
}

bool Diagram::operator<(const Diagram& o) const {
    return pairs() < o.pairs();
}

namespace {

// Noncrossing perfect matchings of the circular positions lo..hi (inclusive).
void enumerate_positions(int lo, int hi, std::vector<int>& match,
                         std::vector<std::vector<int>>& out) {
    if (lo > hi) {
        out.push_back(match);
        return;
    }
    for (int b = lo + 1; b <= hi; b += 2) {
        match[static_cast<std::size_t>(lo)] = b;
        match[static_cast<std::size_t>(b)] = lo;
        // inner block lo+1..b-1, outer block b+1..hi
        std::vector<std::vector<int>> inner;
        std::vector<int> m2 = match;
        enumerate_positions(lo + 1, b - 1, m2, inner);
        for (auto& im : inner) {
            std::vector<std::vector<int>> rest;
            enumerate_positions(b + 1, hi, im, rest);
            out.insert(out.end(), rest.begin(), rest.end());
        }
    }
}

}  // namespace

std::vector<Diagram> enumerate_diagrams(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_diagrams: n must be positive");
    int cap = env_max_n(10);
    if (n > cap) throw SizeCapError("enumerate_diagrams: n exceeds cap");
    std::vector<std::vector<int>> matchings;
    std::vector<int> match(static_cast<std::size_t>(2 * n), -1);
    enumerate_positions(0, 2 * n - 1, match, matchings);
    std::vector<Diagram> out;
    out.reserve(matchings.size());
    for (const auto& pm : matchings) {
        std::vector<int> pairing(static_cast<std::size_t>(2 * n));
        for (int pos = 0; pos < 2 * n; ++pos) {
            int v = node_at_pos(pos, n);
            pairing[static_cast<std::size_t>(v)] = node_at_pos(pm[static_cast<std::size_t>(pos)], n);
        }
        out.emplace_back(n, std::move(pairing));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<Diagram, int> concat(const Diagram& a1, const Diagram& a2) {
    if (a1.n() != a2.n()) throw std::invalid_argument("concat: size mismatch");
    const int n = a1.n();
    // Combined node ids: a1 node v -> v, a2 node v -> 2n + v.  The glue
    // identifies a1's top row with a2's bottom row.
    const int total = 4 * n;
    std::vector<int> adj(static_cast<std::size_t>(total) * 2, -1);
    auto add_edge = [&adj](int u, int v) {
        std::size_t su = static_cast<std::size_t>(u) * 2;
        std::size_t sv = static_cast<std::size_t>(v) * 2;
        adj[su + (adj[su] < 0 ? 0 : 1)] = v;
        adj[sv + (adj[sv] < 0 ? 0 : 1)] = u;
    };
    for (int v = 0; v < 2 * n; ++v) {
        if (a1.partner(v) > v) add_edge(v, a1.partner(v));
        if (a2.partner(v) > v) add_edge(2 * n + v, 2 * n + a2.partner(v));
    }
    for (int k = 0; k < n; ++k) add_edge(n + k, 2 * n + k);

    // Free ends: a1 bottom 0..n-1 and a2 top 3n..4n-1 (degree 1); everything
    // else has degree 2.  Walk each path from a free end, then count cycles.
    std::vector<bool> visited(static_cast<std::size_t>(total), false);
    auto step = [&adj](int from, int prev) {
        std::size_t s = static_cast<std::size_t>(from) * 2;
        return adj[s] == prev ? adj[s + 1] : adj[s];
    };
    auto result_label = [n](int id) {
        // a1 bottom -> bottom of result; a2 top -> top of result
        return id < n ? id : id - 2 * n;
    };
    std::vector<int> pairing(static_cast<std::size_t>(2 * n), -1);
    std::vector<int> free_ends;
    for (int k = 0; k < n; ++k) {
        free_ends.push_back(k);
        free_ends.push_back(3 * n + k);
    }
    for (int start : free_ends) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        int prev = -1, cur = start;
        while (true) {
            visited[static_cast<std::size_t>(cur)] = true;
            int nxt = step(cur, prev);
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
        }
        pairing[static_cast<std::size_t>(result_label(start))] = result_label(cur);
        pairing[static_cast<std::size_t>(result_label(cur))] = result_label(start);
    }
    int loops = 0;
    for (int v = 0; v < total; ++v) {
        if (visited[static_cast<std::size_t>(v)]) continue;
        ++loops;
        int prev = -1, cur = v;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            int nxt = step(cur, prev);
            prev = cur;
            cur = nxt;
        } while (cur != v);
    }
    return {Diagram(n, std::move(pairing)), loops};
}

TLElement TLElement::from_diagram(const Diagram& d, Poly coeff) {
    TLElement e(d.n());
    e.add_term(d, coeff);
    return e;
}

void TLElement::add_term(const Diagram& d, const Poly& c) {
    if (d.n() != n_) throw std::invalid_argument("TLElement: size mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TLElement& TLElement::operator+=(const TLElement& o) {
    if (o.n_ != n_) throw std::invalid_argument("TLElement: size mismatch");
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

TLElement TLElement::operator*(const TLElement& o) const {
    if (o.n_ != n_) throw std::invalid_argument("TLElement: size mismatch");
    TLElement r(n_);
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) {
            auto [d, loops] = concat(d1, d2);
            r.add_term(d, c1 * c2 * Poly::beta_power(static_cast<std::size_t>(loops)));
        }
    return r;
}

TLElement TLElement::operator*(const Poly& s) const {
    TLElement r(n_);
    for (const auto& [d, c] : terms_) r.add_term(d, c * s);
    return r;
}

TLElement word_to_element(int n, const std::vector<int>& word, Poly coeff) {
    Diagram d = Diagram::identity(n);
    int loops = 0;
    for (int i : word) {
        auto [nd, nl] = concat(d, Diagram::generator(n, i));
        d = std::move(nd);
        loops += nl;
    }
    return TLElement::from_diagram(d, coeff * Poly::beta_power(static_cast<std::size_t>(loops)));
}

}  // namespace templie
