#include "templie/link.hpp"

#include "templie/qnum.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace templie {

Link::Link(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
    if (n_ < 1) throw std::invalid_argument("Link: n must be positive");
    arc_.assign(static_cast<std::size_t>(n_), -1);
    for (auto [i, j] : arcs) {
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n_ || i == j) throw std::invalid_argument("Link: bad arc");
        if (arc_[static_cast<std::size_t>(i)] != -1 || arc_[static_cast<std::size_t>(j)] != -1)
            throw std::invalid_argument("Link: node in two arcs");
        arc_[static_cast<std::size_t>(i)] = j;
        arc_[static_cast<std::size_t>(j)] = i;
    }
    d_ = n_ - 2 * static_cast<int>(arcs.size());
    // Noncrossing arcs, and no defect under an arc: one stack walk.
    std::vector<int> stack;
    for (int v = 0; v < n_; ++v) {
        int p = arc_[static_cast<std::size_t>(v)];
        if (p < 0) {
            if (!stack.empty()) throw std::invalid_argument("Link: defect under an arc");
        } else if (p > v) {
            stack.push_back(p);
        } else {
            if (stack.empty() || stack.back() != v)
                throw std::invalid_argument("Link: crossing arcs");
            stack.pop_back();
        }
    }
}

Link Link::from_arcs1(int n, std::vector<std::pair<int, int>> arcs) {
    for (auto& a : arcs) {
        --a.first;
        --a.second;
    }
    return Link(n, std::move(arcs));
}

std::vector<std::pair<int, int>> Link::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < n_; ++v)
        if (arc_[static_cast<std::size_t>(v)] > v) out.emplace_back(v, arc_[static_cast<std::size_t>(v)]);
    return out;
}

std::vector<std::pair<int, int>> Link::arcs1() const {
    auto out = arcs();
    for (auto& a : out) {
        ++a.first;
        ++a.second;
    }
    return out;
}

std::vector<int> Link::defects() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (arc_[static_cast<std::size_t>(v)] < 0) out.push_back(v);
    return out;
}

std::vector<int> Link::openers() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (arc_[static_cast<std::size_t>(v)] > v) out.push_back(v);
    return out;
}

std::uint64_t Link::dyadic_numerator() const {
    std::uint64_t key = 0;
    for (int v : openers()) key |= std::uint64_t(1) << (n_ - 1 - v);
    return key;
}

long link_dim(int n, int d) {
    long k = (n - d) / 2;
    return (binomial(n, k) - binomial(n, k - 1)).convert_to<long>();
}

namespace {

void enumerate_rec(int n, int node, int opens_left, int defects_left,
                   std::vector<int>& stack, std::vector<std::pair<int, int>>& arcs,
                   std::vector<Link>& out) {
    if (node == n) {
        out.emplace_back(n, arcs);
        return;
    }
    if (opens_left > 0) {
        stack.push_back(node);
        enumerate_rec(n, node + 1, opens_left - 1, defects_left, stack, arcs, out);
        stack.pop_back();
    }
    if (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        arcs.emplace_back(i, node);
        enumerate_rec(n, node + 1, opens_left, defects_left, stack, arcs, out);
        arcs.pop_back();
        stack.push_back(i);
    } else if (defects_left > 0) {
        enumerate_rec(n, node + 1, opens_left, defects_left - 1, stack, arcs, out);
    }
}

}  // namespace

std::vector<Link> enumerate_links(int n, int d) {
    if (n < 1 || d < 0 || d > n || (n - d) % 2 != 0)
        throw std::invalid_argument("enumerate_links: invalid (n,d)");
    std::vector<Link> out;
    std::vector<int> stack;
    std::vector<std::pair<int, int>> arcs;
    enumerate_rec(n, 0, (n - d) / 2, d, stack, arcs, out);
    std::sort(out.begin(), out.end());
    return out;
}

Link sublink(const Link& w, int lo, int hi) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [i, j] : w.arcs()) {
        bool ci = i >= lo && i <= hi;
        bool cj = j >= lo && j <= hi;
        if (ci != cj) throw std::invalid_argument("sublink: arc crosses the range");
        if (ci) arcs.emplace_back(i - lo, j - lo);
    }
    return Link(hi - lo + 1, std::move(arcs));
}

ActResult act(const Diagram& a, const Link& w) {
    if (a.n() != w.n()) throw std::invalid_argument("act: size mismatch");
    const int n = a.n();
    // Nodes of a are 0..2n-1; link node k is glued to a's top node n+k.
    // Degree-1 nodes: a's bottom row and the defect-marked top nodes.
    std::vector<std::array<int, 2>> adj(static_cast<std::size_t>(2 * n), {-1, -1});
    auto add_edge = [&adj](int u, int v) {
        adj[static_cast<std::size_t>(u)][adj[static_cast<std::size_t>(u)][0] < 0 ? 0 : 1] = v;
        adj[static_cast<std::size_t>(v)][adj[static_cast<std::size_t>(v)][0] < 0 ? 0 : 1] = u;
    };
    for (int v = 0; v < 2 * n; ++v)
        if (a.partner(v) > v) add_edge(v, a.partner(v));
    for (auto [i, j] : w.arcs()) add_edge(n + i, n + j);

    std::vector<bool> visited(static_cast<std::size_t>(2 * n), false);
    auto walk_end = [&adj, &visited](int start) {
        int prev = -1, cur = start;
        while (true) {
            visited[static_cast<std::size_t>(cur)] = true;
            const auto& nb = adj[static_cast<std::size_t>(cur)];
            int nxt = nb[0] == prev ? nb[1] : nb[0];
            if (nxt < 0) return cur;
            prev = cur;
            cur = nxt;
        }
    };
    std::vector<std::pair<int, int>> arcs;
    for (int k = 0; k < n; ++k) {
        if (visited[static_cast<std::size_t>(k)]) continue;
        int end = walk_end(k);
        if (end < n) arcs.emplace_back(k, end);
        // Otherwise end is a defect-marked top node: k stays a defect.
    }
    // Any unvisited defect-marked top starts a defect-to-defect path: zero.
    for (int dpos : w.defects()) {
        if (!visited[static_cast<std::size_t>(n + dpos)]) return ActResult{true, 0, std::nullopt};
    }
    int loops = 0;
    for (int v = n; v < 2 * n; ++v) {
        if (visited[static_cast<std::size_t>(v)] || adj[static_cast<std::size_t>(v)][0] < 0) continue;
        ++loops;
        int prev = -1, cur = v;
        do {
            visited[static_cast<std::size_t>(cur)] = true;
            const auto& nb = adj[static_cast<std::size_t>(cur)];
            int nxt = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        } while (cur != v);
    }
    return ActResult{false, loops, Link(n, std::move(arcs))};
}

namespace {

std::map<std::vector<std::pair<int, int>>, std::size_t> index_map(const std::vector<Link>& basis) {
    std::map<std::vector<std::pair<int, int>>, std::size_t> idx;
    for (std::size_t j = 0; j < basis.size(); ++j) idx[basis[j].arcs()] = j;
    return idx;
}

}  // namespace

PolyMatrix representation_generator(int n, int d, int i) {
    auto basis = enumerate_links(n, d);
    auto idx = index_map(basis);
    Diagram e = Diagram::generator(n, i);
    PolyMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        ActResult r = act(e, basis[j]);
        if (r.zero) continue;
        m.at(idx.at(r.link->arcs()), j) += Poly::beta_power(static_cast<std::size_t>(r.loops));
    }
    return m;
}

PolyMatrix representation_matrix(const TLElement& x, int n, int d) {
    if (x.n() != n) throw std::invalid_argument("representation_matrix: size mismatch");
    auto basis = enumerate_links(n, d);
    auto idx = index_map(basis);
    PolyMatrix m(basis.size(), basis.size());
    for (const auto& [dia, coeff] : x.terms()) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            ActResult r = act(dia, basis[j]);
            if (r.zero) continue;
            m.at(idx.at(r.link->arcs()), j) +=
                coeff * Poly::beta_power(static_cast<std::size_t>(r.loops));
        }
    }
    return m;
}

PolyMatrix hamiltonian_matrix(int n, int d) {
    auto basis = enumerate_links(n, d);
    auto idx = index_map(basis);
    PolyMatrix m(basis.size(), basis.size());
    for (int i = 1; i <= n - 1; ++i) {
        Diagram e = Diagram::generator(n, i);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            ActResult r = act(e, basis[j]);
            if (r.zero) continue;
            m.at(idx.at(r.link->arcs()), j) -=
                Poly::beta_power(static_cast<std::size_t>(r.loops));
        }
    }
    return m;
}

PolyMatrix gram_matrix(int n, int d) {
    auto basis = enumerate_links(n, d);
    const std::size_t dim = basis.size();
    PolyMatrix g(dim, dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = a; b < dim; ++b) {
            const Link& v = basis[a];
            const Link& w = basis[b];
            // Glue the vertical reflection of v onto w and classify the
            // resulting strands.  Paths alternate between v-arcs and w-arcs;
            // an endpoint is a node whose next strand is a defect.
            std::vector<bool> seen(static_cast<std::size_t>(n), false);
            int cycles = 0;
            bool vanishes = false;
            std::vector<std::pair<int, int>> through;  // (v-exit node, w-exit node)
            for (int start = 0; start < n && !vanishes; ++start) {
                if (seen[static_cast<std::size_t>(start)]) continue;
                bool v_def = v.is_defect(start), w_def = w.is_defect(start);
                if (!v_def && !w_def) continue;  // interior of a path or a cycle
                seen[static_cast<std::size_t>(start)] = true;
                if (v_def && w_def) {
                    through.emplace_back(start, start);
                    continue;
                }
                // Walk away from the missing side, alternating w/v arcs.
                bool via_w = v_def;
                int cur = start;
                while (true) {
                    int nxt = via_w ? w.partner(cur) : v.partner(cur);
                    if (nxt < 0) break;
                    cur = nxt;
                    seen[static_cast<std::size_t>(cur)] = true;
                    via_w = !via_w;
                }
                // via_w == true means the next step would have used a w-arc but
                // w has a defect at cur: the path exits through w there.
                bool far_is_v_defect = !via_w;
                if (v_def && !far_is_v_defect) {
                    through.emplace_back(start, cur);
                } else if (!v_def && far_is_v_defect) {
                    through.emplace_back(cur, start);
                } else {
                    vanishes = true;  // both ends exit through the same link
                }
            }
            Poly entry;
            if (!vanishes) {
                for (int node = 0; node < n; ++node) {
                    if (seen[static_cast<std::size_t>(node)] || v.is_defect(node)) continue;
                    // Remaining nodes lie on cycles.
                    int cur = node;
                    bool via_w = true;
                    do {
                        seen[static_cast<std::size_t>(cur)] = true;
                        cur = via_w ? w.partner(cur) : v.partner(cur);
                        via_w = !via_w;
                    } while (cur != node || !via_w);
                    ++cycles;
                }
                // Planarity makes the through pairing order-preserving; check it.
                if (static_cast<int>(through.size()) != d)
                    throw std::logic_error("gram: through count mismatch");
                std::sort(through.begin(), through.end());
                for (std::size_t t = 1; t < through.size(); ++t)
                    if (through[t].second <= through[t - 1].second)
                        throw std::logic_error("gram: through pairing not order-preserving");
                entry = Poly::beta_power(static_cast<std::size_t>(cycles));
            }
            g.at(a, b) = entry;
            g.at(b, a) = std::move(entry);
        }
    }
    return g;
}

}  // namespace templie
