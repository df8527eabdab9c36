#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hyperchroma/census.hpp"
#include "hyperchroma/hypergraph.hpp"

namespace hyperchroma {

struct ProperCheck {
    bool proper = true;
    std::optional<std::vector<int>> violating_edge;
};

// No edge monochromatic.
inline ProperCheck check_proper(const Hypergraph& g, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != g.vertex_count())
        throw std::invalid_argument("coloring must assign every vertex");
    for (const auto& e : g.edges()) {
        bool mono = true;
        for (std::size_t i = 1; i < e.size() && mono; ++i)
            if (coloring[e[i]] != coloring[e[0]]) mono = false;
        if (mono) return {false, e};
    }
    return {true, std::nullopt};
}

struct ChromaticResult {
    bool exceeds_limit = false;
    int chi = 0;  // valid when !exceeds_limit; otherwise chi > limit
    std::vector<int> coloring;
};

namespace detail {

// Does a proper r-coloring exist? Backtracking over vertices in id order,
// first vertex pinned to color 0 to break color symmetry. An edge only
// constrains once fully colored.
inline bool r_colorable(const Hypergraph& g, int r, std::vector<int>& out) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    auto feasible = [&](int v) {
        for (int ei : g.incident_edges(v)) {
            const auto& e = g.edge(ei);
            bool complete = true, mono = true;
            for (int w : e) {
                if (color[w] < 0) {
                    complete = false;
                    break;
                }
                if (color[w] != color[e[0]]) mono = false;
            }
            if (complete && mono) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        int limit = (v == 0) ? 1 : r;
        for (int c = 0; c < limit; ++c) {
            color[v] = c;
            if (feasible(v) && self(self, v + 1)) return true;
        }
        color[v] = -1;
        return false;
    };
    if (!rec(rec, 0)) return false;
    out = color;
    return true;
}

}  // namespace detail

// Minimum r admitting a proper coloring, found by trying r = 1, 2, ... up to
// limit. Exceeding the limit is reported, never silently truncated.
inline ChromaticResult chromatic_number_exact(const Hypergraph& g, int limit = 16) {
    if (limit < 1) throw std::invalid_argument("limit must be positive");
    if (g.vertex_count() == 0) return {false, 0, {}};
    if (g.edge_count() > 0 && g.min_edge_size() < 2)
        throw std::invalid_argument("hypergraph with singleton edge has no proper coloring");
    for (int r = 1; r <= limit; ++r) {
        std::vector<int> coloring;
        if (detail::r_colorable(g, r, coloring)) return {false, r, std::move(coloring)};
    }
    return {true, limit + 1, {}};
}

struct TransversalCertificate {
    std::vector<int> hitting_set;
};

struct TransversalResult {
    int tau = 0;
    TransversalCertificate cert;
};

namespace detail {

inline bool hits(const std::vector<int>& edge, const std::vector<char>& chosen) {
    for (int v : edge)
        if (chosen[v]) return true;
    return false;
}

// Depth-limited search: branch on the vertices of the first uncovered edge.
inline bool hitting_set_of_size(const Hypergraph& f, int budget, std::vector<char>& chosen,
                                std::vector<int>& out) {
    int target = -1;
    for (int ei = 0; ei < f.edge_count(); ++ei)
        if (!hits(f.edge(ei), chosen)) {
            target = ei;
            break;
        }
    if (target < 0) {
        out.clear();
        for (int v = 0; v < f.vertex_count(); ++v)
            if (chosen[v]) out.push_back(v);
        return true;
    }
    if (budget == 0) return false;
    for (int v : f.edge(target)) {
        chosen[v] = 1;
        if (hitting_set_of_size(f, budget - 1, chosen, out)) {
            chosen[v] = 0;
            return true;
        }
        chosen[v] = 0;
    }
    return false;
}

}  // namespace detail

// Minimum hitting set with certificate, by iterative deepening.
inline TransversalResult transversal_number_exact(const Hypergraph& f) {
    std::vector<char> chosen(f.vertex_count(), 0);
    std::vector<int> out;
    for (int size = 0; size <= f.vertex_count(); ++size)
        if (detail::hitting_set_of_size(f, size, chosen, out)) return {size, {out}};
    throw std::logic_error("transversal search fell through");
}

// Maximum number of pairwise disjoint edges.
inline int max_matching_exact(const Hypergraph& f) {
    const int m = f.edge_count();
    std::vector<char> used(f.vertex_count(), 0);
    int best = 0;
    auto rec = [&](auto&& self, int idx, int count) -> void {
        best = std::max(best, count);
        if (idx == m || count + (m - idx) <= best) return;
        const auto& e = f.edge(idx);
        bool free = true;
        for (int v : e)
            if (used[v]) {
                free = false;
                break;
            }
        if (free) {
            for (int v : e) used[v] = 1;
            self(self, idx + 1, count + 1);
            for (int v : e) used[v] = 0;
        }
        self(self, idx + 1, count);
    };
    rec(rec, 0, 0);
    return best;
}

struct LinkMatching {
    std::vector<int> anchor;                 // A
    std::vector<std::vector<int>> matching;  // pairwise disjoint edges of L_F(A)
};

namespace detail {

// (value * scale)^exp >= rhs, exact in integers.
inline bool power_at_least(long long value, long long scale, int exp, long long rhs) {
    __int128 lhs = 1;
    __int128 base = static_cast<__int128>(value) * scale;
    for (int i = 0; i < exp; ++i) {
        lhs *= base;
        if (lhs >= static_cast<__int128>(rhs)) return true;  // monotone, base >= 0
    }
    return lhs >= static_cast<__int128>(rhs);
}

inline std::vector<std::vector<int>> greedy_maximal_matching(const Hypergraph& f) {
    std::vector<char> used(f.vertex_count(), 0);
    std::vector<std::vector<int>> m;
    for (const auto& e : f.edges()) {
        bool free = true;
        for (int v : e)
            if (used[v]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (int v : e) used[v] = 1;
        m.push_back(e);
    }
    return m;
}

}  // namespace detail

// Constructive guarantee: returns A and a matching M inside L_F(A) with
// |M| >= |F|^{1/k} / (k - |A|). Greedy matching first; when it is too small
// some vertex has degree above |F|^{(k-1)/k} and we recurse into its link.
// Ties (matching order, max-degree vertex) resolve by lowest vertex id, and
// all threshold comparisons are exact integer power tests.
inline LinkMatching greedy_link_matching(const Hypergraph& f, int k) {
    if (f.edge_count() == 0) throw std::invalid_argument("greedy_link_matching: F is empty");
    for (const auto& e : f.edges())
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("greedy_link_matching: F must be k-uniform");
    if (k == 1) return {{}, f.edges()};

    auto m0 = detail::greedy_maximal_matching(f);
    const long long fsize = f.edge_count();
    // |M| >= |F|^{1/k} / k  <=>  (|M| k)^k >= |F|
    if (detail::power_at_least(static_cast<long long>(m0.size()), k, k, fsize))
        return {{}, std::move(m0)};

    int u = -1;
    long long du = -1;
    for (int v = 0; v < f.vertex_count(); ++v) {
        long long d = static_cast<long long>(f.incident_edges(v).size());
        if (d > du) {
            du = d;
            u = v;
        }
    }
    Hypergraph link = f.link({u}, k);
    LinkMatching sub = greedy_link_matching(link, k - 1);
    LinkMatching out;
    out.anchor.push_back(u);
    out.anchor.insert(out.anchor.end(), sub.anchor.begin(), sub.anchor.end());
    std::sort(out.anchor.begin(), out.anchor.end());
    out.matching = std::move(sub.matching);
    return out;
}

}  // namespace hyperchroma
