#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperchroma/hypergraph.hpp"

namespace hyperchroma {

// Edge-walk connectivity. Isolated vertices disconnect a hypergraph unless it
// has at most one vertex.
inline bool is_connected(const Hypergraph& h) {
    const int n = h.vertex_count();
    if (n <= 1) return true;
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& e : h.edges())
        for (std::size_t i = 1; i < e.size(); ++i) {
            int a = find(e[0]), b = find(e[i]);
            if (a != b) parent[a] = b;
        }
    int root = find(0);
    for (int v = 1; v < n; ++v)
        if (find(v) != root) return false;
    return true;
}

// A fixed small connected hypergraph to count copies of, with an optional
// root vertex v_H.
struct Pattern {
    Hypergraph graph;
    std::optional<int> root;
    std::string name;

    Pattern() = default;
    Pattern(Hypergraph h, std::string label, std::optional<int> root_vertex = std::nullopt)
        : graph(std::move(h)), root(root_vertex), name(std::move(label)) {
        if (graph.vertex_count() < 1) throw std::invalid_argument("pattern must have a vertex");
        if (!is_connected(graph)) throw std::invalid_argument("pattern must be connected");
        if (root && (*root < 0 || *root >= graph.vertex_count()))
            throw std::invalid_argument("pattern root out of range");
    }

    int vertex_count() const { return graph.vertex_count(); }
};

namespace detail {

// Pattern edges ordered so each one intersects the union of its predecessors;
// when anchor_vertex is set the first edge contains it.
inline std::vector<int> pattern_edge_order(const Hypergraph& h, std::optional<int> anchor_vertex) {
    const int m = h.edge_count();
    std::vector<int> order;
    std::vector<char> used(m, 0), covered(h.vertex_count(), 0);
    if (m == 0) return order;
    int first = 0;
    if (anchor_vertex) {
        first = -1;
        for (int i = 0; i < m; ++i)
            if (std::binary_search(h.edge(i).begin(), h.edge(i).end(), *anchor_vertex)) {
                first = i;
                break;
            }
        if (first < 0) throw std::invalid_argument("pattern root lies in no edge");
    }
    order.push_back(first);
    used[first] = 1;
    for (int v : h.edge(first)) covered[v] = 1;
    while (static_cast<int>(order.size()) < m) {
        int pick = -1;
        for (int i = 0; i < m && pick < 0; ++i) {
            if (used[i]) continue;
            for (int v : h.edge(i))
                if (covered[v]) {
                    pick = i;
                    break;
                }
        }
        if (pick < 0) throw std::invalid_argument("pattern is not connected");
        order.push_back(pick);
        used[pick] = 1;
        for (int v : h.edge(pick)) covered[v] = 1;
    }
    return order;
}

// Backtracking enumeration of every embedding of H into G: an injective
// vertex map sending pattern edges to distinct host edges. Visits each
// (edge subset, vertex map) pair exactly once. anchor = (pattern vertex,
// host vertex) pins the map.
template <typename Visit>
void for_each_embedding(const Hypergraph& g, const Hypergraph& h,
                        std::optional<std::pair<int, int>> anchor, Visit&& visit) {
    const int hn = h.vertex_count();
    if (h.edge_count() == 0) return;
    std::vector<int> order =
        pattern_edge_order(h, anchor ? std::optional<int>(anchor->first) : std::nullopt);
    std::vector<int> vmap(hn, -1);
    std::vector<char> used_host(g.vertex_count(), 0);
    std::vector<int> chosen_edges;
    chosen_edges.reserve(order.size());
    if (anchor) {
        vmap[anchor->first] = anchor->second;
        used_host[anchor->second] = 1;
    }

    // Assigns the unmapped vertices of pattern edge `pe` onto the free slots
    // of host edge `he` in every injective way, then recurses.
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == order.size()) {
            visit(chosen_edges, vmap);
            return;
        }
        const auto& pe = h.edge(order[depth]);
        std::vector<int> unmapped;
        for (int pv : pe)
            if (vmap[pv] < 0) unmapped.push_back(pv);

        // Candidate host edges: right size, containing all mapped images.
        std::vector<int> mapped_images;
        for (int pv : pe)
            if (vmap[pv] >= 0) mapped_images.push_back(vmap[pv]);
        std::sort(mapped_images.begin(), mapped_images.end());

        auto try_host_edge = [&](int he) {
            const auto& edge = g.edge(he);
            if (edge.size() != pe.size()) return;
            if (!Hypergraph::contains_all(edge, mapped_images)) return;
            std::vector<int> slots;
            for (int gv : edge)
                if (!std::binary_search(mapped_images.begin(), mapped_images.end(), gv))
                    slots.push_back(gv);
            if (slots.size() != unmapped.size()) return;
            // All injective assignments unmapped -> slots.
            std::vector<int> perm(slots.size());
            for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
            do {
                bool ok = true;
                for (std::size_t i = 0; i < unmapped.size() && ok; ++i)
                    if (used_host[slots[perm[i]]]) ok = false;
                if (ok) {
                    for (std::size_t i = 0; i < unmapped.size(); ++i) {
                        vmap[unmapped[i]] = slots[perm[i]];
                        used_host[slots[perm[i]]] = 1;
                    }
                    chosen_edges.push_back(he);
                    self(self, depth + 1);
                    chosen_edges.pop_back();
                    for (std::size_t i = 0; i < unmapped.size(); ++i) {
                        used_host[vmap[unmapped[i]]] = 0;
                        vmap[unmapped[i]] = -1;
                    }
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        };

        if (!mapped_images.empty()) {
            for (int he : g.incident_edges(mapped_images.front())) try_host_edge(he);
        } else {
            for (int he = 0; he < g.edge_count(); ++he) try_host_edge(he);
        }
    };
    rec(rec, 0);
}

inline std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace detail

// Number of distinct edge subsets A of G isomorphic to H with some
// isomorphism sending pattern vertex v to host vertex u. Each A counts once
// no matter how many isomorphisms witness it.
inline long long rooted_copy_count(const Hypergraph& g, const Pattern& h, int v, int u) {
    if (v < 0 || v >= h.vertex_count()) throw std::invalid_argument("pattern vertex out of range");
    if (u < 0 || u >= g.vertex_count()) throw std::invalid_argument("host vertex out of range");
    std::set<std::vector<int>> copies;
    detail::for_each_embedding(g, h.graph, std::make_pair(v, u),
                               [&](const std::vector<int>& edges, const std::vector<int>&) {
                                   copies.insert(detail::sorted_copy(edges));
                               });
    return static_cast<long long>(copies.size());
}

struct DeltaHResult {
    long long value = 0;
    int root = 0;  // pattern vertex attaining the min, lowest id on ties
    std::vector<long long> per_vertex;  // Delta_{H,v} for each pattern vertex
};

// Delta_H(G) = min over pattern vertices v of max over host vertices u of the
// rooted copy count. One global enumeration feeds every (v, u) cell.
inline DeltaHResult delta_H(const Hypergraph& g, const Pattern& h) {
    const int hn = h.vertex_count();
    std::vector<std::map<int, std::set<std::vector<int>>>> cells(hn);
    detail::for_each_embedding(g, h.graph, std::nullopt,
                               [&](const std::vector<int>& edges, const std::vector<int>& vmap) {
                                   auto key = detail::sorted_copy(edges);
                                   for (int pv = 0; pv < hn; ++pv)
                                       cells[pv][vmap[pv]].insert(key);
                               });
    DeltaHResult out;
    out.per_vertex.assign(hn, 0);
    for (int pv = 0; pv < hn; ++pv)
        for (const auto& [u, copies] : cells[pv])
            out.per_vertex[pv] =
                std::max(out.per_vertex[pv], static_cast<long long>(copies.size()));
    out.value = out.per_vertex.empty() ? 0 : out.per_vertex[0];
    out.root = 0;
    for (int pv = 1; pv < hn; ++pv)
        if (out.per_vertex[pv] < out.value) {
            out.value = out.per_vertex[pv];
            out.root = pv;
        }
    return out;
}

// T_H(u): the (v(H)-1)-uniform hypergraph whose edges are the vertex sets
// V(A) - u over copies A rooted at u. Distinct copies sharing a vertex set
// contribute one edge.
struct CopySet {
    int base_vertex = 0;
    std::string pattern_name;
    Hypergraph copies;
};

inline CopySet copies_at(const Hypergraph& g, const Pattern& h, int u) {
    if (!h.root) throw std::invalid_argument("copies_at needs a rooted pattern");
    std::set<std::vector<int>> vertex_sets;
    detail::for_each_embedding(g, h.graph, std::make_pair(*h.root, u),
                               [&](const std::vector<int>&, const std::vector<int>& vmap) {
                                   std::vector<int> vs;
                                   vs.reserve(vmap.size());
                                   for (int gv : vmap)
                                       if (gv != u) vs.push_back(gv);
                                   std::sort(vs.begin(), vs.end());
                                   vertex_sets.insert(std::move(vs));
                               });
    std::vector<std::vector<int>> edges(vertex_sets.begin(), vertex_sets.end());
    int uniformity = std::max(1, h.vertex_count() - 1);
    return {u, h.name, Hypergraph(g.vertex_count(), uniformity, std::move(edges))};
}

// T_H(u) for every u at once (one unanchored enumeration).
inline std::vector<Hypergraph> copies_at_all(const Hypergraph& g, const Pattern& h) {
    if (!h.root) throw std::invalid_argument("copies_at_all needs a rooted pattern");
    std::vector<std::set<std::vector<int>>> per_u(g.vertex_count());
    const int root = *h.root;
    detail::for_each_embedding(g, h.graph, std::nullopt,
                               [&](const std::vector<int>&, const std::vector<int>& vmap) {
                                   int u = vmap[root];
                                   std::vector<int> vs;
                                   vs.reserve(vmap.size());
                                   for (int gv : vmap)
                                       if (gv != u) vs.push_back(gv);
                                   std::sort(vs.begin(), vs.end());
                                   per_u[u].insert(std::move(vs));
                               });
    std::vector<Hypergraph> out;
    out.reserve(g.vertex_count());
    int uniformity = std::max(1, h.vertex_count() - 1);
    for (int u = 0; u < g.vertex_count(); ++u) {
        std::vector<std::vector<int>> edges(per_u[u].begin(), per_u[u].end());
        out.emplace_back(g.vertex_count(), uniformity, std::move(edges));
    }
    return out;
}

// Three distinct edges e, f, g form a triangle when distinct vertices u, v, w
// exist with u,v in e, v,w in f, w,u in g and {u,v,w} disjoint from e^f^g.
inline bool is_triangle(const std::vector<int>& e, const std::vector<int>& f,
                        const std::vector<int>& g) {
    auto se = detail::sorted_copy(e), sf = detail::sorted_copy(f), sg = detail::sorted_copy(g);
    if (se == sf || sf == sg || se == sg) return false;
    std::vector<int> ef, core;
    std::set_intersection(se.begin(), se.end(), sf.begin(), sf.end(), std::back_inserter(ef));
    std::set_intersection(ef.begin(), ef.end(), sg.begin(), sg.end(), std::back_inserter(core));
    auto in = [](const std::vector<int>& s, int v) {
        return std::binary_search(s.begin(), s.end(), v);
    };
    for (int u : sg) {
        if (!in(se, u) || in(core, u)) continue;
        for (int v : se) {
            if (v == u || !in(sf, v) || in(core, v)) continue;
            for (int w : sf) {
                if (w == u || w == v || !in(sg, w) || in(core, w)) continue;
                return true;
            }
        }
    }
    return false;
}

// The three 3-uniform triangles: C3, F5 and K4-minus.
inline std::vector<Pattern> triangle_family() {
    std::vector<Pattern> out;
    out.emplace_back(Hypergraph(6, 3, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}), "C3");
    out.emplace_back(Hypergraph(5, 3, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}}), "F5");
    out.emplace_back(Hypergraph(4, 3, {{0, 1, 2}, {1, 2, 3}, {0, 1, 3}}), "K4minus");
    return out;
}

struct PatternWitness {
    int pattern_index = -1;
    std::string pattern_name;
    std::vector<int> edge_ids;  // host edge indices of the copy
};

struct PatternCheck {
    bool pattern_free = true;
    PatternWitness witness;
};

// True when no pattern in the list has a copy in g; otherwise reports the
// first copy found.
inline PatternCheck check_pattern_free(const Hypergraph& g, const std::vector<Pattern>& patterns) {
    PatternCheck out;
    for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
        struct Found {};
        std::vector<int> hit;
        try {
            detail::for_each_embedding(g, patterns[pi].graph, std::nullopt,
                                       [&](const std::vector<int>& edges, const std::vector<int>&) {
                                           hit = detail::sorted_copy(edges);
                                           throw Found{};
                                       });
        } catch (const Found&) {
            out.pattern_free = false;
            out.witness = {static_cast<int>(pi), patterns[pi].name, hit};
            return out;
        }
    }
    return out;
}

}  // namespace hyperchroma
