#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperchroma {

// Rank-k hypergraph on dense vertex ids [0, vertex_count). Edges are stored
// canonically: each edge strictly increasing, the edge list sorted and
// duplicate-free. Immutable after construction; every query is const, so
// concurrent readers are safe.
//
// Edges of size 1 are admitted by the in-memory type because links and
// heavy-set levels are naturally 1-uniform; problem instances read from files
// or produced by generators keep edge sizes in [2, rank].
class Hypergraph {
public:
    Hypergraph() = default;

    Hypergraph(int vertex_count, int rank, std::vector<std::vector<int>> edge_list)
        : n_(vertex_count), rank_(rank) {
        if (vertex_count < 0) throw std::invalid_argument("vertex_count must be nonnegative");
        if (rank < 1) throw std::invalid_argument("rank must be at least 1");
        for (auto& e : edge_list) {
            std::sort(e.begin(), e.end());
            if (e.empty()) throw std::invalid_argument("empty edge");
            if (static_cast<int>(e.size()) > rank_)
                throw std::invalid_argument("edge larger than rank");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("repeated vertex in edge");
            if (e.front() < 0 || e.back() >= n_)
                throw std::invalid_argument("vertex id out of range");
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
            throw std::invalid_argument("duplicate edge");
        edges_ = std::move(edge_list);
        incidence_.assign(n_, {});
        for (int i = 0; i < edge_count(); ++i)
            for (int v : edges_[i]) incidence_[v].push_back(i);
    }

    int vertex_count() const { return n_; }
    int rank() const { return rank_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int i) const { return edges_[i]; }
    const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }

    // Vertices that actually appear in some edge.
    std::vector<int> support() const {
        std::vector<char> seen(n_, 0);
        for (const auto& e : edges_)
            for (int v : e) seen[v] = 1;
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (seen[v]) out.push_back(v);
        return out;
    }

    bool uniform() const {
        for (const auto& e : edges_)
            if (e.size() != edges_.front().size()) return false;
        return true;
    }

    int min_edge_size() const {
        int s = rank_;
        for (const auto& e : edges_) s = std::min<int>(s, static_cast<int>(e.size()));
        return edges_.empty() ? 0 : s;
    }

    // d_j(A): number of size-j edges containing A.
    int degree(const std::vector<int>& a, int j) const {
        validate_set(a);
        if (a.empty()) throw std::invalid_argument("degree: A must be nonempty");
        if (static_cast<int>(a.size()) > j || j > rank_)
            throw std::invalid_argument("degree: need |A| <= j <= rank");
        std::vector<int> s = sorted(a);
        int count = 0;
        for (int ei : incidence_[pivot(s)]) {
            const auto& e = edges_[ei];
            if (static_cast<int>(e.size()) == j && contains_all(e, s)) ++count;
        }
        return count;
    }

    // L_{G,j}(A): the (j-|A|)-uniform hypergraph of residues B-A over size-j
    // edges B containing A. Residues keep this hypergraph's vertex ids.
    Hypergraph link(const std::vector<int>& a, int j) const {
        validate_set(a);
        if (static_cast<int>(a.size()) >= j || j > rank_)
            throw std::invalid_argument("link: need |A| < j <= rank");
        std::vector<int> s = sorted(a);
        std::vector<std::vector<int>> out;
        if (s.empty()) {
            for (const auto& e : edges_)
                if (static_cast<int>(e.size()) == j) out.push_back(e);
        } else {
            for (int ei : incidence_[pivot(s)]) {
                const auto& e = edges_[ei];
                if (static_cast<int>(e.size()) != j || !contains_all(e, s)) continue;
                std::vector<int> residue;
                std::set_difference(e.begin(), e.end(), s.begin(), s.end(),
                                    std::back_inserter(residue));
                out.push_back(std::move(residue));
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return Hypergraph(n_, std::max(1, j - static_cast<int>(s.size())), std::move(out));
    }

    // Max j-degree of a single vertex, Delta_{j,1}.
    int max_degree(int j) const {
        if (j < 1 || j > rank_) throw std::invalid_argument("max_degree: j out of range");
        int best = 0;
        for (int v = 0; v < n_; ++v) {
            int d = 0;
            for (int ei : incidence_[v])
                if (static_cast<int>(edges_[ei].size()) == j) ++d;
            best = std::max(best, d);
        }
        return best;
    }

    // Delta_{j,l}: max over l-sets A of d_j(A). Only sets inside some edge can
    // have positive degree, so we count l-subsets of the size-j edges.
    int max_jl_degree(int j, int l) const {
        if (l < 1 || l > j || j > rank_)
            throw std::invalid_argument("max_jl_degree: need 1 <= l <= j <= rank");
        std::map<std::vector<int>, int> counts;
        std::vector<int> subset;
        for (const auto& e : edges_) {
            if (static_cast<int>(e.size()) != j) continue;
            for_each_subset(e, l, subset, [&](const std::vector<int>& a) { ++counts[a]; });
        }
        int best = 0;
        for (const auto& [a, c] : counts) best = std::max(best, c);
        return best;
    }

    // Gamma_b: max over ordered pairs of distinct vertices (v, v') of the
    // number of ordered edge pairs (e, e') with v in e, v' in e', |e ^ e'| = b.
    int b_codegree(int b) const {
        if (b < 1 || b >= rank_) throw std::invalid_argument("b_codegree: need 1 <= b < rank");
        std::map<std::pair<int, int>, int> counts;
        auto add_ordered_pair = [&](const std::vector<int>& e, const std::vector<int>& f) {
            for (int v : e)
                for (int w : f)
                    if (v != w) ++counts[{v, w}];
        };
        // Pairs with |e ^ e'| = b >= 1 share a vertex; enumerate via incidence.
        std::set<std::pair<int, int>> seen;
        for (int v = 0; v < n_; ++v) {
            const auto& inc = incidence_[v];
            for (std::size_t x = 0; x < inc.size(); ++x)
                for (std::size_t y = x + 1; y < inc.size(); ++y) {
                    int i = std::min(inc[x], inc[y]), j = std::max(inc[x], inc[y]);
                    if (!seen.insert({i, j}).second) continue;
                    if (intersection_size(edges_[i], edges_[j]) != b) continue;
                    add_ordered_pair(edges_[i], edges_[j]);
                    add_ordered_pair(edges_[j], edges_[i]);
                }
        }
        for (const auto& e : edges_)
            if (static_cast<int>(e.size()) == b) add_ordered_pair(e, e);
        int best = 0;
        for (const auto& [vw, c] : counts) best = std::max(best, c);
        return best;
    }

    static int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
        int count = 0;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j])
                ++i;
            else if (a[i] > b[j])
                ++j;
            else
                ++count, ++i, ++j;
        }
        return count;
    }

    static bool contains_all(const std::vector<int>& edge, const std::vector<int>& set) {
        return std::includes(edge.begin(), edge.end(), set.begin(), set.end());
    }

    template <typename F>
    static void for_each_subset(const std::vector<int>& base, int size, std::vector<int>& scratch,
                                F&& fn) {
        if (size > static_cast<int>(base.size())) return;
        subset_rec(base, size, 0, scratch, fn);
    }

private:
    template <typename F>
    static void subset_rec(const std::vector<int>& base, int size, std::size_t from,
                           std::vector<int>& cur, F&& fn) {
        if (static_cast<int>(cur.size()) == size) {
            fn(cur);
            return;
        }
        int need = size - static_cast<int>(cur.size());
        for (std::size_t i = from; i + need <= base.size(); ++i) {
            cur.push_back(base[i]);
            subset_rec(base, size, i + 1, cur, fn);
            cur.pop_back();
        }
    }

    void validate_set(const std::vector<int>& a) const {
        for (int v : a)
            if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    }

    static std::vector<int> sorted(std::vector<int> a) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("repeated vertex in set");
        return a;
    }

    // Member of A with the shortest incidence list.
    int pivot(const std::vector<int>& a) const {
        int best = a.front();
        for (int v : a)
            if (incidence_[v].size() < incidence_[best].size()) best = v;
        return best;
    }

    int n_ = 0;
    int rank_ = 2;
    std::vector<std::vector<int>> edges_;
    std::vector<std::vector<int>> incidence_;
};

// Inputs of the sparseness predicate: max k-degree cap delta and per-size
// slack factors omega_j for 2 <= j <= rank.
struct SparsityProfile {
    int delta = 1;
    std::map<int, double> omega;  // j -> omega_j
    double f = 1.0;

    double omega_at(int j) const {
        auto it = omega.find(j);
        if (it == omega.end()) throw std::invalid_argument("omega_" + std::to_string(j) + " missing");
        if (it->second <= 0) throw std::invalid_argument("omega must be positive");
        return it->second;
    }

    // Tightest profile the hypergraph itself satisfies (omega floored at 1).
    static SparsityProfile fit(const Hypergraph& g, double f = 1.0) {
        SparsityProfile p;
        p.delta = std::max(1, g.max_degree(g.rank()));
        p.f = f;
        int k = g.rank();
        for (int j = 2; j <= k; ++j) {
            double w = 1.0;
            for (int l = 1; l < j; ++l) {
                double allowed = std::pow(static_cast<double>(p.delta),
                                          static_cast<double>(j - l) / (k - 1));
                int observed = g.max_jl_degree(j, l);
                if (observed > 0) w = std::max(w, observed / allowed);
            }
            p.omega[j] = w;
        }
        return p;
    }
};

struct SparsityViolation {
    int j = 0;
    int l = 0;  // l == 0 marks the max-k-degree check
    double observed = 0;
    double allowed = 0;
};

struct SparsityCheck {
    bool sparse = true;
    std::vector<SparsityViolation> violations;
};

// (Delta, omega_2, ..., omega_k)-sparseness: max k-degree <= delta and
// Delta_{j,l} <= delta^{(j-l)/(k-1)} * omega_j for all 1 <= l < j <= k.
inline SparsityCheck is_sparse(const Hypergraph& g, const SparsityProfile& profile) {
    if (profile.delta <= 0) throw std::invalid_argument("profile.delta must be positive");
    SparsityCheck out;
    const int k = g.rank();
    int dk = g.max_degree(k);
    if (dk > profile.delta) {
        out.sparse = false;
        out.violations.push_back({k, 0, static_cast<double>(dk), static_cast<double>(profile.delta)});
    }
    for (int j = 2; j <= k; ++j) {
        double wj = profile.omega_at(j);
        for (int l = 1; l < j; ++l) {
            double allowed =
                std::pow(static_cast<double>(profile.delta), static_cast<double>(j - l) / (k - 1)) * wj;
            int observed = g.max_jl_degree(j, l);
            if (static_cast<double>(observed) > allowed) {
                out.sparse = false;
                out.violations.push_back({j, l, static_cast<double>(observed), allowed});
            }
        }
    }
    return out;
}

struct InducedResult {
    Hypergraph graph;
    std::vector<int> to_parent;  // new id -> parent id
};

// Subhypergraph on S: edges fully inside S, vertices relabeled 0..|S|-1 in
// increasing parent-id order.
inline InducedResult induced(const Hypergraph& g, const std::vector<int>& s) {
    std::vector<int> verts(s);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("induced: bad vertex id");
    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> edges;
    for (const auto& e : g.edges()) {
        bool inside = true;
        for (int v : e)
            if (local[v] < 0) {
                inside = false;
                break;
            }
        if (!inside) continue;
        std::vector<int> mapped;
        mapped.reserve(e.size());
        for (int v : e) mapped.push_back(local[v]);
        edges.push_back(std::move(mapped));
    }
    return {Hypergraph(static_cast<int>(verts.size()), g.rank(), std::move(edges)), std::move(verts)};
}

}  // namespace hyperchroma
