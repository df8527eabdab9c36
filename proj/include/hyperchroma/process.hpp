#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hyperchroma/census.hpp"
#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/rng.hpp"

namespace hyperchroma {

struct ProcessTrace {
    std::vector<int> independent_set;  // insertion order
    std::vector<int> eligible_counts;  // count available before each pick
    std::uint64_t seed = 0;
};

// Repeatedly add a uniformly random vertex whose addition keeps the set free
// of full edges; stop when none remains. Eligibility is maintained with
// per-edge counters of chosen vertices, so one insertion costs the total size
// of its incident edges.
inline ProcessTrace random_greedy_is(const Hypergraph& g, std::uint64_t seed) {
    const int n = g.vertex_count();
    Rng rng(seed);
    ProcessTrace trace;
    trace.seed = seed;

    std::vector<int> chosen_in_edge(g.edge_count(), 0);
    std::vector<char> in_set(n, 0), eligible(n, 1);
    std::vector<int> pool(n), pos(n);
    for (int v = 0; v < n; ++v) pool[v] = v, pos[v] = v;

    auto remove_from_pool = [&](int v) {
        if (!eligible[v]) return;
        eligible[v] = 0;
        int idx = pos[v], last = static_cast<int>(pool.size()) - 1;
        std::swap(pool[idx], pool[last]);
        pos[pool[idx]] = idx;
        pool.pop_back();
    };

    for (int ei = 0; ei < g.edge_count(); ++ei)
        if (g.edge(ei).size() == 1) remove_from_pool(g.edge(ei)[0]);

    while (!pool.empty()) {
        trace.eligible_counts.push_back(static_cast<int>(pool.size()));
        int v = pool[rng.below(pool.size())];
        remove_from_pool(v);
        in_set[v] = 1;
        trace.independent_set.push_back(v);
        for (int ei : g.incident_edges(v)) {
            if (++chosen_in_edge[ei] != static_cast<int>(g.edge(ei).size()) - 1) continue;
            for (int w : g.edge(ei))
                if (!in_set[w]) remove_from_pool(w);
        }
    }
    return trace;
}

// Vertices are the pairs of [n], hyperedges the triples of pairs forming a
// triangle; (n-2)-regular and 3-uniform.
inline Hypergraph triangle_hypergraph(int n) {
    if (n < 3) throw std::invalid_argument("triangle_hypergraph: need n >= 3");
    auto pair_id = [n](int i, int j) {  // i < j
        return i * (2 * n - i - 1) / 2 + (j - i - 1);
    };
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                std::vector<int> t{pair_id(i, j), pair_id(i, l), pair_id(j, l)};
                std::sort(t.begin(), t.end());
                edges.push_back(std::move(t));
            }
    return Hypergraph(n * (n - 1) / 2, 3, std::move(edges));
}

inline Hypergraph fano_plane() {
    return Hypergraph(7, 3,
                      {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

namespace detail {

inline double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::vector<int> random_k_set(Rng& rng, int n, int k) {
    std::set<int> s;
    while (static_cast<int>(s.size()) < k) s.insert(rng.below_int(n));
    return std::vector<int>(s.begin(), s.end());
}

}  // namespace detail

// m distinct k-sets drawn uniformly.
inline Hypergraph generate_uniform_random(int n, int m, int k, std::uint64_t seed) {
    if (k < 2 || k > n) throw std::invalid_argument("uniform_random: need 2 <= k <= n");
    if (static_cast<double>(m) > detail::binom(n, k))
        throw std::invalid_argument("uniform_random: m exceeds C(n,k)");
    Rng rng(seed);
    std::set<std::vector<int>> edges;
    while (static_cast<int>(edges.size()) < m) edges.insert(detail::random_k_set(rng, n, k));
    return Hypergraph(n, k, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

// Greedy linear k-uniform hypergraph: scan a seeded random order of all
// k-sets, keeping those that leave every pair codegree at most 1. max_edges 0
// means maximal.
inline Hypergraph generate_partial_steiner(int n, int k, std::uint64_t seed, int max_edges = 0) {
    if (k < 2 || k > n) throw std::invalid_argument("partial_steiner: need 2 <= k <= n");
    std::vector<std::vector<int>> all;
    std::vector<int> scratch;
    std::vector<int> base(n);
    for (int v = 0; v < n; ++v) base[v] = v;
    Hypergraph::for_each_subset(base, k, scratch,
                                [&](const std::vector<int>& s) { all.push_back(s); });
    Rng rng(seed);
    rng.shuffle(all);
    std::set<std::pair<int, int>> used_pairs;
    std::vector<std::vector<int>> edges;
    for (const auto& cand : all) {
        bool ok = true;
        for (std::size_t i = 0; i < cand.size() && ok; ++i)
            for (std::size_t j = i + 1; j < cand.size() && ok; ++j)
                if (used_pairs.count({cand[i], cand[j]})) ok = false;
        if (!ok) continue;
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j) used_pairs.insert({cand[i], cand[j]});
        edges.push_back(cand);
        if (max_edges > 0 && static_cast<int>(edges.size()) == max_edges) break;
    }
    return Hypergraph(n, k, std::move(edges));
}

// Injects vertex-disjoint copies of the pattern onto random vertices of the
// base instance.
inline Hypergraph generate_planted(const Hypergraph& base, const Pattern& pattern, int copies,
                                   std::uint64_t seed) {
    const int need = copies * pattern.vertex_count();
    if (need > base.vertex_count())
        throw std::invalid_argument("planted: not enough vertices for disjoint copies");
    Rng rng(seed);
    std::vector<int> verts(base.vertex_count());
    for (int v = 0; v < base.vertex_count(); ++v) verts[v] = v;
    rng.shuffle(verts);
    std::set<std::vector<int>> edges(base.edges().begin(), base.edges().end());
    int rank = std::max(base.rank(), pattern.graph.rank());
    for (int c = 0; c < copies; ++c) {
        const int offset = c * pattern.vertex_count();
        for (const auto& e : pattern.graph.edges()) {
            std::vector<int> mapped;
            mapped.reserve(e.size());
            for (int v : e) mapped.push_back(verts[offset + v]);
            std::sort(mapped.begin(), mapped.end());
            edges.insert(std::move(mapped));
        }
    }
    return Hypergraph(base.vertex_count(), rank,
                      std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

// Runs fn(trial, rng) for each trial with a derived sub-seed, optionally on
// several threads; results land in a pre-sized vector so aggregation order
// never depends on the thread count.
template <typename T, typename Fn>
std::vector<T> run_trials(long trials, std::uint64_t seed, int jobs, Fn&& fn) {
    std::vector<T> out(static_cast<std::size_t>(trials));
    Rng root(seed);
    if (jobs <= 1) {
        for (long t = 0; t < trials; ++t) {
            Rng sub = root.split(static_cast<std::uint64_t>(t));
            out[t] = fn(t, sub);
        }
        return out;
    }
    std::vector<std::thread> workers;
    std::size_t stride = jobs;
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w]() {
            for (long t = w; t < trials; t += static_cast<long>(stride)) {
                Rng sub = root.split(static_cast<std::uint64_t>(t));
                out[t] = fn(t, sub);
            }
        });
    for (auto& th : workers) th.join();
    return out;
}

}  // namespace hyperchroma
