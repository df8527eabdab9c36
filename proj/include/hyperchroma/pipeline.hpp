#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperchroma/census.hpp"
#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/log.hpp"
#include "hyperchroma/oracles.hpp"
#include "hyperchroma/resample.hpp"
#include "hyperchroma/rng.hpp"
#include "hyperchroma/seqclaim.hpp"

namespace hyperchroma {

inline long long ceil_int(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }

// ---------------------------------------------------------------------------
// Heavy-set hierarchy and transversal extraction
// ---------------------------------------------------------------------------

// Levels of the hierarchy for an s-uniform F under sampling probability p:
// tau_k = |F| p^{(1-alpha)k}; H_k holds the k-sets with degree above tau_k
// all of whose proper subsets are light. The union of the surviving levels'
// vertices is a transversal of the surviving subhypergraph.
struct HeavyHierarchy {
    int s = 0;
    double p = 0, alpha = 0, c = 0;
    std::vector<double> thresholds;                         // tau_k, k = 0..s
    std::vector<std::vector<std::vector<int>>> heavy_sets;  // H_k, k = 1..s
    std::vector<std::vector<std::vector<int>>> surviving;   // Z_k, k = 1..s
    std::vector<std::vector<double>> matching_thresholds;   // x[k][b] = (c/alpha)/(k-b)
};

inline HeavyHierarchy compute_heavy_levels(const Hypergraph& f, double p, double alpha, double c) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in (0,1]");
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");
    if (!f.uniform()) throw std::invalid_argument("heavy hierarchy needs a uniform hypergraph");
    HeavyHierarchy h;
    h.s = f.edge_count() > 0 ? static_cast<int>(f.edges().front().size()) : f.rank();
    h.p = p;
    h.alpha = alpha;
    h.c = c;
    const double m = static_cast<double>(f.edge_count());
    h.thresholds.resize(h.s + 1);
    for (int k = 0; k <= h.s; ++k) h.thresholds[k] = m * std::pow(p, (1.0 - alpha) * k);
    h.heavy_sets.assign(h.s + 1, {});
    h.surviving.assign(h.s + 1, {});
    h.matching_thresholds.assign(h.s + 1, {});
    for (int k = 1; k <= h.s; ++k) {
        h.matching_thresholds[k].assign(k, 0.0);
        for (int b = 1; b < k; ++b) h.matching_thresholds[k][b] = (c / alpha) / (k - b);
    }

    std::map<std::vector<int>, int> degree_memo;
    auto deg = [&](const std::vector<int>& a) {
        auto it = degree_memo.find(a);
        if (it != degree_memo.end()) return it->second;
        int d = f.degree(a, h.s);
        degree_memo.emplace(a, d);
        return d;
    };

    for (int k = 1; k <= h.s; ++k) {
        std::set<std::vector<int>> candidates;
        std::vector<int> scratch;
        for (const auto& e : f.edges())
            Hypergraph::for_each_subset(e, k, scratch,
                                        [&](const std::vector<int>& a) { candidates.insert(a); });
        for (const auto& a : candidates) {
            if (static_cast<double>(deg(a)) <= h.thresholds[k]) continue;
            bool minimal = true;
            std::vector<int> sub;
            for (int b = 1; b < k && minimal; ++b)
                Hypergraph::for_each_subset(a, b, sub, [&](const std::vector<int>& bset) {
                    if (static_cast<double>(deg(bset)) > h.thresholds[b]) minimal = false;
                });
            if (minimal) h.heavy_sets[k].push_back(a);
        }
    }
    return h;
}

struct TransversalExtraction {
    TransversalCertificate cert;  // K
    HeavyHierarchy hierarchy;
    std::vector<int> surviving_edges;  // indices into F of edges inside the survivor set
    double size_bound = 0;             // s^2 (c/alpha)^{s+1}
    std::optional<bool> size_within_bound;  // set when c >= e 2^s s alpha
};

// Builds K = union over levels of the vertices of the surviving heavy sets.
// Requires the size hypothesis |F| p^{(1-alpha)s} < 1; without it a surviving
// edge all of whose subsets are light could escape every level.
inline TransversalExtraction extract_transversal(const Hypergraph& f,
                                                 const std::vector<char>& survivors, double p,
                                                 double alpha, double c) {
    if (static_cast<int>(survivors.size()) != f.vertex_count())
        throw std::invalid_argument("survivor vector size mismatch");
    TransversalExtraction out;
    out.hierarchy = compute_heavy_levels(f, p, alpha, c);
    const int s = out.hierarchy.s;
    if (f.edge_count() > 0 && out.hierarchy.thresholds[s] >= 1.0) {
        std::ostringstream ss;
        ss << "extract_transversal: hypothesis |F| p^((1-alpha)s) < 1 fails ("
           << out.hierarchy.thresholds[s] << " >= 1); the transversal guarantee is void";
        throw std::invalid_argument(ss.str());
    }

    auto alive = [&](const std::vector<int>& a) {
        for (int v : a)
            if (!survivors[v]) return false;
        return true;
    };
    std::set<int> k_vertices;
    for (int k = 1; k <= s; ++k)
        for (const auto& a : out.hierarchy.heavy_sets[k])
            if (alive(a)) {
                out.hierarchy.surviving[k].push_back(a);
                k_vertices.insert(a.begin(), a.end());
            }
    out.cert.hitting_set.assign(k_vertices.begin(), k_vertices.end());
    for (int ei = 0; ei < f.edge_count(); ++ei)
        if (alive(f.edge(ei))) out.surviving_edges.push_back(ei);

    out.size_bound = static_cast<double>(s) * s * std::pow(c / alpha, s + 1);
    if (c >= std::exp(1.0) * std::pow(2.0, s) * s * alpha)
        out.size_within_bound = static_cast<double>(out.cert.hitting_set.size()) <= out.size_bound;
    return out;
}

// ---------------------------------------------------------------------------
// Partition results and the epsilon-partition
// ---------------------------------------------------------------------------

struct PartCertificate {
    bool pattern_free = true;
    std::vector<int> max_degree;          // index j in 0..k
    std::vector<long long> degree_bound;  // index j; -1 where not constrained
};

struct TransversalEntry {
    int u = 0;
    int pattern_index = 0;
    std::vector<int> hitting_set;
    bool constructive = true;  // heavy-set route vs exact minimum transversal
};

struct PartitionResult {
    int color_count = 0;  // stage-1 colors r
    double epsilon = 0;
    double delta_used = 0;
    std::vector<int> pattern_roots;
    std::vector<int> part_of;
    std::vector<std::vector<int>> part_vertices;
    std::vector<Hypergraph> parts;
    std::vector<PartCertificate> certificates;
    std::vector<TransversalEntry> transversals;
    std::vector<std::array<int, 2>> aux_edges;  // the 2-graph W
    double part_count_bound = 0;                // r (2|H|(N-1)^2 (c/alpha)^N + 1)
    long long stage1_resamples = 0;
    std::uint64_t seed = 0;
};

struct EpsOptions {
    double delta_override = 0;  // 0: observed max k-degree
    double alpha_override = 0;  // 0: per-pattern formula value
    double c_override = 0;      // 0: formula value
    long long cap = 1'000'000;
    int max_attempts = 8;
};

namespace detail {

// Greedy colors along a degeneracy order: repeatedly remove the minimum
// degree vertex (lowest id on ties), color in reverse removal order.
inline std::vector<int> degeneracy_greedy_coloring(int n,
                                                   const std::vector<std::array<int, 2>>& edges) {
    std::vector<std::set<int>> adj(n);
    for (const auto& e : edges) {
        if (e[0] == e[1]) continue;
        adj[e[0]].insert(e[1]);
        adj[e[1]].insert(e[0]);
    }
    std::vector<std::set<int>> work = adj;
    std::vector<char> removed(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || work[v].size() < work[best].size())) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (int w : work[best]) work[w].erase(best);
    }
    std::vector<int> color(n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::set<int> used;
        for (int w : adj[*it])
            if (color[w] >= 0) used.insert(color[w]);
        int c = 0;
        while (used.count(c)) ++c;
        color[*it] = c;
    }
    return color;
}

inline std::string join_labels(const BadEventSystem& sys, const std::vector<int>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size() && i < 8; ++i) {
        if (i) out += ", ";
        out += sys.events[ids[i]].label;
    }
    if (ids.size() > 8) out += ", ...";
    return out;
}

inline MoserTardosResult resample_with_restarts(const BadEventSystem& sys, Rng& rng,
                                                long long cap, int max_attempts,
                                                const char* what) {
    MoserTardosResult last;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        last = moser_tardos(sys, rng.split(attempt).next(), cap);
        if (last.success) return last;
    }
    throw std::runtime_error(std::string(what) + ": resampling cap exhausted; surviving events: " +
                             join_labels(sys, last.violations));
}

}  // namespace detail

// Chooses roots where absent: v_H attaining Delta_H(G).
inline std::vector<Pattern> resolve_pattern_roots(const Hypergraph& g,
                                                  std::vector<Pattern> patterns) {
    for (auto& p : patterns)
        if (!p.root) p.root = delta_H(g, p).root;
    return patterns;
}

// Stage 1 colors with r colors so that no vertex sees too many monochromatic
// edges (events A_{u,j}) and every surviving copy-set has a small transversal
// (events B_{u,H}). Stage 2 extracts per-vertex transversals K(u,H), joins u
// to K(u,H) in the auxiliary graph W, colors W along a degeneracy order and
// refines the parts by (color, W-color). Certificates are recomputed from
// scratch on every emitted part.
inline PartitionResult eps_partition(const Hypergraph& g, std::vector<Pattern> patterns,
                                     double epsilon, const std::map<int, double>& omega,
                                     std::uint64_t seed, const EpsOptions& opt = {}) {
    const int k = g.rank();
    const int n = g.vertex_count();
    if (k < 2) throw std::invalid_argument("eps_partition: rank must be >= 2");
    if (!(epsilon > 0.0 && epsilon < 1.0 / (k - 1)))
        throw std::invalid_argument("eps_partition: need 0 < epsilon < 1/(k-1)");

    patterns = resolve_pattern_roots(g, patterns);
    const double delta =
        opt.delta_override > 0 ? opt.delta_override : static_cast<double>(g.max_degree(k));

    PartitionResult res;
    res.epsilon = epsilon;
    res.delta_used = delta;
    res.seed = seed;
    for (const auto& p : patterns) res.pattern_roots.push_back(*p.root);

    const int r =
        std::max<long long>(2, std::llround(std::pow(std::max(delta, 0.0), 1.0 / (k - 1) - epsilon)));
    res.color_count = r;

    int bigN = 0;
    for (const auto& p : patterns) bigN = std::max(bigN, p.vertex_count());
    const double inv = 1.0 / (k - 1) - epsilon;
    const double c_const = opt.c_override > 0
                               ? opt.c_override
                               : (static_cast<double>(bigN) * bigN + 3.0 * bigN) *
                                     std::pow(2.0, bigN) / inv;
    std::vector<double> alpha_h(patterns.size(), 0.0);
    for (std::size_t h = 0; h < patterns.size(); ++h) {
        int v = patterns[h].vertex_count();
        alpha_h[h] = opt.alpha_override > 0 ? opt.alpha_override
                                            : epsilon / (inv * std::max(1, v - 1));
    }

    // Degree thresholds (per edge size) and copy-sets per vertex.
    std::vector<double> degree_threshold(k + 1, 0.0);
    for (int j = 2; j <= k; ++j) {
        auto it = omega.find(j);
        double wj = it == omega.end() ? 1.0 : it->second;
        degree_threshold[j] = 2.0 * std::pow(delta, (j - 1) * epsilon) * wj;
    }
    std::vector<std::vector<Hypergraph>> tH;  // [pattern][u]
    tH.reserve(patterns.size());
    for (const auto& p : patterns) tH.push_back(copies_at_all(g, p));

    BadEventSystem sys;
    sys.variables.resize(n);
    for (auto& v : sys.variables)
        v.sample = [r](Rng& rng) { return rng.below_int(r); };

    for (int u = 0; u < n; ++u) {
        for (int j = 2; j <= k; ++j) {
            std::vector<std::vector<int>> local;
            for (int ei : g.incident_edges(u))
                if (static_cast<int>(g.edge(ei).size()) == j) local.push_back(g.edge(ei));
            if (local.empty()) continue;
            BadEvent ev;
            std::set<int> scope;
            for (const auto& e : local) scope.insert(e.begin(), e.end());
            scope.insert(u);
            ev.scope.assign(scope.begin(), scope.end());
            double threshold = degree_threshold[j];
            ev.holds = [local = std::move(local), u, threshold](const std::vector<int>& color) {
                int z = 0;
                for (const auto& e : local) {
                    bool mono = true;
                    for (int v : e)
                        if (color[v] != color[u]) {
                            mono = false;
                            break;
                        }
                    if (mono) ++z;
                }
                return static_cast<double>(z) >= threshold;
            };
            ev.label = "A[u=" + std::to_string(u) + ",j=" + std::to_string(j) + "]";
            sys.events.push_back(std::move(ev));
        }
    }
    for (std::size_t h = 0; h < patterns.size(); ++h) {
        const int vH = patterns[h].vertex_count();
        const double tau_threshold =
            static_cast<double>(vH - 1) * (vH - 1) * std::pow(c_const / alpha_h[h], vH);
        for (int u = 0; u < n; ++u) {
            const Hypergraph& t = tH[h][u];
            if (t.edge_count() == 0) continue;
            BadEvent ev;
            std::set<int> scope;
            for (const auto& e : t.edges()) scope.insert(e.begin(), e.end());
            scope.insert(u);
            ev.scope.assign(scope.begin(), scope.end());
            const Hypergraph* tp = &t;
            ev.holds = [tp, u, tau_threshold](const std::vector<int>& color) {
                std::vector<std::vector<int>> surviving;
                for (const auto& e : tp->edges()) {
                    bool same = true;
                    for (int v : e)
                        if (color[v] != color[u]) {
                            same = false;
                            break;
                        }
                    if (same) surviving.push_back(e);
                }
                if (surviving.empty()) return false;
                Hypergraph survived(tp->vertex_count(), tp->rank(), std::move(surviving));
                return static_cast<double>(transversal_number_exact(survived).tau) > tau_threshold;
            };
            ev.label = "B[u=" + std::to_string(u) + ",H=" + patterns[h].name + "]";
            sys.events.push_back(std::move(ev));
        }
    }

    log_info("eps_partition: n=" + std::to_string(n) + " r=" + std::to_string(r) + " events=" +
             std::to_string(sys.events.size()));
    Rng rng(seed);
    auto mt = detail::resample_with_restarts(sys, rng, opt.cap, opt.max_attempts, "eps_partition");
    res.stage1_resamples = mt.resamples;
    log_debug("eps_partition: stage 1 settled after " + std::to_string(mt.resamples) +
              " resamples");
    const std::vector<int>& color = mt.assignment;

    // Stage 2: transversals, the graph W, and its degeneracy coloring.
    const double p_same = 1.0 / r;
    std::vector<int> wcolor(n, 0);
    for (int cls = 0; cls < r; ++cls) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (color[v] == cls) members.push_back(v);
        if (members.empty()) continue;
        std::vector<char> same(n, 0);
        for (int v : members) same[v] = 1;

        std::vector<std::array<int, 2>> w_edges;
        for (int u : members) {
            for (std::size_t h = 0; h < patterns.size(); ++h) {
                const Hypergraph& t = tH[h][u];
                if (t.edge_count() == 0) continue;
                std::vector<std::vector<int>> surviving;
                for (const auto& e : t.edges()) {
                    bool all_same = true;
                    for (int v : e)
                        if (!same[v]) {
                            all_same = false;
                            break;
                        }
                    if (all_same) surviving.push_back(e);
                }
                if (surviving.empty()) continue;
                TransversalEntry entry;
                entry.u = u;
                entry.pattern_index = static_cast<int>(h);
                const int s = std::max(1, patterns[h].vertex_count() - 1);
                double tau_s = t.edge_count() * std::pow(p_same, (1.0 - alpha_h[h]) * s);
                if (alpha_h[h] > 0.0 && alpha_h[h] < 1.0 && tau_s < 1.0) {
                    entry.hitting_set =
                        extract_transversal(t, same, p_same, alpha_h[h], c_const).cert.hitting_set;
                    entry.constructive = true;
                } else {
                    Hypergraph survived(t.vertex_count(), t.rank(), std::move(surviving));
                    entry.hitting_set = transversal_number_exact(survived).cert.hitting_set;
                    entry.constructive = false;
                }
                for (int w : entry.hitting_set) w_edges.push_back({u, w});
                res.transversals.push_back(std::move(entry));
            }
        }

        std::vector<int> local_of(n, -1);
        for (std::size_t i = 0; i < members.size(); ++i) local_of[members[i]] = static_cast<int>(i);
        std::vector<std::array<int, 2>> local_edges;
        for (const auto& e : w_edges) {
            res.aux_edges.push_back(e);
            local_edges.push_back({local_of[e[0]], local_of[e[1]]});
        }
        auto wc = detail::degeneracy_greedy_coloring(static_cast<int>(members.size()), local_edges);
        for (std::size_t i = 0; i < members.size(); ++i) wcolor[members[i]] = wc[i];
    }

    // Refine to parts by (color, W-color), skipping empty groups.
    std::map<std::pair<int, int>, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[{color[v], wcolor[v]}].push_back(v);
    res.part_of.assign(n, -1);
    for (const auto& [key, verts] : groups) {
        int pid = static_cast<int>(res.part_vertices.size());
        for (int v : verts) res.part_of[v] = pid;
        res.part_vertices.push_back(verts);
        res.parts.push_back(induced(g, verts).graph);
    }

    // Certificates, recomputed by oracles; a violation is a hard error.
    for (std::size_t pi = 0; pi < res.parts.size(); ++pi) {
        PartCertificate cert;
        cert.max_degree.assign(k + 1, 0);
        cert.degree_bound.assign(k + 1, -1);
        auto pf = check_pattern_free(res.parts[pi], patterns);
        cert.pattern_free = pf.pattern_free;
        if (!cert.pattern_free)
            throw std::logic_error("eps_partition: part " + std::to_string(pi) +
                                   " contains a copy of " + pf.witness.pattern_name);
        for (int j = 2; j <= k; ++j) {
            cert.max_degree[j] = res.parts[pi].max_degree(j);
            cert.degree_bound[j] = ceil_int(degree_threshold[j]);
            if (cert.max_degree[j] > cert.degree_bound[j])
                throw std::logic_error("eps_partition: part " + std::to_string(pi) +
                                       " exceeds its " + std::to_string(j) + "-degree bound");
        }
        res.certificates.push_back(std::move(cert));
    }

    double worst_alpha = 0.0;
    for (double a : alpha_h) worst_alpha = worst_alpha == 0.0 ? a : std::min(worst_alpha, a);
    if (!patterns.empty() && worst_alpha > 0.0)
        res.part_count_bound =
            r * (2.0 * patterns.size() * (bigN - 1) * (bigN - 1) *
                     std::pow(c_const / worst_alpha, bigN) +
                 1.0);
    else
        res.part_count_bound = r;
    return res;
}

// ---------------------------------------------------------------------------
// Random halving
// ---------------------------------------------------------------------------

struct HalvingOptions {
    double delta_override = 0;  // base of the slack terms; 0: observed
    std::map<std::pair<int, int>, double> jl_bounds;  // Delta_{j,l} caps; empty: observed
    std::vector<double> dH_bounds;                    // per-pattern Delta_H caps
    long long cap = 1'000'000;
    int max_attempts = 8;
    bool check_sparse_pre = true;
};

struct HalvingSideStats {
    std::vector<std::vector<int>> jl_degree;  // [j][l]
    std::vector<long long> delta_H;           // per pattern
};

struct HalvingResult {
    std::vector<int> side;  // 0/1 per vertex
    std::array<InducedResult, 2> halves;
    std::array<HalvingSideStats, 2> stats;
    std::map<std::pair<int, int>, double> jl_threshold;
    std::vector<double> dH_threshold;
    long long resamples = 0;
};

// Splits V(G) in two so that no set's degree and no vertex's copy count
// overshoots half its cap by more than the concentration slack.
inline HalvingResult random_halving(const Hypergraph& g, std::vector<Pattern> patterns,
                                    const std::map<int, double>& omega, std::uint64_t seed,
                                    const HalvingOptions& opt = {}) {
    const int k = g.rank();
    const int n = g.vertex_count();
    if (k < 2) throw std::invalid_argument("random_halving: rank must be >= 2");
    patterns = resolve_pattern_roots(g, patterns);
    const double delta =
        opt.delta_override > 0 ? opt.delta_override : static_cast<double>(g.max_degree(k));

    if (opt.check_sparse_pre) {
        SparsityProfile profile;
        profile.delta = std::max<long long>(1, ceil_int(delta));
        for (int j = 2; j <= k; ++j) {
            auto it = omega.find(j);
            profile.omega[j] = 2.0 * (it == omega.end() ? 1.0 : it->second);
        }
        auto check = is_sparse(g, profile);
        if (!check.sparse) {
            std::ostringstream ss;
            ss << "random_halving: input is not (Delta, 2*omega)-sparse;";
            for (const auto& v : check.violations)
                ss << " (j=" << v.j << ",l=" << v.l << "): " << v.observed << " > " << v.allowed;
            throw std::invalid_argument(ss.str());
        }
    }

    auto jl_cap = [&](int j, int l) -> double {
        auto it = opt.jl_bounds.find({j, l});
        if (it != opt.jl_bounds.end()) return it->second;
        return static_cast<double>(g.max_jl_degree(j, l));
    };

    HalvingResult res;
    BadEventSystem sys;
    sys.variables.resize(n);
    for (auto& v : sys.variables)
        v.sample = [](Rng& rng) { return rng.below_int(2); };

    // C_{A,j}: one event per set A below a j-edge.
    for (int j = 2; j <= k; ++j) {
        for (int l = 1; l < j; ++l) {
            double threshold = jl_cap(j, l) / std::pow(2.0, j - l) +
                               std::pow(delta, static_cast<double>(j - l) / (k - 1) - 1.0 / (2 * k));
            res.jl_threshold[{j, l}] = threshold;
            std::set<std::vector<int>> sets;
            std::vector<int> scratch;
            for (const auto& e : g.edges())
                if (static_cast<int>(e.size()) == j)
                    Hypergraph::for_each_subset(e, l, scratch,
                                                [&](const std::vector<int>& a) { sets.insert(a); });
            for (const auto& a : sets) {
                std::vector<std::vector<int>> super;
                for (int ei : g.incident_edges(a.front())) {
                    const auto& e = g.edge(ei);
                    if (static_cast<int>(e.size()) == j && Hypergraph::contains_all(e, a))
                        super.push_back(e);
                }
                BadEvent ev;
                std::set<int> scope;
                for (const auto& e : super) scope.insert(e.begin(), e.end());
                ev.scope.assign(scope.begin(), scope.end());
                ev.holds = [a, super = std::move(super), threshold](const std::vector<int>& side) {
                    int cmin = side[a.front()];
                    for (int v : a) cmin = std::min(cmin, side[v]);
                    int d = 0;
                    for (const auto& e : super) {
                        bool inside = true;
                        for (int v : e)
                            if (side[v] != cmin) {
                                inside = false;
                                break;
                            }
                        if (inside) ++d;
                    }
                    return static_cast<double>(d) > threshold;
                };
                std::string ids;
                for (int v : a) ids += (ids.empty() ? "" : " ") + std::to_string(v);
                ev.label = "C[A={" + ids + "},j=" + std::to_string(j) + "]";
                sys.events.push_back(std::move(ev));
            }
        }
    }

    // B_{u,H}: surviving copy count at u.
    std::vector<std::vector<Hypergraph>> tH;
    for (const auto& p : patterns) tH.push_back(copies_at_all(g, p));
    res.dH_threshold.assign(patterns.size(), 0.0);
    for (std::size_t h = 0; h < patterns.size(); ++h) {
        const int vH = patterns[h].vertex_count();
        double cap_h = h < opt.dH_bounds.size() ? opt.dH_bounds[h]
                                                : static_cast<double>(delta_H(g, patterns[h]).value);
        double threshold =
            cap_h / std::pow(2.0, vH - 1) +
            std::pow(delta, static_cast<double>(vH - 1) / (k - 1) - 1.0 / (2 * k));
        res.dH_threshold[h] = threshold;
        for (int u = 0; u < n; ++u) {
            const Hypergraph& t = tH[h][u];
            if (t.edge_count() == 0) continue;
            BadEvent ev;
            std::set<int> scope;
            for (const auto& e : t.edges()) scope.insert(e.begin(), e.end());
            scope.insert(u);
            ev.scope.assign(scope.begin(), scope.end());
            const Hypergraph* tp = &t;
            ev.holds = [tp, u, threshold](const std::vector<int>& side) {
                int count = 0;
                for (const auto& e : tp->edges()) {
                    bool same = true;
                    for (int v : e)
                        if (side[v] != side[u]) {
                            same = false;
                            break;
                        }
                    if (same) ++count;
                }
                return static_cast<double>(count) > threshold;
            };
            ev.label = "B[u=" + std::to_string(u) + ",H=" + patterns[h].name + "]";
            sys.events.push_back(std::move(ev));
        }
    }

    Rng rng(seed);
    auto mt = detail::resample_with_restarts(sys, rng, opt.cap, opt.max_attempts, "random_halving");
    res.resamples = mt.resamples;
    res.side = mt.assignment;

    for (int sideid = 0; sideid < 2; ++sideid) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (res.side[v] == sideid) verts.push_back(v);
        res.halves[sideid] = induced(g, verts);
        auto& st = res.stats[sideid];
        st.jl_degree.assign(k + 1, std::vector<int>(k + 1, 0));
        for (int j = 2; j <= k; ++j)
            for (int l = 1; l < j; ++l)
                st.jl_degree[j][l] = res.halves[sideid].graph.max_jl_degree(j, l);
        for (const auto& p : patterns)
            st.delta_H.push_back(delta_H(res.halves[sideid].graph, p).value);
    }
    return res;
}

// ---------------------------------------------------------------------------
// The full partition driver
// ---------------------------------------------------------------------------

struct RecursionStep {
    int t = 0;
    double d = 0;
    std::map<std::pair<int, int>, double> r;  // (j,l) -> bound
    std::vector<double> s;                    // per pattern
};

struct FullPartitionOptions {
    double delta_override = 0;
    double alpha_override = 0;
    double c_override = 0;
    long long cap = 1'000'000;
    int max_attempts = 8;
};

struct FullPartitionResult {
    PartitionResult partition;
    std::vector<RecursionStep> trace;
    int halving_steps = 0;  // T, clamped at 0
    int leaves = 1;
    double d0 = 0, f = 0, epsilon = 0, eps_delta = 0;
    std::vector<long long> final_degree_bound;  // per j: ceil(2^{2k} f^{j-1} omega_j)
};

// Halve T times tracking the (d, r, s) recurrences, then eps-partition every
// leaf; certificates on the merged parts are recomputed against the final
// degree bounds.
inline FullPartitionResult partition_full(const Hypergraph& g, std::vector<Pattern> patterns,
                                          double f, const std::map<int, double>& omega,
                                          std::uint64_t seed,
                                          const FullPartitionOptions& opt = {}) {
    const int k = g.rank();
    const int n = g.vertex_count();
    if (k < 2) throw std::invalid_argument("partition_full: rank must be >= 2");
    if (patterns.empty()) throw std::invalid_argument("partition_full: needs at least one pattern");
    if (!(f > 1.0)) throw std::invalid_argument("partition_full: f must exceed 1");
    patterns = resolve_pattern_roots(g, patterns);

    int bigN = 0;
    for (const auto& p : patterns) bigN = std::max(bigN, p.vertex_count());
    const double epsilon = 1.0 / (4.0 * bigN * k);
    const double d0 =
        opt.delta_override > 0 ? opt.delta_override : static_cast<double>(g.max_degree(k));

    auto omega_at = [&](int j) {
        auto it = omega.find(j);
        return it == omega.end() ? 1.0 : it->second;
    };

    // Hypothesis checks, rejected up front with the failing inequality.
    {
        SparsityProfile profile;
        profile.delta = std::max<long long>(1, ceil_int(d0));
        profile.f = f;
        for (int j = 2; j <= k; ++j) profile.omega[j] = omega_at(j);
        auto check = is_sparse(g, profile);
        if (!check.sparse) {
            std::ostringstream ss;
            ss << "partition_full: input is not (Delta, omega)-sparse;";
            for (const auto& v : check.violations)
                ss << " (j=" << v.j << ",l=" << v.l << "): " << v.observed << " > " << v.allowed;
            throw std::invalid_argument(ss.str());
        }
        for (const auto& p : patterns) {
            double bound = std::pow(std::max(d0, 1.0),
                                    static_cast<double>(p.vertex_count() - 1) / (k - 1)) /
                           std::pow(f, p.vertex_count());
            long long observed = delta_H(g, p).value;
            if (static_cast<double>(observed) > bound) {
                std::ostringstream ss;
                ss << "partition_full: Delta_" << p.name << "(G) = " << observed
                   << " exceeds Delta^((v(H)-1)/(k-1)) / f^v(H) = " << bound;
                throw std::invalid_argument(ss.str());
            }
        }
    }

    FullPartitionResult out;
    out.d0 = d0;
    out.f = f;
    out.epsilon = epsilon;
    const double f_pow = std::pow(f, 4.0 * bigN * k);
    int bigT = 0;
    if (d0 > 0 && 2.0 * d0 > f_pow)
        bigT = static_cast<int>(std::ceil(std::log2(2.0 * d0 / f_pow) / (k - 1)));
    out.halving_steps = std::max(0, bigT);
    log_info("partition_full: d0=" + std::to_string(d0) + " halving steps T=" +
             std::to_string(out.halving_steps));

    // Track the displayed recurrences.
    RecursionStep step0;
    step0.t = 0;
    step0.d = d0;
    for (int j = 2; j <= k; ++j)
        for (int l = 1; l < j; ++l)
            step0.r[{j, l}] =
                std::pow(std::max(d0, 1.0), static_cast<double>(j - l) / (k - 1)) * omega_at(j);
    for (const auto& p : patterns)
        step0.s.push_back(std::pow(std::max(d0, 1.0),
                                   static_cast<double>(p.vertex_count() - 1) / (k - 1)) /
                          std::pow(f, p.vertex_count()));
    out.trace.push_back(step0);

    std::vector<InducedResult> leaves;
    {
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        leaves.push_back(induced(g, all));
    }

    Rng rng(seed);
    for (int t = 0; t < out.halving_steps; ++t) {
        const RecursionStep& cur = out.trace.back();
        std::vector<InducedResult> next;
        for (std::size_t li = 0; li < leaves.size(); ++li) {
            HalvingOptions hopt;
            hopt.delta_override = cur.d;
            hopt.jl_bounds = cur.r;
            hopt.dH_bounds = cur.s;
            hopt.cap = opt.cap;
            hopt.max_attempts = opt.max_attempts;
            hopt.check_sparse_pre = false;  // maintained inductively by the halving events
            auto half = random_halving(leaves[li].graph, patterns, omega,
                                       rng.split(t * 1000003ULL + li).next(), hopt);
            for (int sideid = 0; sideid < 2; ++sideid) {
                InducedResult leaf;
                leaf.graph = half.halves[sideid].graph;
                leaf.to_parent.reserve(half.halves[sideid].to_parent.size());
                for (int v : half.halves[sideid].to_parent)
                    leaf.to_parent.push_back(leaves[li].to_parent[v]);
                next.push_back(std::move(leaf));
            }
        }
        leaves = std::move(next);

        RecursionStep nxt;
        nxt.t = t + 1;
        nxt.d = cur.d / std::pow(2.0, k - 1) + std::pow(cur.d, 1.0 - 1.0 / (2 * k));
        for (int j = 2; j <= k; ++j)
            for (int l = 1; l < j; ++l)
                nxt.r[{j, l}] =
                    cur.r.at({j, l}) / std::pow(2.0, j - l) +
                    std::pow(cur.d, static_cast<double>(j - l) / (k - 1) - 1.0 / (2 * k));
        for (std::size_t h = 0; h < patterns.size(); ++h) {
            int vH = patterns[h].vertex_count();
            nxt.s.push_back(cur.s[h] / std::pow(2.0, vH - 1) +
                            std::pow(cur.d, static_cast<double>(vH - 1) / (k - 1) - 1.0 / (2 * k)));
        }
        out.trace.push_back(nxt);

        // Decay-law guards along the run, active above the explicit threshold.
        for (int j = 2; j <= k; ++j)
            for (int l = 1; l < j; ++l) {
                double guard = static_cast<double>(
                    seqclaim_threshold(j - l, k - 1, 2 * k));
                guard = std::max(guard, std::pow(omega_at(j), -4.0 * k));
                if (nxt.d >= guard) {
                    double cap_bound = 2.0 *
                                       std::pow(nxt.d, static_cast<double>(j - l) / (k - 1)) *
                                       omega_at(j);
                    if (nxt.r.at({j, l}) > cap_bound * (1.0 + 1e-9))
                        throw std::logic_error("partition_full: r_{j,l,t} escaped its decay bound");
                }
            }
        double dguard = static_cast<double>(seqclaim_threshold(k - 1, k - 1, 2 * k));
        if (nxt.d >= dguard &&
            nxt.d > 2.0 * d0 * std::pow(2.0, -static_cast<double>(k - 1) * (t + 1)) * (1.0 + 1e-9))
            throw std::logic_error("partition_full: d_t escaped its decay bound");
    }

    out.leaves = static_cast<int>(leaves.size());
    out.eps_delta = out.halving_steps >= 1 ? std::pow(2.0, k) * f_pow : d0;

    // Epsilon-partition every leaf and merge by part-id offsetting.
    PartitionResult& merged = out.partition;
    merged.epsilon = epsilon;
    merged.delta_used = out.eps_delta;
    merged.seed = seed;
    merged.part_of.assign(n, -1);
    for (std::size_t li = 0; li < leaves.size(); ++li) {
        EpsOptions eopt;
        eopt.delta_override = out.eps_delta;
        eopt.alpha_override = opt.alpha_override;
        eopt.c_override = opt.c_override;
        eopt.cap = opt.cap;
        eopt.max_attempts = opt.max_attempts;
        auto part = eps_partition(leaves[li].graph, patterns, epsilon, omega,
                                  rng.split(0xE95ULL * (li + 1)).next(), eopt);
        merged.color_count = std::max(merged.color_count, part.color_count);
        merged.stage1_resamples += part.stage1_resamples;
        if (li == 0) {
            merged.pattern_roots = part.pattern_roots;
            merged.part_count_bound = part.part_count_bound * leaves.size();
        }
        for (const auto& entry : part.transversals) {
            TransversalEntry mapped = entry;
            mapped.u = leaves[li].to_parent[entry.u];
            for (int& w : mapped.hitting_set) w = leaves[li].to_parent[w];
            merged.transversals.push_back(std::move(mapped));
        }
        for (const auto& e : part.aux_edges)
            merged.aux_edges.push_back({leaves[li].to_parent[e[0]], leaves[li].to_parent[e[1]]});
        for (const auto& verts : part.part_vertices) {
            std::vector<int> orig;
            orig.reserve(verts.size());
            for (int v : verts) orig.push_back(leaves[li].to_parent[v]);
            std::sort(orig.begin(), orig.end());
            int pid = static_cast<int>(merged.part_vertices.size());
            for (int v : orig) merged.part_of[v] = pid;
            merged.part_vertices.push_back(std::move(orig));
        }
    }

    out.final_degree_bound.assign(k + 1, -1);
    for (int j = 2; j <= k; ++j)
        out.final_degree_bound[j] = ceil_int(std::pow(2.0, 2 * k) * std::pow(f, j - 1) * omega_at(j));

    for (const auto& verts : merged.part_vertices) {
        Hypergraph part = induced(g, verts).graph;
        PartCertificate cert;
        cert.max_degree.assign(k + 1, 0);
        cert.degree_bound.assign(k + 1, -1);
        auto pf = check_pattern_free(part, patterns);
        cert.pattern_free = pf.pattern_free;
        if (!cert.pattern_free)
            throw std::logic_error("partition_full: final part contains a copy of " +
                                   pf.witness.pattern_name);
        for (int j = 2; j <= k; ++j) {
            cert.max_degree[j] = part.max_degree(j);
            cert.degree_bound[j] = out.final_degree_bound[j];
            if (cert.max_degree[j] > cert.degree_bound[j])
                throw std::logic_error("partition_full: final part exceeds its degree bound");
        }
        merged.parts.push_back(std::move(part));
        merged.certificates.push_back(std::move(cert));
    }
    return out;
}

// ---------------------------------------------------------------------------
// End-to-end colorers
// ---------------------------------------------------------------------------

namespace detail {

// Color each part with its own palette: the exact oracle on small parts, the
// resampling colorer otherwise.
inline std::pair<std::vector<int>, int> color_parts(const Hypergraph& g,
                                                    const PartitionResult& partition,
                                                    std::uint64_t seed, int exact_cutoff = 20) {
    if (g.edge_count() == 0) return {std::vector<int>(g.vertex_count(), 0), 1};
    std::vector<int> coloring(g.vertex_count(), -1);
    int offset = 0;
    Rng rng(seed);
    for (std::size_t pi = 0; pi < partition.parts.size(); ++pi) {
        const Hypergraph& part = partition.parts[pi];
        std::vector<int> local;
        if (part.edge_count() == 0) {
            local.assign(part.vertex_count(), 0);
        } else if (part.vertex_count() <= exact_cutoff) {
            auto exact = chromatic_number_exact(part, std::max(1, rankk_color_count(part)));
            if (exact.exceeds_limit)
                throw std::logic_error("exact part coloring exceeded the resampling bound");
            local = exact.coloring;
        } else {
            local = rankk_color(part, rng.split(pi).next()).coloring;
        }
        int used = 1 + *std::max_element(local.begin(), local.end());
        const auto& verts = partition.part_vertices[pi];
        for (std::size_t i = 0; i < verts.size(); ++i) coloring[verts[i]] = offset + local[i];
        offset += used;
    }
    return {coloring, offset};
}

}  // namespace detail

struct PipelineColoring {
    std::vector<int> coloring;
    int colors = 0;
    FullPartitionResult partition;
    double reference_scale = 0;  // (Delta / log f)^{1/(k-1)} style yardstick
    int case_used = 1;                          // cortri
    std::vector<std::vector<int>> heavy_pairs;  // cortri: the replaced pairs K
};

// k-uniform colorer: partition away shared-l-set patterns, then color the
// (now linear) parts independently.
inline PipelineColoring color_corlin(const Hypergraph& g, double f, std::uint64_t seed,
                                     const FullPartitionOptions& opt = {}) {
    const int k = g.rank();
    if (k < 3) throw std::invalid_argument("color_corlin: needs rank >= 3");
    for (const auto& e : g.edges())
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("color_corlin: input must be k-uniform");
    if (!(f > 1.0)) throw std::invalid_argument("color_corlin: f must exceed 1");
    const double delta = std::max(1, g.max_degree(k));
    for (int l = 2; l < k; ++l) {
        double bound = std::pow(delta, static_cast<double>(k - l) / (k - 1)) / f;
        int observed = g.max_jl_degree(k, l);
        if (static_cast<double>(observed) > bound) {
            std::ostringstream ss;
            ss << "color_corlin: Delta_{" << k << "," << l << "} = " << observed
               << " exceeds Delta^((k-l)/(k-1))/f = " << bound;
            throw std::invalid_argument(ss.str());
        }
    }

    // H_l: two k-edges sharing exactly l vertices.
    std::vector<Pattern> patterns;
    for (int l = 2; l < k; ++l) {
        std::vector<int> e1(k), e2(k);
        for (int i = 0; i < k; ++i) e1[i] = i;
        for (int i = 0; i < k; ++i) e2[i] = k - l + i;
        patterns.emplace_back(Hypergraph(2 * k - l, k, {e1, e2}), "H" + std::to_string(l));
    }

    PipelineColoring out;
    out.partition = partition_full(g, patterns, std::pow(f, 1.0 / (2 * k - 2)), {}, seed, opt);
    Rng rng(seed);
    auto [coloring, total] =
        detail::color_parts(g, out.partition.partition, rng.split(0xC0102ULL).next());
    out.coloring = std::move(coloring);
    out.colors = total;
    out.reference_scale = std::pow(delta / std::log(f), 1.0 / (k - 1));
    auto ok = check_proper(g, out.coloring);
    if (!ok.proper) throw std::logic_error("color_corlin: output coloring is improper");
    return out;
}

// The heavy-pair reduction: pairs lying in at least sqrt(delta) 3-edges are
// replaced by a 2-edge, and every 3-edge through them is dropped. A proper
// coloring of the reduced hypergraph is proper for the original.
inline std::pair<std::vector<std::vector<int>>, Hypergraph> cortri_reduction(const Hypergraph& g,
                                                                             double delta_param) {
    if (g.rank() != 3) throw std::invalid_argument("cortri_reduction: rank must be 3");
    const double heavy = std::sqrt(std::max(delta_param, 0.0));
    std::set<std::vector<int>> heavy_pairs;
    std::set<std::vector<int>> pairs_seen;
    std::vector<int> scratch;
    for (const auto& e : g.edges())
        if (e.size() == 3)
            Hypergraph::for_each_subset(e, 2, scratch, [&](const std::vector<int>& a) {
                if (!pairs_seen.insert(a).second) return;
                if (static_cast<double>(g.degree(a, 3)) >= heavy) heavy_pairs.insert(a);
            });
    std::vector<std::vector<int>> edges;
    for (const auto& e : g.edges()) {
        if (e.size() != 3) {
            edges.push_back(e);
            continue;
        }
        bool drop = false;
        Hypergraph::for_each_subset(e, 2, scratch, [&](const std::vector<int>& a) {
            if (heavy_pairs.count(a)) drop = true;
        });
        if (!drop) edges.push_back(e);
    }
    for (const auto& a : heavy_pairs) edges.push_back(a);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return {std::vector<std::vector<int>>(heavy_pairs.begin(), heavy_pairs.end()),
            Hypergraph(g.vertex_count(), 3, std::move(edges))};
}

// Rank-3 colorer driven by the triangle census. Case 2 re-enters case 1 with
// the inflated degree cap Delta_2^2 / log f.
inline PipelineColoring color_cortri(const Hypergraph& g, double f, std::uint64_t seed,
                                     const FullPartitionOptions& opt = {}) {
    if (g.rank() != 3) throw std::invalid_argument("color_cortri: rank must be 3");
    if (!(f > 1.0)) throw std::invalid_argument("color_cortri: f must exceed 1");
    const double delta = std::max(1, g.max_degree(3));
    const double delta2 = g.max_degree(2);
    auto triangles = triangle_family();
    for (const auto& h : triangles) {
        double base = std::max(std::sqrt(delta), delta2);
        double bound = std::pow(base, h.vertex_count() - 1) / f;
        long long observed = delta_H(g, h).value;
        if (static_cast<double>(observed) > bound) {
            std::ostringstream ss;
            ss << "color_cortri: Delta_" << h.name << "(G) = " << observed
               << " exceeds max(sqrt(Delta),Delta_2)^(v(H)-1)/f = " << bound;
            throw std::invalid_argument(ss.str());
        }
    }

    PipelineColoring out;
    double delta_param = delta;
    out.case_used = 1;
    if (delta2 > std::sqrt(delta * std::log(f))) {
        out.case_used = 2;
        delta_param = delta2 * delta2 / std::log(f);
    }

    const double g_fun = f / std::pow(std::log(f), 2.5);
    if (!(g_fun > 1.0))
        throw std::invalid_argument("color_cortri: f too small for the g = f/log^(5/2) f schedule");
    const double g_prime = std::pow(g_fun, 1.0 / 6.0);
    std::map<int, double> omega{{2, std::sqrt(std::log(g_fun))}, {3, 1.0}};
    if (omega[2] <= 0.0) omega[2] = 1.0;

    auto [heavy_pairs, reduced] = cortri_reduction(g, delta_param);
    out.heavy_pairs = heavy_pairs;
    {
        std::map<int, int> per_vertex;
        for (const auto& a : heavy_pairs)
            for (int v : a) ++per_vertex[v];
        long long cap = ceil_int(2.0 * std::sqrt(delta_param));
        for (const auto& [v, cnt] : per_vertex)
            if (cnt > cap)
                throw std::logic_error("color_cortri: vertex " + std::to_string(v) +
                                       " lies in more heavy pairs than 2 sqrt(Delta)");
    }

    FullPartitionOptions popt = opt;
    popt.delta_override = 2.0 * delta_param;
    out.partition = partition_full(reduced, triangles, g_prime, omega, seed, popt);
    Rng rng(seed);
    auto [coloring, total] =
        detail::color_parts(reduced, out.partition.partition, rng.split(0xC0271ULL).next());
    out.coloring = std::move(coloring);
    out.colors = total;
    out.reference_scale = std::sqrt(delta / std::log(f));
    if (!check_proper(reduced, out.coloring).proper)
        throw std::logic_error("color_cortri: coloring improper on the reduced hypergraph");
    if (!check_proper(g, out.coloring).proper)
        throw std::logic_error("color_cortri: coloring improper on the input");
    return out;
}

}  // namespace hyperchroma
