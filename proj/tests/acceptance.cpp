// Acceptance suite: one criterion per function, one pass/fail line each,
// every tolerance pinned in code. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperchroma/hyperchroma.hpp"

using namespace hyperchroma;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Hypergraph random_uniform(int n, int m, int k, Rng& rng) {
    std::set<std::vector<int>> edges;
    int guard = 0;
    while (static_cast<int>(edges.size()) < m && guard++ < 60 * m + 100) {
        std::set<int> s;
        while (static_cast<int>(s.size()) < k) s.insert(rng.below_int(n));
        edges.insert(std::vector<int>(s.begin(), s.end()));
    }
    return Hypergraph(n, k, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

Hypergraph random_rank(int n, int m, int k, Rng& rng) {
    std::set<std::vector<int>> edges;
    int guard = 0;
    while (static_cast<int>(edges.size()) < m && guard++ < 60 * m + 100) {
        int size = 2 + rng.below_int(k - 1);
        std::set<int> s;
        while (static_cast<int>(s.size()) < size) s.insert(rng.below_int(n));
        edges.insert(std::vector<int>(s.begin(), s.end()));
    }
    return Hypergraph(n, k, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

// 1. extract_transversal hits every surviving edge on 1000 seeded instances.
Outcome transversal_correctness() {
    Rng rng(0xACC1);
    int runs = 0;
    while (runs < 1000) {
        int s = 2 + rng.below_int(2);
        int n = 5 + rng.below_int(21);  // v(F) <= 25
        int m = 1 + rng.below_int(35);
        auto f = random_uniform(n, m, s, rng);
        if (f.edge_count() == 0) continue;
        double alpha = 0.15 + 0.7 * rng.uniform01();
        double pmax = std::pow(1.0 / f.edge_count(), 1.0 / ((1.0 - alpha) * s));
        double p = pmax * (0.05 + 0.9 * rng.uniform01());
        if (!(p > 0.0 && p < 1.0)) continue;
        std::vector<char> survivors(f.vertex_count(), 0);
        double q = rng.uniform01();
        for (auto& v : survivors) v = rng.bernoulli(q) ? 1 : 0;
        auto ext = extract_transversal(f, survivors, p, alpha, 8.0);
        std::set<int> k_set(ext.cert.hitting_set.begin(), ext.cert.hitting_set.end());
        for (int ei : ext.surviving_edges) {
            bool hit = false;
            for (int v : f.edge(ei))
                if (k_set.count(v)) hit = true;
            if (!hit) return {false, "missed edge on run " + std::to_string(runs)};
        }
        ++runs;
    }
    return {true, "1000/1000 surviving edges hit"};
}

// 2. The heavy-level counting inequality holds on 1000 random instances.
Outcome heavybound_theorem() {
    Rng rng(0xACC2);
    for (int run = 0; run < 1000; ++run) {
        int s = 2 + rng.below_int(2);
        auto f = random_uniform(6 + rng.below_int(12), 3 + rng.below_int(38), s, rng);
        double p = 0.05 + 0.9 * rng.uniform01();
        double alpha = 0.05 + 0.9 * rng.uniform01();
        auto rep = check_heavybound(f, p, alpha);
        if (!rep.pass) return {false, "run " + std::to_string(run) + ": " + rep.witness};
    }
    return {true, "1000/1000 instances satisfy the bound"};
}

// 3. |M| >= |F|^{1/k} / (k - |A|) on 500 random uniform instances.
Outcome matching_guarantee() {
    Rng rng(0xACC3);
    int runs = 0;
    while (runs < 500) {
        int k = 2 + rng.below_int(3);
        int n = 6 + rng.below_int(25);
        int m = 1 + rng.below_int(200);
        auto f = random_uniform(n, m, k, rng);
        if (f.edge_count() == 0) continue;
        auto res = greedy_link_matching(f, k);
        __int128 lhs = 1;
        const long long base =
            static_cast<long long>(res.matching.size()) * (k - static_cast<int>(res.anchor.size()));
        for (int i = 0; i < k; ++i) lhs *= base;
        if (lhs < static_cast<__int128>(f.edge_count()))
            return {false, "guarantee violated on run " + std::to_string(runs)};
        std::set<int> used;
        for (const auto& e : res.matching)
            for (int v : e)
                if (!used.insert(v).second)
                    return {false, "matching not disjoint on run " + std::to_string(runs)};
        ++runs;
    }
    return {true, "500/500 instances meet the matching bound"};
}

// 4. Exact-oracle anchors on the fano plane and K_4^(3).
Outcome exact_anchors() {
    auto fano = fano_plane();
    if (chromatic_number_exact(fano).chi != 3) return {false, "chi(fano) != 3"};
    if (transversal_number_exact(fano).tau != 3) return {false, "tau(fano) != 3"};
    if (max_matching_exact(fano) != 1) return {false, "matching(fano) != 1"};
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int l = j + 1; l < 4; ++l) edges.push_back({i, j, l});
    if (chromatic_number_exact(Hypergraph(4, 3, edges)).chi != 2)
        return {false, "chi(K4^(3)) != 2"};
    return {true, "chi(fano)=3 tau(fano)=3 matching(fano)=1 chi(K4^(3))=2"};
}

// 5. The resampling colorer is proper with the formula color count.
Outcome lll_colorer() {
    auto fano = rankk_color(fano_plane(), 1);
    if (fano.colors != 9) return {false, "fano color count != 9"};
    if (!check_proper(fano_plane(), fano.coloring).proper) return {false, "fano improper"};
    Rng rng(0xACC5);
    int runs = 0;
    while (runs < 200) {
        int k = 2 + rng.below_int(3);
        int n = 8 + rng.below_int(53);  // n <= 60
        int m = 2 + rng.below_int(3 * n);
        auto g = random_rank(n, m, k, rng);
        if (g.edge_count() == 0) continue;
        auto res = rankk_color(g, rng.next(), 1'000'000);
        if (res.colors != rankk_color_count(g)) return {false, "color count drifted"};
        if (!check_proper(g, res.coloring).proper)
            return {false, "improper coloring on run " + std::to_string(runs)};
        ++runs;
    }
    return {true, "200/200 random instances colored properly, fano r = 9"};
}

// 6. Partition certificates recomputed by oracles on >= 50 runs.
Outcome partition_certificates() {
    auto k4m = triangle_family()[2];
    int runs = 0;
    auto verify = [&](const Hypergraph& g, const std::vector<Pattern>& pats,
                      const PartitionResult& res,
                      const std::vector<long long>& bound) -> bool {
        std::vector<int> seen(g.vertex_count(), 0);
        for (const auto& verts : res.part_vertices)
            for (int v : verts) ++seen[v];
        for (int v = 0; v < g.vertex_count(); ++v)
            if (seen[v] != 1) return false;
        for (const auto& verts : res.part_vertices) {
            auto part = induced(g, verts).graph;
            if (!check_pattern_free(part, pats).pattern_free) return false;
            for (int j = 2; j <= g.rank(); ++j)
                if (bound[j] >= 0 && part.max_degree(j) > bound[j]) return false;
        }
        return true;
    };
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto base = generate_uniform_random(44 + (seed % 3) * 4, 30 + (seed % 5) * 5, 3, 3000 + seed);
        auto g = generate_planted(base, k4m, 3 + seed % 3, 4000 + seed);
        auto res = eps_partition(g, {k4m}, 0.15 + 0.02 * (seed % 4),
                                 SparsityProfile::fit(g).omega, seed);
        if (!verify(g, {k4m}, res, res.certificates[0].degree_bound))
            return {false, "eps run " + std::to_string(seed)};
        ++runs;
    }
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto base = generate_uniform_random(48, 26 + (seed % 4) * 4, 3, 5000 + seed);
        auto g = generate_planted(base, k4m, 3, 6000 + seed);
        auto res = partition_full(g, {k4m}, 1.5, SparsityProfile::fit(g).omega, seed);
        if (!verify(g, {k4m}, res.partition, res.final_degree_bound))
            return {false, "full run " + std::to_string(seed)};
        ++runs;
    }
    return {true, std::to_string(runs) + "/52 partition runs certified by oracles"};
}

// 7. The decay recurrence law over the full parameter grid.
Outcome recurrence_law() {
    int cells = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int m : {2, 4, 8, 12})
                for (double g : {1e-3, 1.0, 1e3})
                    for (double d0 : {1e6, 1e9}) {
                        auto rep = check_seqclaim(a, b, m, g, d0, 60);
                        ++cells;
                        if (!rep.pass) {
                            std::ostringstream ss;
                            ss << "a=" << a << " b=" << b << " m=" << m << " g=" << g
                               << " d0=" << d0 << " fails at t=" << rep.first_failure;
                            return {false, ss.str()};
                        }
                    }
    return {true, std::to_string(cells) + "/384 grid cells satisfy both decay bounds"};
}

// 8. Fano independence law and per-seed determinism of the greedy process.
Outcome process_fano_law() {
    auto fano = fano_plane();
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto t = random_greedy_is(fano, seed);
        if (t.independent_set.size() != 4)
            return {false, "|I| != 4 at seed " + std::to_string(seed)};
    }
    auto a = random_greedy_is(fano, 42), b = random_greedy_is(fano, 42);
    if (a.independent_set != b.independent_set || a.eligible_counts != b.eligible_counts)
        return {false, "same seed produced different traces"};
    return {true, "100/100 seeds give |I| = 4; traces reproduce"};
}

// 9. Stability of |I| / (N sqrt(log N / D)) across seeds at each size.
Outcome process_scaling() {
    std::ostringstream detail;
    for (int n : {20, 30, 40, 50}) {
        auto g = triangle_hypergraph(n);
        const double verts = g.vertex_count();
        const double d_reg = n - 2;
        std::vector<double> ratios;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto t = random_greedy_is(g, 7700 + seed);
            ratios.push_back(t.independent_set.size() /
                             (verts * std::sqrt(std::log(verts) / d_reg)));
        }
        double mean = 0, var = 0;
        for (double r : ratios) mean += r;
        mean /= ratios.size();
        for (double r : ratios) var += (r - mean) * (r - mean);
        var /= (ratios.size() - 1);
        double cv = std::sqrt(var) / mean;
        detail << "n=" << n << " cv=" << cv << " ";
        if (cv >= 0.15) return {false, detail.str()};
    }
    return {true, detail.str()};
}

// 10. Mean-level concentration and the exhaustive perturbation bound.
Outcome mean_concentration() {
    Hypergraph g0(5, 3, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    auto steiner = generate_partial_steiner(12, 3, 17);
    struct Run {
        const Hypergraph* g;
        bool halving;
        std::uint64_t seed;
    };
    auto fano = fano_plane();
    std::vector<Run> runs{{&g0, false, 1}, {&g0, true, 2}, {&fano, false, 3}, {&steiner, true, 4}};
    for (const auto& r : runs) {
        auto rep = mc_event_frequencies(*r.g, {}, r.halving, 0.2, {}, 10000, r.seed);
        if (!rep.pass) {
            for (const auto& row : rep.means)
                if (!row.within)
                    return {false, row.stat + " off by more than 3 standard errors"};
        }
    }
    for (int l = 1; l <= 2; ++l) {
        auto mc = exhaustive_mcdiarmid_check(g0, 3, l);
        if (!mc.pass)
            return {false, "perturbation exceeded Delta_{j,|A|+1} at |A|=" + std::to_string(l)};
    }
    return {true, "4 runs x 10^4 trials within 3 SE; perturbation bound exhaustively verified"};
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {1, "transversal-correctness", 10.0, transversal_correctness},
        {2, "heavybound-theorem", 30.0, heavybound_theorem},
        {3, "matching-guarantee", 10.0, matching_guarantee},
        {4, "exact-oracle-anchors", 5.0, exact_anchors},
        {5, "lll-colorer", 30.0, lll_colorer},
        {6, "partition-certificates", 60.0, partition_certificates},
        {7, "recurrence-law", 5.0, recurrence_law},
        {8, "process-fano-law", 5.0, process_fano_law},
        {9, "process-scaling", 60.0, process_scaling},
        {10, "mean-concentration", 60.0, mean_concentration},
    };
    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = elapsed < c.budget_seconds;
        bool pass = out.pass && in_budget;
        std::printf("[%s] %2d. %-24s %6.2fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    elapsed, out.detail.c_str(),
                    in_budget ? "" : " (over time budget)");
        if (!pass) ++failures;
    }
    return failures;
}
