#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchroma/census.hpp"
#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/oracles.hpp"
#include "hyperchroma/pipeline.hpp"
#include "hyperchroma/process.hpp"
#include "hyperchroma/rng.hpp"
#include "hyperchroma/seqclaim.hpp"

namespace hyperchroma {

enum class Verdict { pass, trivial_pass, fail, out_of_hypothesis };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::trivial_pass: return "trivial-pass";
        case Verdict::fail: return "fail";
        case Verdict::out_of_hypothesis: return "out-of-hypothesis";
    }
    return "?";
}

// One CSV row: name, parameters, empirical value, analytic bound, verdict.
struct CheckRow {
    std::string name;
    std::string parameters;
    double empirical = 0;
    double bound = 0;
    Verdict verdict = Verdict::pass;
};

struct CheckReport {
    std::vector<CheckRow> rows;
    bool failed() const {
        for (const auto& r : rows)
            if (r.verdict == Verdict::fail) return true;
        return false;
    }
    std::string to_csv() const {
        std::ostringstream out;
        out << "name,parameters,empirical,bound,verdict\n";
        for (const auto& r : rows)
            out << r.name << ',' << r.parameters << ',' << r.empirical << ',' << r.bound << ','
                << verdict_name(r.verdict) << '\n';
        return out.str();
    }
};

namespace detail {

inline Verdict tail_verdict(bool in_hypothesis, double empirical, double bound) {
    if (!in_hypothesis) return Verdict::out_of_hypothesis;
    if (bound >= 1.0) return Verdict::trivial_pass;
    return empirical <= bound ? Verdict::pass : Verdict::fail;
}

}  // namespace detail

// Monte-Carlo check of the transversal tail: survivors are sampled i.i.d.
// with probability p, tau(F') comes from the exact oracle, and the observed
// exceedance frequency is compared against s^2 |V(F)|^{s-1} p^c. Per-level
// exceedances of |Z_k| > (c/alpha)^k are reported against k |V(F)|^{k-1} p^c.
// The extracted K is cross-checked against every surviving edge whenever the
// size hypothesis holds.
struct McTailReport {
    CheckReport report;
    bool in_hypothesis = true;
    long exceed_tau = 0;
    std::vector<long> exceed_level;
    long trials = 0;
};

inline McTailReport mc_transversal_tail(const Hypergraph& f, double p, double alpha, double c,
                                        long trials, std::uint64_t seed, int jobs = 1) {
    if (trials < 1) throw std::invalid_argument("mc_transversal_tail: trials must be positive");
    McTailReport out;
    out.trials = trials;
    const int s = f.edge_count() > 0 ? static_cast<int>(f.edges().front().size()) : f.rank();
    const double support = static_cast<double>(f.support().size());
    const double tau_s = f.edge_count() * std::pow(std::max(p, 0.0), (1.0 - alpha) * s);
    const bool hyp_size = tau_s < 1.0;
    const bool hyp_c = c >= std::exp(1.0) * std::pow(2.0, s) * s * alpha;
    out.in_hypothesis = hyp_size && hyp_c;

    std::optional<HeavyHierarchy> levels;
    if (p > 0.0 && p < 1.0 && alpha > 0.0 && alpha < 1.0)
        levels = compute_heavy_levels(f, p, alpha, c);

    const double tau_cap = static_cast<double>(s) * s * std::pow(c / alpha, s + 1);
    struct TrialOut {
        int tau = 0;
        std::vector<int> z_sizes;
        bool k_hits = true;
    };
    auto one = [&](long, Rng& rng) {
        TrialOut t;
        std::vector<char> alive(f.vertex_count(), 0);
        for (int v = 0; v < f.vertex_count(); ++v) alive[v] = rng.bernoulli(p) ? 1 : 0;
        std::vector<std::vector<int>> surviving;
        for (const auto& e : f.edges()) {
            bool in = true;
            for (int v : e)
                if (!alive[v]) {
                    in = false;
                    break;
                }
            if (in) surviving.push_back(e);
        }
        std::set<int> k_set;
        if (levels) {
            t.z_sizes.assign(s + 1, 0);
            for (int k = 1; k <= s; ++k)
                for (const auto& a : levels->heavy_sets[k]) {
                    bool in = true;
                    for (int v : a)
                        if (!alive[v]) {
                            in = false;
                            break;
                        }
                    if (in) {
                        ++t.z_sizes[k];
                        k_set.insert(a.begin(), a.end());
                    }
                }
        }
        if (hyp_size)
            for (const auto& e : surviving) {
                bool hit = false;
                for (int v : e)
                    if (k_set.count(v)) {
                        hit = true;
                        break;
                    }
                if (!hit) t.k_hits = false;
            }
        Hypergraph fprime(f.vertex_count(), f.rank(), std::move(surviving));
        t.tau = transversal_number_exact(fprime).tau;
        return t;
    };
    auto results = run_trials<TrialOut>(trials, seed, jobs, one);

    out.exceed_level.assign(s + 1, 0);
    bool all_hit = true;
    for (const auto& t : results) {
        if (static_cast<double>(t.tau) > tau_cap) ++out.exceed_tau;
        for (std::size_t k = 0; k < t.z_sizes.size(); ++k)
            if (static_cast<double>(t.z_sizes[k]) > std::pow(c / alpha, static_cast<double>(k)))
                ++out.exceed_level[k];
        if (!t.k_hits) all_hit = false;
    }
    if (hyp_size && !all_hit)
        throw std::logic_error("mc_transversal_tail: extracted K missed a surviving edge");

    std::ostringstream params;
    params << "s=" << s << ";p=" << p << ";alpha=" << alpha << ";c=" << c << ";trials=" << trials
           << ";seed=" << seed;
    const double tail_bound = static_cast<double>(s) * s * std::pow(support, s - 1) * std::pow(p, c);
    double freq = static_cast<double>(out.exceed_tau) / trials;
    out.report.rows.push_back({"mc_transversal_tail", params.str(), freq, tail_bound,
                               detail::tail_verdict(out.in_hypothesis, freq, tail_bound)});
    if (levels)
        for (int k = 1; k <= s; ++k) {
            double lvl_bound = k * std::pow(support, k - 1) * std::pow(p, c);
            double lvl_freq = static_cast<double>(out.exceed_level[k]) / trials;
            out.report.rows.push_back({"mc_transversal_tail.level" + std::to_string(k),
                                       params.str(), lvl_freq, lvl_bound,
                                       detail::tail_verdict(out.in_hypothesis, lvl_freq, lvl_bound)});
        }
    return out;
}

// Deterministic check of the counting bound on heavy levels: for every level
// k and every proper subset B of a heavy set,
// tau_k |{A in H_k : B subset A}| <= C(s,k) d(B) < 2^s tau_b. A failure is an
// implementation bug, never sampling noise.
struct HeavyBoundReport {
    CheckReport report;
    bool pass = true;
    std::string witness;
};

inline HeavyBoundReport check_heavybound(const Hypergraph& f, double p, double alpha) {
    HeavyBoundReport out;
    HeavyHierarchy h = compute_heavy_levels(f, p, alpha, 1.0);
    const int s = h.s;
    long checked = 0;
    double worst_ratio = 0.0;
    for (int k = 1; k <= s; ++k) {
        std::map<std::vector<int>, int> containment;  // B -> |{A in H_k : B subset A}|
        std::vector<int> scratch;
        for (const auto& a : h.heavy_sets[k])
            for (int b = 1; b < k; ++b)
                Hypergraph::for_each_subset(a, b, scratch,
                                            [&](const std::vector<int>& bs) { ++containment[bs]; });
        for (const auto& [bset, count] : containment) {
            const int b = static_cast<int>(bset.size());
            const double d_b = f.degree(bset, s);
            const double lhs = h.thresholds[k] * count;
            const double mid = detail::binom(s, k) * d_b;
            const double rhs = std::pow(2.0, s) * h.thresholds[b];
            ++checked;
            worst_ratio = std::max(worst_ratio, mid > 0 ? lhs / mid : 0.0);
            if (lhs > mid || !(mid < rhs)) {
                out.pass = false;
                std::ostringstream w;
                w << "level k=" << k << " B={";
                for (int v : bset) w << v << ' ';
                w << "}: " << lhs << " <= " << mid << " < " << rhs;
                out.witness = w.str();
            }
        }
    }
    std::ostringstream params;
    params << "p=" << p << ";alpha=" << alpha << ";subsets=" << checked;
    out.report.rows.push_back({"check_heavybound", params.str(), worst_ratio, 1.0,
                               out.pass ? Verdict::pass : Verdict::fail});
    return out;
}

// Brute-force count of connected edge-subsets spanning exactly h vertices
// containing A, against 2^{(h+1)T} omega^T Delta^{(h-|A|)/(k-1)}, T = 2^h.
struct CtLemmaReport {
    long long count = 0;
    double bound = 0;
    bool pass = true;
    CheckReport report;
};

inline CtLemmaReport check_ctlemma(const Hypergraph& g, const std::vector<int>& a, int h,
                                   double omega) {
    if (g.vertex_count() > 15 || h > 6)
        throw std::invalid_argument("check_ctlemma: instance too large (need v(G) <= 15, h <= 6)");
    if (h < static_cast<int>(a.size())) throw std::invalid_argument("check_ctlemma: h < |A|");
    {
        SparsityProfile profile;
        profile.delta = std::max(1, g.max_degree(g.rank()));
        for (int j = 2; j <= g.rank(); ++j) profile.omega[j] = 2.0 * omega;
        auto sp = is_sparse(g, profile);
        if (!sp.sparse)
            throw std::invalid_argument("check_ctlemma: input is not (Delta, 2w, ..., 2w)-sparse");
    }
    const int k = g.rank();
    const double delta = std::max(1, g.max_degree(k));

    CtLemmaReport out;
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    std::vector<int> scratch;
    std::set<std::vector<int>> a_sorted_set;
    std::vector<int> a_sorted(a);
    std::sort(a_sorted.begin(), a_sorted.end());

    Hypergraph::for_each_subset(all, h, scratch, [&](const std::vector<int>& span) {
        if (!Hypergraph::contains_all(span, a_sorted)) return;
        std::vector<int> inner_edges;
        for (int ei = 0; ei < g.edge_count(); ++ei)
            if (Hypergraph::contains_all(span, g.edge(ei))) inner_edges.push_back(ei);
        if (inner_edges.size() > 20)
            throw std::invalid_argument("check_ctlemma: too many edges in a span");
        const std::size_t m = inner_edges.size();
        for (std::size_t mask = 1; mask < (1u << m); ++mask) {
            std::set<int> covered;
            std::vector<std::vector<int>> chosen;
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (1u << i)) {
                    chosen.push_back(g.edge(inner_edges[i]));
                    covered.insert(chosen.back().begin(), chosen.back().end());
                }
            if (static_cast<int>(covered.size()) != h) continue;
            Hypergraph sub(g.vertex_count(), k, chosen);
            auto ind = induced(sub, std::vector<int>(covered.begin(), covered.end()));
            if (is_connected(ind.graph)) ++out.count;
        }
    });

    const double bigT = std::pow(2.0, h);
    out.bound = std::pow(2.0, (h + 1) * bigT) * std::pow(omega, bigT) *
                std::pow(delta, static_cast<double>(h - static_cast<int>(a.size())) / (k - 1));
    out.pass = static_cast<double>(out.count) <= out.bound;
    std::ostringstream params;
    params << "h=" << h << ";|A|=" << a.size() << ";omega=" << omega;
    out.report.rows.push_back({"check_ctlemma", params.str(), static_cast<double>(out.count),
                               out.bound, out.pass ? Verdict::pass : Verdict::fail});
    return out;
}

inline CheckReport seqclaim_csv(double a, double b, double m, double g, double d0, int steps) {
    auto rep = check_seqclaim(a, b, m, g, d0, steps);
    CheckReport out;
    std::ostringstream params;
    params << "a=" << a << ";b=" << b << ";m=" << m << ";g=" << g << ";d0=" << d0
           << ";steps=" << steps;
    if (rep.first_failure >= 0) params << ";first_failure=" << rep.first_failure;
    int checked = 0;
    for (const auto& s : rep.steps) checked += s.checked ? 1 : 0;
    // empirical: how many steps sat above the validity threshold D (the bound
    // column); a run with no checkable step is reported, not claimed
    Verdict v = checked == 0 ? Verdict::out_of_hypothesis
                             : (rep.pass ? Verdict::pass : Verdict::fail);
    out.rows.push_back({"check_seqclaim", params.str(), static_cast<double>(checked),
                        static_cast<double>(rep.threshold), v});
    return out;
}

// Mean-level agreement for the partition/halving statistics. In coloring mode
// the monochromatic j-degree Z_{u,j} is compared with d_j(u) r^{1-j}; in
// halving mode the conditional degree d'_j(A) given A monochromatic is
// compared with d_j(A) / 2^{j-|A|}. Each mean must land within three standard
// errors of its analytic value.
struct MeanRow {
    std::string stat;
    double empirical = 0, analytic = 0, stderr_ = 0;
    long samples = 0;
    bool within = true;
};

struct EventFrequencyReport {
    std::vector<MeanRow> means;
    std::map<std::string, double> event_frequency;
    bool pass = true;
    CheckReport report;
};

inline EventFrequencyReport mc_event_frequencies(const Hypergraph& g,
                                                 std::vector<Pattern> patterns, bool halving_mode,
                                                 double epsilon, const std::map<int, double>& omega,
                                                 long trials, std::uint64_t seed, int jobs = 1) {
    const int k = g.rank();
    const int n = g.vertex_count();
    if (trials < 2) throw std::invalid_argument("mc_event_frequencies: need at least 2 trials");
    patterns = resolve_pattern_roots(g, patterns);
    const double delta = std::max(1, g.max_degree(k));
    const int r = halving_mode
                      ? 2
                      : std::max<long long>(
                            2, std::llround(std::pow(delta, 1.0 / (k - 1) - epsilon)));

    // Statistic descriptors; each also carries its bad-event threshold so the
    // per-class event frequencies can be reported alongside the means.
    struct ZStat {
        int u, j;
        std::vector<std::vector<int>> edges;
        double analytic;
        double event_threshold;
    };
    struct DStat {
        std::vector<int> a;
        int j;
        std::vector<std::vector<int>> super;
        double analytic;
        double event_threshold;
    };
    std::vector<ZStat> zstats;
    std::vector<DStat> dstats;
    if (!halving_mode) {
        for (int u = 0; u < n; ++u)
            for (int j = 2; j <= k; ++j) {
                ZStat zs;
                zs.u = u;
                zs.j = j;
                for (int ei : g.incident_edges(u))
                    if (static_cast<int>(g.edge(ei).size()) == j) zs.edges.push_back(g.edge(ei));
                if (zs.edges.empty()) continue;
                zs.analytic = zs.edges.size() * std::pow(static_cast<double>(r), 1.0 - j);
                auto it = omega.find(j);
                zs.event_threshold = 2.0 * std::pow(delta, (j - 1) * epsilon) *
                                     (it == omega.end() ? 1.0 : it->second);
                zstats.push_back(std::move(zs));
            }
    } else {
        for (int j = 2; j <= k; ++j)
            for (int l = 1; l < j; ++l) {
                double slack =
                    std::pow(delta, static_cast<double>(j - l) / (k - 1) - 1.0 / (2 * k));
                double cap = g.max_jl_degree(j, l);
                std::set<std::vector<int>> sets;
                std::vector<int> scratch;
                for (const auto& e : g.edges())
                    if (static_cast<int>(e.size()) == j)
                        Hypergraph::for_each_subset(
                            e, l, scratch, [&](const std::vector<int>& s) { sets.insert(s); });
                for (const auto& a : sets) {
                    DStat ds;
                    ds.a = a;
                    ds.j = j;
                    for (int ei : g.incident_edges(a.front())) {
                        const auto& e = g.edge(ei);
                        if (static_cast<int>(e.size()) == j && Hypergraph::contains_all(e, a))
                            ds.super.push_back(e);
                    }
                    ds.analytic = ds.super.size() / std::pow(2.0, j - l);
                    ds.event_threshold = cap / std::pow(2.0, j - l) + slack;
                    dstats.push_back(std::move(ds));
                }
            }
    }
    std::vector<std::vector<Hypergraph>> tH;
    for (const auto& p : patterns) tH.push_back(copies_at_all(g, p));

    struct TrialOut {
        std::vector<int> z;       // per zstat
        std::vector<int> d;       // per dstat, -1 when A not monochromatic
        std::vector<long> tprime; // per pattern, summed over u
    };
    auto one = [&](long, Rng& rng) {
        TrialOut t;
        std::vector<int> color(n);
        for (int v = 0; v < n; ++v) color[v] = rng.below_int(r);
        t.z.reserve(zstats.size());
        for (const auto& zs : zstats) {
            int z = 0;
            for (const auto& e : zs.edges) {
                bool mono = true;
                for (int v : e)
                    if (color[v] != color[zs.u]) {
                        mono = false;
                        break;
                    }
                if (mono) ++z;
            }
            t.z.push_back(z);
        }
        t.d.reserve(dstats.size());
        for (const auto& ds : dstats) {
            bool mono = true;
            for (int v : ds.a)
                if (color[v] != color[ds.a.front()]) {
                    mono = false;
                    break;
                }
            if (!mono) {
                t.d.push_back(-1);
                continue;
            }
            int c = color[ds.a.front()];
            int count = 0;
            for (const auto& e : ds.super) {
                bool inside = true;
                for (int v : e)
                    if (color[v] != c) {
                        inside = false;
                        break;
                    }
                if (inside) ++count;
            }
            t.d.push_back(count);
        }
        t.tprime.assign(patterns.size(), 0);
        for (std::size_t h = 0; h < patterns.size(); ++h)
            for (int u = 0; u < n; ++u)
                for (const auto& e : tH[h][u].edges()) {
                    bool same = true;
                    for (int v : e)
                        if (color[v] != color[u]) {
                            same = false;
                            break;
                        }
                    if (same) ++t.tprime[h];
                }
        return t;
    };
    auto results = run_trials<TrialOut>(trials, seed, jobs, one);

    EventFrequencyReport out;
    auto push_mean = [&](const std::string& name, double analytic, const std::vector<double>& xs) {
        MeanRow row;
        row.stat = name;
        row.analytic = analytic;
        row.samples = static_cast<long>(xs.size());
        if (xs.size() < 2) return;  // conditioning left too few samples
        double sum = 0, sumsq = 0;
        for (double x : xs) sum += x;
        row.empirical = sum / xs.size();
        for (double x : xs) sumsq += (x - row.empirical) * (x - row.empirical);
        double sd = std::sqrt(sumsq / (xs.size() - 1));
        row.stderr_ = sd / std::sqrt(static_cast<double>(xs.size()));
        double tol = 3.0 * row.stderr_;
        row.within = std::abs(row.empirical - row.analytic) <= std::max(tol, 1e-12);
        if (!row.within) out.pass = false;
        out.means.push_back(row);
        out.report.rows.push_back({"mean:" + name, "", row.empirical, row.analytic,
                                   row.within ? Verdict::pass : Verdict::fail});
    };

    for (std::size_t i = 0; i < zstats.size(); ++i) {
        std::vector<double> xs;
        xs.reserve(results.size());
        for (const auto& t : results) xs.push_back(t.z[i]);
        push_mean("Z[u=" + std::to_string(zstats[i].u) + ",j=" + std::to_string(zstats[i].j) + "]",
                  zstats[i].analytic, xs);
    }
    for (std::size_t i = 0; i < dstats.size(); ++i) {
        std::vector<double> xs;
        for (const auto& t : results)
            if (t.d[i] >= 0) xs.push_back(t.d[i]);
        std::string ids;
        for (int v : dstats[i].a) ids += (ids.empty() ? "" : " ") + std::to_string(v);
        push_mean("d'[A={" + ids + "},j=" + std::to_string(dstats[i].j) + "]",
                  dstats[i].analytic, xs);
    }
    for (std::size_t h = 0; h < patterns.size(); ++h) {
        double total = 0;
        for (const auto& t : results) total += static_cast<double>(t.tprime[h]);
        out.event_frequency["T'[" + patterns[h].name + "] mean"] = total / trials;
        // each copy-set member survives with probability r^{1-v(H)}
        double analytic = 0;
        for (int u = 0; u < n; ++u)
            analytic += tH[h][u].edge_count() *
                        std::pow(static_cast<double>(r), 1.0 - patterns[h].vertex_count());
        out.event_frequency["T'[" + patterns[h].name + "] analytic"] = analytic;
    }

    // Per-class frequencies of the bad events these statistics gate.
    std::map<std::string, long> fired, possible;
    for (std::size_t i = 0; i < zstats.size(); ++i) {
        std::string cls = "A[j=" + std::to_string(zstats[i].j) + "]";
        for (const auto& t : results) {
            ++possible[cls];
            if (static_cast<double>(t.z[i]) >= zstats[i].event_threshold) ++fired[cls];
        }
    }
    for (std::size_t i = 0; i < dstats.size(); ++i) {
        std::string cls = "C[j=" + std::to_string(dstats[i].j) +
                          ",l=" + std::to_string(dstats[i].a.size()) + "]";
        for (const auto& t : results) {
            ++possible[cls];
            if (t.d[i] >= 0 && static_cast<double>(t.d[i]) > dstats[i].event_threshold)
                ++fired[cls];
        }
    }
    for (const auto& [cls, total] : possible)
        out.event_frequency[cls] = total > 0 ? static_cast<double>(fired[cls]) / total : 0.0;
    return out;
}

// For every coloring of a small instance' vertex pair space, flipping one
// vertex outside A moves d'_j(A) by at most Delta_{j,|A|+1}.
struct McDiarmidCheck {
    bool pass = true;
    int worst_change = 0;
    int bound = 0;
    long colorings = 0;
};

inline McDiarmidCheck exhaustive_mcdiarmid_check(const Hypergraph& g, int j, int set_size) {
    const int n = g.vertex_count();
    if (n > 12) throw std::invalid_argument("exhaustive_mcdiarmid_check: too many vertices");
    McDiarmidCheck out;
    out.bound = g.max_jl_degree(j, set_size + 1);

    std::set<std::vector<int>> sets;
    std::vector<int> scratch;
    for (const auto& e : g.edges())
        if (static_cast<int>(e.size()) == j)
            Hypergraph::for_each_subset(e, set_size, scratch,
                                        [&](const std::vector<int>& s) { sets.insert(s); });
    auto d_prime = [&](const std::vector<int>& a, const std::vector<int>& color) {
        int cmin = color[a.front()];
        for (int v : a) cmin = std::min(cmin, color[v]);
        int d = 0;
        for (int ei : g.incident_edges(a.front())) {
            const auto& e = g.edge(ei);
            if (static_cast<int>(e.size()) != j || !Hypergraph::contains_all(e, a)) continue;
            bool inside = true;
            for (int v : e)
                if (color[v] != cmin) {
                    inside = false;
                    break;
                }
            if (inside) ++d;
        }
        return d;
    };

    std::vector<int> color(n);
    for (long mask = 0; mask < (1L << n); ++mask) {
        ++out.colorings;
        for (int v = 0; v < n; ++v) color[v] = (mask >> v) & 1;
        for (const auto& a : sets) {
            int base = d_prime(a, color);
            for (int v = 0; v < n; ++v) {
                if (std::find(a.begin(), a.end(), v) != a.end()) continue;
                color[v] ^= 1;
                int flipped = d_prime(a, color);
                color[v] ^= 1;
                int change = std::abs(flipped - base);
                out.worst_change = std::max(out.worst_change, change);
                if (change > out.bound) out.pass = false;
            }
        }
    }
    return out;
}

// Expectation table of the polynomial Z_A = sum over edges f containing A of
// the product of z_i over f - A, under i.i.d. inclusion probability p.
// M[0] = E[Z_empty]; M[j] for j >= 1 maximizes E[Z_A] over |A| >= j, zero
// when no set qualifies.
inline std::vector<double> compute_polynomial_moments(const Hypergraph& c, double p) {
    if (!c.uniform()) throw std::invalid_argument("compute_polynomial_moments: need uniform input");
    const int s = c.edge_count() > 0 ? static_cast<int>(c.edges().front().size()) : c.rank();
    std::vector<double> m(s + 1, 0.0);
    m[0] = c.edge_count() * std::pow(p, s);
    std::vector<int> scratch;
    for (int size = 1; size <= s; ++size) {
        std::set<std::vector<int>> sets;
        for (const auto& e : c.edges())
            Hypergraph::for_each_subset(e, size, scratch,
                                        [&](const std::vector<int>& a) { sets.insert(a); });
        double best = 0.0;
        for (const auto& a : sets)
            best = std::max(best, c.degree(a, s) * std::pow(p, s - size));
        for (int j = 1; j <= size; ++j) m[j] = std::max(m[j], best);
    }
    return m;
}

}  // namespace hyperchroma
