#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/oracles.hpp"
#include "hyperchroma/rng.hpp"

namespace hyperchroma {

// One independently sampleable value (a color, a coin, a side of a split).
struct Variable {
    std::function<int(Rng&)> sample;
};

// A bad event: a predicate over the current assignment that must depend only
// on the variables in its scope. probability_bound is optional metadata for
// the asymmetric condition check; the resampler never reads it.
struct BadEvent {
    std::vector<int> scope;  // sorted variable indices
    std::function<bool(const std::vector<int>&)> holds;
    double probability_bound = std::numeric_limits<double>::quiet_NaN();
    std::string label;
};

struct BadEventSystem {
    std::vector<Variable> variables;
    std::vector<BadEvent> events;
};

namespace detail {

inline bool scopes_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else
            return true;
    }
    return false;
}

}  // namespace detail

struct LllCheckResult {
    bool satisfied = true;
    int worst_event = -1;
    double worst_probability = 0.0;
    double worst_dependency_sum = 0.0;
    std::vector<int> violating_events;
};

// Asymmetric condition over the supplied bounds: Pr[A_i] <= 1/4 and the sum
// of bounds over scope-intersecting neighbours is at most 1/4, for every
// event. Dependency comes from scope intersection alone.
inline LllCheckResult asymmetric_lll_check(const BadEventSystem& system) {
    LllCheckResult out;
    const auto& ev = system.events;
    for (std::size_t i = 0; i < ev.size(); ++i)
        if (std::isnan(ev[i].probability_bound))
            throw std::invalid_argument("event " + std::to_string(i) + " has no probability bound");
    for (std::size_t i = 0; i < ev.size(); ++i) {
        double dep = 0.0;
        for (std::size_t j = 0; j < ev.size(); ++j)
            if (j != i && detail::scopes_intersect(ev[i].scope, ev[j].scope))
                dep += ev[j].probability_bound;
        bool bad = ev[i].probability_bound > 0.25 || dep > 0.25;
        double badness = std::max(ev[i].probability_bound, dep);
        if (badness > std::max(out.worst_probability, out.worst_dependency_sum)) {
            out.worst_event = static_cast<int>(i);
            out.worst_probability = ev[i].probability_bound;
            out.worst_dependency_sum = dep;
        }
        if (bad) {
            out.satisfied = false;
            out.violating_events.push_back(static_cast<int>(i));
        }
    }
    return out;
}

struct MoserTardosResult {
    bool success = false;
    std::vector<int> assignment;
    long long resamples = 0;
    std::vector<int> trace;       // event index per resampling step
    std::vector<int> violations;  // surviving violated events on failure
};

// Sample every variable, then repeatedly resample the scope of the
// lowest-indexed violated event. Deterministic given the seed.
inline MoserTardosResult moser_tardos(const BadEventSystem& system, std::uint64_t seed,
                                      long long cap = 1'000'000) {
    if (cap < 1) throw std::invalid_argument("cap must be at least 1");
    Rng rng(seed);
    MoserTardosResult out;
    out.assignment.resize(system.variables.size());
    for (std::size_t i = 0; i < system.variables.size(); ++i)
        out.assignment[i] = system.variables[i].sample(rng);

    auto first_violated = [&]() -> int {
        for (std::size_t i = 0; i < system.events.size(); ++i)
            if (system.events[i].holds(out.assignment)) return static_cast<int>(i);
        return -1;
    };

    while (true) {
        int bad = first_violated();
        if (bad < 0) {
            out.success = true;
            return out;
        }
        if (out.resamples >= cap) {
            for (std::size_t i = 0; i < system.events.size(); ++i)
                if (system.events[i].holds(out.assignment))
                    out.violations.push_back(static_cast<int>(i));
            return out;
        }
        for (int var : system.events[bad].scope)
            out.assignment[var] = system.variables[var].sample(rng);
        out.trace.push_back(bad);
        ++out.resamples;
    }
}

// Monochromatic-edge bad events for an r-coloring of g, with the exact
// per-edge probability r^{1-|e|} attached.
inline BadEventSystem monochromatic_event_system(const Hypergraph& g, int r) {
    if (r < 1) throw std::invalid_argument("color count must be positive");
    BadEventSystem sys;
    sys.variables.resize(g.vertex_count());
    for (auto& v : sys.variables)
        v.sample = [r](Rng& rng) { return rng.below_int(r); };
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edge(ei);
        BadEvent ev;
        ev.scope = e;
        ev.holds = [e](const std::vector<int>& colors) {
            for (std::size_t i = 1; i < e.size(); ++i)
                if (colors[e[i]] != colors[e[0]]) return false;
            return true;
        };
        ev.probability_bound = std::pow(static_cast<double>(r), 1.0 - static_cast<double>(e.size()));
        ev.label = "edge[" + std::to_string(ei) + "]";
        sys.events.push_back(std::move(ev));
    }
    return sys;
}

struct RankkColoring {
    std::vector<int> coloring;
    int colors = 0;  // r
    long long resamples = 0;
    int attempts = 1;
};

// r = ceil(max_j (4k(k-1) Delta_j)^{1/(j-1)}), floored at one color, then a
// resampling run over the monochromatic-edge events. Retries with derived
// seeds before giving up.
inline int rankk_color_count(const Hypergraph& g) {
    const int k = g.rank();
    if (k < 2) throw std::invalid_argument("rankk_color needs rank >= 2");
    double best = 0.0;
    for (int j = 2; j <= k; ++j) {
        int dj = g.max_degree(j);
        if (dj == 0) continue;
        double base = 4.0 * k * (k - 1) * dj;
        best = std::max(best, std::pow(base, 1.0 / (j - 1)));
    }
    return std::max(1, static_cast<int>(std::ceil(best - 1e-12)));
}

inline RankkColoring rankk_color(const Hypergraph& g, std::uint64_t seed,
                                 long long cap = 1'000'000, int max_attempts = 8) {
    if (g.vertex_count() < 1) throw std::invalid_argument("rankk_color: empty vertex set");
    if (g.edge_count() > 0 && g.min_edge_size() < 2)
        throw std::invalid_argument("rankk_color: singleton edges are uncolorable");
    const int r = rankk_color_count(g);
    BadEventSystem sys = monochromatic_event_system(g, r);
    Rng rng(seed);
    MoserTardosResult last;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        last = moser_tardos(sys, rng.split(attempt).next(), cap);
        if (last.success) {
            auto ok = check_proper(g, last.assignment);
            if (!ok.proper) throw std::logic_error("rankk_color produced an improper coloring");
            return {std::move(last.assignment), r, last.resamples, attempt + 1};
        }
    }
    throw std::runtime_error("rankk_color: resampling cap exhausted after " +
                             std::to_string(max_attempts) + " attempts, " +
                             std::to_string(last.violations.size()) + " events still violated");
}

}  // namespace hyperchroma
