// Batch front door: generate instances, profile sparsity, run colorings,
// partitions, greedy processes and verification checks. Human-readable
// summaries go to stdout; machine artifacts are written only via --out.
// Exit codes: 0 success or pass, 1 fail verdict, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperchroma/hyperchroma.hpp"

namespace hc = hyperchroma;
using nlohmann::json;

namespace {

hc::Hypergraph load(const std::string& path) { return hc::read_hypergraph_file(path).graph; }

std::vector<hc::Pattern> parse_patterns(const std::string& text) {
    std::vector<hc::Pattern> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "triangles") {
            for (auto& p : hc::triangle_family()) out.push_back(std::move(p));
        } else if (item == "c3" || item == "C3") {
            out.push_back(hc::triangle_family()[0]);
        } else if (item == "f5" || item == "F5") {
            out.push_back(hc::triangle_family()[1]);
        } else if (item == "k4minus" || item == "K4minus") {
            out.push_back(hc::triangle_family()[2]);
        } else {
            out.push_back(hc::read_pattern_file(item));
        }
    }
    if (out.empty()) throw std::invalid_argument("no patterns given");
    return out;
}

std::map<int, double> parse_omega(const std::string& text, const hc::Hypergraph& g) {
    std::map<int, double> omega;
    if (text == "fit") {
        auto p = hc::SparsityProfile::fit(g);
        return p.omega;
    }
    if (text.find(':') == std::string::npos) {
        double w = std::stod(text);
        for (int j = 2; j <= g.rank(); ++j) omega[j] = w;
        return omega;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto pos = item.find(':');
        if (pos == std::string::npos) throw std::invalid_argument("bad omega entry: " + item);
        omega[std::stoi(item.substr(0, pos))] = std::stod(item.substr(pos + 1));
    }
    return omega;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
}

int run(int argc, char** argv) {
    CLI::App app{"hyperchroma: rank-k hypergraph coloring toolkit"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate an instance");
    std::string gen_kind, gen_out, gen_base, gen_pattern = "k4minus";
    int gen_n = 10, gen_m = 0, gen_k = 3, gen_copies = 1;
    std::uint64_t gen_seed = 0;
    bool gen_has_seed = false;
    gen->add_option("kind", gen_kind, "fano|uniform|steiner|triangle|planted")->required();
    gen->add_option("--n", gen_n);
    gen->add_option("--m", gen_m);
    gen->add_option("--k", gen_k);
    gen->add_option("--copies", gen_copies);
    gen->add_option("--base", gen_base, "base instance file for planted");
    gen->add_option("--pattern", gen_pattern, "pattern name or file for planted");
    auto* gen_seed_opt = gen->add_option("--seed", gen_seed, "required for randomized kinds");
    gen->add_option("--out", gen_out)->required();
    gen->callback([&]() {
        gen_has_seed = gen_seed_opt->count() > 0;
        hc::Hypergraph g;
        if (gen_kind == "fano") {
            g = hc::fano_plane();
        } else if (gen_kind == "triangle" || gen_kind == "triangle_of_Kn") {
            g = hc::triangle_hypergraph(gen_n);
        } else if (gen_kind == "uniform" || gen_kind == "uniform_random") {
            if (!gen_has_seed) throw std::invalid_argument("gen uniform requires --seed");
            g = hc::generate_uniform_random(gen_n, gen_m, gen_k, gen_seed);
        } else if (gen_kind == "steiner" || gen_kind == "partial_steiner") {
            if (!gen_has_seed) throw std::invalid_argument("gen steiner requires --seed");
            g = hc::generate_partial_steiner(gen_n, gen_k, gen_seed, gen_m);
        } else if (gen_kind == "planted" || gen_kind == "planted_pattern") {
            if (!gen_has_seed) throw std::invalid_argument("gen planted requires --seed");
            if (gen_base.empty()) throw std::invalid_argument("gen planted requires --base");
            auto base = load(gen_base);
            auto pats = parse_patterns(gen_pattern);
            g = hc::generate_planted(base, pats.front(), gen_copies, gen_seed);
        } else {
            throw std::invalid_argument("unknown gen kind: " + gen_kind);
        }
        hc::write_hypergraph_file(gen_out, g);
        std::cout << "wrote " << gen_out << ": k=" << g.rank() << " n=" << g.vertex_count()
                  << " m=" << g.edge_count() << "\n";
    });

    // ---- stats --------------------------------------------------------
    auto* stats = app.add_subcommand("stats", "degree tables, codegrees, copy censuses");
    std::string stats_file, stats_pattern;
    stats->add_option("file", stats_file)->required();
    stats->add_option("--pattern", stats_pattern, "pattern list to census");
    stats->callback([&]() {
        auto g = load(stats_file);
        const int k = g.rank();
        std::cout << "k=" << k << " n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
        for (int j = 2; j <= k; ++j) std::cout << "Delta_" << j << " = " << g.max_degree(j) << "\n";
        for (int j = 2; j <= k; ++j)
            for (int l = 1; l < j; ++l)
                std::cout << "Delta_{" << j << "," << l << "} = " << g.max_jl_degree(j, l) << "\n";
        for (int b = 1; b < k; ++b) std::cout << "Gamma_" << b << " = " << g.b_codegree(b) << "\n";
        std::vector<hc::Pattern> pats;
        if (!stats_pattern.empty())
            pats = parse_patterns(stats_pattern);
        else if (k == 3)
            pats = hc::triangle_family();
        for (const auto& p : pats) {
            auto dh = hc::delta_H(g, p);
            std::cout << "Delta_" << p.name << " = " << dh.value << " (root " << dh.root << ")\n";
        }
    });

    // ---- color --------------------------------------------------------
    auto* color = app.add_subcommand("color", "proper-color an instance");
    std::string color_file, color_method = "rankk", color_out;
    double color_f = 2.0;
    int color_limit = 16;
    std::uint64_t color_seed = 0;
    auto* color_seed_opt = color->add_option("--seed", color_seed);
    color->add_option("file", color_file)->required();
    color->add_option("--method", color_method, "rankk|corlin|cortri|exact");
    color->add_option("--f", color_f);
    color->add_option("--limit", color_limit, "color limit for the exact method");
    color->add_option("--out", color_out);
    color->callback([&]() {
        auto g = load(color_file);
        std::vector<int> coloring;
        int colors = 0;
        if (color_method == "exact") {
            auto res = hc::chromatic_number_exact(g, color_limit);
            if (res.exceeds_limit) {
                std::cout << "chi exceeds limit " << color_limit << "\n";
                throw std::invalid_argument("raise --limit for this instance");
            }
            colors = res.chi;
            coloring = res.coloring;
            std::cout << "chi = " << colors << "\n";
        } else {
            if (color_seed_opt->count() == 0)
                throw std::invalid_argument("color --method " + color_method + " requires --seed");
            if (color_method == "rankk") {
                auto res = hc::rankk_color(g, color_seed);
                colors = res.colors;
                coloring = res.coloring;
                std::cout << "r = " << colors << " resamples = " << res.resamples << "\n";
            } else if (color_method == "corlin") {
                auto res = hc::color_corlin(g, color_f, color_seed);
                colors = res.colors;
                coloring = res.coloring;
                std::cout << "colors = " << colors << " parts = "
                          << res.partition.partition.parts.size()
                          << " scale = " << res.reference_scale << "\n";
            } else if (color_method == "cortri") {
                auto res = hc::color_cortri(g, color_f, color_seed);
                colors = res.colors;
                coloring = res.coloring;
                std::cout << "colors = " << colors << " case = " << res.case_used
                          << " heavy_pairs = " << res.heavy_pairs.size() << "\n";
            } else {
                throw std::invalid_argument("unknown method: " + color_method);
            }
        }
        auto proper = hc::check_proper(g, coloring);
        std::cout << "proper = " << (proper.proper ? "yes" : "NO") << "\n";
        if (!color_out.empty()) {
            json j{{"input", color_file},
                   {"method", color_method},
                   {"seed", color_seed},
                   {"colors", colors},
                   {"coloring", coloring}};
            write_text(color_out, j.dump(2) + "\n");
        }
    });

    // ---- partition ----------------------------------------------------
    auto* part = app.add_subcommand("partition", "pattern-free partition");
    std::string part_file, part_patterns = "triangles", part_omega = "fit", part_out;
    double part_f = 2.0, part_eps = 0.0;
    std::uint64_t part_seed = 0;
    part->add_option("file", part_file)->required();
    part->add_option("--patterns", part_patterns);
    part->add_option("--f", part_f);
    part->add_option("--eps", part_eps, "use the one-shot partition at this epsilon");
    part->add_option("--omega", part_omega, "'fit', a constant, or j:val pairs");
    part->add_option("--seed", part_seed)->required();
    part->add_option("--out", part_out);
    part->callback([&]() {
        auto g = load(part_file);
        auto pats = parse_patterns(part_patterns);
        auto omega = parse_omega(part_omega, g);
        json doc;
        const hc::PartitionResult* result = nullptr;
        hc::PartitionResult eps_result;
        hc::FullPartitionResult full_result;
        if (part_eps > 0.0) {
            eps_result = hc::eps_partition(g, pats, part_eps, omega, part_seed);
            result = &eps_result;
            doc["method"] = "eps";
        } else {
            full_result = hc::partition_full(g, pats, part_f, omega, part_seed);
            result = &full_result.partition;
            doc["method"] = "full";
            doc["f"] = part_f;
            doc["halving_steps"] = full_result.halving_steps;
            doc["leaves"] = full_result.leaves;
            doc["trace"] = hc::recursion_trace_to_json(full_result);
        }
        doc["input"] = part_file;
        doc["partition"] = hc::partition_to_json(*result);
        std::cout << "parts = " << result->part_vertices.size()
                  << " stage1_colors = " << result->color_count
                  << " resamples = " << result->stage1_resamples << "\n";
        std::cout << "certificates: all pattern-free, degree bounds hold\n";
        if (!part_out.empty()) write_text(part_out, doc.dump(2) + "\n");
    });

    // ---- greedy -------------------------------------------------------
    auto* greedy = app.add_subcommand("greedy", "random greedy independent set");
    std::string greedy_file, greedy_out;
    long greedy_trials = 1;
    int greedy_jobs = 1;
    std::uint64_t greedy_seed = 0;
    greedy->add_option("file", greedy_file)->required();
    greedy->add_option("--trials", greedy_trials);
    greedy->add_option("--jobs", greedy_jobs);
    greedy->add_option("--seed", greedy_seed)->required();
    greedy->add_option("--out", greedy_out, "trace CSV");
    greedy->callback([&]() {
        auto g = load(greedy_file);
        auto traces = hc::run_trials<hc::ProcessTrace>(
            greedy_trials, greedy_seed, greedy_jobs,
            [&](long, hc::Rng& rng) { return hc::random_greedy_is(g, rng.next()); });
        double mean = 0;
        for (const auto& t : traces) mean += static_cast<double>(t.independent_set.size());
        mean /= traces.size();
        std::cout << "trials = " << greedy_trials << " mean |I| = " << mean << "\n";
        for (std::size_t i = 0; i < traces.size() && i < 5; ++i)
            std::cout << "  trial " << i << ": |I| = " << traces[i].independent_set.size() << "\n";
        if (!greedy_out.empty()) {
            std::ostringstream csv;
            if (greedy_trials == 1) {
                csv << "step,chosen_vertex,eligible_count\n";
                for (std::size_t s = 0; s < traces[0].independent_set.size(); ++s)
                    csv << s << ',' << traces[0].independent_set[s] << ','
                        << traces[0].eligible_counts[s] << '\n';
            } else {
                csv << "trial,step,chosen_vertex,eligible_count\n";
                for (std::size_t t = 0; t < traces.size(); ++t)
                    for (std::size_t s = 0; s < traces[t].independent_set.size(); ++s)
                        csv << t << ',' << s << ',' << traces[t].independent_set[s] << ','
                            << traces[t].eligible_counts[s] << '\n';
            }
            write_text(greedy_out, csv.str());
        }
    });

    // ---- verify -------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "inequality checks");
    verify->require_subcommand(1);
    int exit_code = 0;

    auto emit = [&](const hc::CheckReport& report, const std::string& out_path) {
        for (const auto& row : report.rows)
            std::cout << row.name << ": empirical=" << row.empirical << " bound=" << row.bound
                      << " verdict=" << hc::verdict_name(row.verdict) << "\n";
        if (!out_path.empty()) write_text(out_path, report.to_csv());
        if (report.failed()) exit_code = 1;
    };

    auto* seq = verify->add_subcommand("seqclaim", "decay recurrence law");
    double seq_a = 2, seq_b = 2, seq_m = 6, seq_g = 1, seq_d0 = 1e6;
    int seq_steps = 20;
    std::string seq_out;
    seq->add_option("--a", seq_a);
    seq->add_option("--b", seq_b);
    seq->add_option("--m", seq_m);
    seq->add_option("--g", seq_g);
    seq->add_option("--d0", seq_d0);
    seq->add_option("--steps", seq_steps);
    seq->add_option("--out", seq_out);
    seq->callback([&]() { emit(hc::seqclaim_csv(seq_a, seq_b, seq_m, seq_g, seq_d0, seq_steps), seq_out); });

    auto* hb = verify->add_subcommand("heavybound", "heavy-level counting bound");
    std::string hb_file, hb_out;
    double hb_p = 0.3, hb_alpha = 0.5;
    hb->add_option("file", hb_file)->required();
    hb->add_option("--p", hb_p);
    hb->add_option("--alpha", hb_alpha);
    hb->add_option("--out", hb_out);
    hb->callback([&]() {
        auto rep = hc::check_heavybound(load(hb_file), hb_p, hb_alpha);
        if (!rep.pass) std::cout << "witness: " << rep.witness << "\n";
        emit(rep.report, hb_out);
    });

    auto* mct = verify->add_subcommand("mctail", "transversal tail bound");
    std::string mct_file, mct_out;
    double mct_p = 0.3, mct_alpha = 0.5, mct_c = 12;
    long mct_trials = 1000;
    int mct_jobs = 1;
    std::uint64_t mct_seed = 0;
    mct->add_option("file", mct_file)->required();
    mct->add_option("--p", mct_p);
    mct->add_option("--alpha", mct_alpha);
    mct->add_option("--c", mct_c);
    mct->add_option("--trials", mct_trials);
    mct->add_option("--jobs", mct_jobs);
    mct->add_option("--seed", mct_seed)->required();
    mct->add_option("--out", mct_out);
    mct->callback([&]() {
        auto rep = hc::mc_transversal_tail(load(mct_file), mct_p, mct_alpha, mct_c, mct_trials,
                                           mct_seed, mct_jobs);
        emit(rep.report, mct_out);
    });

    auto* ct = verify->add_subcommand("ctlemma", "connected-subgraph count bound");
    std::string ct_file, ct_set, ct_out;
    int ct_h = 4;
    double ct_omega = 1.0;
    ct->add_option("file", ct_file)->required();
    ct->add_option("--set", ct_set, "space-separated vertex ids");
    ct->add_option("--span", ct_h, "number of spanned vertices");
    ct->add_option("--omega", ct_omega);
    ct->add_option("--out", ct_out);
    ct->callback([&]() {
        std::vector<int> a;
        std::istringstream ss(ct_set);
        int v;
        while (ss >> v) a.push_back(v);
        emit(hc::check_ctlemma(load(ct_file), a, ct_h, ct_omega).report, ct_out);
    });

    auto* ev = verify->add_subcommand("eventfreq", "mean-level concentration");
    std::string ev_file, ev_mode = "color", ev_patterns = "", ev_out, ev_omega = "fit";
    double ev_eps = 0.2;
    long ev_trials = 10000;
    int ev_jobs = 1;
    std::uint64_t ev_seed = 0;
    ev->add_option("file", ev_file)->required();
    ev->add_option("--mode", ev_mode, "color|halving");
    ev->add_option("--eps", ev_eps);
    ev->add_option("--patterns", ev_patterns);
    ev->add_option("--omega", ev_omega);
    ev->add_option("--trials", ev_trials);
    ev->add_option("--jobs", ev_jobs);
    ev->add_option("--seed", ev_seed)->required();
    ev->add_option("--out", ev_out);
    ev->callback([&]() {
        auto g = load(ev_file);
        std::vector<hc::Pattern> pats;
        if (!ev_patterns.empty()) pats = parse_patterns(ev_patterns);
        auto rep = hc::mc_event_frequencies(g, pats, ev_mode == "halving", ev_eps,
                                            parse_omega(ev_omega, g), ev_trials, ev_seed, ev_jobs);
        emit(rep.report, ev_out);
    });

    auto* mom = verify->add_subcommand("moments", "polynomial expectation table");
    std::string mom_file;
    double mom_p = 0.5;
    mom->add_option("file", mom_file)->required();
    mom->add_option("--p", mom_p);
    mom->callback([&]() {
        auto m = hc::compute_polynomial_moments(load(mom_file), mom_p);
        for (std::size_t j = 0; j < m.size(); ++j) std::cout << "M_" << j << " = " << m[j] << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
