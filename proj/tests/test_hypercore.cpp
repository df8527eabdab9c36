#include <doctest.h>

#include "hyperchroma/hypergraph.hpp"
#include "hyperchroma/process.hpp"
#include "test_support.hpp"

using namespace hyperchroma;
namespace ts = testsupport;

TEST_CASE("construction enforces canonical edges") {
    Hypergraph g(4, 3, {{2, 1, 0}, {1, 2, 3}});
    CHECK(g.edge(0) == std::vector<int>{0, 1, 2});
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 0, 1}}), std::invalid_argument);
}

TEST_CASE("degree") {
    auto g = ts::g0();
    CHECK(g.degree({1, 2}, 3) == 2);
    CHECK(g.degree({2}, 3) == 3);
    // isolated vertex
    Hypergraph h(6, 3, {{0, 1, 2}});
    CHECK(h.degree({5}, 3) == 0);
    auto fano = fano_plane();
    for (int v = 0; v < 7; ++v) CHECK(fano.degree({v}, 3) == 3);
    CHECK_THROWS_AS(g.degree({}, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.degree({9}, 3), std::invalid_argument);
    CHECK_THROWS_AS(g.degree({0, 1}, 1), std::invalid_argument);
}

TEST_CASE("link") {
    auto g = ts::g0();
    auto l = g.link({2}, 3);
    CHECK(l.edges() == std::vector<std::vector<int>>{{0, 1}, {1, 3}, {3, 4}});
    CHECK(l.rank() == 2);

    auto empty = g.link({4}, 3);  // vertex 4 only in edge {2,3,4}
    CHECK(empty.edge_count() == 1);
    auto none = Hypergraph(6, 3, {{0, 1, 2}}).link({5}, 3);
    CHECK(none.edge_count() == 0);

    // Fano: the link of any point is a perfect matching on the 6 others.
    auto fano = fano_plane();
    for (int v = 0; v < 7; ++v) {
        auto lk = fano.link({v}, 3);
        CHECK(lk.edge_count() == 3);
        std::set<int> seen;
        for (const auto& e : lk.edges()) {
            CHECK(e.size() == 2);
            for (int w : e) {
                CHECK(w != v);
                CHECK(seen.insert(w).second);  // disjoint pairs
            }
        }
        CHECK(seen.size() == 6);
    }
}

TEST_CASE("degree equals link edge count") {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = ts::random_rank_instance(9, 10, 3, rng);
        for (int v = 0; v < g.vertex_count(); ++v)
            for (int j = 2; j <= 3; ++j)
                CHECK(g.degree({v}, j) == g.link({v}, j).edge_count());
    }
}

TEST_CASE("max_jl_degree") {
    auto g = ts::g0();
    CHECK(g.max_jl_degree(3, 2) == 2);
    CHECK(Hypergraph(4, 3, {}).max_jl_degree(3, 2) == 0);
    CHECK(fano_plane().max_jl_degree(3, 2) == 1);

    // Brute force over all C(n,l) sets.
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        auto h = ts::random_rank_instance(8, 9, 4, rng);
        for (int j = 2; j <= 4; ++j)
            for (int l = 1; l <= j; ++l)
                CHECK(h.max_jl_degree(j, l) == ts::brute_max_jl(h, j, l));
    }
}

TEST_CASE("b_codegree") {
    CHECK(Hypergraph(5, 3, {}).b_codegree(2) == 0);
    CHECK(ts::g0().b_codegree(2) == 3);  // frozen from the quadruple-loop oracle
    CHECK(ts::g0().b_codegree(2) == ts::brute_codegree(ts::g0(), 2));
    CHECK(fano_plane().b_codegree(2) == 0);
    CHECK(fano_plane().b_codegree(1) == ts::brute_codegree(fano_plane(), 1));

    Rng rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        auto h = ts::random_rank_instance(7, 8, 3, rng);
        for (int b = 1; b < 3; ++b) CHECK(h.b_codegree(b) == ts::brute_codegree(h, b));
    }
}

TEST_CASE("is_sparse") {
    SparsityProfile profile;
    profile.delta = 3;
    profile.omega = {{2, 1.0}, {3, 1.0}};

    CHECK(is_sparse(Hypergraph(6, 3, {}), profile).sparse);

    // G0 has Delta_{3,2} = 2 > sqrt(3).
    auto checked = is_sparse(ts::g0(), profile);
    CHECK_FALSE(checked.sparse);
    bool found = false;
    for (const auto& v : checked.violations)
        if (v.j == 3 && v.l == 2) found = true;
    CHECK(found);

    CHECK(is_sparse(fano_plane(), profile).sparse);
}

TEST_CASE("is_sparse is monotone under edge removal") {
    Rng rng(44);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = ts::random_rank_instance(8, 8, 3, rng);
        if (g.edge_count() == 0) continue;
        auto profile = SparsityProfile::fit(g);
        REQUIRE(is_sparse(g, profile).sparse);
        auto edges = g.edges();
        edges.erase(edges.begin() + rng.below_int(static_cast<int>(edges.size())));
        Hypergraph smaller(g.vertex_count(), g.rank(), edges);
        CHECK(is_sparse(smaller, profile).sparse);
    }
}

TEST_CASE("induced") {
    auto g = ts::g0();
    auto full = induced(g, {0, 1, 2, 3, 4});
    CHECK(full.graph.edges() == g.edges());
    CHECK(full.to_parent == std::vector<int>{0, 1, 2, 3, 4});

    auto sub = induced(g, {0, 1, 2});
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.graph.edge(0) == std::vector<int>{0, 1, 2});

    auto empty = induced(g, {});
    CHECK(empty.graph.vertex_count() == 0);
    CHECK(empty.graph.edge_count() == 0);
}

TEST_CASE("induced composes with intersection") {
    Rng rng(45);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = ts::random_rank_instance(10, 12, 3, rng);
        std::vector<int> s, t;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (rng.bernoulli(0.7)) s.push_back(v);
            if (rng.bernoulli(0.7)) t.push_back(v);
        }
        auto gs = induced(g, s);
        std::vector<int> t_local;
        for (std::size_t i = 0; i < gs.to_parent.size(); ++i)
            if (std::find(t.begin(), t.end(), gs.to_parent[i]) != t.end())
                t_local.push_back(static_cast<int>(i));
        auto lhs = induced(gs.graph, t_local);
        std::vector<int> st;
        for (int v : s)
            if (std::find(t.begin(), t.end(), v) != t.end()) st.push_back(v);
        auto rhs = induced(g, st);
        // compare through the relabeling maps
        std::vector<int> lhs_parent;
        for (int v : lhs.to_parent) lhs_parent.push_back(gs.to_parent[v]);
        CHECK(lhs_parent == rhs.to_parent);
        std::vector<std::vector<int>> lhs_edges;
        for (auto e : lhs.graph.edges()) {
            for (int& v : e) v = lhs_parent[v];
            std::sort(e.begin(), e.end());
            lhs_edges.push_back(e);
        }
        std::vector<std::vector<int>> rhs_edges;
        for (auto e : rhs.graph.edges()) {
            for (int& v : e) v = rhs.to_parent[v];
            std::sort(e.begin(), e.end());
            rhs_edges.push_back(e);
        }
        std::sort(lhs_edges.begin(), lhs_edges.end());
        std::sort(rhs_edges.begin(), rhs_edges.end());
        CHECK(lhs_edges == rhs_edges);
    }
}

TEST_CASE("sparsity profile fit accepts its own instance") {
    Rng rng(46);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = ts::random_rank_instance(12, 14, 4, rng);
        CHECK(is_sparse(g, SparsityProfile::fit(g)).sparse);
    }
}
