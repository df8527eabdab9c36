#include <doctest.h>

#include "hyperchroma/census.hpp"
#include "hyperchroma/process.hpp"
#include "test_support.hpp"

using namespace hyperchroma;
namespace ts = testsupport;

namespace {

Hypergraph complete_graph(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Hypergraph(n, 2, edges);
}

Pattern path_pattern() {
    // x - y - z with x=0, y=1, z=2
    return Pattern(Hypergraph(3, 2, {{0, 1}, {1, 2}}), "path");
}

}  // namespace

TEST_CASE("is_connected") {
    CHECK(is_connected(Hypergraph(3, 3, {{0, 1, 2}})));
    CHECK_FALSE(is_connected(Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}})));
    CHECK_FALSE(is_connected(Hypergraph(4, 3, {{0, 1, 2}})));  // isolated vertex 3
    CHECK(is_connected(Hypergraph(1, 2, {})));
    CHECK(is_connected(Hypergraph(0, 2, {})));
    for (const auto& t : triangle_family()) CHECK(is_connected(t.graph));
}

TEST_CASE("pattern construction rejects disconnected") {
    CHECK_THROWS_AS(Pattern(Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}}), "two"),
                    std::invalid_argument);
}

TEST_CASE("rooted copies of the path in K5") {
    auto k5 = complete_graph(5);
    auto path = path_pattern();
    // center y: C(4,2) = 6; endpoint x: d(d-1) = 12
    for (int u = 0; u < 5; ++u) {
        CHECK(rooted_copy_count(k5, path, 1, u) == 6);
        CHECK(rooted_copy_count(k5, path, 0, u) == 12);
        CHECK(rooted_copy_count(k5, path, 2, u) == 12);
    }
    auto dh = delta_H(k5, path);
    CHECK(dh.value == 6);
    CHECK(dh.root == 1);

    Hypergraph edgeless(5, 2, {});
    CHECK(rooted_copy_count(edgeless, path, 0, 0) == 0);
    auto dh0 = delta_H(edgeless, path);
    CHECK(dh0.value == 0);
    CHECK(dh0.root == 0);
}

TEST_CASE("census agrees with subset-permutation brute force") {
    Rng rng(52);
    auto patterns = triangle_family();
    for (int trial = 0; trial < 8; ++trial) {
        auto g = ts::random_uniform_instance(8, 9, 3, rng);
        for (const auto& p : patterns) {
            for (int pv = 0; pv < p.vertex_count(); ++pv)
                for (int u = 0; u < g.vertex_count(); ++u)
                    CHECK(rooted_copy_count(g, p, pv, u) ==
                          ts::brute_rooted_copies(g, p.graph, pv, u));
        }
    }
}

TEST_CASE("delta_H invariant under vertex relabeling") {
    Rng rng(53);
    auto k4m = triangle_family()[2];
    for (int trial = 0; trial < 6; ++trial) {
        auto g = ts::random_uniform_instance(9, 10, 3, rng);
        std::vector<int> perm(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) perm[v] = v;
        rng.shuffle(perm);
        std::vector<std::vector<int>> relabeled;
        for (auto e : g.edges()) {
            for (int& v : e) v = perm[v];
            std::sort(e.begin(), e.end());
            relabeled.push_back(e);
        }
        Hypergraph h(g.vertex_count(), 3, relabeled);
        CHECK(delta_H(g, k4m).value == delta_H(h, k4m).value);
    }
}

TEST_CASE("copies_at") {
    auto tri = Pattern(Hypergraph(3, 3, {{0, 1, 2}}), "edge3", 0);
    auto g = ts::g0();
    auto cs = copies_at(g, tri, 2);
    CHECK(cs.copies.edges() == g.link({2}, 3).edges());  // 3 pairs

    // vertex in no copy
    auto none = copies_at(Hypergraph(4, 3, {{0, 1, 2}}), tri, 3);
    CHECK(none.copies.edge_count() == 0);

    // two K4- copies glued at the root position
    auto k4m = triangle_family()[2];
    Pattern rooted(k4m.graph, "K4minus", 0);
    std::vector<std::vector<int>> edges;
    auto add_copy = [&](std::vector<int> verts) {  // verts = images of a,b,c,d
        for (auto e : k4m.graph.edges()) {
            std::vector<int> mapped;
            for (int v : e) mapped.push_back(verts[v]);
            std::sort(mapped.begin(), mapped.end());
            edges.push_back(mapped);
        }
    };
    add_copy({0, 1, 2, 3});
    add_copy({0, 4, 5, 6});
    Hypergraph two(7, 3, edges);
    auto at0 = copies_at(two, rooted, 0);
    CHECK(at0.copies.edge_count() == 2);
    for (const auto& e : at0.copies.edges()) CHECK(e.size() == 3);

    // copy-set size never exceeds the rooted copy count, equals the number of
    // distinct copy vertex sets, and both agree with exhaustive search
    Rng rng(54);
    for (int trial = 0; trial < 6; ++trial) {
        auto h = ts::random_uniform_instance(8, 8, 3, rng);
        for (int u = 0; u < h.vertex_count(); ++u) {
            auto cset = copies_at(h, rooted, u);
            CHECK(cset.copies.edge_count() <= rooted_copy_count(h, rooted, 0, u));
            CHECK(cset.copies.edge_count() == ts::brute_copy_vertex_sets(h, rooted.graph, 0, u));
        }
    }
}

TEST_CASE("non-uniform patterns are matched by edge size") {
    // a 2-edge hanging off a 3-edge; only size-respecting embeddings count
    Pattern mixed(Hypergraph(4, 3, {{0, 1, 2}, {2, 3}}), "tailed");
    Hypergraph g(6, 3, {{0, 1, 2}, {2, 3}, {1, 4}, {3, 4, 5}});
    for (int pv = 0; pv < mixed.vertex_count(); ++pv)
        for (int u = 0; u < g.vertex_count(); ++u)
            CHECK(rooted_copy_count(g, mixed, pv, u) ==
                  ts::brute_rooted_copies(g, mixed.graph, pv, u));
    CHECK(delta_H(g, mixed).value >= 1);
    CHECK_FALSE(check_pattern_free(g, {mixed}).pattern_free);
}

TEST_CASE("triangle family") {
    auto fam = triangle_family();
    REQUIRE(fam.size() == 3);
    CHECK(fam[0].vertex_count() == 6);
    CHECK(fam[1].vertex_count() == 5);
    CHECK(fam[2].vertex_count() == 4);
    for (const auto& p : fam) {
        REQUIRE(p.graph.edge_count() == 3);
        CHECK(is_triangle(p.graph.edge(0), p.graph.edge(1), p.graph.edge(2)));
    }
}

TEST_CASE("is_triangle") {
    // K4-: u=a, v=c, w=d with the shared vertex b excluded by the core rule
    CHECK(is_triangle({0, 1, 2}, {1, 2, 3}, {0, 1, 3}));
    CHECK_FALSE(is_triangle({0, 1, 2}, {0, 1, 2}, {0, 1, 3}));
    CHECK_FALSE(is_triangle({0, 1, 2}, {3, 4, 5}, {6, 7, 8}));
    // graph triangle in a rank-3 hypergraph
    CHECK(is_triangle({0, 1}, {1, 2}, {0, 2}));
    // two edges through one pair plus a disjoint edge: no closing vertex pattern
    CHECK_FALSE(is_triangle({0, 1, 2}, {0, 1, 3}, {4, 5, 6}));
}

TEST_CASE("check_pattern_free") {
    auto fam = triangle_family();
    CHECK(check_pattern_free(Hypergraph(6, 3, {}), fam).pattern_free);

    auto k4m_graph = fam[2].graph;
    auto self = check_pattern_free(k4m_graph, fam);
    CHECK_FALSE(self.pattern_free);
    CHECK(self.witness.pattern_name == "K4minus");
    CHECK(self.witness.edge_ids.size() == 3);

    // Fano is linear, so F5 and K4- need codegree 2 and cannot appear; C3 does.
    auto fano_check = check_pattern_free(fano_plane(), fam);
    CHECK_FALSE(fano_check.pattern_free);
    CHECK(fano_check.witness.pattern_name == "C3");
    CHECK(check_pattern_free(fano_plane(), {fam[1], fam[2]}).pattern_free);
}

TEST_CASE("F5 rooted bound on sparse instances") {
    // Delta_{F5,a} <= Delta * Delta_{3,2}^2 whenever the pair degree is capped.
    Rng rng(55);
    auto f5 = triangle_family()[1];
    for (int trial = 0; trial < 6; ++trial) {
        auto g = ts::random_uniform_instance(12, 18, 3, rng);
        long long delta = g.max_degree(3);
        long long pair = g.max_jl_degree(3, 2);
        long long bound = delta * pair * pair;
        long long observed = 0;
        for (int u = 0; u < g.vertex_count(); ++u)
            observed = std::max(observed, rooted_copy_count(g, f5, 0, u));
        CHECK(observed <= bound);
    }
}

TEST_CASE("fano census anchors") {
    auto fano = fano_plane();
    auto fam = triangle_family();
    CHECK(delta_H(fano, fam[2]).value == 0);  // K4- needs codegree 2
    CHECK(delta_H(fano, fam[1]).value == 0);  // F5 too
    auto c3 = delta_H(fano, fam[0]);
    CHECK(c3.value == 12);  // 28 triangles of lines, 12 through each point per class
    CHECK(c3.value == ts::brute_rooted_copies(fano, fam[0].graph, c3.root, 0));
}
