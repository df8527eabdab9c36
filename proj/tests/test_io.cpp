#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hyperchroma/io.hpp"
#include "hyperchroma/process.hpp"
#include "test_support.hpp"

using namespace hyperchroma;
namespace ts = testsupport;

TEST_CASE("hgt parse and write") {
    std::istringstream in("# a comment\n3 5\n0 1 2\n1 2 3\n2 3 4\n");
    auto parsed = parse_hgt(in);
    CHECK(parsed.graph.rank() == 3);
    CHECK(parsed.graph.vertex_count() == 5);
    CHECK(parsed.graph.edges() == ts::g0().edges());
    CHECK_FALSE(parsed.root.has_value());

    std::ostringstream out;
    write_hgt(out, parsed.graph);
    CHECK(out.str() == "3 5\n0 1 2\n1 2 3\n2 3 4\n");
}

TEST_CASE("hgt rejects malformed input") {
    std::istringstream dup("3 5\n0 1 2\n0 1 2\n");
    CHECK_THROWS_AS(parse_hgt(dup), std::invalid_argument);
    std::istringstream decreasing("3 5\n2 1 0\n");
    CHECK_THROWS_AS(parse_hgt(decreasing), std::invalid_argument);
    std::istringstream out_of_range("3 3\n0 1 5\n");
    CHECK_THROWS_AS(parse_hgt(out_of_range), std::invalid_argument);
    std::istringstream no_header("# nothing\n");
    CHECK_THROWS_AS(parse_hgt(no_header), std::invalid_argument);
}

TEST_CASE("pattern root trailer") {
    std::istringstream in("3 4\n0 1 2\n1 2 3\n0 1 3\nroot 1\n");
    auto parsed = parse_hgt(in);
    REQUIRE(parsed.root.has_value());
    CHECK(*parsed.root == 1);
    std::ostringstream out;
    write_hgt(out, parsed.graph, parsed.root);
    CHECK(out.str().find("root 1\n") != std::string::npos);
}

TEST_CASE("json mirror") {
    auto g = fano_plane();
    auto j = hypergraph_to_json(g);
    CHECK(j["rank"] == 3);
    CHECK(j["vertex_count"] == 7);
    auto back = hypergraph_from_json(j);
    CHECK(back.edges() == g.edges());
}

TEST_CASE("file round trips") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = ts::random_rank_instance(12, 14, 4, rng);
        const char* hgt_path = "roundtrip_test.hgt";
        const char* json_path = "roundtrip_test.json";
        write_hypergraph_file(hgt_path, g);
        write_hypergraph_file(json_path, g);
        auto from_hgt = read_hypergraph_file(hgt_path);
        auto from_json = read_hypergraph_file(json_path);
        CHECK(from_hgt.graph.edges() == g.edges());
        CHECK(from_hgt.graph.rank() == g.rank());
        CHECK(from_hgt.graph.vertex_count() == g.vertex_count());
        CHECK(from_json.graph.edges() == g.edges());
        std::remove(hgt_path);
        std::remove(json_path);
    }
}

TEST_CASE("partition json round trip") {
    auto k4m = triangle_family()[2];
    auto base = generate_uniform_random(36, 24, 3, 55);
    auto g = generate_planted(base, k4m, 2, 56);
    auto res = eps_partition(g, {k4m}, 0.2, SparsityProfile::fit(g).omega, 5);
    auto j = partition_to_json(res);
    auto text = j.dump(2);
    auto summary = partition_from_json(nlohmann::json::parse(text));
    CHECK(summary.part_of == res.part_of);
    CHECK(summary.color_count == res.color_count);
    CHECK(summary.seed == res.seed);
    REQUIRE(summary.part_vertices.size() == res.part_vertices.size());
    for (std::size_t i = 0; i < summary.part_vertices.size(); ++i) {
        CHECK(summary.part_vertices[i] == res.part_vertices[i]);
        CHECK(summary.pattern_free[i] == 1);
    }
}

TEST_CASE("write is deterministic") {
    auto g = generate_uniform_random(15, 12, 3, 77);
    std::ostringstream a, b;
    write_hgt(a, g);
    write_hgt(b, g);
    CHECK(a.str() == b.str());
    CHECK(hypergraph_to_json(g).dump(2) == hypergraph_to_json(g).dump(2));
}
