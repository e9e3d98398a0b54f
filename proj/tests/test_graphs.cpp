#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include <diverge/graphs.hpp>
#include <diverge/parse.hpp>

using namespace diverge;

TEST_CASE("adjacent examples") {
    CHECK(adjacent(Distance(1), 7, 8));
    CHECK_FALSE(adjacent(Distance(3), 5, 5));
    CHECK(adjacent(Residue(2), 3, 9));
    CHECK_FALSE(adjacent(Residue(2), 3, 4));
    CHECK(adjacent(Complete{}, 1, 1'000'000));
    CHECK_FALSE(adjacent(Complete{}, 4, 4));
    CHECK_THROWS_AS(adjacent(Complete{}, 0, 4), PreconditionError);
}

TEST_CASE("finite edge lists") {
    const FiniteEdges g(4, {{1, 2}, {2, 3}, {3, 1}, {2, 1}});
    CHECK(g.edges().size() == 3);
    CHECK(adjacent(g, 2, 1));
    CHECK_FALSE(adjacent(g, 1, 4));
    CHECK_THROWS_AS(adjacent(g, 1, 5), PreconditionError);
    CHECK_THROWS_AS(FiniteEdges(3, {{1, 4}}), PreconditionError);
    CHECK_THROWS_AS(FiniteEdges(3, {{2, 2}}), PreconditionError);
}

TEST_CASE("finite graph text format") {
    std::istringstream in("# triangle plus pendant\n4\n1 2\n2 3\n\n1 3\n3 4\n");
    const auto g = read_finite_graph(in);
    CHECK(g.n() == 4);
    CHECK(g.edges().size() == 4);
    CHECK(adjacent(g, 4, 3));

    std::ostringstream out;
    write_finite_graph(out, g);
    std::istringstream again(out.str());
    CHECK(read_finite_graph(again) == g);

    std::istringstream missing("");
    CHECK_THROWS_AS(read_finite_graph(missing), ParseError);
    std::istringstream bad("3\n1 x\n");
    CHECK_THROWS_AS(read_finite_graph(bad), ParseError);
    std::istringstream range("3\n1 9\n");
    CHECK_THROWS_AS(read_finite_graph(range), ParseError);
}

TEST_CASE("symmetry and irreflexivity, exhaustive to 10^3") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint64_t> vertex(1, 1000);
    std::vector<FiniteEdges::Edge> edges;
    while (edges.size() < 5000) {
        auto a = vertex(rng), b = vertex(rng);
        if (a != b) edges.emplace_back(a, b);
    }
    const std::vector<GraphSpec> specs{Distance(1), Distance(3), Distance(250), Complete{},
                                       Residue(2),  Residue(7),  FiniteEdges(1000, edges)};
    for (const auto& g : specs) {
        INFO(to_string(g));
        for (std::uint64_t a = 1; a <= 1000; ++a) {
            REQUIRE_FALSE(adjacent(g, a, a));
            for (std::uint64_t b = a + 1; b <= 1000; ++b) REQUIRE(adjacent(g, a, b) == adjacent(g, b, a));
        }
    }
}

TEST_CASE("distance graphs partition the complete graph") {
    CHECK(distance_partition_check(10, 50));
    CHECK(distance_partition_check(1, 2));
    CHECK(distance_partition_check(2, 3));
    // every pair at N = 200 includes the pairs of each smaller N
    for (std::uint64_t k = 1; k <= 20; ++k) REQUIRE(distance_partition_check(k, 200));
    CHECK_THROWS_AS(distance_partition_check(0, 5), PreconditionError);
}

TEST_CASE("parse_graph_spec") {
    CHECK(parse_graph_spec("distance:3") == GraphSpec(Distance(3)));
    CHECK(parse_graph_spec("complete") == GraphSpec(Complete{}));
    CHECK(parse_graph_spec("residue:5") == GraphSpec(Residue(5)));
    CHECK_THROWS_AS(parse_graph_spec("distance:0"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("residue:1"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("torus"), ParseError);
    CHECK_THROWS_AS(parse_graph_spec("file:/nonexistent/graph.txt"), ParseError);
}
