#include <random>
#include <sstream>

#include "doctest.h"
#include "mkcover/generators.hpp"
#include "mkcover/graph.hpp"

using namespace mkcover;

namespace {

const char* kK4Text =
    "4 6\n"
    "0 1 1\n"
    "0 2 2\n"
    "0 3 5\n"
    "1 2 4\n"
    "1 3 3\n"
    "2 3 6\n";

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("edge identity is canonical") {
    CHECK(Edge(1, 2) == Edge(2, 1));
    CHECK(Edge(3, 0).u == 0);
    CHECK(Edge(3, 0).v == 3);
    CHECK(Edge(0, 1) < Edge(0, 2));
    CHECK(Edge(0, 2) < Edge(1, 2));
    CHECK_THROWS_AS(Edge(2, 2), GraphError);
}

TEST_CASE("parse K4 example") {
    const WeightedGraph g = parse_graph(kK4Text);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.is_complete());
    CHECK(g.weight(Edge(0, 1)) == 1);
    CHECK(g.weight(Edge(1, 3)) == 3);
    CHECK(g.weight(Edge(2, 3)) == 6);
    CHECK_FALSE(g.has_duplicate_weights());
}

TEST_CASE("parse single edge graph") {
    const WeightedGraph g = parse_graph("2 1\n0 1 7\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.weight(Edge(0, 1)) == 7);
}

TEST_CASE("parse accepts comments and blank lines") {
    const WeightedGraph g =
        parse_graph("# a triangle minus an edge\n3 2\n\n0 1 5\n# middle\n0 2 9\n");
    CHECK(g.edge_count() == 2);
    CHECK_FALSE(g.is_complete());
}

TEST_CASE("parse diagnostics carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1 5\n0 1 6\n"),
                         doctest::Contains("line 3: duplicate edge 0-1"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1 5\n0 2 5\n"),
                         doctest::Contains("duplicate weight 5"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n1 1 5\n"), doctest::Contains("line 2: self-loop"),
                         GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 3 5\n"),
                         doctest::Contains("vertex id 3 out of range"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n1 0 5\n"),
                         doctest::Contains("endpoints must satisfy u < v"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 1 0\n"),
                         doctest::Contains("weight must be a positive integer"), GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 1\n"), doctest::Contains("malformed line"),
                         GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("3 1\n0 x 5\n"), doctest::Contains("malformed line"),
                         GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("3 2\n0 1 5\n"), doctest::Contains("unexpected end of input"),
                         GraphError);
    CHECK_THROWS_WITH_AS(parse_graph("2 1\n0 1 5\n0 1 6\n"),
                         doctest::Contains("unexpected content"), GraphError);
    CHECK_THROWS_AS(parse_graph(""), GraphError);
}

TEST_CASE("permissive mode accepts duplicate weights and flags them") {
    const WeightedGraph g = parse_graph("3 2\n0 1 5\n0 2 5\n", ParseMode::permissive);
    CHECK(g.has_duplicate_weights());
    CHECK_THROWS_AS(g.require_distinct_weights(), GraphError);
}

TEST_CASE("serialize then parse is the identity") {
    const WeightedGraph g = parse_graph(kK4Text);
    CHECK(serialize_graph(g) == kK4Text);

    const WeightedGraph empty = parse_graph("3 0\n");
    CHECK(serialize_graph(empty) == "3 0\n");

    const WeightedGraph big = gen_random_complete(200, Seed{99});
    const WeightedGraph round = parse_graph(serialize_graph(big));
    CHECK(round.vertex_count() == big.vertex_count());
    CHECK(round.edges() == big.edges());
}

TEST_CASE("edges_by_weight gives a strict total order on distinct weights") {
    const WeightedGraph g = gen_random_complete(9, Seed{3});
    const auto sorted = g.edges_by_weight();
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        CHECK(sorted[i - 1].second < sorted[i].second);
    }
}

TEST_CASE("induced subgraph: identity, single removal, isolating removal") {
    const WeightedGraph k4 = parse_graph(kK4Text);

    const auto same = induced_subgraph(k4, {});
    CHECK(same.graph.edges() == k4.edges());
    CHECK(same.original_ids == std::vector<int>{0, 1, 2, 3});

    const auto k3 = induced_subgraph(k4, {3});
    CHECK(k3.graph.vertex_count() == 3);
    CHECK(k3.graph.edge_count() == 3);
    CHECK(k3.graph.weight(Edge(0, 1)) == 1);
    CHECK(k3.graph.weight(Edge(0, 2)) == 2);
    CHECK(k3.graph.weight(Edge(1, 2)) == 4);

    WeightedGraph path(3);
    path.add_edge(Edge(0, 1), 1);
    path.add_edge(Edge(1, 2), 2);
    const auto split = induced_subgraph(path, {1});
    CHECK(split.graph.vertex_count() == 2);
    CHECK(split.graph.edge_count() == 0);
    CHECK(split.original_ids == std::vector<int>{0, 2});
}

TEST_CASE("induced subgraph rejects bad removals") {
    const WeightedGraph k4 = parse_graph(kK4Text);
    CHECK_THROWS_AS(induced_subgraph(k4, {0, 1, 2, 3}), GraphError);
    CHECK_THROWS_AS(induced_subgraph(k4, {7}), GraphError);
    CHECK_THROWS_AS(induced_subgraph(k4, {-1}), GraphError);
}

TEST_CASE("induced subgraph composes through the index mapping") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const WeightedGraph g = gen_random_complete(n, Seed{rng()});
        std::set<int> a, b;
        for (int v = 0; v < n; ++v) {
            const auto roll = rng() % 4;
            if (roll == 0) a.insert(v);
            else if (roll == 1) b.insert(v);
        }
        if (static_cast<int>(a.size() + b.size()) >= n) continue;

        std::set<int> both = a;
        both.insert(b.begin(), b.end());
        const auto direct = induced_subgraph(g, both);

        const auto first = induced_subgraph(g, a);
        std::set<int> b_mapped;
        for (int v : b) b_mapped.insert(first.new_ids[v]);
        const auto second = induced_subgraph(first.graph, b_mapped);

        CHECK(direct.graph.edges() == second.graph.edges());
    }
}

TEST_CASE("garbage input always yields a diagnostic, never a crash") {
    std::mt19937_64 rng(23);
    const std::string alphabet = "0123456789 -#\nabz.";
    for (int trial = 0; trial < 300; ++trial) {
        std::string text;
        const std::size_t len = rng() % 60;
        for (std::size_t i = 0; i < len; ++i) text += alphabet[rng() % alphabet.size()];
        try {
            const WeightedGraph g = parse_graph(text);
            CHECK(parse_graph(serialize_graph(g)).edges() == g.edges());
        } catch (const GraphError&) {
            // rejected with a diagnostic; that is the point
        }
    }
}

TEST_CASE("round-trip holds on random non-complete graphs") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        WeightedGraph g(n);
        Weight w = 1;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng() % 3 == 0) g.add_edge(Edge(u, v), w);
                w += 1 + static_cast<Weight>(rng() % 5);
            }
        }
        CHECK(parse_graph(serialize_graph(g)).edges() == g.edges());
    }
}

TEST_CASE("simple graph parser tolerates optional weights") {
    std::istringstream with_weights("3 2\n0 1 4\n1 2 9\n");
    const SimpleGraph a = parse_simple_graph(with_weights);
    CHECK(a.edge_count() == 2);
    CHECK(a.has_edge(Edge(1, 2)));

    std::istringstream bare("3 2\n0 1\n1 2\n");
    const SimpleGraph b = parse_simple_graph(bare);
    CHECK(b.edges() == a.edges());
}

TEST_SUITE_END();
