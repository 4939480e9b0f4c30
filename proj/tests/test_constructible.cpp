#include <random>
#include <sstream>

#include "doctest.h"
#include "mkcover/connectivity.hpp"
#include "mkcover/constructible.hpp"
#include "mkcover/generators.hpp"
#include "mkcover/mk_cover.hpp"
#include "mkcover/verify.hpp"
#include "oracles.hpp"

using namespace mkcover;

namespace {

const std::vector<Edge> kC4Cycle{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)};

ConstructionOrder c4_plus_diagonal(std::size_t diagonal_position) {
    ConstructionOrder o{2, 4, kC4Cycle};
    o.sequence.insert(o.sequence.begin() + diagonal_position, Edge(0, 2));
    return o;
}

// Brute-force edge-minimality check over every pair, validating the
// endpoint shortcut used by is_k_minimal.
bool k_minimal_all_pairs(const SimpleGraph& g, int k) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (oracles::local_connectivity(g, u, v) < k) return false;
        }
    }
    for (const Edge& e : g.edges()) {
        SimpleGraph reduced = g;
        reduced.remove_edge(e);
        bool some_pair_drops = false;
        for (int u = 0; u < n && !some_pair_drops; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (oracles::local_connectivity(reduced, u, v) < k) {
                    some_pair_drops = true;
                    break;
                }
            }
        }
        if (!some_pair_drops) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("constructible");

TEST_CASE("forest orders are 1-construction orders in any permutation") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 6;
        // Random forest: attach some vertices to a random earlier vertex.
        std::vector<Edge> edges;
        for (int v = 1; v < n; ++v) {
            if (rng() % 3 == 0) continue;
            edges.emplace_back(static_cast<int>(rng() % v), v);
        }
        for (int perm = 0; perm < 5; ++perm) {
            detail::fisher_yates(edges, rng);
            CHECK(check_order(ConstructionOrder{1, n, edges}).valid);
        }
    }
}

TEST_CASE("C4 plus a diagonal is 2-constructible iff the diagonal is not last") {
    for (std::size_t pos = 0; pos < 4; ++pos) {
        CHECK(check_order(c4_plus_diagonal(pos)).valid);
    }
    const auto verdict = check_order(c4_plus_diagonal(4));
    REQUIRE_FALSE(verdict.valid);
    CHECK(verdict.violation->index == 4);
    CHECK(verdict.violation->connectivity == 2);
}

TEST_CASE("malformed orders are rejected") {
    CHECK_THROWS_WITH_AS(
        check_order(ConstructionOrder{2, 4, {Edge(0, 1), Edge(0, 1)}}),
        doctest::Contains("duplicate edge"), GraphError);
    CHECK_THROWS_WITH_AS(check_order(ConstructionOrder{2, 3, {Edge(0, 3)}}),
                         doctest::Contains("out of range"), GraphError);
    CHECK_THROWS_AS(check_order(ConstructionOrder{0, 3, {Edge(0, 1)}}), GraphError);
}

TEST_CASE("extend_maximal from the empty graph with k = 1 builds a spanning tree") {
    for (int n = 2; n <= 7; ++n) {
        const SimpleGraph empty(n);
        const auto ext = extend_maximal(empty, 1, ConstructionOrder{1, n, {}});
        CHECK(ext.graph.edge_count() == static_cast<std::size_t>(n - 1));
        CHECK(ext.order.sequence.size() == static_cast<std::size_t>(n - 1));
        CHECK(check_order(ext.order).valid);
        // Connected and acyclic.
        for (int v = 1; v < n; ++v) {
            CHECK(local_connectivity(ext.graph, 0, v, 2) >= 1);
        }
    }
}

TEST_CASE("extend_maximal leaves a complete graph unchanged") {
    const SimpleGraph k4 = oracles::complete_graph(4);
    ConstructionOrder base{3, 4, k4.edges()};
    REQUIRE(check_order(base).valid);
    const auto ext = extend_maximal(k4, 3, base);
    CHECK(ext.graph.edge_count() == 6);
    CHECK(ext.order.sequence == base.sequence);
}

TEST_CASE("extend_maximal on the full C4 cycle appends nothing") {
    // Opposite cycle vertices are already 2-connected, so neither diagonal
    // can go at the end of the order; the appended-at-the-end extension is
    // stuck even though interleaved orders could place one diagonal earlier.
    const SimpleGraph c4 = oracles::cycle_graph(4);
    const ConstructionOrder base{2, 4, kC4Cycle};
    const auto ext = extend_maximal(c4, 2, base);
    CHECK(ext.graph.edge_count() == 4);
    CHECK(ext.order.sequence == base.sequence);
    CHECK(local_connectivity(ext.graph, 0, 2, 2) == 2);
    CHECK(local_connectivity(ext.graph, 1, 3, 2) == 2);
}

TEST_CASE("extend_maximal rejects invalid bases") {
    const SimpleGraph c4 = oracles::cycle_graph(4);
    CHECK_THROWS_WITH_AS(extend_maximal(c4, 2, ConstructionOrder{2, 4, {Edge(0, 1)}}),
                         doctest::Contains("do not build"), GraphError);
    CHECK_THROWS_WITH_AS(extend_maximal(c4, 1, ConstructionOrder{1, 4, kC4Cycle}),
                         doctest::Contains("not a k-construction order"), GraphError);
    CHECK_THROWS_AS(extend_maximal(c4, 2, ConstructionOrder{2, 5, kC4Cycle}), GraphError);
}

TEST_CASE("extension is append-maximal and stays within the edge bound") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);  // up to 8
        const int k = 1 + static_cast<int>(rng() % 3);
        if (k > n - 1) continue;
        ConstructionOrder base = random_valid_order(n, k, rng, rng() % 5);
        SimpleGraph g(n);
        for (const Edge& e : base.sequence) g.add_edge(e);

        const auto ext = extend_maximal(g, k, base);
        CHECK(check_order(ext.order).valid);

        // Remaining anti-edges all reached connectivity k: a second pass
        // would add nothing.
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (ext.graph.has_edge(Edge(u, v))) continue;
                CHECK(local_connectivity(ext.graph, u, v, k) >= k);
            }
        }
        if (n >= k + 1) {
            CHECK(ext.graph.edge_count() <= cover_edge_bound(n, k));
        }
    }
}

TEST_CASE("embed_weights on a single edge gives K2 with weight 1") {
    const WeightedGraph g = embed_weights(ConstructionOrder{1, 2, {Edge(0, 1)}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.weight(Edge(0, 1)) == 1);
}

TEST_CASE("embed_weights on the C4 cycle order reproduces the fixture") {
    const WeightedGraph g = embed_weights(ConstructionOrder{2, 4, kC4Cycle});
    CHECK(g.edges() == fixture_c4().edges());
}

TEST_CASE("embed_weights rejects invalid orders") {
    CHECK_THROWS_WITH_AS(embed_weights(c4_plus_diagonal(4)), doctest::Contains("invalid order"),
                         GraphError);
}

TEST_CASE("embedded order edges always land in the brute-force cover") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);  // up to 7
        const int k = 1 + static_cast<int>(rng() % std::min(3, n - 1));
        const ConstructionOrder order = random_valid_order(n, k, rng, 1 + rng() % 8);
        const WeightedGraph embedded = embed_weights(order);
        const EdgeSet cover = mk_brute(embedded, k).cover;
        for (const Edge& e : order.sequence) {
            CHECK(cover.contains(e));
        }
    }
}

TEST_CASE("k-minimality of the named instances") {
    for (int n = 4; n <= 7; ++n) {
        CHECK(is_k_minimal(oracles::cycle_graph(n), 2));
    }
    SimpleGraph c4_diag = oracles::cycle_graph(4);
    c4_diag.add_edge(Edge(0, 2));
    CHECK_FALSE(is_k_minimal(c4_diag, 2));

    CHECK(is_k_minimal(oracles::complete_graph(4), 3));
    CHECK(is_k_minimal(oracles::complete_graph(5), 4));
    CHECK_FALSE(is_k_minimal(oracles::complete_graph(4), 2));
    CHECK(is_k_minimal(oracles::path_graph(4), 1));  // trees are the 1-minimal graphs
}

TEST_CASE("endpoint shortcut matches the all-pairs definition on small graphs") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        const auto g = oracles::random_simple_graph(n, 140 + (rng() % 100), rng());
        for (int k = 1; k <= 3; ++k) {
            CHECK(is_k_minimal(g, k) == k_minimal_all_pairs(g, k));
        }
    }
}

TEST_CASE("every edge order of a k-minimal graph is a construction order") {
    std::mt19937_64 rng(45);
    const std::vector<std::pair<SimpleGraph, int>> instances{
        {oracles::cycle_graph(5), 2},
        {oracles::complete_graph(4), 3},
        {oracles::wheel_graph(5), 3},
    };
    for (const auto& [g, k] : instances) {
        REQUIRE(is_k_minimal(g, k));
        std::vector<Edge> edges = g.edges();
        for (int perm = 0; perm < 10; ++perm) {
            detail::fisher_yates(edges, rng);
            CHECK(check_order(ConstructionOrder{k, g.vertex_count(), edges}).valid);
        }
    }
}

TEST_CASE("order files round-trip") {
    ConstructionOrder o{2, 4, kC4Cycle};
    std::ostringstream out;
    serialize_order(o, out);
    CHECK(out.str() == "4 2\n0 1\n1 2\n2 3\n0 3\n");

    std::istringstream in(out.str());
    const ConstructionOrder back = parse_order(in);
    CHECK(back.k == o.k);
    CHECK(back.host_n == o.host_n);
    CHECK(back.sequence == o.sequence);

    std::istringstream bad("4 2\n0 1\n0 1\n");
    CHECK_THROWS_WITH_AS(parse_order(bad), doctest::Contains("duplicate edge"), GraphError);
    std::istringstream bad2("4 2\n0 9\n");
    CHECK_THROWS_WITH_AS(parse_order(bad2), doctest::Contains("out of range"), GraphError);
}

TEST_SUITE_END();
