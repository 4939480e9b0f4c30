#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mkcover/errors.hpp"

namespace mkcover {

// Edge weights are exact positive integers (>= 1). The theory only needs a
// strict total order on the edges, and integers keep outputs bit-exact.
using Weight = std::int64_t;

// Undirected edge stored canonically with u < v, so {u,v} and {v,u} compare
// equal. Self-loops are rejected at construction.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) {
            throw GraphError("self-loop " + std::to_string(a) + "-" + std::to_string(b));
        }
    }

    auto operator<=>(const Edge&) const = default;
};

std::ostream& operator<<(std::ostream& out, const Edge& e);

// Canonically ordered edge set; iteration is (u,v)-lexicographic.
using EdgeSet = std::set<Edge>;

// Simple undirected graph with one positive weight per edge. Immutable after
// construction by convention: build it, then share it freely across threads.
class WeightedGraph {
  public:
    explicit WeightedGraph(int n);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool is_complete() const noexcept;

    void add_edge(Edge e, Weight w);
    bool has_edge(Edge e) const { return edges_.contains(e); }
    Weight weight(Edge e) const;

    const std::map<Edge, Weight>& edges() const noexcept { return edges_; }

    // Edges sorted ascending by (weight, u, v). With distinct weights this is
    // the weight order; with duplicates it is the tie-broken total order.
    std::vector<std::pair<Edge, Weight>> edges_by_weight() const;

    bool has_duplicate_weights() const;
    void require_distinct_weights() const;

  private:
    int n_;
    std::map<Edge, Weight> edges_;
};

// Unweighted adjacency structure used by connectivity queries and the
// constructibility machinery. Neighbor lists are kept sorted.
class SimpleGraph {
  public:
    explicit SimpleGraph(int n);
    explicit SimpleGraph(const WeightedGraph& g);
    SimpleGraph(int n, const EdgeSet& edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }

    bool has_edge(Edge e) const;
    void add_edge(Edge e);
    void remove_edge(Edge e);

    const std::vector<int>& neighbors(int v) const;
    std::vector<Edge> edges() const;  // canonical (u,v)-lexicographic order

  private:
    void check_vertex(int v) const;

    int n_;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Result of deleting a vertex set: the surviving graph re-indexed densely,
// plus both directions of the index mapping.
struct InducedSubgraph {
    WeightedGraph graph;
    std::vector<int> original_ids;  // new index -> original id
    std::vector<int> new_ids;       // original id -> new index, -1 if removed
};

InducedSubgraph induced_subgraph(const WeightedGraph& g, const std::set<int>& removed);

// Strict mode rejects duplicate weights; permissive mode accepts them and the
// algorithms fall back to the (weight, u, v) tie-broken order.
enum class ParseMode { strict, permissive };

// Text format: header "n m", then m lines "u v w" with 0 <= u < v < n and
// w a positive integer. Lines starting with '#' and blank lines are ignored.
WeightedGraph parse_graph(std::istream& in, ParseMode mode = ParseMode::strict);
WeightedGraph parse_graph(const std::string& text, ParseMode mode = ParseMode::strict);

void serialize_graph(const WeightedGraph& g, std::ostream& out);
std::string serialize_graph(const WeightedGraph& g);

// Same header/line layout but weights are optional and ignored.
SimpleGraph parse_simple_graph(std::istream& in);

}  // namespace mkcover
