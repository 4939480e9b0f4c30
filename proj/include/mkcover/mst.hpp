#pragma once

#include <set>
#include <vector>

#include "mkcover/graph.hpp"

namespace mkcover {

// Union-find with path compression and union by rank.
class DisjointSets {
  public:
    explicit DisjointSets(int n);

    int find(int x);
    bool unite(int a, int b);  // false when already joined
    int components() const noexcept { return components_; }

  private:
    std::vector<int> parent_;
    std::vector<int> rank_;
    int components_;
};

// Kruskal. The result is unique because edges are scanned in the strict
// (weight, u, v) order. Throws naming two unreachable vertices if g is
// disconnected.
EdgeSet mst(const WeightedGraph& g);

// Degree-1 vertices of a spanning tree on n vertices; validates that the
// input really is one.
std::set<int> mst_leaves(const EdgeSet& tree, int n);

}  // namespace mkcover
