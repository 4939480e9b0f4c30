#include "mkcover/mst.hpp"

#include <numeric>

namespace mkcover {

DisjointSets::DisjointSets(int n) : parent_(n), rank_(n, 0), components_(n) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSets::find(int x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool DisjointSets::unite(int a, int b) {
    int ra = find(a);
    int rb = find(b);
    if (ra == rb) return false;
    if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
    parent_[rb] = ra;
    if (rank_[ra] == rank_[rb]) ++rank_[ra];
    --components_;
    return true;
}

EdgeSet mst(const WeightedGraph& g) {
    const int n = g.vertex_count();
    EdgeSet tree;
    if (n <= 1) return tree;

    DisjointSets sets(n);
    for (const auto& [e, w] : g.edges_by_weight()) {
        if (sets.unite(e.u, e.v)) {
            tree.insert(e);
            if (static_cast<int>(tree.size()) == n - 1) break;
        }
    }
    if (static_cast<int>(tree.size()) != n - 1) {
        const int root = sets.find(0);
        for (int v = 1; v < n; ++v) {
            if (sets.find(v) != root) {
                throw GraphError("graph is disconnected: no path between 0 and " +
                                 std::to_string(v));
            }
        }
    }
    return tree;
}

std::set<int> mst_leaves(const EdgeSet& tree, int n) {
    if (n < 1) throw GraphError("mst_leaves: need n >= 1");
    if (static_cast<int>(tree.size()) != n - 1) {
        throw GraphError("not a spanning tree: expected " + std::to_string(n - 1) +
                         " edges, got " + std::to_string(tree.size()));
    }
    std::vector<int> degree(n, 0);
    DisjointSets sets(n);
    for (const Edge& e : tree) {
        if (e.u < 0 || e.v >= n) {
            throw GraphError("not a spanning tree: edge " + std::to_string(e.u) + "-" +
                             std::to_string(e.v) + " out of range");
        }
        if (!sets.unite(e.u, e.v)) {
            throw GraphError("not a spanning tree: contains a cycle through " +
                             std::to_string(e.u) + "-" + std::to_string(e.v));
        }
        ++degree[e.u];
        ++degree[e.v];
    }
    // n-1 acyclic edges on n vertices are automatically connected.
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.insert(v);
    }
    return leaves;
}

}  // namespace mkcover
