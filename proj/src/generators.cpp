#include "mkcover/generators.hpp"

#include <numeric>

namespace mkcover {

WeightedGraph gen_tight(int n, int k, Seed seed) {
    if (k < 1 || k > n - 1) {
        throw GraphError("gen_tight: need 1 <= k <= n-1 (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
    }

    // Classify each edge by how many endpoints fall inside V' = {0..k-1}.
    std::vector<std::vector<Edge>> classes(3);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int inside = (u < k ? 1 : 0) + (v < k ? 1 : 0);
            classes[inside].emplace_back(u, v);
        }
    }

    std::mt19937_64 rng(seed.value);
    WeightedGraph g(n);
    Weight next = 1;
    // Weight blocks ascend from the two-endpoint class down to the outside one.
    for (int inside = 2; inside >= 0; --inside) {
        std::vector<Weight> weights(classes[inside].size());
        std::iota(weights.begin(), weights.end(), next);
        next += static_cast<Weight>(weights.size());
        detail::fisher_yates(weights, rng);
        for (std::size_t i = 0; i < classes[inside].size(); ++i) {
            g.add_edge(classes[inside][i], weights[i]);
        }
    }
    return g;
}

WeightedGraph gen_random_complete(int n, Seed seed) {
    if (n < 2) throw GraphError("gen_random_complete: need n >= 2");

    std::vector<Weight> weights(static_cast<std::size_t>(n) * (n - 1) / 2);
    std::iota(weights.begin(), weights.end(), Weight{1});
    std::mt19937_64 rng(seed.value);
    detail::fisher_yates(weights, rng);

    WeightedGraph g(n);
    std::size_t i = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(Edge(u, v), weights[i++]);
        }
    }
    return g;
}

WeightedGraph fixture_c4() {
    WeightedGraph g(4);
    g.add_edge(Edge(0, 1), 1);
    g.add_edge(Edge(1, 2), 2);
    g.add_edge(Edge(2, 3), 3);
    g.add_edge(Edge(0, 3), 4);
    g.add_edge(Edge(0, 2), 5);
    g.add_edge(Edge(1, 3), 6);
    return g;
}

}  // namespace mkcover
