#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "mkcover/graph.hpp"

namespace mkcover {

// An edge sequence claimed to witness k-constructibility: each edge, when
// added, must join endpoints that are at most (k-1)-connected in the graph
// built from the preceding edges.
struct ConstructionOrder {
    int k = 0;
    int host_n = 0;
    std::vector<Edge> sequence;
};

struct OrderViolation {
    std::size_t index;  // 0-based position in the sequence
    int connectivity;   // >= k at that point
};

struct OrderVerdict {
    bool valid = false;
    std::optional<OrderViolation> violation;
};

// Verifies the order edge by edge. Malformed orders (duplicate edge, endpoint
// out of range, k < 1) throw; a well-formed but failing order reports the
// first violating index.
OrderVerdict check_order(const ConstructionOrder& o);

struct MaximalExtension {
    SimpleGraph graph;
    ConstructionOrder order;
};

// Single pass over the anti-edges of g in lexicographic order, appending each
// one whose endpoints are still at most (k-1)-connected. Connectivity only
// grows as edges are added, so one pass reaches the fixpoint: afterwards no
// anti-edge can be appended.
MaximalExtension extend_maximal(const SimpleGraph& g, int k, const ConstructionOrder& base_order);

// Builds the complete graph on host_n vertices with weight i+1 on the i-th
// sequence edge and the remaining weights on the anti-edges in lexicographic
// order. Every sequence edge then lies in M_k of the result.
WeightedGraph embed_weights(const ConstructionOrder& o);

// Edge-minimal k-connectedness: every pair is at least k-connected, and
// removing any edge drops its own endpoints below k.
bool is_k_minimal(const SimpleGraph& g, int k);

// Order file format: header "n k", then one "u v" line per sequence edge.
ConstructionOrder parse_order(std::istream& in);
void serialize_order(const ConstructionOrder& o, std::ostream& out);

}  // namespace mkcover
