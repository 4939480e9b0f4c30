#pragma once

#include <set>

#include "mkcover/graph.hpp"

namespace mkcover {

// Witness that deleting `separator` disconnects s from t, found together with
// a maximum packing of internally vertex-disjoint s-t paths. For non-adjacent
// s,t the two numbers coincide (Menger).
struct SeparatorCertificate {
    int s;
    int t;
    std::set<int> separator;
    int paths_found;
};

// Maximum number of internally vertex-disjoint s-t paths, capped at `cap`.
// A direct {s,t} edge counts as one path; the rest are packed in g minus that
// edge. Runs a unit-capacity vertex-split flow with BFS augmenting paths and
// stops as soon as `cap` paths are found.
int local_connectivity(const SimpleGraph& g, int s, int t, int cap);
int local_connectivity(const WeightedGraph& g, int s, int t, int cap);

// Minimum vertex separator for a non-adjacent pair, extracted from the
// residual reachability frontier of the final flow.
SeparatorCertificate min_separator(const SimpleGraph& g, int s, int t);

}  // namespace mkcover
