#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "mkcover/graph.hpp"

namespace mkcover {

enum class CoverMethod { fast, brute };

const char* to_string(CoverMethod m);

// Result of one M_k computation, with the edge bound nk - C(k+1,2) attached.
// The bound is enforced at construction time: exceeding it throws
// InvariantViolation, since that would contradict the theory.
struct CoverReport {
    int k = 0;
    EdgeSet cover;
    std::size_t cover_size = 0;
    std::uint64_t bound = 0;     // nk - (k+1 choose 2)
    std::uint64_t gv_bound = 0;  // ceil((1 + e/2) k n), reported for comparison only
    bool tight = false;          // cover_size == bound
    CoverMethod method = CoverMethod::fast;
    std::chrono::nanoseconds elapsed{0};
    std::vector<Edge> order;  // fast method: accepted edges in weight order
    bool tie_broken = false;  // duplicate weights present, (weight,u,v) order used
};

inline constexpr std::uint64_t kDefaultWorkLimit = std::uint64_t{1} << 28;

std::uint64_t cover_edge_bound(int n, int k);
std::uint64_t goemans_vondrak_bound(int n, int k);

// Hard assertion behind every CoverReport; throws InvariantViolation when the
// cover exceeds the bound.
void check_cover_bound(int n, int k, std::size_t cover_size);

// Generalized Kruskal: scan edges by increasing weight, accept an edge iff its
// endpoints are at most (k-1)-connected in the accepted subgraph so far. The
// accepted sequence is a k-construction order. For non-complete inputs, errors
// if some (k-1)-vertex deletion disconnects the graph.
CoverReport mk_fast(const WeightedGraph& g, int k);

// Definitional oracle: union of MST(G[V \ X]) over all (k-1)-subsets X,
// mapped back to original vertex ids. Estimated cost is guarded by
// work_limit; threads > 1 fans subsets out across workers (the union is
// order-independent, so the result is identical), threads <= 0 picks the
// hardware concurrency.
CoverReport mk_brute(const WeightedGraph& g, int k,
                     std::uint64_t work_limit = kDefaultWorkLimit, int threads = 1);

// Whether M_k(g) is contained in M_{k+1}(g). Always true; a false return
// means a bug.
bool check_monotone(const WeightedGraph& g, int k, CoverMethod method = CoverMethod::fast);

}  // namespace mkcover
