#include "mkcover/mk_cover.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <thread>

#include "mkcover/connectivity.hpp"
#include "mkcover/mst.hpp"

namespace mkcover {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

std::uint64_t binomial_saturating(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t result = 1;
    for (int i = 0; i < r; ++i) {
        result = saturating_mul(result, static_cast<std::uint64_t>(n - i));
        result /= static_cast<std::uint64_t>(i) + 1;
    }
    return result;
}

void check_k_range(const WeightedGraph& g, int k) {
    if (k < 1 || k > g.vertex_count() - 1) {
        throw GraphError("k out of range: need 1 <= k <= n-1 (k=" + std::to_string(k) +
                         ", n=" + std::to_string(g.vertex_count()) + ")");
    }
}

CoverReport finish_report(const WeightedGraph& g, int k, EdgeSet cover, CoverMethod method,
                          std::vector<Edge> order, Clock::time_point started) {
    CoverReport report;
    report.k = k;
    report.cover_size = cover.size();
    report.cover = std::move(cover);
    report.bound = cover_edge_bound(g.vertex_count(), k);
    report.gv_bound = goemans_vondrak_bound(g.vertex_count(), k);
    report.tight = report.cover_size == report.bound;
    report.method = method;
    report.order = std::move(order);
    report.tie_broken = g.has_duplicate_weights();
    check_cover_bound(g.vertex_count(), k, report.cover_size);
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started);
    return report;
}

// The completeness assumption only matters if some (k-1)-vertex deletion can
// disconnect g, which happens exactly when some non-adjacent pair is less
// than k-connected. Pairs that reached connectivity k in the accepted
// subgraph are already safe, so only the ones that stayed under k get
// re-checked against the full graph.
void check_no_disconnecting_deletion(const WeightedGraph& g, const SimpleGraph& accepted, int k) {
    const int n = g.vertex_count();
    const SimpleGraph full(g);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const Edge e(u, v);
            if (g.has_edge(e)) continue;
            if (local_connectivity(accepted, u, v, k) >= k) continue;
            if (local_connectivity(full, u, v, k) >= k) continue;
            const auto cert = min_separator(full, u, v);
            std::ostringstream msg;
            msg << "M_" << k << " is undefined for this graph: deleting {";
            bool first = true;
            for (int x : cert.separator) {
                msg << (first ? "" : ", ") << x;
                first = false;
            }
            msg << "} (" << cert.separator.size() << " <= k-1 vertices) disconnects " << u
                << " and " << v;
            throw GraphError(msg.str());
        }
    }
}

}  // namespace

const char* to_string(CoverMethod m) {
    return m == CoverMethod::fast ? "fast" : "brute";
}

std::uint64_t cover_edge_bound(int n, int k) {
    return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(k) -
           static_cast<std::uint64_t>(k) * (static_cast<std::uint64_t>(k) + 1) / 2;
}

std::uint64_t goemans_vondrak_bound(int n, int k) {
    const double value = (1.0 + std::numbers::e / 2.0) * static_cast<double>(k) * n;
    return static_cast<std::uint64_t>(std::ceil(value));
}

void check_cover_bound(int n, int k, std::size_t cover_size) {
    const std::uint64_t bound = cover_edge_bound(n, k);
    if (cover_size > bound) {
        std::ostringstream msg;
        msg << "cover bound violated: |M_" << k << "| = " << cover_size << " > " << bound
            << " = n*k - (k+1 choose 2) with n=" << n
            << "; this contradicts the edge bound and indicates a bug or a counterexample";
        throw InvariantViolation(msg.str());
    }
}

CoverReport mk_fast(const WeightedGraph& g, int k) {
    check_k_range(g, k);
    const auto started = Clock::now();

    SimpleGraph accepted(g.vertex_count());
    std::vector<Edge> order;
    for (const auto& [e, w] : g.edges_by_weight()) {
        if (local_connectivity(accepted, e.u, e.v, k) <= k - 1) {
            accepted.add_edge(e);
            order.push_back(e);
        }
    }
    if (!g.is_complete()) {
        check_no_disconnecting_deletion(g, accepted, k);
    }

    EdgeSet cover(order.begin(), order.end());
    return finish_report(g, k, std::move(cover), CoverMethod::fast, std::move(order), started);
}

CoverReport mk_brute(const WeightedGraph& g, int k, std::uint64_t work_limit, int threads) {
    check_k_range(g, k);
    const auto started = Clock::now();
    const int n = g.vertex_count();

    const std::uint64_t subset_count = binomial_saturating(n, k - 1);
    const std::uint64_t work =
        saturating_mul(subset_count, std::max<std::uint64_t>(g.edge_count(), 1));
    if (work > work_limit) {
        std::ostringstream msg;
        msg << "brute-force work estimate " << work << " (C(" << n << "," << k - 1 << ") * "
            << g.edge_count() << " edges) exceeds limit " << work_limit
            << "; use mk_fast or raise the limit";
        throw WorkLimitError(msg.str());
    }

    // Materialize all (k-1)-subsets in lexicographic order.
    std::vector<std::vector<int>> subsets;
    subsets.reserve(static_cast<std::size_t>(subset_count));
    std::vector<int> pick(k - 1);
    std::iota(pick.begin(), pick.end(), 0);
    if (k - 1 == 0) {
        subsets.push_back({});
    } else {
        while (true) {
            subsets.push_back(pick);
            int i = k - 2;
            while (i >= 0 && pick[i] == n - (k - 1) + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k - 1; ++j) pick[j] = pick[j - 1] + 1;
        }
    }

    auto union_of_range = [&g](const std::vector<std::vector<int>>& work_items, std::size_t lo,
                               std::size_t hi) {
        EdgeSet acc;
        for (std::size_t i = lo; i < hi; ++i) {
            const std::set<int> removed(work_items[i].begin(), work_items[i].end());
            const auto induced = induced_subgraph(g, removed);
            EdgeSet tree;
            try {
                tree = mst(induced.graph);
            } catch (const GraphError&) {
                std::ostringstream msg;
                msg << "induced subgraph disconnected after removing {";
                bool first = true;
                for (int x : removed) {
                    msg << (first ? "" : ", ") << x;
                    first = false;
                }
                msg << "}; M_k is undefined for this graph";
                throw GraphError(msg.str());
            }
            for (const Edge& e : tree) {
                acc.emplace(induced.original_ids[e.u], induced.original_ids[e.v]);
            }
        }
        return acc;
    };

    int worker_count = threads;
    if (worker_count <= 0) {
        worker_count = static_cast<int>(std::thread::hardware_concurrency());
        if (worker_count < 1) worker_count = 1;
    }
    worker_count = std::min<int>(worker_count, static_cast<int>(subsets.size()));

    EdgeSet cover;
    if (worker_count <= 1) {
        cover = union_of_range(subsets, 0, subsets.size());
    } else {
        std::vector<EdgeSet> partial(worker_count);
        std::vector<std::exception_ptr> errors(worker_count);
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        const std::size_t chunk = (subsets.size() + worker_count - 1) / worker_count;
        for (int w = 0; w < worker_count; ++w) {
            const std::size_t lo = std::min(subsets.size(), w * chunk);
            const std::size_t hi = std::min(subsets.size(), lo + chunk);
            pool.emplace_back([&, w, lo, hi] {
                try {
                    partial[w] = union_of_range(subsets, lo, hi);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& worker : pool) worker.join();
        for (const auto& err : errors) {
            if (err) std::rethrow_exception(err);
        }
        for (auto& part : partial) {
            cover.merge(part);
        }
    }

    return finish_report(g, k, std::move(cover), CoverMethod::brute, {}, started);
}

bool check_monotone(const WeightedGraph& g, int k, CoverMethod method) {
    if (k < 1 || k > g.vertex_count() - 2) {
        throw GraphError("k out of range: need 1 <= k <= n-2 (k=" + std::to_string(k) +
                         ", n=" + std::to_string(g.vertex_count()) + ")");
    }
    auto compute = [&](int kk) {
        return method == CoverMethod::fast ? mk_fast(g, kk) : mk_brute(g, kk);
    };
    const auto lower = compute(k);
    const auto upper = compute(k + 1);
    return std::includes(upper.cover.begin(), upper.cover.end(), lower.cover.begin(),
                         lower.cover.end());
}

}  // namespace mkcover
