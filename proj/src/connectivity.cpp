#include "mkcover/connectivity.hpp"

#include <cassert>
#include <queue>
#include <vector>

namespace mkcover {

namespace {

// Vertex-split digraph: vertex v becomes in(v) -> out(v) with capacity 1
// (unbounded for the endpoints), and each undirected edge {a,b} becomes arcs
// out(a) -> in(b) and out(b) -> in(a). Edge arcs get capacity n+1 rather than
// 1 so that every finite-capacity arc crossing a minimum cut is a split arc;
// the flow value is unchanged because the split arcs stay the bottleneck.
constexpr int in_node(int v) { return 2 * v; }
constexpr int out_node(int v) { return 2 * v + 1; }

class SplitFlow {
  public:
    SplitFlow(const SimpleGraph& g, int s, int t, bool drop_direct_edge) {
        const int n = g.vertex_count();
        const int big = n + 1;
        out_.resize(2 * static_cast<std::size_t>(n));
        arcs_.reserve(2 * (static_cast<std::size_t>(n) + 2 * g.edge_count()));
        for (int v = 0; v < n; ++v) {
            add_arc(in_node(v), out_node(v), (v == s || v == t) ? big : 1);
        }
        for (int u = 0; u < n; ++u) {
            for (int v : g.neighbors(u)) {
                if (v <= u) continue;
                if (drop_direct_edge && ((u == s && v == t) || (u == t && v == s))) continue;
                add_arc(out_node(u), in_node(v), big);
                add_arc(out_node(v), in_node(u), big);
            }
        }
    }

    // Pushes one unit along a shortest augmenting path; false when none exists.
    bool augment(int source, int sink) {
        parent_.assign(out_.size(), -1);
        std::queue<int> frontier;
        frontier.push(source);
        parent_[source] = -2;
        while (!frontier.empty()) {
            const int node = frontier.front();
            frontier.pop();
            for (int a : out_[node]) {
                const int to = arcs_[a].to;
                if (arcs_[a].cap <= 0 || parent_[to] != -1) continue;
                parent_[to] = a;
                if (to == sink) {
                    for (int v = sink; v != source;) {
                        const int arc = parent_[v];
                        arcs_[arc].cap -= 1;
                        arcs_[arc ^ 1].cap += 1;
                        v = arcs_[arc ^ 1].to;
                    }
                    return true;
                }
                frontier.push(to);
            }
        }
        return false;
    }

    int max_flow(int source, int sink, int limit) {
        int flow = 0;
        while (flow < limit && augment(source, sink)) ++flow;
        return flow;
    }

    std::vector<char> residual_reachable(int source) const {
        std::vector<char> seen(out_.size(), 0);
        std::queue<int> frontier;
        frontier.push(source);
        seen[source] = 1;
        while (!frontier.empty()) {
            const int node = frontier.front();
            frontier.pop();
            for (int a : out_[node]) {
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = 1;
                    frontier.push(arcs_[a].to);
                }
            }
        }
        return seen;
    }

  private:
    struct Arc {
        int to;
        int cap;
    };

    void add_arc(int from, int to, int cap) {
        out_[from].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap});
        out_[to].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0});
    }

    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<int> parent_;
};

void check_query(const SimpleGraph& g, int s, int t, const char* what) {
    const int n = g.vertex_count();
    if (s < 0 || s >= n || t < 0 || t >= n) {
        throw GraphError(std::string(what) + ": vertex out of range (n=" + std::to_string(n) + ")");
    }
    if (s == t) {
        throw GraphError(std::string(what) + ": endpoints must differ (got s = t = " +
                         std::to_string(s) + ")");
    }
}

}  // namespace

int local_connectivity(const SimpleGraph& g, int s, int t, int cap) {
    check_query(g, s, t, "local_connectivity");
    if (cap < 1) throw GraphError("local_connectivity: cap must be >= 1");

    const bool adjacent = g.has_edge(Edge(s, t));
    const int base = adjacent ? 1 : 0;
    if (cap <= base) return cap;

    SplitFlow net(g, s, t, adjacent);
    return base + net.max_flow(out_node(s), in_node(t), cap - base);
}

int local_connectivity(const WeightedGraph& g, int s, int t, int cap) {
    return local_connectivity(SimpleGraph(g), s, t, cap);
}

SeparatorCertificate min_separator(const SimpleGraph& g, int s, int t) {
    check_query(g, s, t, "min_separator");
    if (g.has_edge(Edge(s, t))) {
        throw GraphError("min_separator: " + std::to_string(s) + " and " + std::to_string(t) +
                         " are adjacent; no vertex set separates them");
    }

    SplitFlow net(g, s, t, false);
    const int paths = net.max_flow(out_node(s), in_node(t), g.vertex_count());

    const auto seen = net.residual_reachable(out_node(s));
    SeparatorCertificate cert{s, t, {}, paths};
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen[in_node(v)] && !seen[out_node(v)]) {
            assert(v != s && v != t);
            cert.separator.insert(v);
        }
    }
    assert(static_cast<int>(cert.separator.size()) == paths);
    return cert;
}

}  // namespace mkcover
