#include "mkcover/constructible.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "mkcover/connectivity.hpp"

namespace mkcover {

namespace {

void check_well_formed(const ConstructionOrder& o) {
    if (o.k < 1) {
        throw GraphError("malformed order: k must be >= 1 (got " + std::to_string(o.k) + ")");
    }
    if (o.host_n < 0) {
        throw GraphError("malformed order: negative vertex count");
    }
    std::set<Edge> seen;
    for (std::size_t i = 0; i < o.sequence.size(); ++i) {
        const Edge& e = o.sequence[i];
        if (e.u < 0 || e.v >= o.host_n) {
            throw GraphError("malformed order: edge " + std::to_string(e.u) + "-" +
                             std::to_string(e.v) + " at index " + std::to_string(i) +
                             " out of range (n=" + std::to_string(o.host_n) + ")");
        }
        if (!seen.insert(e).second) {
            throw GraphError("malformed order: duplicate edge " + std::to_string(e.u) + "-" +
                             std::to_string(e.v) + " at index " + std::to_string(i));
        }
    }
}

}  // namespace

OrderVerdict check_order(const ConstructionOrder& o) {
    check_well_formed(o);

    SimpleGraph prefix(o.host_n);
    for (std::size_t i = 0; i < o.sequence.size(); ++i) {
        const Edge& e = o.sequence[i];
        const int connectivity = local_connectivity(prefix, e.u, e.v, o.k);
        if (connectivity >= o.k) {
            return OrderVerdict{false, OrderViolation{i, connectivity}};
        }
        prefix.add_edge(e);
    }
    return OrderVerdict{true, std::nullopt};
}

MaximalExtension extend_maximal(const SimpleGraph& g, int k, const ConstructionOrder& base_order) {
    if (base_order.k != k) {
        throw GraphError("invalid base order: order k=" + std::to_string(base_order.k) +
                         " does not match requested k=" + std::to_string(k));
    }
    if (base_order.host_n != g.vertex_count()) {
        throw GraphError("invalid base order: host vertex count " +
                         std::to_string(base_order.host_n) + " does not match graph (n=" +
                         std::to_string(g.vertex_count()) + ")");
    }
    const std::set<Edge> order_edges(base_order.sequence.begin(), base_order.sequence.end());
    const auto graph_edges = g.edges();
    if (order_edges.size() != graph_edges.size() ||
        !std::equal(order_edges.begin(), order_edges.end(), graph_edges.begin())) {
        throw GraphError("invalid base order: its edges do not build the given graph");
    }
    if (!check_order(base_order).valid) {
        throw GraphError("invalid base order: not a k-construction order");
    }

    MaximalExtension result{g, base_order};
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const Edge e(u, v);
            if (result.graph.has_edge(e)) continue;
            if (local_connectivity(result.graph, u, v, k) <= k - 1) {
                result.graph.add_edge(e);
                result.order.sequence.push_back(e);
            }
        }
    }
    return result;
}

WeightedGraph embed_weights(const ConstructionOrder& o) {
    const auto verdict = check_order(o);
    if (!verdict.valid) {
        std::ostringstream msg;
        msg << "invalid order: edge " << o.sequence[verdict.violation->index] << " at index "
            << verdict.violation->index << " joins endpoints that are already "
            << verdict.violation->connectivity << "-connected (k=" << o.k << ")";
        throw GraphError(msg.str());
    }

    WeightedGraph g(o.host_n);
    Weight next = 1;
    for (const Edge& e : o.sequence) {
        g.add_edge(e, next++);
    }
    const std::set<Edge> used(o.sequence.begin(), o.sequence.end());
    for (int u = 0; u < o.host_n; ++u) {
        for (int v = u + 1; v < o.host_n; ++v) {
            const Edge e(u, v);
            if (!used.contains(e)) g.add_edge(e, next++);
        }
    }
    return g;
}

bool is_k_minimal(const SimpleGraph& g, int k) {
    if (k < 1) throw GraphError("is_k_minimal: k must be >= 1");
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (local_connectivity(g, u, v, k) < k) return false;
        }
    }
    // Removing an edge lowers connectivity only for pairs it separates, so
    // checking the endpoints of the removed edge suffices.
    SimpleGraph scratch = g;
    for (const Edge& e : g.edges()) {
        scratch.remove_edge(e);
        const bool still_connected = local_connectivity(scratch, e.u, e.v, k) >= k;
        scratch.add_edge(e);
        if (still_connected) return false;
    }
    return true;
}

ConstructionOrder parse_order(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            if (!out.empty() && out.back() == '\r') out.pop_back();
            const auto first = out.find_first_not_of(" \t");
            if (first == std::string::npos || out[first] == '#') continue;
            return true;
        }
        return false;
    };
    auto fields_of = [&](const std::string& text, std::size_t want, const char* expected) {
        std::vector<long long> fields;
        const char* p = text.data();
        const char* end = text.data() + text.size();
        while (p != end) {
            if (*p == ' ' || *p == '\t') {
                ++p;
                continue;
            }
            long long value = 0;
            auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t')) {
                throw GraphError("line " + std::to_string(line_no) +
                                 ": malformed line (expected " + expected + ")");
            }
            fields.push_back(value);
            p = next;
        }
        if (fields.size() != want) {
            throw GraphError("line " + std::to_string(line_no) + ": malformed line (expected " +
                             expected + ")");
        }
        return fields;
    };

    if (!next_line(line)) throw GraphError("empty input: expected header \"n k\"");
    const auto header = fields_of(line, 2, "\"n k\"");
    if (header[0] < 0 || header[1] < 1) {
        throw GraphError("line " + std::to_string(line_no) +
                         ": header must be \"n k\" with n >= 0 and k >= 1");
    }

    ConstructionOrder o;
    o.host_n = static_cast<int>(header[0]);
    o.k = static_cast<int>(header[1]);
    while (next_line(line)) {
        const auto fields = fields_of(line, 2, "\"u v\"");
        if (fields[0] == fields[1]) {
            throw GraphError("line " + std::to_string(line_no) + ": self-loop " +
                             std::to_string(fields[0]) + "-" + std::to_string(fields[1]));
        }
        if (fields[0] < 0 || fields[1] < 0 || fields[0] >= o.host_n || fields[1] >= o.host_n) {
            throw GraphError("line " + std::to_string(line_no) + ": vertex id out of range (n=" +
                             std::to_string(o.host_n) + ")");
        }
        o.sequence.emplace_back(static_cast<int>(fields[0]), static_cast<int>(fields[1]));
    }
    check_well_formed(o);
    return o;
}

void serialize_order(const ConstructionOrder& o, std::ostream& out) {
    out << o.host_n << ' ' << o.k << '\n';
    for (const Edge& e : o.sequence) {
        out << e.u << ' ' << e.v << '\n';
    }
}

}  // namespace mkcover
