#include "mkcover/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace mkcover {

std::ostream& operator<<(std::ostream& out, const Edge& e) {
    return out << e.u << "-" << e.v;
}

WeightedGraph::WeightedGraph(int n) : n_(n) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
}

bool WeightedGraph::is_complete() const noexcept {
    const auto full = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    return n_ >= 1 && edges_.size() == full;
}

void WeightedGraph::add_edge(Edge e, Weight w) {
    if (e.u < 0 || e.v >= n_) {
        throw GraphError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                         " out of range (n=" + std::to_string(n_) + ")");
    }
    if (w < 1) throw GraphError("weight must be a positive integer");
    if (!edges_.emplace(e, w).second) {
        throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
}

Weight WeightedGraph::weight(Edge e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) {
        throw GraphError("no such edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    return it->second;
}

std::vector<std::pair<Edge, Weight>> WeightedGraph::edges_by_weight() const {
    std::vector<std::pair<Edge, Weight>> out(edges_.begin(), edges_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

bool WeightedGraph::has_duplicate_weights() const {
    std::vector<Weight> ws;
    ws.reserve(edges_.size());
    for (const auto& [e, w] : edges_) ws.push_back(w);
    std::sort(ws.begin(), ws.end());
    return std::adjacent_find(ws.begin(), ws.end()) != ws.end();
}

void WeightedGraph::require_distinct_weights() const {
    std::map<Weight, Edge> seen;
    for (const auto& [e, w] : edges_) {
        auto [it, fresh] = seen.emplace(w, e);
        if (!fresh) {
            std::ostringstream msg;
            msg << "duplicate weight " << w << " on edges " << it->second << " and " << e;
            throw GraphError(msg.str());
        }
    }
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(n >= 0 ? n : 0) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
}

SimpleGraph::SimpleGraph(const WeightedGraph& g) : SimpleGraph(g.vertex_count()) {
    for (const auto& [e, w] : g.edges()) add_edge(e);
}

SimpleGraph::SimpleGraph(int n, const EdgeSet& edges) : SimpleGraph(n) {
    for (const Edge& e : edges) add_edge(e);
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) {
        throw GraphError("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
    }
}

bool SimpleGraph::has_edge(Edge e) const {
    check_vertex(e.u);
    check_vertex(e.v);
    const auto& list = adj_[e.u];
    return std::binary_search(list.begin(), list.end(), e.v);
}

void SimpleGraph::add_edge(Edge e) {
    if (has_edge(e)) {
        throw GraphError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    auto insert_sorted = [](std::vector<int>& list, int x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[e.u], e.v);
    insert_sorted(adj_[e.v], e.u);
    ++m_;
}

void SimpleGraph::remove_edge(Edge e) {
    if (!has_edge(e)) {
        throw GraphError("no such edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    auto erase_sorted = [](std::vector<int>& list, int x) {
        list.erase(std::lower_bound(list.begin(), list.end(), x));
    };
    erase_sorted(adj_[e.u], e.v);
    erase_sorted(adj_[e.v], e.u);
    --m_;
}

const std::vector<int>& SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (v > u) out.emplace_back(u, v);
        }
    }
    return out;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const std::set<int>& removed) {
    const int n = g.vertex_count();
    for (int v : removed) {
        if (v < 0 || v >= n) {
            throw GraphError("removed vertex " + std::to_string(v) + " out of range (n=" +
                             std::to_string(n) + ")");
        }
    }
    if (static_cast<int>(removed.size()) >= n) {
        throw GraphError("cannot remove all vertices");
    }

    std::vector<int> new_ids(n, -1);
    std::vector<int> original_ids;
    original_ids.reserve(n - removed.size());
    for (int v = 0; v < n; ++v) {
        if (!removed.contains(v)) {
            new_ids[v] = static_cast<int>(original_ids.size());
            original_ids.push_back(v);
        }
    }

    WeightedGraph sub(static_cast<int>(original_ids.size()));
    for (const auto& [e, w] : g.edges()) {
        if (new_ids[e.u] >= 0 && new_ids[e.v] >= 0) {
            sub.add_edge(Edge(new_ids[e.u], new_ids[e.v]), w);
        }
    }
    return InducedSubgraph{std::move(sub), std::move(original_ids), std::move(new_ids)};
}

namespace {

// Line-oriented reader that skips comments and blank lines but keeps the
// physical line number for diagnostics.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos) continue;
            if (line[first] == '#') continue;
            out = line;
            return true;
        }
        return false;
    }

    int line_no() const { return line_no_; }

  private:
    std::istream& in_;
    int line_no_ = 0;
};

std::vector<long long> parse_int_fields(const std::string& line, int line_no,
                                        std::size_t min_fields, std::size_t max_fields,
                                        const std::string& expected) {
    std::vector<long long> fields;
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p != end) {
        if (*p == ' ' || *p == '\t') {
            ++p;
            continue;
        }
        long long value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc() || (next != end && *next != ' ' && *next != '\t')) {
            throw GraphError("line " + std::to_string(line_no) + ": malformed line (expected " +
                             expected + ")");
        }
        fields.push_back(value);
        p = next;
    }
    if (fields.size() < min_fields || fields.size() > max_fields) {
        throw GraphError("line " + std::to_string(line_no) + ": malformed line (expected " +
                         expected + ")");
    }
    return fields;
}

struct EdgeLine {
    int u;
    int v;
    long long w;  // -1 when absent
};

EdgeLine parse_edge_line(const std::string& line, int line_no, long long n, bool need_weight,
                         bool allow_weight) {
    const std::string expected = need_weight ? "\"u v w\"" : (allow_weight ? "\"u v [w]\"" : "\"u v\"");
    const std::size_t min_fields = need_weight ? 3 : 2;
    const std::size_t max_fields = allow_weight ? 3 : 2;
    auto fields = parse_int_fields(line, line_no, min_fields, max_fields, expected);
    const long long u = fields[0];
    const long long v = fields[1];
    if (u == v) {
        throw GraphError("line " + std::to_string(line_no) + ": self-loop " + std::to_string(u) +
                         "-" + std::to_string(v));
    }
    if (u > v) {
        throw GraphError("line " + std::to_string(line_no) +
                         ": endpoints must satisfy u < v");
    }
    if (u < 0 || v >= n) {
        const long long bad = (v >= n) ? v : u;
        throw GraphError("line " + std::to_string(line_no) + ": vertex id " + std::to_string(bad) +
                         " out of range (n=" + std::to_string(n) + ")");
    }
    EdgeLine out{static_cast<int>(u), static_cast<int>(v), -1};
    if (fields.size() == 3) {
        if (fields[2] < 1) {
            throw GraphError("line " + std::to_string(line_no) +
                             ": weight must be a positive integer");
        }
        out.w = fields[2];
    }
    return out;
}

std::pair<long long, long long> parse_header(LineReader& reader, const std::string& what) {
    std::string line;
    if (!reader.next(line)) {
        throw GraphError("empty input: expected header " + what);
    }
    auto fields = parse_int_fields(line, reader.line_no(), 2, 2, what);
    if (fields[0] < 0 || fields[1] < 0) {
        throw GraphError("line " + std::to_string(reader.line_no()) + ": header values in " +
                         what + " must be non-negative");
    }
    return {fields[0], fields[1]};
}

}  // namespace

WeightedGraph parse_graph(std::istream& in, ParseMode mode) {
    LineReader reader(in);
    const auto [n, m] = parse_header(reader, "\"n m\"");
    WeightedGraph g(static_cast<int>(n));

    std::map<Weight, int> weight_lines;
    std::string line;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line)) {
            throw GraphError("unexpected end of input: expected " + std::to_string(m) +
                             " edge lines, got " + std::to_string(i));
        }
        const auto rec = parse_edge_line(line, reader.line_no(), n, true, true);
        const Edge e(rec.u, rec.v);
        if (g.has_edge(e)) {
            throw GraphError("line " + std::to_string(reader.line_no()) + ": duplicate edge " +
                             std::to_string(e.u) + "-" + std::to_string(e.v));
        }
        if (mode == ParseMode::strict) {
            auto [it, fresh] = weight_lines.emplace(rec.w, reader.line_no());
            if (!fresh) {
                throw GraphError("line " + std::to_string(reader.line_no()) + ": duplicate weight " +
                                 std::to_string(rec.w) + " (first used on line " +
                                 std::to_string(it->second) + "; strict mode requires distinct weights)");
            }
        }
        g.add_edge(e, rec.w);
    }
    if (reader.next(line)) {
        throw GraphError("line " + std::to_string(reader.line_no()) +
                         ": unexpected content after " + std::to_string(m) + " edge lines");
    }
    return g;
}

WeightedGraph parse_graph(const std::string& text, ParseMode mode) {
    std::istringstream in(text);
    return parse_graph(in, mode);
}

void serialize_graph(const WeightedGraph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [e, w] : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << w << '\n';
    }
}

std::string serialize_graph(const WeightedGraph& g) {
    std::ostringstream out;
    serialize_graph(g, out);
    return out.str();
}

SimpleGraph parse_simple_graph(std::istream& in) {
    LineReader reader(in);
    const auto [n, m] = parse_header(reader, "\"n m\"");
    SimpleGraph g(static_cast<int>(n));

    std::string line;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line)) {
            throw GraphError("unexpected end of input: expected " + std::to_string(m) +
                             " edge lines, got " + std::to_string(i));
        }
        const auto rec = parse_edge_line(line, reader.line_no(), n, false, true);
        const Edge e(rec.u, rec.v);
        if (g.has_edge(e)) {
            throw GraphError("line " + std::to_string(reader.line_no()) + ": duplicate edge " +
                             std::to_string(e.u) + "-" + std::to_string(e.v));
        }
        g.add_edge(e);
    }
    if (reader.next(line)) {
        throw GraphError("line " + std::to_string(reader.line_no()) +
                         ": unexpected content after " + std::to_string(m) + " edge lines");
    }
    return g;
}

}  // namespace mkcover
