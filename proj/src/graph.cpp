#include "cutcomplex/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cutcomplex {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph vertex count " + std::to_string(n) +
                                    " outside [0, " +
                                    std::to_string(kMaxVertices) + "]");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) +
                                " outside [0, " + std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loop edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} rejected");
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

VertexSet Graph::closed_neighborhood(int v) const {
    return neighbors(v).with(v);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const VertexSet& nb : adj_) twice += nb.count();
    return twice / 2;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete(n) requires n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path(n) requires n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle(n) requires n >= 3");
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph cycle_power(int n, int p) {
    if (n < 3) throw std::invalid_argument("cycle_power(n,p) requires n >= 3");
    if (p < 1) throw std::invalid_argument("cycle_power(n,p) requires p >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int dist = std::min(v - u, n - (v - u));  // circular distance
            if (dist >= 1 && dist <= p) g.add_edge(u, v);
        }
    return g;
}

Graph circulant(int n, const std::vector<int>& shifts) {
    if (n < 2) throw std::invalid_argument("circulant(n,S) requires n >= 2");
    if (shifts.empty())
        throw std::invalid_argument("circulant(n,S) requires nonempty S");
    for (int s : shifts)
        if (s < 1 || s > n - 1)
            throw std::invalid_argument("circulant shift " + std::to_string(s) +
                                        " outside [1, " + std::to_string(n - 1) +
                                        "]");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int s : shifts) g.add_edge(u, (u + s) % n);
    return g;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int gn = g.vertex_count(), hn = h.vertex_count();
    if (gn == 0 || hn == 0)
        throw std::invalid_argument("cartesian_product of an empty graph");
    if (gn > kMaxVertices / hn)
        throw std::invalid_argument("cartesian_product exceeds the " +
                                    std::to_string(kMaxVertices) +
                                    "-vertex ambient cap");
    Graph prod(gn * hn);
    // vertex (i, j) of the product is the flat index i*hn + j
    for (int i = 0; i < gn; ++i)
        for (int j = 0; j < hn; ++j) {
            h.neighbors(j).for_each([&](int j2) {
                if (j2 > j) prod.add_edge(i * hn + j, i * hn + j2);
            });
            g.neighbors(i).for_each([&](int i2) {
                if (i2 > i) prod.add_edge(i * hn + j, i2 * hn + j);
            });
        }
    return prod;
}

bool is_complete_on(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices()))
        throw std::out_of_range("subset not within the graph's vertex set");
    bool complete = true;
    s.for_each([&](int v) {
        if (!complete) return;
        // every member above v must be a neighbor of v
        VertexSet later = s - VertexSet::full(v + 1);
        if (!later.subset_of(g.neighbors(v))) complete = false;
    });
    return complete;
}

bool is_connected_on(const Graph& g, const VertexSet& s) {
    if (!s.subset_of(g.vertices()))
        throw std::out_of_range("subset not within the graph's vertex set");
    if (s.count() <= 1) return true;  // empty and singleton count as connected
    VertexSet reached = VertexSet::single(s.min());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each(
            [&](int v) { next = next | (g.neighbors(v) & s); });
        frontier = next - reached;
        reached = reached | next;
    }
    return s.subset_of(reached);
}

namespace {

[[noreturn]] void edge_list_error(int line, const std::string& what) {
    throw std::runtime_error("edge list line " + std::to_string(line) + ": " +
                             what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string text;
    int line_no = 0;
    long long n = -1, m = -1;
    // header line: "n m"
    while (std::getline(in, text)) {
        ++line_no;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream head(text);
        if (!(head >> n >> m)) edge_list_error(line_no, "expected header 'n m'");
        std::string extra;
        if (head >> extra)
            edge_list_error(line_no, "trailing token '" + extra + "' in header");
        break;
    }
    if (n < 0) throw std::runtime_error("edge list: missing 'n m' header");
    if (n > kMaxVertices)
        edge_list_error(line_no, "vertex count " + std::to_string(n) +
                                     " exceeds the " +
                                     std::to_string(kMaxVertices) +
                                     "-vertex cap");
    if (m < 0) edge_list_error(line_no, "negative edge count");

    Graph g(static_cast<int>(n));
    long long seen = 0;
    while (std::getline(in, text)) {
        ++line_no;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(text);
        long long u, v;
        if (!(row >> u >> v))
            edge_list_error(line_no, "expected edge 'u v', got '" + text + "'");
        std::string extra;
        if (row >> extra)
            edge_list_error(line_no, "trailing token '" + extra + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            edge_list_error(line_no, "endpoint outside [0, " +
                                         std::to_string(n) + ")");
        if (u == v) edge_list_error(line_no, "loop edge rejected");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            edge_list_error(line_no, "duplicate edge {" + std::to_string(u) +
                                         "," + std::to_string(v) + "}");
        if (++seen > m)
            edge_list_error(line_no, "more than the declared " +
                                         std::to_string(m) + " edges");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (seen != m)
        throw std::runtime_error("edge list: declared " + std::to_string(m) +
                                 " edges but found " + std::to_string(seen));
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list file: " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.vertex_count(); ++u)
        g.neighbors(u).for_each([&](int v) {
            if (v > u) out << u << ' ' << v << '\n';
        });
}

}  // namespace cutcomplex
