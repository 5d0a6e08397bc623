#include "coverpeb/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "coverpeb/errors.hpp"

namespace coverpeb {

bool DistanceMatrix::all_finite() const {
    return std::find(d_.begin(), d_.end(), -1) == d_.end();
}

int DistanceMatrix::diameter() const {
    int best = 0;
    for (int v : d_) best = std::max(best, v);
    return best;
}

Graph Graph::build(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                   bool require_connected) {
    if (vertex_count < 1) throw FormatError("vertex count must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> normalized;
    normalized.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= vertex_count) throw VertexOutOfRangeError(u, vertex_count);
        if (v < 0 || v >= vertex_count) throw VertexOutOfRangeError(v, vertex_count);
        if (u == v) throw SelfLoopError(u);
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

    std::vector<std::vector<Vertex>> adj(vertex_count);
    for (auto [u, v] : normalized) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());

    // Breadth-first distances from every vertex, -1 marking unreachable.
    DistanceMatrix dm;
    dm.n_ = vertex_count;
    dm.d_.assign(static_cast<std::size_t>(vertex_count) * vertex_count, -1);
    std::deque<Vertex> queue;
    for (Vertex src = 0; src < vertex_count; ++src) {
        int* row = dm.d_.data() + static_cast<std::size_t>(src) * vertex_count;
        row[src] = 0;
        queue.clear();
        queue.push_back(src);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : adj[u]) {
                if (row[v] == -1) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }

    bool connected = true;
    std::vector<Vertex> unreachable;
    for (Vertex v = 0; v < vertex_count; ++v) {
        if (dm.at(0, v) == -1) {
            connected = false;
            unreachable.push_back(v);
        }
    }
    if (require_connected && !connected) throw DisconnectedError(std::move(unreachable));

    Graph g;
    g.n_ = vertex_count;
    g.edges_ = std::move(normalized);
    g.adj_ = std::move(adj);
    g.dist_ = std::move(dm);
    g.connected_ = connected;
    return g;
}

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return build(vertex_count, edges, true);
}

Graph Graph::from_edges_unconnected(int vertex_count,
                                    const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return build(vertex_count, edges, false);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
        throw LengthMismatchError(labels.size(), static_cast<std::size_t>(n_));
    labels_ = std::move(labels);
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
}

int distance_to_set(const DistanceMatrix& dm, Vertex q, const std::vector<Vertex>& set) {
    if (set.empty()) throw EmptySetError();
    if (q < 0 || q >= dm.size()) throw VertexOutOfRangeError(q, dm.size());
    int best = -1;
    for (Vertex r : set) {
        if (r < 0 || r >= dm.size()) throw VertexOutOfRangeError(r, dm.size());
        int d = dm.at(q, r);
        if (d >= 0 && (best == -1 || d < best)) best = d;
    }
    if (best == -1)
        throw DisconnectedError({q}); // q cannot reach the set
    return best;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& set) {
    if (set.empty()) throw EmptySetError();
    std::vector<Vertex> to_parent = set;
    std::sort(to_parent.begin(), to_parent.end());
    to_parent.erase(std::unique(to_parent.begin(), to_parent.end()), to_parent.end());
    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i) {
        g.check_vertex(to_parent[i]);
        to_new[to_parent[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [u, v] : g.edges()) {
        if (to_new[u] != -1 && to_new[v] != -1)
            edges.emplace_back(to_new[u], to_new[v]);
    }
    InducedSubgraph result{Graph::from_edges_unconnected(static_cast<int>(to_parent.size()), edges),
                           std::move(to_parent)};
    return result;
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    const int gn = g.vertex_count();
    const int hn = h.vertex_count();
    auto id = [hn](Vertex a, Vertex x) { return a * hn + x; };

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()) * hn +
                  static_cast<std::size_t>(h.edge_count()) * gn);
    for (auto [a, b] : g.edges())
        for (Vertex x = 0; x < hn; ++x) edges.emplace_back(id(a, x), id(b, x));
    for (auto [x, y] : h.edges())
        for (Vertex a = 0; a < gn; ++a) edges.emplace_back(id(a, x), id(a, y));

    ProductGraph result;
    // A product of connected graphs is connected; keep the validation anyway.
    result.graph = Graph::from_edges(gn * hn, edges);
    result.pairing.resize(static_cast<std::size_t>(gn) * hn);
    std::vector<std::string> labels(static_cast<std::size_t>(gn) * hn);
    auto factor_label = [](const Graph& f, Vertex v) {
        return f.labels().empty() ? std::to_string(v) : f.labels()[v];
    };
    for (Vertex a = 0; a < gn; ++a) {
        for (Vertex x = 0; x < hn; ++x) {
            result.pairing[id(a, x)] = {a, x};
            labels[id(a, x)] = "(" + factor_label(g, a) + "," + factor_label(h, x) + ")";
        }
    }
    result.graph.set_labels(std::move(labels));
    return result;
}

Graph read_graph(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw FormatError("empty graph file");

    std::istringstream header(lines[0]);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n < 1 || m < 0)
        throw FormatError("bad graph header, expected \"n m\"");
    std::string trailing;
    if (header >> trailing) throw FormatError("trailing tokens after graph header");
    if (lines.size() != static_cast<std::size_t>(m) + 1)
        throw FormatError("expected " + std::to_string(m) + " edge lines, got " +
                          std::to_string(lines.size() - 1));

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream es(lines[i]);
        long long u = 0, v = 0;
        if (!(es >> u >> v)) throw FormatError("bad edge line: " + lines[i]);
        if (es >> trailing) throw FormatError("trailing tokens on edge line: " + lines[i]);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRangeError(static_cast<int>(u < 0 || u >= n ? u : v),
                                        static_cast<int>(n));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    for (std::size_t v = 0; v < g.labels().size(); ++v)
        out << "# label " << v << " " << g.labels()[v] << "\n";
}

} // namespace coverpeb
