#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace coverpeb {

using Vertex = int;

/// All-pairs shortest-path hop counts. Entries are -1 between vertices in
/// different components (only possible for induced subgraphs; graphs built
/// with Graph::from_edges are validated connected).
class DistanceMatrix {
public:
    DistanceMatrix() = default;

    int size() const { return n_; }
    int at(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    bool all_finite() const;

    /// Largest finite entry.
    int diameter() const;

private:
    friend class Graph;
    int n_ = 0;
    std::vector<int> d_;
};

/// Finite simple undirected graph over dense vertex ids 0..n-1, with its
/// distance matrix computed eagerly at construction. Immutable afterwards.
class Graph {
public:
    /// Validates: no self-loops, all endpoints in range, connected from
    /// vertex 0. Duplicate edges are collapsed silently.
    static Graph from_edges(int vertex_count,
                            const std::vector<std::pair<Vertex, Vertex>>& edges);

    /// Same validation except connectivity, which the caller vouches for (or
    /// explicitly tolerates, as with induced subgraphs).
    static Graph from_edges_unconnected(int vertex_count,
                                        const std::vector<std::pair<Vertex, Vertex>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Normalized edge list: each pair (u,v) with u < v, sorted ascending.
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    const DistanceMatrix& distances() const { return dist_; }
    bool is_connected() const { return connected_; }

    /// Optional per-vertex labels; empty vector when the graph is unlabeled.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    void check_vertex(Vertex v) const;

    Graph() = default; // empty placeholder; factories produce usable graphs

private:
    static Graph build(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges,
                       bool require_connected);

    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    DistanceMatrix dist_;
    bool connected_ = false;
};

/// d(q, S) = min over r in S of dist(q, r). S must be nonempty.
int distance_to_set(const DistanceMatrix& dm, Vertex q, const std::vector<Vertex>& set);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent; // new id -> old id, ascending
};

/// Subgraph on the vertex set `set` (nonempty, deduplicated, need not induce
/// a connected graph).
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& set);

struct ProductGraph {
    Graph graph;
    std::vector<std::pair<Vertex, Vertex>> pairing; // product id -> (g id, h id)
};

/// Cartesian product: (a,x) ~ (b,y) iff (a=b and x~y) or (x=y and a~b).
/// Product vertex (a,x) gets id a*|V(h)| + x and label "(la,lx)".
ProductGraph cartesian_product(const Graph& g, const Graph& h);

/// Text format: first non-comment line "n m", then m lines "u v".
/// Blank lines and lines starting with '#' are ignored.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

} // namespace coverpeb
