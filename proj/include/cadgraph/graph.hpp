// Simple undirected graphs, freedom counts, independence, contraction.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cadgraph {

// Normalized so that first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

class Graph {
public:
    // Validates: at least one vertex, ids nonnegative, no loops, no
    // parallel edges, every endpoint present. Vertex and edge lists are
    // stored sorted.
    Graph(std::vector<int> vertices, std::vector<Edge> edges);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(int v) const;
    bool has_edge(int u, int v) const;
    // Sorted adjacency list; throws on unknown vertex.
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    bool is_connected() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

private:
    std::vector<int> vertices_;
    std::vector<Edge> edges_;
    std::map<int, std::vector<int>> adjacency_;
};

// 2v - e - 3 of the graph it was computed from.
struct FreedomNumber {
    int value = 0;
    friend bool operator==(FreedomNumber a, FreedomNumber b) { return a.value == b.value; }
    friend bool operator!=(FreedomNumber a, FreedomNumber b) { return a.value != b.value; }
};

FreedomNumber freedom(const Graph& g);

// (2,3)-pebble game: true iff every vertex-induced subgraph with at least
// two vertices has freedom >= 0.
bool is_independent(const Graph& g);

// Independent with freedom exactly 0.
bool is_maximally_independent(const Graph& g);

// Merge the endpoints of e keeping the lower id; drop the loop and any
// parallel duplicates that arise.
Graph contract_edge(const Graph& g, Edge e);

// All vertices adjacent to both endpoints of e (the apexes of the
// 3-cycles through e), sorted.
std::vector<int> triangles_through(const Graph& g, Edge e);

// Subgraph on vs with every edge of g inside vs.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

// A vertex subset of a parent graph, viewed as its induced subgraph.
struct SubgraphHandle {
    const Graph* parent = nullptr;
    std::vector<int> vertices;  // sorted subset of parent vertices
    bool induced = true;
};

// The handle's vertices that have a neighbor outside the handle, sorted.
std::vector<int> attachment_vertices(const Graph& g, const SubgraphHandle& h);

}  // namespace cadgraph
