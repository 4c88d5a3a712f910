#include "cadgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cadgraph {

Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("make_edge: loop");
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(std::vector<int> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (vertices_.empty()) throw std::invalid_argument("Graph: empty vertex set");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("Graph: duplicate vertex id");
    if (vertices_.front() < 0) throw std::invalid_argument("Graph: negative vertex id");
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        if (u > v) std::swap(u, v);
        if (!std::binary_search(vertices_.begin(), vertices_.end(), u) ||
            !std::binary_search(vertices_.begin(), vertices_.end(), v))
            throw std::invalid_argument("Graph: edge endpoint not a vertex");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: parallel edge");
    for (int v : vertices_) adjacency_[v];
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& [v, ns] : adjacency_) std::sort(ns.begin(), ns.end());
}

bool Graph::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

const std::vector<int>& Graph::neighbors(int v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) throw std::invalid_argument("Graph::neighbors: unknown vertex");
    return it->second;
}

bool Graph::is_connected() const {
    std::vector<int> stack{vertices_.front()};
    std::vector<int> seen;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (std::binary_search(seen.begin(), seen.end(), v)) continue;
        seen.insert(std::lower_bound(seen.begin(), seen.end(), v), v);
        for (int w : neighbors(v))
            if (!std::binary_search(seen.begin(), seen.end(), w)) stack.push_back(w);
    }
    return seen.size() == vertices_.size();
}

FreedomNumber freedom(const Graph& g) {
    return FreedomNumber{2 * g.vertex_count() - g.edge_count() - 3};
}

bool is_independent(const Graph& g) {
    // (2,3)-pebble game. Each vertex holds 2 pebbles; inserting an edge
    // costs one pebble and requires 4 on its endpoints, gathered by
    // reversing directed paths to free pebbles elsewhere.
    const auto& vs = g.vertices();
    int n = g.vertex_count();
    std::vector<int> pebbles(n, 2);
    std::vector<std::vector<int>> out(n);
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };

    auto gather = [&](int from, int avoid0, int avoid1) -> bool {
        std::vector<int> parent(n, -1);
        std::vector<char> seen(n, 0);
        std::vector<int> stack{from};
        seen[from] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (v != avoid0 && v != avoid1 && pebbles[v] > 0) {
                // Reverse the tree path from v back to the start.
                --pebbles[v];
                ++pebbles[from];
                int cur = v;
                while (cur != from) {
                    int p = parent[cur];
                    out[p].erase(std::find(out[p].begin(), out[p].end(), cur));
                    out[cur].push_back(p);
                    cur = p;
                }
                return true;
            }
            for (int w : out[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    stack.push_back(w);
                }
            }
        }
        return false;
    };

    for (const auto& [eu, ev] : g.edges()) {
        int u = index_of(eu), v = index_of(ev);
        while (pebbles[u] + pebbles[v] < 4) {
            if (!gather(u, u, v) && !gather(v, u, v)) return false;
        }
        --pebbles[u];
        out[u].push_back(v);
    }
    return true;
}

bool is_maximally_independent(const Graph& g) {
    return freedom(g).value == 0 && is_independent(g);
}

Graph contract_edge(const Graph& g, Edge e) {
    Edge norm = make_edge(e.first, e.second);
    if (!g.has_edge(norm.first, norm.second))
        throw std::invalid_argument("contract_edge: edge not in graph");
    int keep = norm.first, gone = norm.second;
    std::vector<int> vs;
    for (int v : g.vertices())
        if (v != gone) vs.push_back(v);
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges()) {
        int a = (u == gone) ? keep : u;
        int b = (v == gone) ? keep : v;
        if (a == b) continue;
        es.push_back(make_edge(a, b));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(std::move(vs), std::move(es));
}

std::vector<int> triangles_through(const Graph& g, Edge e) {
    Edge norm = make_edge(e.first, e.second);
    if (!g.has_edge(norm.first, norm.second))
        throw std::invalid_argument("triangles_through: edge not in graph");
    const auto& nu = g.neighbors(norm.first);
    const auto& nv = g.neighbors(norm.second);
    std::vector<int> apexes;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                          std::back_inserter(apexes));
    return apexes;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
        if (!g.has_vertex(v)) throw std::invalid_argument("induced_subgraph: unknown vertex id");
    std::vector<Edge> es;
    for (const auto& [u, v] : g.edges())
        if (std::binary_search(sorted.begin(), sorted.end(), u) &&
            std::binary_search(sorted.begin(), sorted.end(), v))
            es.push_back({u, v});
    return Graph(std::move(sorted), std::move(es));
}

std::vector<int> attachment_vertices(const Graph& g, const SubgraphHandle& h) {
    std::vector<int> out;
    for (int v : h.vertices) {
        for (int w : g.neighbors(v)) {
            if (!std::binary_search(h.vertices.begin(), h.vertices.end(), w)) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

}  // namespace cadgraph
