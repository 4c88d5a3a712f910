#include "support/corpus.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "cadgraph/connectivity.hpp"
#include "cadgraph/planarity.hpp"

namespace corpus {

using cadgraph::BigRat;
using cadgraph::make_edge;

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> vertices(n);
    std::iota(vertices.begin(), vertices.end(), 0);
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [u, v] : edges) es.push_back(make_edge(u, v));
    return Graph(std::move(vertices), std::move(es));
}

namespace {

constexpr int kMaxCodeVertices = 11;

// Adjacency bitmask rows for a graph whose vertices are exactly 0..n-1.
std::array<uint16_t, kMaxCodeVertices> adjacency_rows(const Graph& g) {
    std::array<uint16_t, kMaxCodeVertices> adj{};
    for (const Edge& e : g.edges()) {
        adj[static_cast<size_t>(e.first)] |= static_cast<uint16_t>(1u << e.second);
        adj[static_cast<size_t>(e.second)] |= static_cast<uint16_t>(1u << e.first);
    }
    return adj;
}

// Relabels arbitrary vertex ids onto 0..n-1 preserving order.
Graph densified(const Graph& g) {
    std::map<int, int> id;
    for (int v : g.vertices()) {
        int next = static_cast<int>(id.size());
        id[v] = next;
    }
    std::vector<int> vertices(id.size());
    std::iota(vertices.begin(), vertices.end(), 0);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back(make_edge(id[e.first], id[e.second]));
    return Graph(std::move(vertices), std::move(edges));
}

}  // namespace

uint64_t canonical_code(const Graph& g) {
    Graph d = g.vertices().back() == g.vertex_count() - 1 ? g : densified(g);
    const int n = d.vertex_count();
    if (n > kMaxCodeVertices)
        throw std::invalid_argument("canonical_code: too many vertices");
    auto adj = adjacency_rows(d);

    // Color refinement to a stable vertex partition. New colors are dense
    // ids ordered by (old color, sorted neighbor colors), which is an
    // isomorphism-invariant ordering.
    std::vector<int> color(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) color[static_cast<size_t>(v)] = d.degree(v);
    for (;;) {
        std::map<std::vector<int>, int> order;
        std::vector<std::vector<int>> sig(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{color[static_cast<size_t>(v)]};
            std::vector<int> nb;
            for (int w : d.neighbors(v)) nb.push_back(color[static_cast<size_t>(w)]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[static_cast<size_t>(v)] = s;
            order[s];  // collect key
        }
        int next = 0;
        for (auto& [key, idx] : order) idx = next++;
        std::vector<int> fresh(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) fresh[static_cast<size_t>(v)] = order[sig[static_cast<size_t>(v)]];
        if (fresh == color) break;
        color = fresh;
    }

    // Vertices grouped by final color; orderings enumerated as all products
    // of within-class permutations. The minimum relabeled edge bitmask over
    // that set is reached by some isomorphism-image ordering, so equal codes
    // mean equal relabeled edge sets, i.e. isomorphic graphs.
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[color[static_cast<size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> parts;
    long long candidates = 1;
    for (auto& [c, members] : classes) {
        long long f = 1;
        for (size_t k = 2; k <= members.size(); ++k) f *= static_cast<long long>(k);
        candidates *= f;
        parts.push_back(members);
    }
    if (candidates > 6000000)
        throw std::logic_error("canonical_code: symmetry class too large");

    std::vector<int> position(static_cast<size_t>(n));
    uint64_t best = ~0ULL;
    for (;;) {
        int pos = 0;
        for (const auto& part : parts)
            for (int v : part) position[static_cast<size_t>(v)] = pos++;
        // Bit (i,j), row-major over i<j: set iff the vertices placed at
        // positions i and j are adjacent.
        std::vector<int> at(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) at[static_cast<size_t>(position[static_cast<size_t>(v)])] = v;
        uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                code <<= 1;
                if (adj[static_cast<size_t>(at[static_cast<size_t>(i)])] &
                    (1u << at[static_cast<size_t>(j)]))
                    code |= 1;
            }
        best = std::min(best, code);

        // Odometer over per-class permutations.
        size_t k = 0;
        while (k < parts.size() && !std::next_permutation(parts[k].begin(), parts[k].end()))
            ++k;
        if (k == parts.size()) break;
    }
    return best;
}

const std::vector<Graph>& mi_census(int n) {
    static std::map<int, std::vector<Graph>> cache;
    if (n < 3) throw std::invalid_argument("mi_census: needs n >= 3");
    auto hit = cache.find(n);
    if (hit != cache.end()) return hit->second;

    std::vector<Graph> level;
    if (n == 3) {
        level.push_back(make_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
    } else {
        const std::vector<Graph>& prev = mi_census(n - 1);
        std::set<uint64_t> seen;
        const int m = n - 1;  // id of the added vertex
        for (const Graph& g : prev) {
            auto push = [&](std::vector<Edge> edges) {
                std::vector<int> vertices(static_cast<size_t>(n));
                std::iota(vertices.begin(), vertices.end(), 0);
                Graph candidate(std::move(vertices), std::move(edges));
                if (seen.insert(canonical_code(candidate)).second)
                    level.push_back(std::move(candidate));
            };
            // degree-2 vertex addition
            for (int u = 0; u < m; ++u)
                for (int v = u + 1; v < m; ++v) {
                    std::vector<Edge> edges = g.edges();
                    edges.push_back(make_edge(u, m));
                    edges.push_back(make_edge(v, m));
                    push(std::move(edges));
                }
            // edge split through a new degree-3 vertex
            for (const Edge& e : g.edges())
                for (int w = 0; w < m; ++w) {
                    if (w == e.first || w == e.second) continue;
                    std::vector<Edge> edges;
                    for (const Edge& f : g.edges())
                        if (f != e) edges.push_back(f);
                    edges.push_back(make_edge(e.first, m));
                    edges.push_back(make_edge(e.second, m));
                    edges.push_back(make_edge(w, m));
                    push(std::move(edges));
                }
        }
    }
    return cache.emplace(n, std::move(level)).first->second;
}

std::vector<Graph> mi_census_filtered(int n, bool need_planar, bool need_3conn) {
    std::vector<Graph> out;
    for (const Graph& g : mi_census(n)) {
        if (need_planar && !cadgraph::is_planar(g)) continue;
        if (need_3conn && !cadgraph::is_k_connected(g, 3)) continue;
        out.push_back(g);
    }
    return out;
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 2 || n > 7)
        throw std::invalid_argument("for_each_connected_graph: needs 2 <= n <= 7");
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.push_back(make_edge(u, v));
    const int bits = static_cast<int>(slots.size());

    std::vector<int> vertices(static_cast<size_t>(n));
    std::iota(vertices.begin(), vertices.end(), 0);

    for (uint32_t mask = 0; mask < (1u << bits); ++mask) {
        // cheap connectivity screen on bit adjacency before building a Graph
        std::array<uint8_t, 7> adj{};
        for (int b = 0; b < bits; ++b)
            if (mask & (1u << b)) {
                adj[static_cast<size_t>(slots[static_cast<size_t>(b)].first)] |=
                    static_cast<uint8_t>(1u << slots[static_cast<size_t>(b)].second);
                adj[static_cast<size_t>(slots[static_cast<size_t>(b)].second)] |=
                    static_cast<uint8_t>(1u << slots[static_cast<size_t>(b)].first);
            }
        uint8_t reached = 1, frontier = 1;
        while (frontier) {
            uint8_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier & (1u << v)) next |= adj[static_cast<size_t>(v)];
            frontier = next & static_cast<uint8_t>(~reached);
            reached |= next;
        }
        if (reached != static_cast<uint8_t>((1u << n) - 1)) continue;

        std::vector<Edge> edges;
        for (int b = 0; b < bits; ++b)
            if (mask & (1u << b)) edges.push_back(slots[static_cast<size_t>(b)]);
        fn(Graph(vertices, std::move(edges)));
    }
}

bool independent_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    const auto& vs = g.vertices();
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        int count = std::popcount(mask);
        if (count < 2) continue;
        int inside = 0;
        for (const Edge& e : g.edges()) {
            size_t iu = static_cast<size_t>(
                std::lower_bound(vs.begin(), vs.end(), e.first) - vs.begin());
            size_t iv = static_cast<size_t>(
                std::lower_bound(vs.begin(), vs.end(), e.second) - vs.begin());
            if ((mask & (1u << iu)) && (mask & (1u << iv))) ++inside;
        }
        if (2 * count - inside < 3) return false;
    }
    return true;
}

bool contractible_bruteforce(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    const auto& vs = g.vertices();
    const int n = g.vertex_count();

    std::vector<int> apexes;
    for (int w : g.neighbors(e.first))
        if (w != e.second && g.has_edge(w, e.second)) apexes.push_back(w);
    if (apexes.size() != 1) return false;
    int z = apexes.front();

    auto index_of = [&](int v) {
        return static_cast<size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    size_t ix = index_of(e.first), iy = index_of(e.second), iz = index_of(z);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << ix)) || !(mask & (1u << iy)) || (mask & (1u << iz))) continue;
        int count = std::popcount(mask);
        if (count < 3) continue;
        int inside = 0;
        for (const Edge& f : g.edges())
            if ((mask & (1u << index_of(f.first))) && (mask & (1u << index_of(f.second))))
                ++inside;
        if (2 * count - inside - 3 == 0) return false;  // blocking tight subgraph
    }
    return true;
}

namespace {

// Does g contain a complete minor with the given part adjacency demands?
// parts = 5 with all pairs demanded covers K5; parts = 6 with the 3x3
// bipartite demands covers K3,3. Vertices of g must be 0..n-1, n <= 7.
bool has_demanded_minor(const Graph& g, int parts,
                        const std::vector<std::pair<int, int>>& demands) {
    const int n = g.vertex_count();
    auto adj = adjacency_rows(g);

    std::vector<uint16_t> part_mask(static_cast<size_t>(parts), 0);

    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) {
            for (int p = 0; p < parts; ++p)
                if (!part_mask[static_cast<size_t>(p)]) return false;
            // each part connected
            for (int p = 0; p < parts; ++p) {
                uint16_t mask = part_mask[static_cast<size_t>(p)];
                uint16_t start = mask & static_cast<uint16_t>(-mask);
                uint16_t reached = start, frontier = start;
                while (frontier) {
                    uint16_t next = 0;
                    for (int w = 0; w < n; ++w)
                        if (frontier & (1u << w)) next |= adj[static_cast<size_t>(w)];
                    next &= mask;
                    frontier = next & static_cast<uint16_t>(~reached);
                    reached |= next;
                }
                if (reached != mask) return false;
            }
            // demanded pairs joined by an edge
            for (auto [a, b] : demands) {
                bool joined = false;
                for (int w = 0; w < n && !joined; ++w)
                    if (part_mask[static_cast<size_t>(a)] & (1u << w))
                        joined = (adj[static_cast<size_t>(w)] &
                                  part_mask[static_cast<size_t>(b)]) != 0;
                if (!joined) return false;
            }
            return true;
        }
        for (int p = -1; p < parts; ++p) {
            if (p >= 0) part_mask[static_cast<size_t>(p)] |= static_cast<uint16_t>(1u << v);
            if (place(v + 1)) return true;
            if (p >= 0) part_mask[static_cast<size_t>(p)] &= static_cast<uint16_t>(~(1u << v));
        }
        return false;
    };
    return place(0);
}

}  // namespace

bool planar_bruteforce(const Graph& g) {
    static std::map<uint64_t, bool> memo;
    Graph d = densified(g);
    if (d.vertex_count() > 7)
        throw std::invalid_argument("planar_bruteforce: practical only for n <= 7");
    uint64_t code = canonical_code(d);
    auto hit = memo.find(code);
    if (hit != memo.end()) return hit->second;

    std::vector<std::pair<int, int>> k5_demands;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) k5_demands.push_back({a, b});
    std::vector<std::pair<int, int>> k33_demands;
    for (int a = 0; a < 3; ++a)
        for (int b = 3; b < 6; ++b) k33_demands.push_back({a, b});

    bool planar = !has_demanded_minor(d, 5, k5_demands) &&
                  !has_demanded_minor(d, 6, k33_demands);
    memo.emplace(code, planar);
    return planar;
}

GenericPlacement generic_placement(const Graph& g, Edge base, std::mt19937_64& rng) {
    base = make_edge(base.first, base.second);
    if (!g.has_edge(base.first, base.second))
        throw std::invalid_argument("generic_placement: base edge not in graph");
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 12);

    GenericPlacement placement;
    for (int v : g.vertices()) {
        if (v == base.first) {
            placement.coords[v] = {BigRat(0), BigRat(0)};
        } else if (v == base.second) {
            placement.coords[v] = {BigRat(1), BigRat(0)};
        } else {
            placement.coords[v] = {
                BigRat(std::to_string(num(rng)) + "/" + std::to_string(den(rng))),
                BigRat(std::to_string(num(rng)) + "/" + std::to_string(den(rng)))};
        }
    }
    for (const Edge& e : g.edges()) {
        const auto& [xu, yu] = placement.coords.at(e.first);
        const auto& [xv, yv] = placement.coords.at(e.second);
        BigRat dx = xu - xv, dy = yu - yv;
        placement.dims[e] = dx * dx + dy * dy;
    }
    return placement;
}

}  // namespace corpus
