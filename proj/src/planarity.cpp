#include "cadgraph/planarity.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "cadgraph/connectivity.hpp"
#include "cadgraph/errors.hpp"

namespace cadgraph {

namespace {

// A piece of the graph not yet embedded: either a single chord between two
// embedded vertices, or a connected component of the unembedded vertices
// together with its edges into the embedded part.
struct Fragment {
    std::vector<int> interior;     // unembedded vertices, sorted (empty for a chord)
    std::vector<int> attachments;  // embedded vertices touching the fragment, sorted
    Edge chord{-1, -1};            // valid when interior is empty
};

class PathEmbedder {
public:
    explicit PathEmbedder(const Graph& g) : g_(g) {}

    // Runs incremental path addition. Returns false when some fragment has
    // no admissible face, i.e. the graph is not planar.
    bool run() {
        seed_cycle();
        for (;;) {
            std::vector<Fragment> fragments = collect_fragments();
            if (fragments.empty()) return true;
            int best = -1;
            std::vector<int> best_faces;
            for (size_t i = 0; i < fragments.size(); ++i) {
                std::vector<int> adm = admissible_faces(fragments[i]);
                if (adm.empty()) return false;
                if (best < 0 || adm.size() < best_faces.size()) {
                    best = static_cast<int>(i);
                    best_faces = std::move(adm);
                    if (best_faces.size() == 1) break;
                }
            }
            embed_path(fragments[best], best_faces.front());
        }
    }

    std::vector<std::vector<int>> faces() const { return faces_; }

private:
    void seed_cycle() {
        // Walk from the smallest vertex, never revisiting, until a
        // neighbor closes a cycle; in a 2-connected graph this terminates.
        std::vector<int> path{g_.vertices().front()};
        std::set<int> on_path{path.front()};
        for (;;) {
            int v = path.back();
            int next = -1;
            for (int w : g_.neighbors(v)) {
                if (on_path.count(w)) {
                    if (path.size() >= 3 && w != path[path.size() - 2]) {
                        // Close the cycle at w.
                        auto it = std::find(path.begin(), path.end(), w);
                        std::vector<int> cycle(it, path.end());
                        install_cycle(cycle);
                        return;
                    }
                } else if (next < 0) {
                    next = w;
                }
            }
            if (next < 0) throw std::logic_error("PathEmbedder: no cycle found");
            path.push_back(next);
            on_path.insert(next);
        }
    }

    void install_cycle(const std::vector<int>& cycle) {
        faces_.push_back(cycle);
        faces_.emplace_back(cycle.rbegin(), cycle.rend());
        for (size_t i = 0; i < cycle.size(); ++i) {
            embedded_.insert(cycle[i]);
            mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        }
    }

    void mark_edge(int u, int v) { embedded_edges_.insert(make_edge(u, v)); }
    bool edge_embedded(int u, int v) const { return embedded_edges_.count(make_edge(u, v)) != 0; }

    std::vector<Fragment> collect_fragments() {
        std::vector<Fragment> out;
        // Chords: unembedded edges between embedded vertices.
        for (const auto& [u, v] : g_.edges()) {
            if (embedded_.count(u) && embedded_.count(v) && !edge_embedded(u, v)) {
                Fragment f;
                f.attachments = {u, v};
                f.chord = {u, v};
                out.push_back(std::move(f));
            }
        }
        // Components of the unembedded vertices.
        std::set<int> seen;
        for (int start : g_.vertices()) {
            if (embedded_.count(start) || seen.count(start)) continue;
            Fragment f;
            std::vector<int> stack{start};
            std::set<int> attach;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (seen.count(v)) continue;
                seen.insert(v);
                f.interior.push_back(v);
                for (int w : g_.neighbors(v)) {
                    if (embedded_.count(w))
                        attach.insert(w);
                    else
                        stack.push_back(w);
                }
            }
            std::sort(f.interior.begin(), f.interior.end());
            f.attachments.assign(attach.begin(), attach.end());
            out.push_back(std::move(f));
        }
        return out;
    }

    std::vector<int> admissible_faces(const Fragment& f) const {
        std::vector<int> out;
        for (size_t i = 0; i < faces_.size(); ++i) {
            const auto& face = faces_[i];
            bool ok = std::all_of(f.attachments.begin(), f.attachments.end(), [&](int a) {
                return std::find(face.begin(), face.end(), a) != face.end();
            });
            if (ok) out.push_back(static_cast<int>(i));
        }
        return out;
    }

    // Shortest attachment-to-attachment path whose interior stays inside
    // the fragment. A chord is the degenerate two-vertex path.
    std::vector<int> fragment_path(const Fragment& f) const {
        if (f.interior.empty()) return {f.chord.first, f.chord.second};
        int a = f.attachments.front();
        std::vector<int> stack;
        std::map<int, int> parent;
        for (int w : g_.neighbors(a)) {
            if (std::binary_search(f.interior.begin(), f.interior.end(), w) &&
                !parent.count(w)) {
                parent[w] = a;
                stack.push_back(w);
            }
        }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g_.neighbors(v)) {
                if (w != a && embedded_.count(w) &&
                    std::binary_search(f.attachments.begin(), f.attachments.end(), w)) {
                    std::vector<int> path{w};
                    for (int cur = v; cur != a; cur = parent.at(cur)) path.push_back(cur);
                    path.push_back(a);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (std::binary_search(f.interior.begin(), f.interior.end(), w) &&
                    !parent.count(w)) {
                    parent[w] = v;
                    stack.push_back(w);
                }
            }
        }
        throw std::logic_error("PathEmbedder: fragment path not found");
    }

    void embed_path(const Fragment& f, int face_index) {
        std::vector<int> path = fragment_path(f);
        int a = path.front(), b = path.back();
        std::vector<int> face = faces_[face_index];
        size_t ia = std::find(face.begin(), face.end(), a) - face.begin();
        // Rotate so the face starts at a.
        std::rotate(face.begin(), face.begin() + ia, face.end());
        size_t ib = std::find(face.begin(), face.end(), b) - face.begin();

        // Face segment a..b keeps its direction; the path walks back b..a.
        std::vector<int> f1(face.begin(), face.begin() + ib + 1);
        for (int i = static_cast<int>(path.size()) - 2; i >= 1; --i) f1.push_back(path[i]);
        // Face segment b..a (through the old closing dart) plus the path
        // forward a..b.
        std::vector<int> f2(face.begin() + ib, face.end());
        f2.push_back(a);
        for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);

        faces_[face_index] = std::move(f1);
        faces_.push_back(std::move(f2));

        for (size_t i = 0; i + 1 < path.size(); ++i) mark_edge(path[i], path[i + 1]);
        for (size_t i = 1; i + 1 < path.size(); ++i) embedded_.insert(path[i]);
    }

    const Graph& g_;
    std::set<int> embedded_;
    std::set<Edge> embedded_edges_;
    std::vector<std::vector<int>> faces_;
};

// Biconnected blocks as vertex sets, by the lowpoint stack algorithm.
std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
    std::vector<std::vector<int>> blocks;
    std::map<int, int> num, low;
    std::vector<Edge> stack;
    int counter = 0;

    auto pop_block = [&](Edge until) {
        std::set<int> verts;
        for (;;) {
            Edge e = stack.back();
            stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == until) break;
        }
        blocks.emplace_back(verts.begin(), verts.end());
    };

    auto dfs = [&](auto&& self, int v, int parent) -> void {
        num[v] = low[v] = ++counter;
        for (int w : g.neighbors(v)) {
            if (!num.count(w)) {
                Edge e = make_edge(v, w);
                stack.push_back(e);
                self(self, w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= num[v]) pop_block(e);
            } else if (w != parent && num[w] < num[v]) {
                stack.push_back(make_edge(v, w));
                low[v] = std::min(low[v], num[w]);
            }
        }
    };

    for (int v : g.vertices())
        if (!num.count(v)) dfs(dfs, v, -1);
    return blocks;
}

void verify_embedding(const Graph& g, const PlanarEmbedding& emb) {
    // Every directed edge exactly once across the faces.
    std::set<std::pair<int, int>> darts;
    for (const auto& face : emb.faces) {
        for (size_t i = 0; i < face.size(); ++i) {
            int u = face[i], v = face[(i + 1) % face.size()];
            if (!g.has_edge(u, v))
                throw InternalInvariantError("planar_embedding: face uses a non-edge");
            if (!darts.emplace(u, v).second)
                throw InternalInvariantError("planar_embedding: dart covered twice");
        }
    }
    if (darts.size() != 2 * static_cast<size_t>(g.edge_count()))
        throw InternalInvariantError("planar_embedding: dart coverage incomplete");
    long f = static_cast<long>(emb.faces.size());
    if (f + g.vertex_count() != g.edge_count() + 2)
        throw InternalInvariantError("planar_embedding: Euler relation violated");
}

}  // namespace

bool is_planar(const Graph& g) {
    int n = g.vertex_count(), e = g.edge_count();
    if (n >= 3 && e > 3 * n - 6) return false;
    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() <= 2) continue;
        Graph sub = induced_subgraph(g, block);
        // The block may have induced chords outside the block's own edge
        // set only if blocks shared an edge, which cannot happen; the
        // induced graph equals the block.
        PathEmbedder embedder(sub);
        if (!embedder.run()) return false;
    }
    return true;
}

PlanarEmbedding planar_embedding(const Graph& g) {
    if (g.vertex_count() < 3)
        throw std::invalid_argument("planar_embedding: needs at least 3 vertices");
    if (!is_k_connected(g, 2))
        throw std::invalid_argument("planar_embedding: graph is not 2-connected");
    PathEmbedder embedder(g);
    if (!embedder.run()) throw std::invalid_argument("planar_embedding: graph is not planar");

    PlanarEmbedding emb;
    emb.faces = embedder.faces();
    // Deterministic face order: by smallest dart on the boundary.
    auto face_key = [](const std::vector<int>& face) {
        std::pair<int, int> best{INT32_MAX, INT32_MAX};
        size_t at = 0;
        for (size_t i = 0; i < face.size(); ++i) {
            std::pair<int, int> dart{face[i], face[(i + 1) % face.size()]};
            if (dart < best) {
                best = dart;
                at = i;
            }
        }
        return std::pair<std::pair<int, int>, size_t>(best, at);
    };
    for (auto& face : emb.faces) {
        auto [key, at] = face_key(face);
        std::rotate(face.begin(), face.begin() + at, face.end());
    }
    std::sort(emb.faces.begin(), emb.faces.end());

    // Rotation: in each face cycle ... u -> v -> w ..., the dart v->w is
    // the successor of v->u around v; chaining recovers the cyclic order.
    std::map<int, std::map<int, int>> next_around;
    for (const auto& face : emb.faces) {
        size_t m = face.size();
        for (size_t i = 0; i < m; ++i) {
            int u = face[i], v = face[(i + 1) % m], w = face[(i + 2) % m];
            next_around[v][u] = w;
        }
    }
    for (int v : g.vertices()) {
        const auto& ns = g.neighbors(v);
        if (ns.empty()) continue;
        std::vector<int> order{ns.front()};
        while (order.size() < ns.size()) {
            int nxt = next_around[v][order.back()];
            if (std::find(order.begin(), order.end(), nxt) != order.end())
                throw InternalInvariantError("planar_embedding: rotation not a single cycle");
            order.push_back(nxt);
        }
        emb.rotation[v] = std::move(order);
    }

    verify_embedding(g, emb);
    return emb;
}

std::map<int, int> face_census(const PlanarEmbedding& emb) {
    std::map<int, int> census;
    for (const auto& face : emb.faces) ++census[static_cast<int>(face.size())];
    return census;
}

}  // namespace cadgraph
