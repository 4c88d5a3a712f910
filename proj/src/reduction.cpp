#include "cadgraph/reduction.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "cadgraph/connectivity.hpp"
#include "cadgraph/errors.hpp"
#include "cadgraph/planarity.hpp"

namespace cadgraph {

namespace {

// Calls fn(subset) for every size-k subset of the sorted list vs, in
// lexicographic order, until fn returns true; returns whether fn did.
bool for_each_subset(const std::vector<int>& vs, int k,
                     const std::function<bool(const std::vector<int>&)>& fn) {
    int n = static_cast<int>(vs.size());
    if (k > n) return false;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = vs[idx[i]];
        if (fn(subset)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == i + n - k) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

Graph with_edge(const Graph& g, Edge e) {
    std::vector<Edge> es = g.edges();
    es.push_back(make_edge(e.first, e.second));
    return Graph(g.vertices(), std::move(es));
}

}  // namespace

// --------------------------------------------------------------------------
// Contraction calculus.
// --------------------------------------------------------------------------

bool is_contractible(const Graph& g, Edge e) {
    Edge ne = make_edge(e.first, e.second);
    if (!g.has_edge(ne.first, ne.second)) {
        throw std::invalid_argument("edge is not in the graph");
    }
    if (!is_independent(g)) {
        throw std::invalid_argument("graph is not independent");
    }
    Graph contracted = contract_edge(g, ne);
    return is_independent(contracted) && freedom(contracted) == freedom(g);
}

std::vector<Edge> contractible_edges(const Graph& g) {
    if (!is_maximally_independent(g)) {
        throw std::invalid_argument("graph is not maximally independent");
    }
    if (!is_planar(g)) {
        throw std::invalid_argument("graph is not planar");
    }
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (is_contractible(g, e)) out.push_back(e);
    }
    return out;
}

std::vector<Limpet> find_limpets(const Graph& g) {
    std::vector<Limpet> out;
    const auto& vs = g.vertices();
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!g.has_edge(vs[i], vs[j])) continue;
            for (int k = j + 1; k < n; ++k) {
                if (!g.has_edge(vs[i], vs[k]) || !g.has_edge(vs[j], vs[k])) continue;
                std::array<int, 3> tri{vs[i], vs[j], vs[k]};
                std::array<int, 3> anchors{-1, -1, -1};
                bool ok = true;
                for (int t = 0; t < 3 && ok; ++t) {
                    for (int w : g.neighbors(tri[t])) {
                        if (w == tri[0] || w == tri[1] || w == tri[2]) continue;
                        if (anchors[t] != -1) {
                            ok = false;  // second edge out of the same vertex
                            break;
                        }
                        anchors[t] = w;
                    }
                    if (anchors[t] == -1) ok = false;  // no edge out at all
                }
                if (ok && (anchors[0] == anchors[1] || anchors[0] == anchors[2] ||
                           anchors[1] == anchors[2])) {
                    ok = false;  // outside endpoints must be distinct
                }
                if (ok) out.push_back(Limpet{tri, anchors});
            }
        }
    }
    return out;
}

// --------------------------------------------------------------------------
// Reduction steps.
// --------------------------------------------------------------------------

ReductionStep find_reduction(const Graph& g) {
    if (g.vertex_count() <= 6) {
        throw std::invalid_argument(
            "graph has at most 6 vertices; no reduction step applies");
    }
    if (!is_maximally_independent(g)) {
        throw std::invalid_argument("graph is not maximally independent");
    }
    if (!is_k_connected(g, 3)) {
        throw std::invalid_argument("graph is not 3-connected");
    }
    if (!is_planar(g)) {
        throw std::invalid_argument("graph is not planar");
    }

    // Contract branch: first edge whose contraction stays 3-connected.
    // (Contractions of planar graphs are planar, being minors.)
    for (const Edge& e : g.edges()) {
        if (!is_contractible(g, e)) continue;
        if (is_k_connected(contract_edge(g, e), 3)) {
            ReductionStep step{StepKind::Contract, e, {}, {-1, -1, -1}};
            return step;
        }
    }

    // Substitute branch: smallest proper induced maximally independent
    // subgraph with exactly three attachment vertices. Size 3 is excluded
    // because substituting a triangle for itself makes no progress.
    const auto& vs = g.vertices();
    int n = g.vertex_count();
    ReductionStep step{StepKind::Substitute, {-1, -1}, {}, {-1, -1, -1}};
    for (int size = 4; size < n; ++size) {
        bool found = for_each_subset(vs, size, [&](const std::vector<int>& subset) {
            auto att = attachment_vertices(g, SubgraphHandle{&g, subset, true});
            if (att.size() != 3) return false;
            if (!is_maximally_independent(induced_subgraph(g, subset))) return false;
            step.subgraph = subset;
            step.attachments = {att[0], att[1], att[2]};
            return true;
        });
        if (found) return step;
    }
    throw InternalInvariantError(
        "no reduction step exists for a 3-connected, maximally independent, "
        "planar graph with more than 6 vertices; this contradicts the "
        "dichotomy the engine is built on");
}

Graph apply_reduction(const Graph& g, const ReductionStep& step) {
    if (step.kind == StepKind::Contract) {
        return contract_edge(g, step.edge);
    }
    return substitute_triangle(g, step.subgraph, step.attachments);
}

Graph substitute_triangle(const Graph& g, const std::vector<int>& h_vertices,
                          const std::array<int, 3>& attachments) {
    std::vector<int> hv = h_vertices;
    std::sort(hv.begin(), hv.end());
    if (std::adjacent_find(hv.begin(), hv.end()) != hv.end()) {
        throw std::invalid_argument("subgraph vertex list has duplicates");
    }
    for (int v : hv) {
        if (!g.has_vertex(v)) {
            throw std::invalid_argument("subgraph vertex is not in the graph");
        }
    }
    if (static_cast<int>(hv.size()) >= g.vertex_count()) {
        throw std::invalid_argument("subgraph must be proper");
    }
    if (!is_maximally_independent(g)) {
        throw std::invalid_argument("graph is not maximally independent");
    }
    if (!is_k_connected(g, 3)) {
        throw std::invalid_argument("graph is not 3-connected");
    }
    if (!is_maximally_independent(induced_subgraph(g, hv))) {
        throw std::invalid_argument("subgraph is not maximally independent");
    }
    std::array<int, 3> want = attachments;
    std::sort(want.begin(), want.end());
    auto att = attachment_vertices(g, SubgraphHandle{&g, hv, true});
    if (att.size() != 3 ||
        !std::equal(att.begin(), att.end(), want.begin())) {
        throw std::invalid_argument(
            "attachment vertices do not match the subgraph boundary");
    }

    std::vector<int> kept;
    for (int v : g.vertices()) {
        if (!std::binary_search(hv.begin(), hv.end(), v) ||
            std::find(want.begin(), want.end(), v) != want.end()) {
            kept.push_back(v);
        }
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        bool a_in = std::binary_search(hv.begin(), hv.end(), e.first);
        bool b_in = std::binary_search(hv.begin(), hv.end(), e.second);
        if (!(a_in && b_in)) edges.push_back(e);
    }
    edges.push_back(make_edge(want[0], want[1]));
    edges.push_back(make_edge(want[1], want[2]));
    edges.push_back(make_edge(want[0], want[2]));
    return Graph(std::move(kept), std::move(edges));
}

bool is_doublet(const Graph& g) {
    if (g.vertex_count() != 6 || g.edge_count() != 9) return false;
    static const std::vector<Edge> reference = {
        {0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 5},
        {2, 3}, {2, 5}, {3, 4}, {4, 5}};
    const auto& vs = g.vertices();
    std::array<int, 6> perm{0, 1, 2, 3, 4, 5};
    do {
        bool match = true;
        for (const Edge& e : g.edges()) {
            int iu = static_cast<int>(
                std::lower_bound(vs.begin(), vs.end(), e.first) - vs.begin());
            int iv = static_cast<int>(
                std::lower_bound(vs.begin(), vs.end(), e.second) - vs.begin());
            Edge mapped = make_edge(perm[iu], perm[iv]);
            if (!std::binary_search(reference.begin(), reference.end(), mapped)) {
                match = false;
                break;
            }
        }
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ReductionTrace reduce_to_minimal(const Graph& g) {
    if (!is_maximally_independent(g)) {
        throw std::invalid_argument("graph is not maximally independent");
    }
    if (!is_k_connected(g, 3)) {
        throw std::invalid_argument("graph is not 3-connected");
    }
    if (!is_planar(g)) {
        throw std::invalid_argument("graph is not planar");
    }

    ReductionTrace trace{{}, g, false};
    Graph current = g;
    while (!is_doublet(current)) {
        if (current.vertex_count() <= 6) {
            throw InternalInvariantError(
                "reduction reached a graph with at most 6 vertices that is "
                "not the minimal graph");
        }
        ReductionStep step = find_reduction(current);
        Graph next = apply_reduction(current, step);
        if (next.vertex_count() >= current.vertex_count()) {
            throw InternalInvariantError("reduction step did not shrink the graph");
        }
        if (!is_maximally_independent(next)) {
            throw InternalInvariantError(
                "reduction step broke maximal independence");
        }
        if (!is_k_connected(next, 3)) {
            throw InternalInvariantError("reduction step broke 3-connectivity");
        }
        if (!is_planar(next)) {
            throw InternalInvariantError("reduction step broke planarity");
        }
        trace.steps.push_back(std::move(step));
        current = std::move(next);
    }
    trace.terminal = std::move(current);
    return trace;
}

// --------------------------------------------------------------------------
// Decomposition at separation pairs.
// --------------------------------------------------------------------------

namespace {

QsNode qs_build(Graph piece, std::vector<Edge> virtual_edges, QsSplitPolicy policy) {
    QsNode node{std::move(piece), std::move(virtual_edges), std::nullopt, {}};
    const Graph& p = node.piece;
    if (p.vertex_count() <= 3) return node;
    auto pairs = find_separation_pairs(p);
    if (pairs.empty()) return node;

    const SeparationSet& sep = pairs.front();
    int u = sep.vertices[0];
    int v = sep.vertices[1];
    node.split_pair = std::array<int, 2>{u, v};
    bool pair_is_edge = p.has_edge(u, v);
    size_t piece_count = sep.components.size();

    for (size_t i = 0; i < piece_count; ++i) {
        std::vector<int> pv = sep.components[i];
        pv.push_back(u);
        pv.push_back(v);
        std::sort(pv.begin(), pv.end());
        Graph sub = induced_subgraph(p, pv);
        std::vector<Edge> added;
        if (!pair_is_edge) {
            bool add_virtual;
            if (policy == QsSplitPolicy::FreedomGuided) {
                FreedomNumber f = freedom(sub);
                if (f != FreedomNumber{0} && f != FreedomNumber{1}) {
                    throw InternalInvariantError(
                        "separation piece of a maximally independent graph "
                        "has freedom other than 0 or 1");
                }
                add_virtual = (f == FreedomNumber{1});
            } else {
                add_virtual = (i + 1 < piece_count);
            }
            if (add_virtual) {
                sub = with_edge(sub, {u, v});
                added.push_back(make_edge(u, v));
            }
        }
        if (policy == QsSplitPolicy::FreedomGuided &&
            !is_maximally_independent(sub)) {
            throw InternalInvariantError(
                "separation piece is not maximally independent after the "
                "virtual-edge policy was applied");
        }
        node.children.push_back(qs_build(std::move(sub), std::move(added), policy));
    }
    return node;
}

bool leaves_all_triangles(const QsNode& node) {
    if (node.children.empty()) {
        return node.piece.vertex_count() == 3 && node.piece.edge_count() == 3;
    }
    for (const QsNode& child : node.children) {
        if (!leaves_all_triangles(child)) return false;
    }
    return true;
}

const QsNode* first_big_leaf(const QsNode& node) {
    if (node.children.empty()) {
        return node.piece.vertex_count() > 3 ? &node : nullptr;
    }
    for (const QsNode& child : node.children) {
        if (const QsNode* hit = first_big_leaf(child)) return hit;
    }
    return nullptr;
}

}  // namespace

QsDecomposition qs_decompose(const Graph& g, QsSplitPolicy policy) {
    if (!is_maximally_independent(g)) {
        throw std::invalid_argument("graph is not maximally independent");
    }
    QsNode root = qs_build(g, {}, policy);
    bool all = leaves_all_triangles(root);
    return QsDecomposition{std::move(root), all};
}

// --------------------------------------------------------------------------
// Classification.
// --------------------------------------------------------------------------

GraphClassification classify(const Graph& g) {
    if (!is_maximally_independent(g)) {
        return GraphClassification{
            GraphClass::Unknown,
            "graph is not maximally independent; the classifier only covers "
            "maximally independent planar graphs",
            std::nullopt,
            {},
            std::nullopt};
    }
    if (!is_planar(g)) {
        return GraphClassification{
            GraphClass::Unknown,
            "graph is not planar; non-planar graphs are outside the scope "
            "of the machine-checked certificate",
            std::nullopt,
            {},
            std::nullopt};
    }

    QsDecomposition decomposition = qs_decompose(g);
    if (decomposition.all_leaves_triangles) {
        return GraphClassification{
            GraphClass::QuadraticallySoluble,
            "every leaf of the separation-pair decomposition is a triangle, "
            "so generic realizations solve by a chain of quadratics",
            std::move(decomposition),
            {},
            std::nullopt};
    }

    const QsNode* core = first_big_leaf(decomposition.root);
    if (core == nullptr) {
        return GraphClassification{
            GraphClass::Unknown,
            "decomposition has a non-triangle leaf of unexpected shape",
            std::move(decomposition),
            {},
            std::nullopt};
    }
    std::vector<int> core_vertices = core->piece.vertices();
    ReductionTrace trace = reduce_to_minimal(core->piece);
    return GraphClassification{
        GraphClass::NonSolubleCertified,
        "the decomposition contains a 3-connected core on more than 3 "
        "vertices; the core reduces step by step to the minimal 6-vertex "
        "graph, whose generic non-solubility is established by the exact "
        "elimination certificate",
        std::move(decomposition),
        std::move(core_vertices),
        std::move(trace)};
}

}  // namespace cadgraph
