#include <doctest.h>

#include <cadgraph/connectivity.hpp>
#include <cadgraph/errors.hpp>
#include <cadgraph/graph.hpp>
#include <cadgraph/planarity.hpp>
#include <cadgraph/reduction.hpp>

#include "support/corpus.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

using cadgraph::Edge;
using cadgraph::Graph;
using cadgraph::GraphClass;
using cadgraph::Limpet;
using cadgraph::QsNode;
using cadgraph::ReductionStep;
using cadgraph::ReductionTrace;
using cadgraph::StepKind;
using corpus::make_graph;

namespace {

Graph doublet() {
    return make_graph(6,
                      {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// The doublet with a pendant triangle glued to each of its two triangles:
// limpets {6,7,8} anchored at 0,1,2 and {9,10,11} anchored at 3,4,5.
Graph double_limpet() {
    std::vector<Edge> es = doublet().edges();
    for (Edge e : {Edge{6, 7}, Edge{7, 8}, Edge{6, 8}, Edge{0, 6}, Edge{1, 7}, Edge{2, 8},
                   Edge{9, 10}, Edge{10, 11}, Edge{9, 11}, Edge{3, 9}, Edge{4, 10}, Edge{5, 11}})
        es.push_back(e);
    return make_graph(12, es);
}

Graph k33() {
    std::vector<Edge> es;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) es.push_back({i, j});
    return make_graph(6, es);
}

bool preserves_all_predicates(const Graph& g) {
    return cadgraph::is_maximally_independent(g) && cadgraph::is_planar(g) &&
           (g.vertex_count() > 3 ? cadgraph::is_k_connected(g, 3)
                                 : g.edge_count() == 3);
}

void collect_pieces(const QsNode& node, std::vector<const Graph*>& out) {
    out.push_back(&node.piece);
    for (const auto& c : node.children) collect_pieces(c, out);
}

void collect_leaves(const QsNode& node, std::vector<const Graph*>& out) {
    if (node.children.empty()) {
        out.push_back(&node.piece);
        return;
    }
    for (const auto& c : node.children) collect_leaves(c, out);
}

}  // namespace

TEST_CASE("contractibility matches the definitional check across the census through 7") {
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : corpus::mi_census(n)) {
            for (const Edge& e : g.edges()) {
                bool lib = cadgraph::is_contractible(g, e);
                bool oracle = corpus::contractible_bruteforce(g, e);
                CHECK(lib == oracle);
                // Definitional cross-check: contract and re-test directly.
                Graph c = cadgraph::contract_edge(g, e);
                bool direct = cadgraph::is_independent(c) &&
                              cadgraph::freedom(c) == cadgraph::freedom(g);
                CHECK(lib == direct);
            }
        }
    }
}

TEST_CASE("contractibility preconditions") {
    Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(cadgraph::is_contractible(k4, {0, 1}), std::invalid_argument);  // dependent
    CHECK_THROWS_AS(cadgraph::is_contractible(doublet(), {0, 5}), std::invalid_argument);
}

TEST_CASE("every maximally independent planar census graph has at least 3 contractible edges") {
    for (int n = 3; n <= 8; ++n) {
        for (const Graph& g :
             corpus::mi_census_filtered(n, /*need_planar=*/true, /*need_3conn=*/false)) {
            auto ce = cadgraph::contractible_edges(g);
            CHECK(ce.size() >= 3);
            CHECK(std::is_sorted(ce.begin(), ce.end()));
            for (const Edge& e : ce) CHECK(cadgraph::is_contractible(g, e));
        }
    }
}

TEST_CASE("contractible_edges rejects out-of-scope graphs") {
    CHECK_THROWS_AS(cadgraph::contractible_edges(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})),
                    std::invalid_argument);  // not maximally independent
    CHECK_THROWS_AS(cadgraph::contractible_edges(k33()), std::invalid_argument);  // not planar
}

TEST_CASE("when no contraction preserves 3-connectivity, 3-cycles are degree-3 all or none") {
    // Across 3-connected maximally independent census graphs (planar or not):
    // if no contractible edge keeps the contracted graph 3-connected, then every
    // 3-cycle has either all three vertices of degree 3 or none of them.
    int vacuous_hosts = 0, checked_hosts = 0;
    for (int n = 6; n <= 8; ++n) {
        for (const Graph& g :
             corpus::mi_census_filtered(n, /*need_planar=*/false, /*need_3conn=*/true)) {
            bool has_good_contraction = false;
            for (const Edge& e : g.edges()) {
                if (!cadgraph::is_contractible(g, e)) continue;
                Graph c = cadgraph::contract_edge(g, e);
                if (c.vertex_count() > 3 && cadgraph::is_k_connected(c, 3)) {
                    has_good_contraction = true;
                    break;
                }
            }
            if (has_good_contraction) continue;
            ++checked_hosts;
            bool saw_triangle = false;
            for (const Edge& e : g.edges()) {
                for (int apex : cadgraph::triangles_through(g, e)) {
                    saw_triangle = true;
                    int d1 = g.degree(e.first), d2 = g.degree(e.second), d3 = g.degree(apex);
                    bool all3 = d1 == 3 && d2 == 3 && d3 == 3;
                    bool none3 = d1 != 3 && d2 != 3 && d3 != 3;
                    CHECK((all3 || none3));
                }
            }
            if (!saw_triangle) ++vacuous_hosts;
        }
    }
    CHECK(checked_hosts >= 1);  // the doublet itself qualifies at n = 6

    // A 12-vertex host where the property is non-vacuous: the double limpet has
    // no 3-connectivity-preserving contraction, limpet triangles of all degree-3
    // vertices, and base triangles with none.
    Graph g = double_limpet();
    for (const Edge& e : g.edges()) {
        if (!cadgraph::is_contractible(g, e)) continue;
        Graph c = cadgraph::contract_edge(g, e);
        CHECK_FALSE(cadgraph::is_k_connected(c, 3));
    }
    for (const Edge& e : g.edges())
        for (int apex : cadgraph::triangles_through(g, e)) {
            int d1 = g.degree(e.first), d2 = g.degree(e.second), d3 = g.degree(apex);
            CHECK(((d1 == 3 && d2 == 3 && d3 == 3) || (d1 != 3 && d2 != 3 && d3 != 3)));
        }
}

TEST_CASE("limpet discovery") {
    // The doublet's two triangles are mutual limpets.
    auto limpets = cadgraph::find_limpets(doublet());
    REQUIRE(limpets.size() == 2);
    CHECK(limpets[0].triangle == std::array<int, 3>{0, 1, 2});
    CHECK(limpets[0].anchors == std::array<int, 3>{3, 4, 5});
    CHECK(limpets[1].triangle == std::array<int, 3>{3, 4, 5});
    CHECK(limpets[1].anchors == std::array<int, 3>{0, 1, 2});

    // In the double limpet only the two pendant triangles qualify: the base
    // triangles have two outside edges at each vertex.
    auto dl = cadgraph::find_limpets(double_limpet());
    REQUIRE(dl.size() == 2);
    CHECK(dl[0].triangle == std::array<int, 3>{6, 7, 8});
    CHECK(dl[0].anchors == std::array<int, 3>{0, 1, 2});
    CHECK(dl[1].triangle == std::array<int, 3>{9, 10, 11});
    CHECK(dl[1].anchors == std::array<int, 3>{3, 4, 5});

    // K4: every triangle's outside vertex count is 1, not 3 distinct anchors.
    CHECK(cadgraph::find_limpets(
              make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))
              .empty());
}

TEST_CASE("minimal-graph recognition is isomorphism-invariant") {
    CHECK(cadgraph::is_doublet(doublet()));
    // Same graph under a scrambled labeling.
    Graph relabeled({3, 10, 17, 21, 34, 40},
                    {{3, 10}, {10, 17}, {3, 17}, {21, 34}, {34, 40}, {21, 40},
                     {3, 21}, {10, 34}, {17, 40}});
    CHECK(cadgraph::is_doublet(relabeled));
    // Equal vertex and edge counts are not enough.
    CHECK_FALSE(cadgraph::is_doublet(k33()));
    CHECK_FALSE(cadgraph::is_doublet(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(cadgraph::is_doublet(double_limpet()));
}

TEST_CASE("find_reduction preconditions and progress guarantee") {
    CHECK_THROWS_AS(cadgraph::find_reduction(doublet()), std::invalid_argument);  // too small
    CHECK_THROWS_AS(cadgraph::find_reduction(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(cadgraph::find_reduction(k33()), std::invalid_argument);  // not planar
}

TEST_CASE("the double limpet reduces by exactly two substitutions") {
    Graph g = double_limpet();
    ReductionStep s1 = cadgraph::find_reduction(g);
    CHECK(s1.kind == StepKind::Substitute);
    CHECK(s1.subgraph == std::vector<int>{0, 1, 2, 6, 7, 8});
    CHECK(s1.attachments == std::array<int, 3>{0, 1, 2});
    Graph g1 = cadgraph::apply_reduction(g, s1);
    CHECK(g1.vertex_count() == 9);
    CHECK(preserves_all_predicates(g1));

    // Two size-6 substitutions are available in g1 ({0..5} and {3,4,5,9,10,11},
    // both attached at {3,4,5}); the search takes the lexicographically first.
    ReductionStep s2 = cadgraph::find_reduction(g1);
    CHECK(s2.kind == StepKind::Substitute);
    CHECK(s2.subgraph == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(s2.attachments == std::array<int, 3>{3, 4, 5});
    Graph g2 = cadgraph::apply_reduction(g1, s2);
    CHECK(cadgraph::is_doublet(g2));

    ReductionTrace trace = cadgraph::reduce_to_minimal(g);
    CHECK(trace.steps.size() == 2);
    CHECK_FALSE(trace.stuck);
    CHECK(cadgraph::is_doublet(trace.terminal));
}

TEST_CASE("reduction traces across the census reach the minimal graph with verified steps") {
    for (int n : {7, 8}) {
        for (const Graph& g :
             corpus::mi_census_filtered(n, /*need_planar=*/true, /*need_3conn=*/true)) {
            ReductionTrace trace = cadgraph::reduce_to_minimal(g);
            CHECK_FALSE(trace.stuck);
            CHECK(cadgraph::is_doublet(trace.terminal));
            // Replay the trace independently, checking the invariants at each stop.
            Graph cur = g;
            for (const ReductionStep& step : trace.steps) {
                Graph next = cadgraph::apply_reduction(cur, step);
                CHECK(next.vertex_count() < cur.vertex_count());
                CHECK(preserves_all_predicates(next));
                cur = next;
            }
            CHECK(cur == trace.terminal);
        }
    }
}

TEST_CASE("the minimal graph yields an empty trace") {
    ReductionTrace trace = cadgraph::reduce_to_minimal(doublet());
    CHECK(trace.steps.empty());
    CHECK(cadgraph::is_doublet(trace.terminal));
}

TEST_CASE("triangle substitution: exact semantics and validation") {
    Graph g = double_limpet();
    Graph after = cadgraph::substitute_triangle(g, {0, 1, 2, 6, 7, 8}, {0, 1, 2});
    CHECK(after.vertex_count() == 9);
    CHECK_FALSE(after.has_vertex(6));
    CHECK(after.has_edge(0, 1));
    CHECK(after.has_edge(1, 2));
    CHECK(after.has_edge(0, 2));
    CHECK(cadgraph::is_maximally_independent(after));
    CHECK(cadgraph::is_k_connected(after, 3));
    CHECK(cadgraph::is_planar(after));

    // Substituting a triangle for itself is the identity.
    Graph same = cadgraph::substitute_triangle(doublet(), {0, 1, 2}, {0, 1, 2});
    CHECK(same == doublet());

    // Host must be maximally independent and 3-connected.
    CHECK_THROWS_AS(cadgraph::substitute_triangle(
                        make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), {0, 1, 2}, {0, 1, 2}),
                    std::invalid_argument);
    // Subgraph must be maximally independent.
    CHECK_THROWS_AS(cadgraph::substitute_triangle(g, {0, 1, 3}, {0, 1, 3}),
                    std::invalid_argument);
    // Attachment set must match the actual boundary.
    CHECK_THROWS_AS(cadgraph::substitute_triangle(g, {0, 1, 2, 6, 7, 8}, {0, 1, 6}),
                    std::invalid_argument);
    // Subgraph must be proper.
    std::vector<int> all = g.vertices();
    CHECK_THROWS_AS(cadgraph::substitute_triangle(g, all, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("substitution instances harvested from reduction traces stay in the class") {
    // Every substitution step the engine emits across the 7- and 8-vertex census
    // is an independent witness that the operation preserves the invariants.
    int instances = 0;
    for (int n : {7, 8}) {
        for (const Graph& g :
             corpus::mi_census_filtered(n, /*need_planar=*/true, /*need_3conn=*/true)) {
            Graph cur = g;
            ReductionTrace trace = cadgraph::reduce_to_minimal(g);
            for (const ReductionStep& step : trace.steps) {
                if (step.kind == StepKind::Substitute) {
                    Graph next =
                        cadgraph::substitute_triangle(cur, step.subgraph, step.attachments);
                    CHECK(cadgraph::is_maximally_independent(next));
                    CHECK(cadgraph::is_k_connected(next, 3));
                    ++instances;
                }
                cur = cadgraph::apply_reduction(cur, step);
            }
        }
    }
    // Manufactured instances guarantee coverage even if the census reduces by
    // contractions alone.
    Graph host = double_limpet();
    Graph shrunk = cadgraph::substitute_triangle(host, {3, 4, 5, 9, 10, 11}, {3, 4, 5});
    CHECK(cadgraph::is_maximally_independent(shrunk));
    CHECK(cadgraph::is_k_connected(shrunk, 3));
    ++instances;
    CHECK(instances >= 1);
}

TEST_CASE("separation-pair decomposition of the two-triangle-plus-apex graph") {
    // Vertices 0..4; triangle {0,1,2} and triangle {1,2,3} share edge (1,2);
    // vertex 4 joins 0 and 3. Splitting at {0,3} spins off the path piece as a
    // triangle with a virtual edge; the 4-cycle-with-chord piece then splits at
    // the edge (1,2) into two real triangles.
    Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {3, 4}});
    auto qs = cadgraph::qs_decompose(g);
    CHECK(qs.all_leaves_triangles);
    REQUIRE(qs.root.split_pair.has_value());
    CHECK(*qs.root.split_pair == std::array<int, 2>{0, 3});
    REQUIRE(qs.root.children.size() == 2);

    std::vector<const Graph*> leaves;
    collect_leaves(qs.root, leaves);
    CHECK(leaves.size() == 3);
    for (const Graph* leaf : leaves) {
        CHECK(leaf->vertex_count() == 3);
        CHECK(leaf->edge_count() == 3);
    }

    // Freedom-guided pieces are all maximally independent.
    std::vector<const Graph*> pieces;
    collect_pieces(qs.root, pieces);
    for (const Graph* p : pieces) CHECK(cadgraph::is_maximally_independent(*p));

    // Exactly one piece received the virtual edge (0,3).
    int with_virtual = 0;
    std::function<void(const QsNode&)> walk = [&](const QsNode& node) {
        for (const Edge& e : node.virtual_edges)
            if (e == Edge{0, 3}) ++with_virtual;
        for (const auto& c : node.children) walk(c);
    };
    walk(qs.root);
    CHECK(with_virtual == 1);
}

TEST_CASE("the lex-last split policy is diagnostic only and can leave the class") {
    Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {3, 4}});
    auto qs = cadgraph::qs_decompose(g, cadgraph::QsSplitPolicy::LexLast);
    std::vector<const Graph*> pieces;
    collect_pieces(qs.root, pieces);
    bool some_outside = false;
    for (const Graph* p : pieces)
        if (!cadgraph::is_maximally_independent(*p)) some_outside = true;
    CHECK(some_outside);
}

TEST_CASE("decomposition rejects graphs that are not maximally independent") {
    CHECK_THROWS_AS(cadgraph::qs_decompose(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})),
                    std::invalid_argument);
}

TEST_CASE("decomposition of a 3-connected graph is a single leaf") {
    auto qs = cadgraph::qs_decompose(doublet());
    CHECK(qs.root.children.empty());
    CHECK_FALSE(qs.root.split_pair.has_value());
    CHECK_FALSE(qs.all_leaves_triangles);
    CHECK(qs.root.piece == doublet());
}

TEST_CASE("classification: quadratically soluble") {
    Graph g = make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {3, 4}});
    auto c = cadgraph::classify(g);
    CHECK(c.kind == GraphClass::QuadraticallySoluble);
    REQUIRE(c.decomposition.has_value());
    CHECK(c.decomposition->all_leaves_triangles);
    CHECK(c.core_vertices.empty());
    CHECK_FALSE(c.core_reduction.has_value());
    CHECK_FALSE(c.reason.empty());

    auto tri = cadgraph::classify(make_graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(tri.kind == GraphClass::QuadraticallySoluble);
}

TEST_CASE("classification: certified non-soluble core") {
    auto c = cadgraph::classify(doublet());
    CHECK(c.kind == GraphClass::NonSolubleCertified);
    CHECK(c.core_vertices == doublet().vertices());
    REQUIRE(c.core_reduction.has_value());
    CHECK(c.core_reduction->steps.empty());

    // A graph that mixes a triangle leaf with a core: the doublet plus one
    // degree-2 vertex joined to an edge.
    std::vector<Edge> es = doublet().edges();
    es.push_back({0, 6});
    es.push_back({1, 6});
    Graph mixed = make_graph(7, es);
    auto cm = cadgraph::classify(mixed);
    CHECK(cm.kind == GraphClass::NonSolubleCertified);
    CHECK(cm.core_vertices == doublet().vertices());
    REQUIRE(cm.core_reduction.has_value());
    CHECK(cadgraph::is_doublet(cm.core_reduction->terminal));

    // A core that needs actual reduction work: the double limpet.
    auto cd = cadgraph::classify(double_limpet());
    CHECK(cd.kind == GraphClass::NonSolubleCertified);
    REQUIRE(cd.core_reduction.has_value());
    CHECK(cd.core_reduction->steps.size() == 2);
}

TEST_CASE("classification: out-of-scope inputs give Unknown with a reason") {
    auto dep = cadgraph::classify(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(dep.kind == GraphClass::Unknown);
    CHECK_FALSE(dep.reason.empty());

    auto np = cadgraph::classify(k33());
    CHECK(np.kind == GraphClass::Unknown);
    CHECK(np.reason.find("planar") != std::string::npos);

    // A 2-vertex graph is maximally independent and planar but below the
    // decomposition's scope: it must come back Unknown, not misclassified.
    auto k2 = cadgraph::classify(make_graph(2, {{0, 1}}));
    CHECK(k2.kind == GraphClass::Unknown);
}
