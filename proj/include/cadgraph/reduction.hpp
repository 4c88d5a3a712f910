// Reduction engine for planar constraint graphs: contractible edges,
// limpets, triangle substitution, separation-pair decomposition, and the
// classifier built on top of them.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cadgraph/graph.hpp"

namespace cadgraph {

// --------------------------------------------------------------------------
// Contraction calculus.
// --------------------------------------------------------------------------

// An edge of an independent graph is contractible when contracting it
// yields a graph that is still independent with the same freedom number.
// Precondition: g independent, e an edge of g; throws std::invalid_argument
// otherwise.
bool is_contractible(const Graph& g, Edge e);

// All contractible edges of a maximally independent planar graph, in
// lexicographic order. Throws std::invalid_argument when g is not
// maximally independent or not planar.
std::vector<Edge> contractible_edges(const Graph& g);

// A 3-cycle joined to the rest of the graph by exactly three edges, one at
// each cycle vertex, meeting three pairwise distinct outside vertices.
// Contracting any edge of such a cycle leaves a graph that is not
// 3-connected, so these subgraphs are exactly what forces the substitution
// branch of the reduction below.
struct Limpet {
    std::array<int, 3> triangle;  // sorted vertices of the 3-cycle
    std::array<int, 3> anchors;   // anchors[i] = outside neighbor of triangle[i]

    friend bool operator==(const Limpet& a, const Limpet& b) {
        return a.triangle == b.triangle && a.anchors == b.anchors;
    }
};

// Every limpet of g, ordered by triangle vertex set.
std::vector<Limpet> find_limpets(const Graph& g);

// --------------------------------------------------------------------------
// Reduction steps.
// --------------------------------------------------------------------------

enum class StepKind { Contract, Substitute };

// One step of the reduction: either contract an edge (the contracted graph
// stays 3-connected, maximally independent, and planar), or replace a
// proper vertex-induced maximally independent subgraph having exactly
// three attachment vertices by a triangle on those attachments.
struct ReductionStep {
    StepKind kind;
    Edge edge{-1, -1};                          // Contract only
    std::vector<int> subgraph;                  // Substitute only, sorted
    std::array<int, 3> attachments{-1, -1, -1}; // Substitute only, sorted
};

// A replayable sequence of steps from a start graph down to a terminal
// graph. `stuck` marks a trace that stopped because no step applied; the
// engine in this library either completes a trace or throws, so it only
// ever produces stuck = false, but the flag is part of the serialized
// format so externally produced traces can represent that state.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    Graph terminal;
    bool stuck = false;
};

// Finds the next reduction step for a 3-connected, maximally independent,
// planar graph with more than 6 vertices (throws std::invalid_argument
// when any of these preconditions fails). The contract branch is searched
// first over edges in lexicographic order; the substitute branch then
// enumerates induced subgraphs by increasing size, lexicographically
// within a size. Throws InternalInvariantError if neither branch yields a
// step, since the theory guarantees one exists.
ReductionStep find_reduction(const Graph& g);

// Applies a step to a graph: contract the edge, or substitute the triangle.
Graph apply_reduction(const Graph& g, const ReductionStep& step);

// Deletes the interior vertices of the subgraph induced on h_vertices,
// deletes every edge of that subgraph, and adds the triangle on the three
// attachment vertices. Preconditions (std::invalid_argument otherwise):
// g is 3-connected and maximally independent; h_vertices induces a proper
// maximally independent subgraph of g whose attachment vertex set is
// exactly `attachments`. Substituting a triangle of g for itself returns g
// unchanged.
Graph substitute_triangle(const Graph& g, const std::vector<int>& h_vertices,
                          const std::array<int, 3>& attachments);

// True exactly when g is isomorphic to the minimal 3-connected maximally
// independent planar graph: the 6-vertex, 9-edge graph made of two
// disjoint triangles joined by a perfect matching. Checked by exhausting
// all 720 vertex bijections against a reference copy.
bool is_doublet(const Graph& g);

// Iterates find_reduction until the graph is the minimal one, verifying
// after every step that the result is 3-connected, maximally independent,
// planar, and strictly smaller (InternalInvariantError otherwise).
// Precondition as for find_reduction, except the minimal graph itself is
// accepted and yields an empty trace.
ReductionTrace reduce_to_minimal(const Graph& g);

// --------------------------------------------------------------------------
// Decomposition at separation pairs.
// --------------------------------------------------------------------------

// Which pieces of a split at a separation pair {u,v} with uv not an edge
// receive the virtual edge uv:
//  - FreedomGuided (default): pieces with freedom 1 get the edge, pieces
//    with freedom 0 do not. For maximally independent input every piece
//    has freedom 0 or 1 and exactly one piece has freedom 0, so this keeps
//    every piece maximally independent; the engine verifies that and
//    throws InternalInvariantError if it ever fails to hold.
//  - LexLast: every piece except the last one (components ordered by their
//    smallest vertex) gets the edge. A diagnostic policy: it can produce
//    pieces that are not maximally independent, so no verification is done
//    and downstream guarantees lapse.
enum class QsSplitPolicy { FreedomGuided, LexLast };

// A node of the decomposition tree. Internal nodes record the separation
// pair they were split at; leaves are pieces with no separation pair
// (triangles, or 3-connected cores on more than 3 vertices).
struct QsNode {
    Graph piece;                                  // includes any virtual edge
    std::vector<Edge> virtual_edges;              // edges added to this piece
    std::optional<std::array<int, 2>> split_pair; // set on internal nodes
    std::vector<QsNode> children;                 // empty on leaves
};

struct QsDecomposition {
    QsNode root;
    bool all_leaves_triangles;
};

// Recursively splits a maximally independent graph at its lexicographically
// smallest separation pair until every piece is a triangle or has no
// separation pair. When the separation pair is itself an edge the pieces
// need no virtual edge; otherwise the policy above decides. Throws
// std::invalid_argument when g is not maximally independent.
QsDecomposition qs_decompose(const Graph& g,
                             QsSplitPolicy policy = QsSplitPolicy::FreedomGuided);

// --------------------------------------------------------------------------
// Classification.
// --------------------------------------------------------------------------

enum class GraphClass { QuadraticallySoluble, NonSolubleCertified, Unknown };

// Verdict for a constraint graph:
//  - QuadraticallySoluble: every leaf of the decomposition is a triangle,
//    so generic realizations solve by a chain of quadratics.
//  - NonSolubleCertified: the decomposition contains a 3-connected core on
//    more than 3 vertices; the core reduces step by step to the minimal
//    6-vertex graph, whose generic non-solubility is certified by the
//    exact elimination certificate, and each reduction step preserves
//    non-solubility.
//  - Unknown: the input is outside the certified scope (not maximally
//    independent, or not planar), detailed in `reason`.
struct GraphClassification {
    GraphClass kind;
    std::string reason;
    std::optional<QsDecomposition> decomposition; // set when computed
    std::vector<int> core_vertices;               // first core leaf, if any
    std::optional<ReductionTrace> core_reduction; // that core -> minimal graph
};

GraphClassification classify(const Graph& g);

}  // namespace cadgraph
