// Distance-constraint systems for dimensioned graphs and the Jacobian
// rank evidence that maximally independent graphs pin down finitely many
// placements.
#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cadgraph/bigint.hpp"
#include "cadgraph/graph.hpp"
#include "cadgraph/multipoly.hpp"

namespace cadgraph {

// A graph together with an exact squared length for every edge. The base
// edge is normalized to squared length 1; its endpoints get pinned at
// (0,0) and (1,0) when constraints are built, which quotients out the
// rigid motions of the plane.
struct DimensionedGraph {
    Graph graph;
    Edge base_edge;
    // Squared length per non-base edge; nonnegative exact rationals.
    // An entry for the base edge is allowed only with value 1.
    std::map<Edge, BigRat> dims;
};

// Throws std::invalid_argument when the base edge is missing from the
// graph, a non-base edge has no dimension, an entry names a non-edge, a
// dimension is negative, or a base-edge entry is not 1.
void validate_dimensions(const DimensionedGraph& dg);

// One distance equation per non-base edge, over the coordinates of the
// non-pinned vertices. For vertex v the variables are named "x<v>" and
// "y<v>", in vertex order. Each equation is
//     (x_v - x_w)^2 + (y_v - y_w)^2 - d_e
// with the pinned coordinates substituted and the whole polynomial scaled
// by the denominator of d_e so that coefficients stay integers (an
// equivalent system with the same solutions and the same Jacobian rank
// behavior).
struct ConstraintSystem {
    RingPtr ring;
    std::vector<MultiPoly> polynomials;
    DimensionedGraph source;
    // vertex id -> (index of x variable, index of y variable) in `ring`.
    std::map<int, std::pair<size_t, size_t>> vertex_vars;
};

// Builds the constraint system for a dimensioned graph. The polynomial
// count is always edges-1 (the base edge equation is identically satisfied
// by the pinning) and the variable count 2(vertices-2). Validation errors
// are std::invalid_argument.
ConstraintSystem build_constraints(const DimensionedGraph& dg);

// The matrix of partial derivatives d f_i / d var_j. Requires a square
// system (as many polynomials as variables, which maximal independence of
// the graph guarantees); throws std::invalid_argument otherwise.
std::vector<std::vector<MultiPoly>> rigidity_jacobian(const ConstraintSystem& cs);

// Whether det(J) is nonzero as a polynomial, decided by exact rational
// evaluation at 5 pseudo-random points from a fixed seed: one nonzero
// exact determinant proves nonsingularity outright; all-zero reports
// false (which for a polynomial of this size is overwhelming evidence of
// a singular Jacobian, though not a proof). No floating point is used.
bool jacobian_generically_nonsingular(const ConstraintSystem& cs);

}  // namespace cadgraph
