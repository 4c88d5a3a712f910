// The minimal-graph elimination pipeline: squared-form y-elimination of
// the constraint system, the three-stage resultant chain down to one
// univariate polynomial, and the non-solubility certificate assembled from
// its factors' Galois groups.
#pragma once

#include <array>

#include "cadgraph/galois.hpp"
#include "cadgraph/multipoly.hpp"
#include "cadgraph/rigidity.hpp"
#include "cadgraph/unipoly.hpp"

namespace cadgraph {

// The four squared-form eliminants of the minimal graph's constraint
// system, over the ring {x3, x4, x5, x6} of free x-coordinates (variable
// x<k> is the x-coordinate of vertex k-1 in the fixed labeling below).
// Each g has degree 2 in each of its two variables. With D<k> the squared
// dimensions and
//     yy3 = D2 - (x3-1)^2,  yy4 = D9 - x4^2,
//     yy5 = D8 - x5^2,      yy6 = D7 - (x6-1)^2
// the eliminants are
//     g1 = (D3 - (x3^2 + x4^2 - 2 x3 x4 + yy3 + yy4))^2 - 4 yy3 yy4
//     g2 = (D4 - (x4^2 + x5^2 - 2 x4 x5 + yy4 + yy5))^2 - 4 yy4 yy5
//     g3 = (D5 - (x5^2 + x6^2 - 2 x5 x6 + yy5 + yy6))^2 - 4 yy5 yy6
//     g4 = (D6 - (x6^2 + x3^2 - 2 x6 x3 + yy6 + yy3))^2 - 4 yy6 yy3
// scaled by a common integer to clear rational dimensions (harmless: it
// rescales the chain output by a constant, leaving its primitive part and
// factors unchanged).
struct DoubletSystem {
    RingPtr ring;                        // {x3, x4, x5, x6}
    MultiPoly g1, g2, g3, g4;
    std::vector<MultiPoly> provenance;   // the 8 source constraint equations
    std::array<BigRat, 8> squared_dims;  // D2..D9 in label order
};

// Fixed labeling the pipeline is defined on: vertices 0..5, base edge
// (0,1) pinned at (0,0)/(1,0), and dimension labels
//   d2:(1,2) d3:(2,3) d4:(3,4) d5:(4,5) d6:(2,5) d7:(1,5) d8:(0,4) d9:(0,3).
Graph doublet_graph();

// Builds the dimensioned doublet for unsquared integer lengths d2..d9
// (they are squared on ingestion; the base edge is fixed at 1).
DimensionedGraph doublet_with_lengths(const std::array<long, 8>& lengths);

// Squared-form elimination of the y-coordinates. The input must be the
// constraint system of the doublet in the fixed labeling above (throws
// std::invalid_argument "wrong graph shape" otherwise).
DoubletSystem square_eliminate(const ConstraintSystem& cs);

// Res(Res(g1,g2,x4), Res(g3,g4,x6), x5) as a univariate polynomial in x3,
// content included. Before each resultant the degree identities that keep
// specialization and elimination commuting are asserted: deg 2 in the
// eliminated variable for each g,
// then deg 4 in x5 for both inner resultants; a drop (degenerate
// dimensions) throws std::runtime_error naming the failing identity.
UniPoly resultant_chain(const DoubletSystem& ds);

// Everything needed to check the non-solubility claim for one integral
// dimensioned doublet: the chain output split into content and primitive
// part, the recorded chain degrees, and the per-factor Galois evidence.
struct NonSolubleCertificate {
    std::array<long, 8> dims;       // unsquared lengths d2..d9
    int prime_budget = 200;
    UniPoly h3_prime;               // primitive part of the chain output
    BigInt content;                 // chain output = content * h3_prime
    // {deg(g1,x4), deg(g2,x4), deg(g3,x6), deg(g4,x6), deg(X,x5), deg(Y,x5)}
    std::array<int, 6> chain_degrees{};
    SolubilityVerdict verdict;      // factor trail with Galois certificates
    bool partial = false;      // some factor of degree >= 5 left inconclusive
    bool established = false;  // some factor of degree >= 5 full-symmetric
};

// Runs the whole pipeline for the given unsquared lengths. Deterministic:
// identical inputs give identical certificates. Degenerate lengths that
// collapse a chain degree throw std::runtime_error (from resultant_chain);
// lengths that keep every chain degree but make the final resultant vanish
// identically (a symmetric collapse) yield a partial certificate with a
// zero h3_prime, zero content, and an empty trail.
NonSolubleCertificate doublet_certificate(const std::array<long, 8>& dims,
                                          int prime_budget = 200);

// Recomputes the pipeline from cert.dims / cert.prime_budget and compares
// every semantic field. False means the stored certificate does not match
// what the pipeline produces and must be rejected.
bool verify_certificate(const NonSolubleCertificate& cert);

}  // namespace cadgraph
