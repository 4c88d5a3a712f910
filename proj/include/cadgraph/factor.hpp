// Exact factorization of integer polynomials over the rationals.
#pragma once

#include <vector>

#include "cadgraph/unipoly.hpp"

namespace cadgraph {

struct FactorList {
    // content * product(factors[i].poly ^ factors[i].multiplicity) == input.
    BigInt content;
    struct Entry {
        UniPoly poly;  // primitive, irreducible, positive leading coefficient
        int multiplicity;
    };
    std::vector<Entry> factors;  // canonical order: degree, then coefficients
};

// Squarefree decomposition of a primitive polynomial with positive lead:
// input == product(parts[i].poly ^ parts[i].multiplicity), parts squarefree,
// primitive, pairwise coprime.
std::vector<FactorList::Entry> squarefree_decomposition(const UniPoly& p);

// Complete factorization into irreducibles over Q, represented by primitive
// integer polynomials. Errors on the zero polynomial.
FactorList factor_over_rationals(const UniPoly& p);

bool is_irreducible(const UniPoly& p);

}  // namespace cadgraph
