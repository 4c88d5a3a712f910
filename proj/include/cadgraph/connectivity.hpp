// Connectivity predicates and separation-set enumeration.
#pragma once

#include <vector>

#include "cadgraph/graph.hpp"

namespace cadgraph {

// A vertex cut together with the components its removal leaves behind.
struct SeparationSet {
    std::vector<int> vertices;                 // sorted, size 2 or 3
    std::vector<std::vector<int>> components;  // sorted sets, ordered by minimum
};

// Brute-force k-connectivity for k in {2, 3}: connected and no vertex set
// of size k-1 disconnects. Requires |g| > k.
bool is_k_connected(const Graph& g, int k);

// All 2-element vertex cuts with their components.
std::vector<SeparationSet> find_separation_pairs(const Graph& g);

// All 3-element vertex cuts with their components.
std::vector<SeparationSet> find_separation_triples(const Graph& g);

}  // namespace cadgraph
