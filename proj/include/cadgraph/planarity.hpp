// Planarity decision and face-level embeddings for 2-connected graphs.
#pragma once

#include <map>
#include <vector>

#include "cadgraph/graph.hpp"

namespace cadgraph {

struct PlanarEmbedding {
    // Cyclic neighbor order around each vertex.
    std::map<int, std::vector<int>> rotation;
    // Face boundaries as directed vertex cycles; every directed edge of
    // the graph appears in exactly one face.
    std::vector<std::vector<int>> faces;
};

// True iff g admits a planar embedding. Decided per biconnected block by
// incremental path addition.
bool is_planar(const Graph& g);

// Embedding of a planar 2-connected graph with at least 3 vertices.
// Guarantees the Euler relation F + n = e + 2 and single coverage of
// every directed edge by the face set.
PlanarEmbedding planar_embedding(const Graph& g);

// Face-size histogram: size -> number of faces of that size.
std::map<int, int> face_census(const PlanarEmbedding& emb);

}  // namespace cadgraph
