#include "cadgraph/connectivity.hpp"

#include <algorithm>
#include <stdexcept>

namespace cadgraph {

namespace {

// Connected components of g with the vertices in `removed` deleted.
std::vector<std::vector<int>> components_without(const Graph& g, const std::vector<int>& removed) {
    std::vector<std::vector<int>> out;
    std::vector<int> seen;
    auto gone = [&](int v) {
        return std::binary_search(removed.begin(), removed.end(), v);
    };
    for (int start : g.vertices()) {
        if (gone(start) || std::binary_search(seen.begin(), seen.end(), start)) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (gone(v) || std::binary_search(seen.begin(), seen.end(), v)) continue;
            seen.insert(std::lower_bound(seen.begin(), seen.end(), v), v);
            comp.push_back(v);
            for (int w : g.neighbors(v)) stack.push_back(w);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<SeparationSet> find_cuts(const Graph& g, int size) {
    std::vector<SeparationSet> out;
    const auto& vs = g.vertices();
    int n = g.vertex_count();
    std::vector<int> pick(size);
    auto visit = [&](const std::vector<int>& cut) {
        auto comps = components_without(g, cut);
        if (comps.size() >= 2) out.push_back({cut, std::move(comps)});
    };
    if (size == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) visit({vs[i], vs[j]});
    } else if (size == 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) visit({vs[i], vs[j], vs[k]});
    } else {
        throw std::invalid_argument("find_cuts: only sizes 2 and 3 supported");
    }
    return out;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k != 2 && k != 3) throw std::invalid_argument("is_k_connected: k must be 2 or 3");
    if (g.vertex_count() <= k)
        throw std::invalid_argument("is_k_connected: graph too small");
    if (!g.is_connected()) return false;
    const auto& vs = g.vertices();
    int n = g.vertex_count();
    if (k == 2) {
        for (int i = 0; i < n; ++i)
            if (components_without(g, {vs[i]}).size() >= 2) return false;
        return true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (components_without(g, {vs[i], vs[j]}).size() >= 2) return false;
    return true;
}

std::vector<SeparationSet> find_separation_pairs(const Graph& g) {
    return find_cuts(g, 2);
}

std::vector<SeparationSet> find_separation_triples(const Graph& g) {
    return find_cuts(g, 3);
}

}  // namespace cadgraph
