#include "cadgraph/rigidity.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace cadgraph {

void validate_dimensions(const DimensionedGraph& dg) {
    const Graph& g = dg.graph;
    Edge base = make_edge(dg.base_edge.first, dg.base_edge.second);
    if (!g.has_edge(base.first, base.second)) {
        throw std::invalid_argument("base edge is not in the graph");
    }
    for (const auto& [e, d] : dg.dims) {
        if (!g.has_edge(e.first, e.second)) {
            throw std::invalid_argument("dimension given for a non-edge");
        }
        if (d.sign() < 0) {
            throw std::invalid_argument("dimensions must be nonnegative");
        }
        if (e == base && d != BigRat(1)) {
            throw std::invalid_argument("base edge dimension must be 1");
        }
    }
    for (const Edge& e : g.edges()) {
        if (e == base) continue;
        if (dg.dims.find(e) == dg.dims.end()) {
            throw std::invalid_argument("edge " + std::to_string(e.first) + "-" +
                                        std::to_string(e.second) +
                                        " has no dimension");
        }
    }
}

ConstraintSystem build_constraints(const DimensionedGraph& dg) {
    validate_dimensions(dg);
    const Graph& g = dg.graph;
    Edge base = make_edge(dg.base_edge.first, dg.base_edge.second);

    std::vector<std::string> names;
    std::map<int, std::pair<size_t, size_t>> vertex_vars;
    for (int v : g.vertices()) {
        if (v == base.first || v == base.second) continue;
        vertex_vars[v] = {names.size(), names.size() + 1};
        names.push_back("x" + std::to_string(v));
        names.push_back("y" + std::to_string(v));
    }
    RingPtr ring = make_ring(names);

    // Coordinates of a vertex as polynomials: pinned vertices become
    // constants, the rest their own variables.
    auto coords = [&](int v) -> std::pair<MultiPoly, MultiPoly> {
        if (v == base.first) {
            return {MultiPoly::constant(ring, BigInt(0)),
                    MultiPoly::constant(ring, BigInt(0))};
        }
        if (v == base.second) {
            return {MultiPoly::constant(ring, BigInt(1)),
                    MultiPoly::constant(ring, BigInt(0))};
        }
        auto [xi, yi] = vertex_vars.at(v);
        return {MultiPoly::variable(ring, xi), MultiPoly::variable(ring, yi)};
    };

    std::vector<MultiPoly> polynomials;
    for (const Edge& e : g.edges()) {
        if (e == base) continue;
        const BigRat& d = dg.dims.at(e);
        auto [xa, ya] = coords(e.first);
        auto [xb, yb] = coords(e.second);
        MultiPoly dx = xa - xb;
        MultiPoly dy = ya - yb;
        MultiPoly squared = dx * dx + dy * dy;
        // den(d) * ((dx)^2 + (dy)^2) - num(d): integer coefficients, same
        // zero set as the rational-valued equation.
        MultiPoly f = squared.scaled(d.den()) -
                      MultiPoly::constant(ring, d.num());
        polynomials.push_back(std::move(f));
    }

    return ConstraintSystem{std::move(ring), std::move(polynomials), dg,
                            std::move(vertex_vars)};
}

std::vector<std::vector<MultiPoly>> rigidity_jacobian(const ConstraintSystem& cs) {
    size_t vars = cs.ring->arity();
    if (cs.polynomials.size() != vars) {
        throw std::invalid_argument(
            "constraint system is not square: " +
            std::to_string(cs.polynomials.size()) + " equations, " +
            std::to_string(vars) + " variables");
    }
    std::vector<std::vector<MultiPoly>> jac;
    jac.reserve(cs.polynomials.size());
    for (const MultiPoly& f : cs.polynomials) {
        std::vector<MultiPoly> row;
        row.reserve(vars);
        for (size_t j = 0; j < vars; ++j) {
            row.push_back(f.partial_derivative(j));
        }
        jac.push_back(std::move(row));
    }
    return jac;
}

namespace {

// Exact determinant of a rational matrix by Gaussian elimination.
BigRat rational_determinant(std::vector<std::vector<BigRat>> m) {
    size_t n = m.size();
    BigRat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return BigRat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        BigRat inv = BigRat(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            BigRat factor = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) {
                m[r][c] -= factor * m[col][c];
            }
        }
    }
    return det;
}

}  // namespace

bool jacobian_generically_nonsingular(const ConstraintSystem& cs) {
    auto jac = rigidity_jacobian(cs);
    size_t n = jac.size();
    if (n == 0) return true;  // empty system: vacuously nonsingular

    // Fixed seed: the verdict is reproducible run to run.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<long> num_dist(-1000000, 1000000);
    std::uniform_int_distribution<long> den_dist(1, 1000);

    for (int trial = 0; trial < 5; ++trial) {
        std::vector<BigRat> point;
        point.reserve(cs.ring->arity());
        for (size_t j = 0; j < cs.ring->arity(); ++j) {
            point.emplace_back(BigInt(num_dist(rng)), BigInt(den_dist(rng)));
        }
        std::vector<std::vector<BigRat>> values(n, std::vector<BigRat>());
        for (size_t i = 0; i < n; ++i) {
            values[i].reserve(n);
            for (size_t j = 0; j < n; ++j) {
                values[i].push_back(jac[i][j].evaluate(point));
            }
        }
        if (!rational_determinant(std::move(values)).is_zero()) {
            return true;
        }
    }
    return false;
}

}  // namespace cadgraph
