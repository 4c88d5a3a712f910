#include "cadgraph/elimination.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cadgraph {

namespace {

// Dimension labels d2..d9 in order, with the edge each one measures.
constexpr std::array<std::pair<int, int>, 8> kDimEdges{{
    {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}, {1, 5}, {0, 4}, {0, 3}}};

}  // namespace

Graph doublet_graph() {
    return Graph({0, 1, 2, 3, 4, 5},
                 {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5},
                  {2, 5}, {1, 5}, {0, 4}, {0, 3}});
}

DimensionedGraph doublet_with_lengths(const std::array<long, 8>& lengths) {
    std::map<Edge, BigRat> dims;
    for (size_t i = 0; i < 8; ++i) {
        BigInt len(lengths[i]);
        dims[make_edge(kDimEdges[i].first, kDimEdges[i].second)] =
            BigRat(len * len);
    }
    return DimensionedGraph{doublet_graph(), {0, 1}, std::move(dims)};
}

DoubletSystem square_eliminate(const ConstraintSystem& cs) {
    if (cs.source.graph != doublet_graph() ||
        make_edge(cs.source.base_edge.first, cs.source.base_edge.second) !=
            make_edge(0, 1)) {
        throw std::invalid_argument(
            "wrong graph shape: the elimination pipeline is defined on the "
            "6-vertex minimal graph in its fixed labeling with base edge "
            "(0,1)");
    }

    // Squared dimensions D2..D9 in label order.
    std::array<BigRat, 8> d;
    for (size_t i = 0; i < 8; ++i) {
        d[i] = cs.source.dims.at(
            make_edge(kDimEdges[i].first, kDimEdges[i].second));
    }

    // Common denominator so the eliminants have integer coefficients.
    BigInt scale(1);
    for (const BigRat& v : d) {
        scale = scale / BigInt::gcd(scale, v.den()) * v.den();
    }
    // N[i] = scale * D[i+2], an integer.
    std::array<BigInt, 8> n;
    for (size_t i = 0; i < 8; ++i) {
        n[i] = BigInt::div_exact(scale * d[i].num(), d[i].den());
    }

    RingPtr ring = make_ring({"x3", "x4", "x5", "x6"});
    auto var = [&](size_t i) { return MultiPoly::variable(ring, i); };
    auto con = [&](const BigInt& c) { return MultiPoly::constant(ring, c); };
    MultiPoly x3 = var(0), x4 = var(1), x5 = var(2), x6 = var(3);
    MultiPoly one = con(BigInt(1));

    // scale * yy_k, all with integer coefficients. Indices into n:
    // d2 -> n[0], d3 -> n[1], d4 -> n[2], d5 -> n[3], d6 -> n[4],
    // d7 -> n[5], d8 -> n[6], d9 -> n[7].
    MultiPoly yy3 = con(n[0]) - (x3 - one) * (x3 - one) * con(scale);
    MultiPoly yy4 = con(n[7]) - x4 * x4 * con(scale);
    MultiPoly yy5 = con(n[6]) - x5 * x5 * con(scale);
    MultiPoly yy6 = con(n[5]) - (x6 - one) * (x6 - one) * con(scale);

    // scale^2 * g for each squared-form eliminant.
    auto eliminant = [&](const BigInt& outer, const MultiPoly& xa,
                         const MultiPoly& xb, const MultiPoly& yya,
                         const MultiPoly& yyb) {
        MultiPoly inner = con(outer) -
                          (xa * xa + xb * xb - (xa * xb).scaled(BigInt(2)))
                              .scaled(scale) -
                          yya - yyb;
        return inner * inner - (yya * yyb).scaled(BigInt(4));
    };
    MultiPoly g1 = eliminant(n[1], x3, x4, yy3, yy4);
    MultiPoly g2 = eliminant(n[2], x4, x5, yy4, yy5);
    MultiPoly g3 = eliminant(n[3], x5, x6, yy5, yy6);
    MultiPoly g4 = eliminant(n[4], x6, x3, yy6, yy3);

    return DoubletSystem{std::move(ring),   std::move(g1), std::move(g2),
                         std::move(g3),     std::move(g4), cs.polynomials,
                         std::move(d)};
}

namespace {

void require_degree(const MultiPoly& p, size_t var, int expected,
                    const std::string& what) {
    int got = p.degree_in(var);
    if (got != expected) {
        throw std::runtime_error(
            "degree drop in the elimination chain: " + what + " has degree " +
            std::to_string(got) + ", expected " + std::to_string(expected) +
            "; the specialization identities fail for these dimensions");
    }
}

}  // namespace

UniPoly resultant_chain(const DoubletSystem& ds) {
    constexpr size_t x3 = 0, x4 = 1, x5 = 2, x6 = 3;
    require_degree(ds.g1, x4, 2, "g1 in x4");
    require_degree(ds.g2, x4, 2, "g2 in x4");
    MultiPoly first = MultiPoly::resultant(ds.g1, ds.g2, x4);
    require_degree(ds.g3, x6, 2, "g3 in x6");
    require_degree(ds.g4, x6, 2, "g4 in x6");
    MultiPoly second = MultiPoly::resultant(ds.g3, ds.g4, x6);
    require_degree(first, x5, 4, "Res(g1,g2,x4) in x5");
    require_degree(second, x5, 4, "Res(g3,g4,x6) in x5");
    MultiPoly chain = MultiPoly::resultant(first, second, x5);
    return chain.to_unipoly(x3);
}

NonSolubleCertificate doublet_certificate(const std::array<long, 8>& dims,
                                          int prime_budget) {
    ConstraintSystem cs = build_constraints(doublet_with_lengths(dims));
    DoubletSystem ds = square_eliminate(cs);

    NonSolubleCertificate cert;
    cert.dims = dims;
    cert.prime_budget = prime_budget;
    cert.chain_degrees = {ds.g1.degree_in(1), ds.g2.degree_in(1),
                          ds.g3.degree_in(3), ds.g4.degree_in(3), 0, 0};

    // Record the inner-resultant degrees as well; resultant_chain asserts
    // all six identities and throws on any drop.
    MultiPoly first = MultiPoly::resultant(ds.g1, ds.g2, 1);
    MultiPoly second = MultiPoly::resultant(ds.g3, ds.g4, 3);
    cert.chain_degrees[4] = first.degree_in(2);
    cert.chain_degrees[5] = second.degree_in(2);

    UniPoly chain = resultant_chain(ds);
    if (chain.is_zero()) {
        // Degenerate dimensions (e.g. a symmetric collapse) can make the two
        // inner resultants share a factor, so the final resultant vanishes
        // identically even though every chain degree holds. There is no
        // univariate eliminant to certify; report a partial certificate with
        // an empty trail rather than failing.
        cert.content = BigInt(0);
        cert.h3_prime = UniPoly();
        cert.verdict.status = SolubilityVerdict::Status::Unknown;
        cert.partial = true;
        cert.established = false;
        return cert;
    }
    cert.content = chain.content();
    cert.h3_prime = chain.primitive_part();
    cert.verdict = solubility_verdict(cert.h3_prime, prime_budget);
    for (const auto& f : cert.verdict.trail) {
        if (f.disposition == "inconclusive") cert.partial = true;
        if (f.disposition == "full-symmetric") cert.established = true;
    }
    return cert;
}

namespace {

bool same_observations(const std::vector<CycleTypeObservation>& a,
                       const std::vector<CycleTypeObservation>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].prime != b[i].prime || a[i].pattern != b[i].pattern) {
            return false;
        }
    }
    return true;
}

bool same_galois(const GaloisCertificate& a, const GaloisCertificate& b) {
    return a.polynomial == b.polynomial && a.degree == b.degree &&
           a.verdict == b.verdict && a.n_cycle_prime == b.n_cycle_prime &&
           a.odd_parity_prime == b.odd_parity_prime &&
           a.primitivity_prime == b.primitivity_prime &&
           a.primitivity_cycle == b.primitivity_cycle &&
           a.jordan_prime == b.jordan_prime &&
           a.jordan_cycle == b.jordan_cycle &&
           a.window_prime == b.window_prime &&
           a.window_cycle == b.window_cycle &&
           a.good_primes_scanned == b.good_primes_scanned &&
           same_observations(a.observations, b.observations);
}

}  // namespace

bool verify_certificate(const NonSolubleCertificate& cert) {
    NonSolubleCertificate fresh;
    try {
        fresh = doublet_certificate(cert.dims, cert.prime_budget);
    } catch (const std::exception&) {
        return false;  // stored cert claims a chain that cannot be computed
    }
    if (fresh.h3_prime != cert.h3_prime || fresh.content != cert.content ||
        fresh.chain_degrees != cert.chain_degrees ||
        fresh.partial != cert.partial || fresh.established != cert.established ||
        fresh.verdict.status != cert.verdict.status ||
        fresh.verdict.trail.size() != cert.verdict.trail.size()) {
        return false;
    }
    for (size_t i = 0; i < fresh.verdict.trail.size(); ++i) {
        const auto& fa = fresh.verdict.trail[i];
        const auto& ca = cert.verdict.trail[i];
        if (fa.factor != ca.factor || fa.multiplicity != ca.multiplicity ||
            fa.degree != ca.degree || fa.disposition != ca.disposition ||
            fa.certificate.has_value() != ca.certificate.has_value()) {
            return false;
        }
        if (fa.certificate &&
            !same_galois(*fa.certificate, *ca.certificate)) {
            return false;
        }
    }
    return true;
}

}  // namespace cadgraph
