#include "cadgraph/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "cadgraph/modpoly.hpp"

namespace cadgraph {

namespace {

bool is_small_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t next_prime_after(uint64_t n) {
    do {
        ++n;
    } while (!is_small_prime(n));
    return n;
}

// Coefficient bound for lc(f) times any monic-normalized factor of f,
// Landau-Mignotte style with slack: sqrt(n+1) * 2^n * maxcoeff * |lc|.
BigInt factor_coeff_bound(const UniPoly& f) {
    int n = f.degree();
    BigInt b = BigInt(static_cast<long>(n + 1)).sqrt_ceil();
    b *= f.max_abs_coeff();
    b *= f.lc().abs();
    return b.shl(n);
}

// Map a residue in [0, m) to the symmetric range (-m/2, m/2].
BigInt symmetric(const BigInt& r, const BigInt& m) {
    BigInt half = m / BigInt(2);
    if (r > half) return r - m;
    return r;
}

UniPoly reduce_mod(const UniPoly& f, const BigInt& m) {
    std::vector<BigInt> cs(f.degree() + 1, BigInt(0));
    for (int i = 0; i <= f.degree(); ++i) {
        BigInt r = f.coeff(i) % m;
        if (r.sign() < 0) r += m;
        cs[i] = std::move(r);
    }
    return UniPoly::from_coeffs(std::move(cs));
}

UniPoly lift_from_mod(const ModPoly& f) {
    std::vector<BigInt> cs(f.degree() + 1, BigInt(0));
    for (int i = 0; i <= f.degree(); ++i)
        cs[i] = BigInt(static_cast<unsigned long>(f.coeff(i)));
    return UniPoly::from_coeffs(std::move(cs));
}

// Linear multifactor Hensel lifting. On input f is primitive and squarefree
// mod p, and f == lc(f) * prod(u_i) mod p with u_i monic, pairwise coprime.
// Returns the factors lifted so the congruence holds mod p^k, coefficients
// kept in [0, p^k).
std::vector<UniPoly> hensel_lift(const UniPoly& f, const std::vector<ModPoly>& base, uint64_t p,
                                 int k) {
    const BigInt P(static_cast<long>(p));
    size_t r = base.size();

    // Bezout data over GF(p): b_i = inverse of lc(f) * prod_{j != i} u_j mod u_i.
    std::vector<ModPoly> correctors(r);
    for (size_t i = 0; i < r; ++i) {
        ModPoly prod(p, {f.lc().mod_u64(p)});
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = prod * base[j];
        ModPoly q, rem;
        ModPoly::divrem(prod, base[i], q, rem);
        // Extended Euclid for rem^{-1} mod base[i].
        ModPoly a = base[i], b = rem;
        ModPoly s0(p, {0}), s1(p, {1});
        while (!b.is_zero()) {
            ModPoly qq, rr;
            ModPoly::divrem(a, b, qq, rr);
            ModPoly s2 = s0 - qq * s1;
            a = std::move(b);
            b = std::move(rr);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (a.degree() != 0)
            throw std::logic_error("hensel_lift: factors not coprime mod p");
        correctors[i] = s0.scaled(ModPoly::mod_inverse(a.lc(), p));
        ModPoly::divrem(correctors[i], base[i], q, correctors[i]);
    }

    std::vector<UniPoly> lifted(r);
    for (size_t i = 0; i < r; ++i) lifted[i] = lift_from_mod(base[i]);

    BigInt pj(P);
    for (int j = 1; j < k; ++j) {
        BigInt pj1 = pj * P;
        UniPoly prod(f.lc());
        for (const auto& u : lifted) prod = prod * u;
        UniPoly err = f - prod;
        // err is divisible by p^j; reduce the cofactor mod p.
        std::vector<uint64_t> ecs(err.degree() + 1, 0);
        for (int i = 0; i <= err.degree(); ++i)
            ecs[i] = BigInt::div_exact(err.coeff(i), pj).mod_u64(p);
        ModPoly e(p, std::move(ecs));
        for (size_t i = 0; i < r; ++i) {
            ModPoly ui = ModPoly::from_integer_poly(lifted[i], p);
            ModPoly q, di;
            ModPoly::divrem(e * correctors[i], ui, q, di);
            if (di.is_zero()) continue;
            UniPoly bump = lift_from_mod(di).scaled(pj);
            lifted[i] = reduce_mod(lifted[i] + bump, pj1);
        }
        pj = std::move(pj1);
    }
    return lifted;
}

// Zassenhaus factorization of a primitive squarefree polynomial with
// positive leading coefficient and degree >= 1.
std::vector<UniPoly> factor_squarefree_primitive(const UniPoly& f0) {
    std::vector<UniPoly> out;
    if (f0.degree() == 1) {
        out.push_back(f0);
        return out;
    }

    // Prime selection: smallest few odd primes keeping f squarefree with
    // nonvanishing lead; among the first candidates prefer the fewest
    // modular factors.
    struct Choice {
        uint64_t p = 0;
        std::vector<ModPoly> factors;
    };
    Choice best;
    uint64_t p = 2;
    int candidates = 0;
    while (candidates < 4) {
        p = next_prime_after(p);
        if (f0.lc().mod_u64(p) == 0) continue;
        ModPoly fp = ModPoly::from_integer_poly(f0, p);
        if (!fp.squarefree()) continue;
        ++candidates;
        std::vector<ModPoly> factors = fp.monic().factor_squarefree();
        if (best.p == 0 || factors.size() < best.factors.size()) {
            best.p = p;
            best.factors = std::move(factors);
        }
        if (best.factors.size() == 1) break;
    }
    if (best.factors.size() == 1) {
        out.push_back(f0);
        return out;
    }

    BigInt bound = factor_coeff_bound(f0);
    BigInt need = bound.shl(1) + BigInt(1);
    int k = 1;
    BigInt pk(static_cast<long>(best.p));
    while (pk < need) {
        pk *= BigInt(static_cast<long>(best.p));
        ++k;
    }
    std::vector<UniPoly> lifted = hensel_lift(f0, best.factors, best.p, k);

    // Subset recombination over the lifted factors.
    UniPoly f = f0;
    std::vector<int> active(lifted.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = static_cast<int>(i);

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        UniPoly g(f.lc());
        for (int idx : subset) g = g * lifted[idx];
        g = reduce_mod(g, pk);
        std::vector<BigInt> cs(g.degree() + 1, BigInt(0));
        for (int i = 0; i <= g.degree(); ++i) cs[i] = symmetric(g.coeff(i), pk);
        UniPoly cand = UniPoly::from_coeffs(std::move(cs)).primitive_part();
        if (cand.degree() < 1) return false;
        auto quotient = f.divide_exact(cand);
        if (!quotient) return false;
        out.push_back(cand);
        f = *quotient;
        return true;
    };

    for (size_t d = 1; !active.empty() && d <= active.size() / 2;) {
        // Lexicographic d-subsets of the active list.
        std::vector<size_t> pick(d);
        for (size_t i = 0; i < d; ++i) pick[i] = i;
        bool removed = false;
        for (;;) {
            std::vector<int> subset(d);
            for (size_t i = 0; i < d; ++i) subset[i] = active[pick[i]];
            if (try_subset(subset)) {
                std::vector<int> remaining;
                for (int idx : active)
                    if (std::find(subset.begin(), subset.end(), idx) == subset.end())
                        remaining.push_back(idx);
                active = std::move(remaining);
                removed = true;
                break;
            }
            // next combination
            size_t i = d;
            while (i > 0) {
                --i;
                if (pick[i] != i + active.size() - d) {
                    ++pick[i];
                    for (size_t j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = d + 1;  // exhausted
                    break;
                }
            }
            if (i == d + 1 || d > active.size()) break;
        }
        if (!removed) ++d;
    }
    if (f.degree() >= 1) out.push_back(f.primitive_part());
    return out;
}

}  // namespace

std::vector<FactorList::Entry> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero() || p.degree() < 1 || p.content() != BigInt(1))
        throw std::invalid_argument("squarefree_decomposition: expects primitive nonconstant input");
    std::vector<FactorList::Entry> out;
    // Yun's algorithm over the integers.
    UniPoly d = p.derivative();
    UniPoly g = UniPoly::gcd(p, d);
    UniPoly c = *p.divide_exact(g);
    UniPoly w = *d.divide_exact(g) - c.derivative();
    int mult = 1;
    while (c.degree() > 0) {
        UniPoly f = UniPoly::gcd(c, w);
        if (f.degree() > 0) out.push_back({f, mult});
        c = *c.divide_exact(f);
        w = *w.divide_exact(f) - c.derivative();
        ++mult;
    }
    return out;
}

FactorList factor_over_rationals(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_over_rationals: zero polynomial");
    FactorList result;
    result.content = p.content();
    if (p.degree() == 0) return result;
    UniPoly prim = p.primitive_part();

    for (const auto& part : squarefree_decomposition(prim)) {
        for (auto& irr : factor_squarefree_primitive(part.poly))
            result.factors.push_back({std::move(irr), part.multiplicity});
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorList::Entry& a, const FactorList::Entry& b) {
                  return UniPoly::canonical_less(a.poly, b.poly);
              });
    return result;
}

bool is_irreducible(const UniPoly& p) {
    if (p.is_zero() || p.degree() < 1) return false;
    FactorList fl = factor_over_rationals(p);
    return fl.factors.size() == 1 && fl.factors[0].multiplicity == 1 &&
           fl.factors[0].poly.degree() == p.degree();
}

}  // namespace cadgraph
