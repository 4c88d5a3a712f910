// Polynomial arithmetic over Z/p for word sized primes: building block for
// factorization mod p and for cycle type observations.
#pragma once

#include <cstdint>
#include <vector>

#include "cadgraph/unipoly.hpp"

namespace cadgraph {

// Coefficients ascending, normalized (no trailing zeros). p must be an odd
// prime below 2^31; arithmetic never overflows 64 bits via 128-bit products.
class ModPoly {
public:
    ModPoly() : p_(0) {}
    explicit ModPoly(uint64_t p) : p_(p) {}
    ModPoly(uint64_t p, std::vector<uint64_t> ascending);
    static ModPoly from_integer_poly(const UniPoly& f, uint64_t p);
    static ModPoly monomial(uint64_t p, uint64_t coeff, int degree);

    uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    uint64_t coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0; }
    const std::vector<uint64_t>& coeffs() const { return c_; }
    uint64_t lc() const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }

    ModPoly scaled(uint64_t k) const;
    ModPoly monic() const;
    ModPoly derivative() const;

    static void divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r);
    static ModPoly gcd(ModPoly a, ModPoly b);  // monic result
    // base^e mod f, exponent a nonnegative big integer.
    static ModPoly powmod(const ModPoly& base, const BigInt& e, const ModPoly& f);

    bool squarefree() const;

    // Distinct degree factorization of a monic squarefree polynomial:
    // list of (d, product of all monic irreducible factors of degree d).
    std::vector<std::pair<int, ModPoly>> distinct_degree_factors() const;
    // Multiset of irreducible factor degrees of a monic squarefree
    // polynomial, ascending.
    std::vector<int> irreducible_degree_pattern() const;
    // Full factorization of a monic squarefree polynomial into monic
    // irreducibles, deterministic (seeded equal degree splitting), sorted.
    std::vector<ModPoly> factor_squarefree() const;

    static uint64_t mod_inverse(uint64_t a, uint64_t p);

private:
    void normalize();
    uint64_t p_;
    std::vector<uint64_t> c_;
};

}  // namespace cadgraph
