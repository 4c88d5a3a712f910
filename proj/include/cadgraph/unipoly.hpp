// Dense univariate polynomials over arbitrary precision integers.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cadgraph/bigint.hpp"

namespace cadgraph {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(BigInt constant);
    // Coefficients in ascending degree order; trailing zeros are stripped.
    static UniPoly from_coeffs(std::vector<BigInt> ascending);
    static UniPoly monomial(BigInt coeff, int degree);

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigInt& coeff(int i) const;
    const BigInt& lc() const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const BigInt& k) const;
    UniPoly shifted_up(int k) const;  // multiply by x^k

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    BigInt evaluate(const BigInt& x) const;
    BigRat evaluate(const BigRat& x) const;
    UniPoly derivative() const;

    // Signed content: gcd of coefficients carrying the sign of the leading
    // coefficient, so that primitive_part() always has a positive lead.
    BigInt content() const;
    UniPoly primitive_part() const;

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<UniPoly> divide_exact(const UniPoly& divisor) const;
    // Remainder of lc(b)^s * a by b for some s, staying over the integers.
    static UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b);
    // Positive-content gcd via the primitive remainder sequence.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);
    // p / gcd(p, p'), primitive with positive lead.
    UniPoly squarefree_part() const;

    BigInt max_abs_coeff() const;
    BigInt norm2_squared() const;

    // Dense text form "c0 c1 ... cn" (ascending). Parse accepts the same.
    std::string to_string() const;
    static UniPoly parse(std::string_view text);
    // Human readable form like "3x^2 - x + 7" for reports.
    std::string pretty(const std::string& var = "x") const;

    // Order by degree, then coefficients from the leading one down.
    static bool canonical_less(const UniPoly& a, const UniPoly& b);

private:
    void normalize();
    std::vector<BigInt> c_;
};

}  // namespace cadgraph
