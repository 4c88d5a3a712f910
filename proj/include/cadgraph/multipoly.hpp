// Sparse multivariate polynomials with exact integer coefficients.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cadgraph/bigint.hpp"
#include "cadgraph/unipoly.hpp"

namespace cadgraph {

// Ordered registry of the variable names shared by the polynomials of one
// ring. Polynomials interoperate only when their rings list the same names
// in the same order.
class PolyRing {
public:
    explicit PolyRing(std::vector<std::string> names);

    size_t arity() const { return names_.size(); }
    const std::string& name(size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<size_t> index(std::string_view name) const;

private:
    std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names);

class MultiPoly {
public:
    // Zero polynomial with no ring; usable only as a container placeholder.
    MultiPoly() = default;
    // Zero polynomial of the given ring.
    explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MultiPoly constant(RingPtr ring, BigInt c);
    static MultiPoly variable(RingPtr ring, size_t var);
    static MultiPoly monomial(RingPtr ring, BigInt c, std::vector<int> exps);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }

    // Highest exponent of one variable; -1 for the zero polynomial.
    int degree_in(size_t var) const;
    int total_degree() const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const BigInt& k) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    // Coefficients of the powers of one variable, ascending from power 0.
    // Entries live in the same ring with that variable absent.
    std::vector<MultiPoly> coeffs_in(size_t var) const;

    MultiPoly substituted(size_t var, const BigInt& value) const;
    MultiPoly partial_derivative(size_t var) const;
    BigRat evaluate(const std::vector<BigRat>& point) const;

    // Gcd of all coefficients carrying the sign of the leading term
    // (graded lex); zero polynomial has content 0.
    BigInt content() const;

    // Conversion to a dense univariate polynomial; requires every other
    // variable to be absent.
    UniPoly to_unipoly(size_t var) const;
    static MultiPoly from_unipoly(RingPtr ring, const UniPoly& p, size_t var);

    // Sylvester resultant with respect to one variable. Requires both
    // operands nonzero with positive degree in that variable.
    static MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, size_t var);

    // Exact determinant by expansion by minors, memoized on column subsets.
    static MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m);

    // Text format: a "vars" header line followed by one term per line,
    // integer coefficient then one exponent per variable.
    std::string to_text() const;
    static MultiPoly parse(std::string_view text);
    std::string pretty() const;

private:
    struct GradedLex {
        bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
    };
    using TermMap = std::map<std::vector<int>, BigInt, GradedLex>;

    void add_term(std::vector<int> exps, BigInt c);
    static void require_compatible(const MultiPoly& a, const MultiPoly& b);

    RingPtr ring_;
    TermMap terms_;
};

}  // namespace cadgraph
