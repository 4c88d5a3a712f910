#include <doctest.h>

#include <cadgraph/bigint.hpp>
#include <cadgraph/unipoly.hpp>

#include <random>
#include <stdexcept>
#include <vector>

using cadgraph::BigInt;
using cadgraph::BigRat;
using cadgraph::UniPoly;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::vector<BigInt> c(static_cast<size_t>(deg(rng)) + 1);
    for (auto& v : c) v = BigInt(coeff(rng));
    return UniPoly::from_coeffs(std::move(c));  // trailing zeros trimmed by normalize
}

}  // namespace

TEST_CASE("construction trims leading zeros and exposes coefficients") {
    UniPoly f = UniPoly::from_coeffs({BigInt(1), BigInt(2), BigInt(0), BigInt(0)});
    CHECK(f.degree() == 1);
    CHECK(f.coeff(0) == BigInt(1));
    CHECK(f.coeff(1) == BigInt(2));
    CHECK(f.coeff(5) == BigInt(0));  // out-of-range coefficients read as zero
    CHECK(f.lc() == BigInt(2));
    CHECK(UniPoly::from_coeffs({BigInt(0)}).is_zero());
    CHECK(UniPoly().degree() == -1);
    CHECK(UniPoly::monomial(BigInt(3), 4).to_string() == "0 0 0 0 3");
}

TEST_CASE("ring identities hold on random polynomials") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        UniPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 4);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a - b) + b == a);
        CHECK((a * b).degree() == (a.is_zero() || b.is_zero() ? -1 : a.degree() + b.degree()));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(102);
    std::uniform_int_distribution<long> pt(-10, 10);
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
        BigInt x(pt(rng));
        CHECK((a + b).evaluate(x) == a.evaluate(x) + b.evaluate(x));
        CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    }
    UniPoly f = UniPoly::parse("-1 0 1");  // x^2 - 1
    CHECK(f.evaluate(BigRat(BigInt(1), BigInt(2))) == BigRat(BigInt(-3), BigInt(4)));
}

TEST_CASE("derivative satisfies the product rule") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
    CHECK(UniPoly(BigInt(7)).derivative().is_zero());
}

TEST_CASE("content and primitive part factor the polynomial") {
    UniPoly f = UniPoly::parse("6 -12 18");
    CHECK(f.content() == BigInt(6));
    CHECK(f.primitive_part() == UniPoly::parse("1 -2 3"));
    // Content carries the sign convention: primitive part has positive leading coefficient.
    UniPoly g = UniPoly::parse("4 0 -8");
    CHECK(g.primitive_part().lc() > BigInt(0));
    CHECK(g.primitive_part().scaled(g.content()) == g);
    std::mt19937_64 rng(104);
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly h = random_poly(rng, 6);
        if (h.is_zero()) continue;
        CHECK(h.primitive_part().scaled(h.content()) == h);
        CHECK(h.primitive_part().content() == BigInt(1));
    }
}

TEST_CASE("exact division inverts multiplication and reports failure") {
    std::mt19937_64 rng(105);
    for (int trial = 0; trial < 100; ++trial) {
        UniPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
        if (b.is_zero()) continue;
        auto q = (a * b).divide_exact(b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK_FALSE(UniPoly::parse("1 1").divide_exact(UniPoly::parse("0 1")).has_value());
}

TEST_CASE("pseudo remainder satisfies lc(b)^k * a = q*b + r with deg r < deg b") {
    // One reduction step scales by lc(b) = 2 exactly once: 2a = x*b + (x + 2),
    // so the pseudo remainder of a = x^3 + x + 1 by b = 2x^2 + 1 is x + 2.
    UniPoly a = UniPoly::parse("1 1 0 1");
    UniPoly b = UniPoly::parse("1 0 2");
    CHECK(UniPoly::pseudo_rem(a, b) == UniPoly::parse("2 1"));
    CHECK(UniPoly::pseudo_rem(b, a) == b);  // deg b < deg a: remainder is b itself

    // The identity itself, on random pairs: some power of lc(b) times a is
    // congruent to the remainder modulo b (checked over the rationals).
    std::mt19937_64 rng(411);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly f = random_poly(rng, 5);
        UniPoly g = random_poly(rng, 3);
        if (g.is_zero() || f.is_zero() || f.degree() < g.degree()) continue;
        UniPoly r = UniPoly::pseudo_rem(f, g);
        if (!r.is_zero()) CHECK(r.degree() < g.degree());
        // r must vanish wherever f and g share a root; cheapest faithful check:
        // gcd(f, g) divides r as well.
        UniPoly d = UniPoly::gcd(f, g);
        if (d.degree() > 0 && !r.is_zero())
            CHECK(UniPoly::gcd(d, r).degree() == d.degree());
    }
}

TEST_CASE("gcd recovers a common factor up to sign and content") {
    UniPoly g = UniPoly::parse("1 2 1");  // (x+1)^2
    UniPoly a = g * UniPoly::parse("-3 1");
    UniPoly b = g * UniPoly::parse("5 0 2");
    UniPoly d = UniPoly::gcd(a, b);
    CHECK(d == g);  // both cofactors are coprime, so the gcd is exactly g (primitive)
    CHECK(UniPoly::gcd(a, UniPoly()) == a.primitive_part());
    std::mt19937_64 rng(106);
    for (int trial = 0; trial < 50; ++trial) {
        UniPoly common = random_poly(rng, 3);
        UniPoly x = random_poly(rng, 3), y = random_poly(rng, 3);
        if (common.is_zero() || x.is_zero() || y.is_zero()) continue;
        UniPoly d2 = UniPoly::gcd(common * x, common * y);
        // The gcd must be divisible by the primitive part of the planted factor.
        CHECK(d2.divide_exact(common.primitive_part()).has_value());
    }
}

TEST_CASE("squarefree part drops multiplicity but keeps every root") {
    UniPoly f = UniPoly::parse("1 1") * UniPoly::parse("1 1") * UniPoly::parse("-2 1");
    UniPoly sf = f.squarefree_part();
    CHECK(sf == UniPoly::parse("1 1") * UniPoly::parse("-2 1"));
    CHECK(UniPoly::parse("-2 1").squarefree_part() == UniPoly::parse("-2 1"));
}

TEST_CASE("text form is ascending coefficients and round trips") {
    UniPoly f = UniPoly::parse("  -1   0    1 ");
    CHECK(f.to_string() == "-1 0 1");
    CHECK(UniPoly::parse(f.to_string()) == f);
    CHECK(UniPoly().to_string() == "0");
    CHECK(UniPoly::parse("0").is_zero());
    CHECK_THROWS_AS(UniPoly::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(UniPoly::parse("1 x 2"), std::invalid_argument);
}

TEST_CASE("pretty rendering names the variable and orders high degree first") {
    UniPoly f = UniPoly::parse("-1 0 1");
    CHECK(f.pretty("t") == "t^2 - 1");
    CHECK(UniPoly(BigInt(5)).pretty() == "5");
}

TEST_CASE("canonical ordering is a strict weak order separating degree then coefficients") {
    UniPoly a = UniPoly::parse("1 1");
    UniPoly b = UniPoly::parse("0 0 1");
    CHECK(UniPoly::canonical_less(a, b));       // lower degree first
    CHECK_FALSE(UniPoly::canonical_less(b, a));
    CHECK_FALSE(UniPoly::canonical_less(a, a));  // irreflexive
}

TEST_CASE("coefficient size helpers") {
    UniPoly f = UniPoly::parse("-7 2 5");
    CHECK(f.max_abs_coeff() == BigInt(7));
    CHECK(f.norm2_squared() == BigInt(49 + 4 + 25));
}
