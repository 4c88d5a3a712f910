#include "cadgraph/modpoly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace cadgraph {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

ModPoly::ModPoly(uint64_t p, std::vector<uint64_t> ascending) : p_(p), c_(std::move(ascending)) {
    for (auto& v : c_) v %= p_;
    normalize();
}

ModPoly ModPoly::from_integer_poly(const UniPoly& f, uint64_t p) {
    std::vector<uint64_t> cs(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i) cs[i] = f.coeff(i).mod_u64(p);
    return ModPoly(p, std::move(cs));
}

ModPoly ModPoly::monomial(uint64_t p, uint64_t coeff, int degree) {
    std::vector<uint64_t> cs(degree + 1, 0);
    cs[degree] = coeff % p;
    return ModPoly(p, std::move(cs));
}

void ModPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

uint64_t ModPoly::lc() const {
    if (is_zero()) throw std::logic_error("ModPoly: leading coefficient of zero polynomial");
    return c_.back();
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = addmod(a.coeff(i), b.coeff(i), a.p_);
    r.normalize();
    return r;
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
    ModPoly r(a.p_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = submod(a.coeff(i), b.coeff(i), a.p_);
    r.normalize();
    return r;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
    ModPoly r(a.p_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.c_[i]) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] = addmod(r.c_[i + j], mulmod(a.c_[i], b.c_[j], a.p_), a.p_);
    }
    r.normalize();
    return r;
}

ModPoly ModPoly::scaled(uint64_t k) const {
    ModPoly r(p_);
    k %= p_;
    if (!k) return r;
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = mulmod(c_[i], k, p_);
    r.normalize();
    return r;
}

uint64_t ModPoly::mod_inverse(uint64_t a, uint64_t p) {
    return powmod_u64(a % p, p - 2, p);
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(mod_inverse(lc(), p_));
}

ModPoly ModPoly::derivative() const {
    ModPoly r(p_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = mulmod(c_[i], i % p_, p_);
    r.normalize();
    return r;
}

void ModPoly::divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("ModPoly: division by zero");
    uint64_t p = a.p_;
    uint64_t inv = mod_inverse(b.lc(), p);
    r = a;
    q = ModPoly(p);
    if (a.degree() >= b.degree()) q.c_.assign(a.degree() - b.degree() + 1, 0);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        uint64_t f = mulmod(r.lc(), inv, p);
        q.c_[shift] = f;
        for (int i = 0; i <= b.degree(); ++i)
            r.c_[shift + i] = submod(r.c_[shift + i], mulmod(f, b.c_[i], p), p);
        r.normalize();
    }
    q.normalize();
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly q, r;
        divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly ModPoly::powmod(const ModPoly& base, const BigInt& e, const ModPoly& f) {
    ModPoly q, r;
    divrem(base, f, q, r);
    ModPoly acc = ModPoly(base.p_, {1});
    size_t bits = e.is_zero() ? 0 : e.bit_length();
    for (size_t i = bits; i-- > 0;) {
        acc = acc * acc;
        divrem(acc, f, q, acc);
        if (mpz_tstbit(e.raw(), i)) {
            acc = acc * r;
            divrem(acc, f, q, acc);
        }
    }
    return acc;
}

bool ModPoly::squarefree() const {
    if (degree() < 1) return true;
    ModPoly d = derivative();
    if (d.is_zero()) return false;
    return gcd(*this, d).degree() == 0;
}

std::vector<std::pair<int, ModPoly>> ModPoly::distinct_degree_factors() const {
    std::vector<std::pair<int, ModPoly>> out;
    ModPoly f = monic();
    ModPoly x = monomial(p_, 1, 1);
    ModPoly h = x;
    int d = 0;
    while (f.degree() > 0) {
        ++d;
        if (2 * d > f.degree()) {
            out.emplace_back(f.degree(), f);
            break;
        }
        h = powmod(h, BigInt(static_cast<long>(p_)), f);
        ModPoly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(d, g);
            ModPoly q, r;
            divrem(f, g, q, r);
            f = q.monic();
            divrem(h, f, q, h);
        }
    }
    return out;
}

std::vector<int> ModPoly::irreducible_degree_pattern() const {
    std::vector<int> pattern;
    for (const auto& [d, prod] : distinct_degree_factors()) {
        int count = prod.degree() / d;
        for (int i = 0; i < count; ++i) pattern.push_back(d);
    }
    std::sort(pattern.begin(), pattern.end());
    return pattern;
}

namespace {

// Equal degree splitting (Cantor and Zassenhaus), deterministic seeding.
void split_equal_degree(const ModPoly& f, int d, std::mt19937_64& rng,
                        std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    uint64_t p = f.modulus();
    BigInt exponent = BigInt::div_exact(BigInt::pow(BigInt(static_cast<long>(p)), d) - BigInt(1),
                                        BigInt(2));
    for (;;) {
        std::vector<uint64_t> cs(f.degree());
        for (auto& v : cs) v = rng() % p;
        ModPoly a(p, std::move(cs));
        if (a.degree() < 1) continue;
        ModPoly b = ModPoly::powmod(a, exponent, f);
        ModPoly g = ModPoly::gcd(b - ModPoly(p, {1}), f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            ModPoly q, r;
            ModPoly::divrem(f, g, q, r);
            split_equal_degree(g, d, rng, out);
            split_equal_degree(q.monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<ModPoly> ModPoly::factor_squarefree() const {
    std::vector<ModPoly> out;
    for (const auto& [d, prod] : distinct_degree_factors()) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (p_ * 1000003ULL + d));
        split_equal_degree(prod, d, rng, out);
    }
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                            b.coeffs().rbegin(), b.coeffs().rend());
    });
    return out;
}

}  // namespace cadgraph
