#include "cadgraph/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace cadgraph {

UniPoly::UniPoly(BigInt constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

UniPoly UniPoly::from_coeffs(std::vector<BigInt> ascending) {
    UniPoly p;
    p.c_ = std::move(ascending);
    p.normalize();
    return p;
}

UniPoly UniPoly::monomial(BigInt coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("UniPoly: negative degree monomial");
    UniPoly p;
    if (!coeff.is_zero()) {
        p.c_.assign(degree + 1, BigInt(0));
        p.c_[degree] = std::move(coeff);
    }
    return p;
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const BigInt& UniPoly::coeff(int i) const {
    static const BigInt zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const BigInt& UniPoly::lc() const {
    if (is_zero()) throw std::logic_error("UniPoly: leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.normalize();
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

UniPoly UniPoly::scaled(const BigInt& k) const {
    if (k.is_zero()) return UniPoly();
    UniPoly r = *this;
    for (auto& v : r.c_) v *= k;
    return r;
}

UniPoly UniPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    UniPoly r;
    r.c_.assign(c_.size() + k, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

BigInt UniPoly::evaluate(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRat UniPoly::evaluate(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigRat(*it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    r.normalize();
    return r;
}

BigInt UniPoly::content() const {
    if (is_zero()) return BigInt(0);
    BigInt g(0);
    for (const auto& v : c_) g = BigInt::gcd(g, v);
    if (lc().sign() < 0) g = -g;
    return g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    BigInt cont = content();
    UniPoly r = *this;
    for (auto& v : r.c_) v = BigInt::div_exact(v, cont);
    return r;
}

std::optional<UniPoly> UniPoly::divide_exact(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("UniPoly: division by zero polynomial");
    if (is_zero()) return UniPoly();
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<BigInt> rem = c_;
    std::vector<BigInt> quo(degree() - divisor.degree() + 1, BigInt(0));
    const BigInt& dlc = divisor.lc();
    for (int k = degree() - divisor.degree(); k >= 0; --k) {
        BigInt& head = rem[k + divisor.degree()];
        if (head.is_zero()) continue;
        if (!head.divisible_by(dlc)) return std::nullopt;
        BigInt q = BigInt::div_exact(head, dlc);
        for (int i = 0; i <= divisor.degree(); ++i) rem[k + i] -= q * divisor.c_[i];
        quo[k] = std::move(q);
    }
    for (const auto& v : rem)
        if (!v.is_zero()) return std::nullopt;
    return from_coeffs(std::move(quo));
}

UniPoly UniPoly::pseudo_rem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("UniPoly: pseudo division by zero");
    UniPoly r = a;
    int db = b.degree();
    const BigInt& lb = b.lc();
    while (!r.is_zero() && r.degree() >= db) {
        int shift = r.degree() - db;
        BigInt head = r.lc();
        UniPoly scaled_r = r.scaled(lb);
        UniPoly sub = b.scaled(head).shifted_up(shift);
        r = scaled_r - sub;
        if (r.degree() == db + shift)
            throw std::logic_error("UniPoly: pseudo division failed to reduce degree");
    }
    return r;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part().scaled(b.content().abs());
    if (b.is_zero()) return a.primitive_part().scaled(a.content().abs());
    BigInt cg = BigInt::gcd(a.content(), b.content()).abs();
    UniPoly A = a.primitive_part();
    UniPoly B = b.primitive_part();
    if (A.degree() < B.degree()) A.c_.swap(B.c_);
    while (!B.is_zero()) {
        UniPoly R = pseudo_rem(A, B).primitive_part();
        A = std::move(B);
        B = std::move(R);
    }
    return A.scaled(cg);
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero()) throw std::invalid_argument("UniPoly: squarefree part of zero");
    if (degree() == 0) return UniPoly(BigInt(1));
    UniPoly p = primitive_part();
    UniPoly g = gcd(p, p.derivative());
    auto q = p.divide_exact(g);
    if (!q) throw std::logic_error("UniPoly: gcd does not divide its argument");
    return q->primitive_part();
}

BigInt UniPoly::max_abs_coeff() const {
    BigInt m(0);
    for (const auto& v : c_) {
        BigInt a = v.abs();
        if (a > m) m = a;
    }
    return m;
}

BigInt UniPoly::norm2_squared() const {
    BigInt s(0);
    for (const auto& v : c_) s += v * v;
    return s;
}

std::string UniPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ' ';
        out += c_[i].to_string();
    }
    return out;
}

UniPoly UniPoly::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<BigInt> cs;
    std::string tok;
    while (in >> tok) cs.emplace_back(tok);
    if (cs.empty()) throw std::invalid_argument("UniPoly: empty coefficient list");
    return from_coeffs(std::move(cs));
}

std::string UniPoly::pretty(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& v = c_[i];
        if (v.is_zero()) continue;
        BigInt a = v.abs();
        if (out.empty()) {
            if (v.sign() < 0) out += "-";
        } else {
            out += v.sign() < 0 ? " - " : " + ";
        }
        bool unit = a.is_one();
        if (!unit || i == 0) out += a.to_string();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

bool UniPoly::canonical_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int c = a.coeff(i).cmp(b.coeff(i));
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace cadgraph
