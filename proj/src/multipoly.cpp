#include "cadgraph/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cadgraph {

PolyRing::PolyRing(std::vector<std::string> names) : names_(std::move(names)) {
    // A ring with no variables is allowed: its polynomials are constants.
    for (const auto& n : names_)
        if (n.empty()) throw std::invalid_argument("PolyRing: empty variable name");
    auto sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("PolyRing: duplicate variable name");
}

std::optional<size_t> PolyRing::index(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> names) {
    return std::make_shared<const PolyRing>(std::move(names));
}

bool MultiPoly::GradedLex::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

void MultiPoly::add_term(std::vector<int> exps, BigInt c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::require_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (!a.ring_ || !b.ring_) throw std::logic_error("MultiPoly: operand without ring");
    if (a.ring_ != b.ring_ && a.ring_->names() != b.ring_->names())
        throw std::logic_error("MultiPoly: mixed variable registries");
}

MultiPoly MultiPoly::constant(RingPtr ring, BigInt c) {
    MultiPoly p(std::move(ring));
    p.add_term(std::vector<int>(p.ring_->arity(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::variable(RingPtr ring, size_t var) {
    if (var >= ring->arity())
        throw std::invalid_argument("MultiPoly::variable: variable out of range");
    std::vector<int> exps(ring->arity(), 0);
    exps[var] = 1;
    return monomial(std::move(ring), BigInt(1), std::move(exps));
}

MultiPoly MultiPoly::monomial(RingPtr ring, BigInt c, std::vector<int> exps) {
    MultiPoly p(std::move(ring));
    if (exps.empty()) exps.assign(p.ring_->arity(), 0);
    if (exps.size() != p.ring_->arity())
        throw std::invalid_argument("MultiPoly::monomial: exponent arity mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
    p.add_term(std::move(exps), std::move(c));
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int e) { return e == 0; }));
}

int MultiPoly::degree_in(size_t var) const {
    if (ring_ && var >= ring_->arity())
        throw std::invalid_argument("MultiPoly::degree_in: variable out of range");
    int d = -1;
    for (const auto& [exps, c] : terms_) d = std::max(d, exps[var]);
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& exps = terms_.rbegin()->first;
    return std::accumulate(exps.begin(), exps.end(), 0);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    for (const auto& [exps, c] : terms_) r.terms_.emplace(exps, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly::require_compatible(a, b);
    MultiPoly r = a;
    for (const auto& [exps, c] : b.terms_) r.add_term(exps, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly::require_compatible(a, b);
    MultiPoly r = a;
    for (const auto& [exps, c] : b.terms_) r.add_term(exps, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly::require_compatible(a, b);
    MultiPoly r(a.ring_);
    std::vector<int> exps(a.ring_->arity());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            r.add_term(exps, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const BigInt& k) const {
    MultiPoly r(ring_);
    if (k.is_zero()) return r;
    for (const auto& [exps, c] : terms_) r.terms_.emplace(exps, c * k);
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly::require_compatible(a, b);
    return a.terms_ == b.terms_;
}

std::vector<MultiPoly> MultiPoly::coeffs_in(size_t var) const {
    if (!ring_ || var >= ring_->arity())
        throw std::invalid_argument("MultiPoly::coeffs_in: variable out of range");
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<size_t>(d + 1) > 0 ? d + 1 : 1, MultiPoly(ring_));
    for (const auto& [exps, c] : terms_) {
        std::vector<int> rest = exps;
        int k = rest[var];
        rest[var] = 0;
        out[k].add_term(std::move(rest), c);
    }
    return out;
}

MultiPoly MultiPoly::substituted(size_t var, const BigInt& value) const {
    if (!ring_ || var >= ring_->arity())
        throw std::invalid_argument("MultiPoly::substituted: variable out of range");
    MultiPoly r(ring_);
    for (const auto& [exps, c] : terms_) {
        std::vector<int> rest = exps;
        int k = rest[var];
        rest[var] = 0;
        r.add_term(std::move(rest), c * BigInt::pow(value, static_cast<unsigned long>(k)));
    }
    return r;
}

MultiPoly MultiPoly::partial_derivative(size_t var) const {
    if (!ring_ || var >= ring_->arity())
        throw std::invalid_argument("MultiPoly::partial_derivative: variable out of range");
    MultiPoly r(ring_);
    for (const auto& [exps, c] : terms_) {
        if (exps[var] == 0) continue;
        std::vector<int> rest = exps;
        int k = rest[var]--;
        r.add_term(std::move(rest), c * BigInt(static_cast<long>(k)));
    }
    return r;
}

BigRat MultiPoly::evaluate(const std::vector<BigRat>& point) const {
    if (!ring_ || point.size() != ring_->arity())
        throw std::invalid_argument("MultiPoly::evaluate: point arity mismatch");
    // Per-variable power tables up to the highest exponent used.
    std::vector<std::vector<BigRat>> powers(point.size());
    for (size_t v = 0; v < point.size(); ++v) {
        int d = degree_in(v);
        powers[v].reserve(d + 2);
        powers[v].push_back(BigRat(1));
        for (int k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * point[v]);
    }
    BigRat acc(0);
    for (const auto& [exps, c] : terms_) {
        BigRat t = BigRat(c);
        for (size_t v = 0; v < exps.size(); ++v)
            if (exps[v] > 0) t *= powers[v][exps[v]];
        acc += t;
    }
    return acc;
}

BigInt MultiPoly::content() const {
    if (terms_.empty()) return BigInt(0);
    BigInt g(0);
    for (const auto& [exps, c] : terms_) g = BigInt::gcd(g, c);
    if (terms_.rbegin()->second.sign() < 0) return -g;
    return g;
}

UniPoly MultiPoly::to_unipoly(size_t var) const {
    if (!ring_ || var >= ring_->arity())
        throw std::invalid_argument("MultiPoly::to_unipoly: variable out of range");
    int d = degree_in(var);
    std::vector<BigInt> cs(static_cast<size_t>(std::max(d + 1, 1)), BigInt(0));
    for (const auto& [exps, c] : terms_) {
        for (size_t v = 0; v < exps.size(); ++v)
            if (v != var && exps[v] != 0)
                throw std::invalid_argument("MultiPoly::to_unipoly: foreign variable present");
        cs[exps[var]] = c;
    }
    return UniPoly::from_coeffs(std::move(cs));
}

MultiPoly MultiPoly::from_unipoly(RingPtr ring, const UniPoly& p, size_t var) {
    MultiPoly r(std::move(ring));
    if (var >= r.ring_->arity())
        throw std::invalid_argument("MultiPoly::from_unipoly: variable out of range");
    std::vector<int> exps(r.ring_->arity(), 0);
    for (int i = 0; i <= p.degree(); ++i) {
        exps[var] = i;
        r.add_term(exps, p.coeff(i));
    }
    return r;
}

MultiPoly MultiPoly::resultant(const MultiPoly& f, const MultiPoly& g, size_t var) {
    require_compatible(f, g);
    if (var >= f.ring_->arity())
        throw std::invalid_argument("resultant: variable out of range");
    int m = f.degree_in(var);
    int n = g.degree_in(var);
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    if (m < 1 || n < 1)
        throw std::invalid_argument("resultant: operand has degree 0 in the chosen variable");

    std::vector<MultiPoly> fc = f.coeffs_in(var);
    std::vector<MultiPoly> gc = g.coeffs_in(var);
    size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<MultiPoly>> s(dim, std::vector<MultiPoly>(dim, MultiPoly(f.ring_)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = fc[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = gc[n - j];
    return determinant(s);
}

MultiPoly MultiPoly::determinant(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("determinant: empty matrix");
    if (n > 20) throw std::invalid_argument("determinant: matrix too large for expansion");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    RingPtr ring = m[0][0].ring();
    if (!ring) throw std::logic_error("determinant: entries without ring");

    // Expansion by minors along the first remaining row, with minors shared
    // through a memo keyed by the set of still-unused columns.
    std::unordered_map<uint32_t, MultiPoly> memo;
    const uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    auto rec = [&](auto&& self, uint32_t cols) -> MultiPoly {
        if (cols == 0) return MultiPoly::constant(ring, BigInt(1));
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        size_t row = n - static_cast<size_t>(__builtin_popcount(cols));
        MultiPoly acc(ring);
        int sign = 1;
        for (size_t c = 0; c < n; ++c) {
            if (!(cols & (1u << c))) continue;
            const MultiPoly& entry = m[row][c];
            if (!entry.is_zero()) {
                MultiPoly sub = entry * self(self, cols & ~(1u << c));
                acc = (sign > 0) ? acc + sub : acc - sub;
            }
            sign = -sign;
        }
        memo.emplace(cols, acc);
        return acc;
    };
    return rec(rec, full);
}

std::string MultiPoly::to_text() const {
    if (!ring_) throw std::logic_error("MultiPoly::to_text: no ring");
    std::ostringstream os;
    os << "vars";
    for (const auto& n : ring_->names()) os << ' ' << n;
    os << '\n';
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        os << it->second.to_string();
        for (int e : it->first) os << ' ' << e;
        os << '\n';
    }
    return os.str();
}

MultiPoly MultiPoly::parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    RingPtr ring;
    MultiPoly result;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        if (!ring) {
            std::string head;
            ls >> head;
            if (head != "vars")
                throw std::invalid_argument("MultiPoly::parse: line " + std::to_string(lineno) +
                                            ": expected a vars header");
            std::vector<std::string> names;
            std::string n;
            while (ls >> n) names.push_back(n);
            ring = make_ring(std::move(names));
            result = MultiPoly(ring);
            continue;
        }
        std::string coeff_text;
        ls >> coeff_text;
        BigInt c;
        try {
            c = BigInt(coeff_text);
        } catch (const std::exception&) {
            throw std::invalid_argument("MultiPoly::parse: line " + std::to_string(lineno) +
                                        ": bad coefficient");
        }
        std::vector<int> exps;
        exps.reserve(ring->arity());
        long e;
        while (ls >> e) {
            if (e < 0)
                throw std::invalid_argument("MultiPoly::parse: line " + std::to_string(lineno) +
                                            ": negative exponent");
            exps.push_back(static_cast<int>(e));
        }
        if (exps.size() != ring->arity())
            throw std::invalid_argument("MultiPoly::parse: line " + std::to_string(lineno) +
                                        ": expected " + std::to_string(ring->arity()) +
                                        " exponents");
        result.add_term(std::move(exps), std::move(c));
    }
    if (!ring) throw std::invalid_argument("MultiPoly::parse: missing vars header");
    return result;
}

std::string MultiPoly::pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const BigInt& c = it->second;
        BigInt a = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool any_var = std::any_of(it->first.begin(), it->first.end(), [](int e) { return e > 0; });
        bool coeff_shown = !a.is_one() || !any_var;
        if (coeff_shown) os << a.to_string();
        bool need_star = coeff_shown;
        for (size_t v = 0; v < it->first.size(); ++v) {
            int e = it->first[v];
            if (e == 0) continue;
            if (need_star) os << '*';
            os << ring_->name(v);
            if (e > 1) os << '^' << e;
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace cadgraph
