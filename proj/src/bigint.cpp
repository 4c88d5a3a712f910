#include "cadgraph/bigint.hpp"

#include <ostream>
#include <stdexcept>

namespace cadgraph {

namespace {

bool valid_decimal(std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

BigInt::BigInt(std::string_view dec) {
    if (!valid_decimal(dec))
        throw std::invalid_argument("BigInt: malformed integer literal '" + std::string(dec) + "'");
    mpz_init_set_str(z_, std::string(dec).c_str(), 10);
}

std::string BigInt::to_string() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigRat::BigRat(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw std::invalid_argument("BigRat: zero denominator");
    mpq_init(q_);
    mpz_set(mpq_numref(q_), num.raw());
    mpz_set(mpq_denref(q_), den.raw());
    mpq_canonicalize(q_);
}

BigRat::BigRat(std::string_view text) {
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        BigInt n(text);
        mpq_init(q_);
        mpq_set_z(q_, n.raw());
    } else {
        BigInt n(text.substr(0, slash));
        BigInt d(text.substr(slash + 1));
        if (d.is_zero()) throw std::invalid_argument("BigRat: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), n.raw());
        mpz_set(mpq_denref(q_), d.raw());
        mpq_canonicalize(q_);
    }
}

std::string BigRat::to_string() const {
    std::string s = num().to_string();
    if (!is_integral()) s += "/" + den().to_string();
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.to_string(); }

}  // namespace cadgraph
