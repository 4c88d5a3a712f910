// Arbitrary precision integers and rationals, value semantics over GMP.
#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace cadgraph {

class BigInt {
public:
    BigInt() { mpz_init(z_); }
    BigInt(int v) : BigInt(static_cast<long>(v)) {}
    BigInt(long v) { mpz_init_set_si(z_, v); }
    BigInt(unsigned long v) { mpz_init_set_ui(z_, v); }
    explicit BigInt(std::string_view dec);
    BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~BigInt() { mpz_clear(z_); }

    void swap(BigInt& o) noexcept { mpz_swap(z_, o.z_); }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return mpz_cmp_ui(z_, 1) == 0; }
    bool odd() const { return mpz_odd_p(z_) != 0; }

    BigInt& operator+=(const BigInt& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator-=(const BigInt& o) {
        mpz_sub(z_, z_, o.z_);
        return *this;
    }
    BigInt& operator*=(const BigInt& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.z_, z_);
        return r;
    }

    // Truncated division (C semantics).
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_tdiv_q(r.z_, a.z_, b.z_);
        return r;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_tdiv_r(r.z_, a.z_, b.z_);
        return r;
    }
    // Quotient when the division is known exact; undefined otherwise.
    static BigInt div_exact(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_divexact(r.z_, a.z_, b.z_);
        return r;
    }
    bool divisible_by(const BigInt& d) const { return mpz_divisible_p(z_, d.z_) != 0; }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.z_, a.z_, b.z_);
        return r;
    }
    static BigInt pow(const BigInt& b, unsigned long e) {
        BigInt r;
        mpz_pow_ui(r.z_, b.z_, e);
        return r;
    }
    BigInt abs() const {
        BigInt r;
        mpz_abs(r.z_, z_);
        return r;
    }
    // Smallest integer >= sqrt(|x|).
    BigInt sqrt_ceil() const {
        BigInt r, rem;
        mpz_sqrtrem(r.z_, rem.z_, z_);
        if (!rem.is_zero()) mpz_add_ui(r.z_, r.z_, 1);
        return r;
    }
    BigInt shl(unsigned long bits) const {
        BigInt r;
        mpz_mul_2exp(r.z_, z_, bits);
        return r;
    }
    size_t bit_length() const { return mpz_sizeinbase(z_, 2); }

    // Nonnegative remainder mod a machine word.
    uint64_t mod_u64(uint64_t m) const {
        return mpz_fdiv_ui(z_, static_cast<unsigned long>(m));
    }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const { return mpz_get_si(z_); }

    int cmp(const BigInt& o) const { return mpz_cmp(z_, o.z_); }
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.cmp(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.cmp(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.cmp(b) >= 0; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

private:
    mpz_t z_;
};

class BigRat {
public:
    BigRat() { mpq_init(q_); }
    BigRat(long v) {
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    BigRat(int v) : BigRat(static_cast<long>(v)) {}
    BigRat(const BigInt& v) {
        mpq_init(q_);
        mpq_set_z(q_, v.raw());
    }
    BigRat(const BigInt& num, const BigInt& den);
    // Accepts "p/q" or "p".
    explicit BigRat(std::string_view text);
    BigRat(const BigRat& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    BigRat(BigRat&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    BigRat& operator=(const BigRat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    BigRat& operator=(BigRat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~BigRat() { mpq_clear(q_); }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    BigRat& operator+=(const BigRat& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    BigRat& operator-=(const BigRat& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    BigRat& operator*=(const BigRat& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }
    BigRat& operator/=(const BigRat& o) {
        mpq_div(q_, q_, o.q_);
        return *this;
    }
    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
    BigRat operator-() const {
        BigRat r;
        mpq_neg(r.q_, q_);
        return r;
    }

    BigInt num() const {
        BigInt r;
        mpz_set(r.raw(), mpq_numref(q_));
        return r;
    }
    BigInt den() const {
        BigInt r;
        mpz_set(r.raw(), mpq_denref(q_));
        return r;
    }
    bool is_integral() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

    int cmp(const BigRat& o) const { return mpq_cmp(q_, o.q_); }
    friend bool operator==(const BigRat& a, const BigRat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return !(a == b); }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.cmp(b) > 0; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BigRat& v);

private:
    mpq_t q_;
};

}  // namespace cadgraph
