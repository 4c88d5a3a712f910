#include "cadgraph/galois.hpp"

#include <algorithm>
#include <stdexcept>

#include "cadgraph/factor.hpp"
#include "cadgraph/modpoly.hpp"

namespace cadgraph {

namespace {

bool is_small_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// The unique part divisible by q, if it exists and equals q: powering the
// Frobenius element by the lcm of the other parts then yields a q-cycle
// fixing everything else.
bool has_pure_cycle(const std::vector<int>& pattern, int q) {
    int hits = 0;
    for (int part : pattern) {
        if (part % q == 0) {
            if (part != q) return false;
            ++hits;
        }
    }
    return hits == 1;
}

bool odd_parity(int degree, const std::vector<int>& pattern) {
    return (degree - static_cast<int>(pattern.size())) % 2 != 0;
}

std::vector<int> primes_in_window(int n) {
    std::vector<int> out;
    for (int q = n / 2 + 1; q < n - 2; ++q)
        if (2 * q > n && is_small_prime(static_cast<uint64_t>(q))) out.push_back(q);
    return out;
}

}  // namespace

GaloisCertificate galois_certify(const UniPoly& p, int prime_budget) {
    if (p.is_zero() || p.degree() < 2)
        throw std::invalid_argument("galois_certify: degree must be at least 2");
    if (!is_irreducible(p))
        throw std::invalid_argument("galois_certify: reducible input");

    GaloisCertificate cert;
    cert.polynomial = p;
    cert.degree = p.degree();
    const int n = cert.degree;
    const bool degree_is_prime = is_small_prime(static_cast<uint64_t>(n));
    const std::vector<int> window = primes_in_window(n);

    if (degree_is_prime) cert.primitivity_cycle = n;

    auto complete = [&]() -> bool {
        if (cert.n_cycle_prime == 0 || cert.odd_parity_prime == 0) return false;
        if (n <= 3) return true;
        if (!degree_is_prime && cert.primitivity_prime == 0) return false;
        if (cert.jordan_prime == 0) return false;
        if (!window.empty() && cert.window_prime == 0) return false;
        return true;
    };

    uint64_t prime = 1;
    while (cert.good_primes_scanned < prime_budget && !complete()) {
        do {
            ++prime;
        } while (!is_small_prime(prime));
        if (p.lc().mod_u64(prime) == 0) continue;
        ModPoly fp = ModPoly::from_integer_poly(p, prime);
        if (!fp.squarefree()) continue;
        ++cert.good_primes_scanned;

        std::vector<int> pattern = fp.monic().irreducible_degree_pattern();
        bool seen = std::any_of(cert.observations.begin(), cert.observations.end(),
                                [&](const CycleTypeObservation& o) { return o.pattern == pattern; });
        if (!seen) cert.observations.push_back({prime, pattern});

        if (cert.n_cycle_prime == 0 && pattern.size() == 1 && pattern[0] == n)
            cert.n_cycle_prime = prime;
        if (cert.odd_parity_prime == 0 && odd_parity(n, pattern)) cert.odd_parity_prime = prime;
        for (int q : window) {
            if (cert.window_prime == 0 && has_pure_cycle(pattern, q)) {
                cert.window_prime = prime;
                cert.window_cycle = q;
            }
        }
        // Any prime length q-cycle with q > n/2 rules out block systems;
        // q <= n-3 (or a transposition or 3-cycle) then forces the
        // alternating group inside a primitive group.
        for (int q = 2; q <= n; ++q) {
            if (!is_small_prime(static_cast<uint64_t>(q))) continue;
            if (!has_pure_cycle(pattern, q)) continue;
            if (cert.primitivity_prime == 0 && !degree_is_prime && 2 * q > n) {
                cert.primitivity_prime = prime;
                cert.primitivity_cycle = q;
            }
            if (cert.jordan_prime == 0 && (q <= n - 3 || q <= 3)) {
                cert.jordan_prime = prime;
                cert.jordan_cycle = q;
            }
        }
    }

    cert.verdict = complete() ? GaloisCertificate::Verdict::FullSymmetric
                              : GaloisCertificate::Verdict::Inconclusive;
    return cert;
}

SolubilityVerdict solubility_verdict(const UniPoly& p, int prime_budget) {
    if (p.is_zero()) throw std::invalid_argument("solubility_verdict: zero polynomial");
    SolubilityVerdict verdict;
    FactorList fl = factor_over_rationals(p);

    bool any_nonsoluble = false;
    bool any_inconclusive = false;
    for (const auto& entry : fl.factors) {
        SolubilityVerdict::FactorDisposition d;
        d.factor = entry.poly;
        d.multiplicity = entry.multiplicity;
        d.degree = entry.poly.degree();
        if (d.degree <= 4) {
            d.disposition = "soluble-by-degree";
        } else {
            GaloisCertificate cert = galois_certify(entry.poly, prime_budget);
            if (cert.verdict == GaloisCertificate::Verdict::FullSymmetric) {
                d.disposition = "full-symmetric";
                any_nonsoluble = true;
            } else {
                d.disposition = "inconclusive";
                any_inconclusive = true;
            }
            d.certificate = std::move(cert);
        }
        verdict.trail.push_back(std::move(d));
    }

    if (any_nonsoluble)
        verdict.status = SolubilityVerdict::Status::NonSoluble;
    else if (any_inconclusive)
        verdict.status = SolubilityVerdict::Status::Unknown;
    else
        verdict.status = SolubilityVerdict::Status::Soluble;
    return verdict;
}

const char* to_string(GaloisCertificate::Verdict v) {
    return v == GaloisCertificate::Verdict::FullSymmetric ? "FullSymmetric" : "Inconclusive";
}

const char* to_string(SolubilityVerdict::Status s) {
    switch (s) {
        case SolubilityVerdict::Status::Soluble: return "Soluble";
        case SolubilityVerdict::Status::NonSoluble: return "NonSoluble";
        case SolubilityVerdict::Status::Unknown: return "Unknown";
    }
    return "Unknown";
}

}  // namespace cadgraph
