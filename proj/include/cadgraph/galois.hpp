// Galois group certification from mod-p factorization degree patterns.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cadgraph/unipoly.hpp"

namespace cadgraph {

// Degree multiset of the irreducible factors of the polynomial modulo a
// good prime, i.e. the cycle type of a Frobenius element.
struct CycleTypeObservation {
    uint64_t prime = 0;        // first good prime exhibiting this pattern
    std::vector<int> pattern;  // factor degrees, ascending
};

struct GaloisCertificate {
    enum class Verdict { FullSymmetric, Inconclusive };

    UniPoly polynomial;
    int degree = 0;
    std::vector<CycleTypeObservation> observations;  // ordered by witness prime
    Verdict verdict = Verdict::Inconclusive;

    // Witness primes per role; 0 where the role went unwitnessed or is
    // automatic (primitivity needs no witness at prime degree).
    uint64_t n_cycle_prime = 0;
    uint64_t odd_parity_prime = 0;
    uint64_t primitivity_prime = 0;
    int primitivity_cycle = 0;
    uint64_t jordan_prime = 0;
    int jordan_cycle = 0;
    // In-window cycle witness, mandatory whenever some prime q satisfies
    // degree/2 < q < degree-2; such a q certifies primitivity and the
    // Jordan step at once.
    uint64_t window_prime = 0;
    int window_cycle = 0;

    int good_primes_scanned = 0;
};

// Scan mod-p factorization patterns of an irreducible polynomial over the
// first `prime_budget` good primes (not dividing the leading coefficient,
// image squarefree) until the FullSymmetric witness set is complete.
// Throws on reducible input or degree < 2.
GaloisCertificate galois_certify(const UniPoly& p, int prime_budget = 200);

struct SolubilityVerdict {
    enum class Status { Soluble, NonSoluble, Unknown };

    struct FactorDisposition {
        UniPoly factor;
        int multiplicity = 1;
        int degree = 0;
        // "soluble-by-degree" | "full-symmetric" | "inconclusive"
        std::string disposition;
        std::optional<GaloisCertificate> certificate;
    };

    Status status = Status::Unknown;
    std::vector<FactorDisposition> trail;
};

// Factor p over the rationals and combine per-factor evidence: every factor
// of degree <= 4 is soluble by radicals; any factor of degree >= 5 with a
// FullSymmetric certificate makes the whole polynomial non-soluble.
SolubilityVerdict solubility_verdict(const UniPoly& p, int prime_budget = 200);

const char* to_string(GaloisCertificate::Verdict v);
const char* to_string(SolubilityVerdict::Status s);

}  // namespace cadgraph
