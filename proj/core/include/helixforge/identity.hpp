#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "helixforge/sequence.hpp"

namespace helixforge {

// Integer identities among neighboring L and F terms, one per helix map plus
// the classical quartet they expand from. The two -candidate entries are
// deliberately wrong variants kept as negative controls: the checker must
// reject them, which is how we know it can tell right from wrong.
enum class IdentityId {
    CassiniLucas,       // L_k^2 - L_{k-1} L_{k+1} = D (-1)^k
    CassiniFibonacci,   // F_{k-1} F_{k+1} - F_k^2 = (-1)^k
    DoubleIndex,        // L_k^2 - L_{2k} = 2 (-1)^k
    PellForm,           // L_k^2 - D F_k^2 = 4 (-1)^k
    Psi4Expanded,
    Psi5Expanded,
    Psi6Expanded,
    Psi7Expanded,
    Psi6Candidate,
    Psi7Candidate,
};

const char* identity_name(IdentityId id);
IdentityId parse_identity(const std::string& name);

// Every identity that holds on all of Z; the candidate controls are excluded.
const std::vector<IdentityId>& consistent_catalog();

struct IdentityFailure {
    long long k = 0;
    mpz_class lhs;
    mpz_class rhs;
};

struct IdentityReport {
    IdentityId identity_id = IdentityId::CassiniLucas;
    long long P = 1;
    long long k_min = 0;
    long long k_max = 0;
    std::vector<IdentityFailure> failures;  // ascending in k

    bool all_pass() const { return failures.empty(); }
};

// Checks the identity exactly at every k in [k_min, k_max]; both sides are
// integers, so pass/fail is equality, never tolerance.
IdentityReport verify_identity(IdentityId id, long long P, long long k_min, long long k_max);

std::string to_text(const IdentityReport& report);

// One certified solution of x^2 - D y^2 = 4 (-1)^k, namely x = L_k, y = F_k.
struct PellWitness {
    long long P = 1;
    mpz_class D;
    long long k = 0;
    mpz_class x;
    mpz_class y;
    mpz_class rhs;
};

// Builds the witness and re-checks it exactly. The equation holds for every
// integer k, so a mismatch can only mean a fault in the sequence engine;
// that case throws std::logic_error instead of returning.
PellWitness pell_certificate(const MetallicParams& params, long long k);

}  // namespace helixforge
