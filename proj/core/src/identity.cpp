#include "helixforge/identity.hpp"

#include <sstream>
#include <stdexcept>

namespace helixforge {
namespace {

mpz_class unit_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

// The neighborhood every catalog entry draws on.
struct Neighborhood {
    mpz_class Lm, L, Lp;   // L_{k-1}, L_k, L_{k+1}
    mpz_class L2k;         // L_{2k}, only the doubling identity reads it
    mpz_class Fm, F, Fp;   // F_{k-1}, F_k, F_{k+1}
};

Neighborhood gather(const SequenceCache& seq, IdentityId id, long long k) {
    Neighborhood n;
    n.Lm = seq.lucas(k - 1);
    n.L = seq.lucas(k);
    n.Lp = seq.lucas(k + 1);
    if (id == IdentityId::DoubleIndex) n.L2k = seq.lucas(2 * k);
    n.Fm = seq.fibonacci(k - 1);
    n.F = seq.fibonacci(k);
    n.Fp = seq.fibonacci(k + 1);
    return n;
}

}  // namespace

const char* identity_name(IdentityId id) {
    switch (id) {
        case IdentityId::CassiniLucas: return "cassini-lucas";
        case IdentityId::CassiniFibonacci: return "cassini-fibonacci";
        case IdentityId::DoubleIndex: return "double-index";
        case IdentityId::PellForm: return "pell-form";
        case IdentityId::Psi4Expanded: return "psi4-expanded";
        case IdentityId::Psi5Expanded: return "psi5-expanded";
        case IdentityId::Psi6Expanded: return "psi6-expanded";
        case IdentityId::Psi7Expanded: return "psi7-expanded";
        case IdentityId::Psi6Candidate: return "psi6-candidate";
        case IdentityId::Psi7Candidate: return "psi7-candidate";
    }
    throw std::invalid_argument("identity_name: unknown identity id");
}

IdentityId parse_identity(const std::string& name) {
    static const IdentityId ids[] = {
        IdentityId::CassiniLucas,   IdentityId::CassiniFibonacci,
        IdentityId::DoubleIndex,    IdentityId::PellForm,
        IdentityId::Psi4Expanded,   IdentityId::Psi5Expanded,
        IdentityId::Psi6Expanded,   IdentityId::Psi7Expanded,
        IdentityId::Psi6Candidate,  IdentityId::Psi7Candidate,
    };
    for (IdentityId id : ids)
        if (name == identity_name(id)) return id;
    throw std::invalid_argument("parse_identity: unknown identity '" + name + "'");
}

const std::vector<IdentityId>& consistent_catalog() {
    static const std::vector<IdentityId> ids = {
        IdentityId::CassiniLucas, IdentityId::CassiniFibonacci,
        IdentityId::DoubleIndex,  IdentityId::PellForm,
        IdentityId::Psi4Expanded, IdentityId::Psi5Expanded,
        IdentityId::Psi6Expanded, IdentityId::Psi7Expanded,
    };
    return ids;
}

IdentityReport verify_identity(IdentityId id, long long P, long long k_min, long long k_max) {
    if (k_min > k_max)
        throw std::domain_error("verify_identity: empty index range");
    const MetallicParams params = make_params(P);
    const SequenceCache seq(params);
    const mpz_class P_z = to_mpz(P);
    const mpz_class D = P_z * P_z + 4;

    IdentityReport report;
    report.identity_id = id;
    report.P = P;
    report.k_min = k_min;
    report.k_max = k_max;

    for (long long k = k_min; k <= k_max; ++k) {
        const Neighborhood n = gather(seq, id, k);
        const mpz_class sign = unit_sign(k);
        mpz_class lhs, rhs;
        switch (id) {
            case IdentityId::CassiniLucas:
                lhs = n.L * n.L - n.Lm * n.Lp;
                rhs = D * sign;
                break;
            case IdentityId::CassiniFibonacci:
                lhs = n.Fm * n.Fp - n.F * n.F;
                rhs = sign;
                break;
            case IdentityId::DoubleIndex:
                lhs = n.L * n.L - n.L2k;
                rhs = 2 * sign;
                break;
            case IdentityId::PellForm:
                lhs = n.L * n.L - D * n.F * n.F;
                rhs = 4 * sign;
                break;
            case IdentityId::Psi4Expanded:
                lhs = n.L * n.L - n.Lm * n.Lp - (D - 1) * (n.Fm * n.Fp - n.F * n.F);
                rhs = sign;
                break;
            case IdentityId::Psi5Expanded:
                lhs = n.L * n.L - (D - 2) * n.F * n.F - 2 * n.Fm * n.Fp;
                rhs = 2 * sign;
                break;
            // Coefficient 1 on the neighbor product, the solver-confirmed
            // form; the -candidate twin below carries 2 there and fails.
            case IdentityId::Psi6Expanded:
                lhs = n.L * n.L - (D - 1) * n.F * n.F - n.Fm * n.Fp;
                rhs = 3 * sign;
                break;
            // Fibonacci part 2D (F_{k-1} F_{k+1} - F_k^2), again the
            // solver-confirmed form; the -candidate twin drops the 2D.
            case IdentityId::Psi7Expanded:
                lhs = -(n.L * n.L) + n.Lm * n.Lp + 2 * D * (n.Fm * n.Fp - n.F * n.F);
                rhs = D * sign;
                break;
            case IdentityId::Psi6Candidate:
                lhs = n.L * n.L - (D - 1) * n.F * n.F - 2 * n.Fm * n.Fp;
                rhs = 3 * sign;
                break;
            case IdentityId::Psi7Candidate:
                lhs = n.Lm * n.Lp - (n.L * n.L + n.F * n.F) + 2 * n.Fm * n.Fp;
                rhs = D * sign;
                break;
        }
        if (lhs != rhs) report.failures.push_back({k, lhs, rhs});
    }
    return report;
}

std::string to_text(const IdentityReport& report) {
    std::ostringstream out;
    out << "identity: " << identity_name(report.identity_id) << "\n";
    out << "P: " << report.P << "\n";
    out << "k-range: [" << report.k_min << ", " << report.k_max << "]\n";
    if (report.all_pass()) {
        out << "status: all-pass\n";
    } else {
        const long long total = report.k_max - report.k_min + 1;
        out << "status: failed (" << report.failures.size() << " of " << total << ")\n";
        for (const IdentityFailure& f : report.failures)
            out << "  k=" << f.k << " lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
    }
    return out.str();
}

PellWitness pell_certificate(const MetallicParams& params, long long k) {
    PellWitness w;
    w.P = params.P;
    const mpz_class P_z = to_mpz(params.P);
    w.D = P_z * P_z + 4;
    w.k = k;
    w.x = lucas(params, k);
    w.y = fibonacci(params, k);
    w.rhs = (k % 2 == 0) ? 4 : -4;
    const mpz_class residual = w.x * w.x - w.D * w.y * w.y;
    if (residual != w.rhs)
        throw std::logic_error("pell_certificate: x^2 - D y^2 = " + residual.get_str() +
                               " instead of " + w.rhs.get_str() +
                               " at k = " + std::to_string(k) +
                               "; the sequence engine is faulty");
    return w;
}

}  // namespace helixforge
