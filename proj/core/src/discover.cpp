#include "helixforge/discover.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "helixforge/linsolve.hpp"
#include "helixforge/sequence.hpp"

namespace helixforge {
namespace {

mpz_class unit_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

struct FixedTerm {
    Monomial mono;
    int c0;  // coefficient c0 + c1 * D
    int c1;
};

struct TemplateShape {
    std::vector<FixedTerm> fixed;
    std::vector<Monomial> unknowns;  // each coefficient solved as u + v * D
    int rhs0;                        // right side (rhs0 + rhs1 * D) * (-1)^k
    int rhs1;
};

// The Lucas-side coefficients are part of each template. For the last
// template they must be: leaving all four monomial coefficients free makes
// the system rank-deficient (the two Cassini identities tie the Lucas
// monomials to D times the Fibonacci ones), so no grid could single out one
// answer. With the Lucas side pinned, the Fibonacci side is uniquely
// determined.
TemplateShape template_shape(TemplateId id) {
    switch (id) {
        case TemplateId::Psi4:
            return {{{Monomial::LkSq, 1, 0}, {Monomial::LPrevNext, -1, 0}},
                    {Monomial::FkSq, Monomial::FPrevNext},
                    1,
                    0};
        case TemplateId::Psi6:
            return {{{Monomial::LkSq, 1, 0}},
                    {Monomial::FkSq, Monomial::FPrevNext},
                    3,
                    0};
        case TemplateId::Psi7:
            return {{{Monomial::LkSq, -1, 0}, {Monomial::LPrevNext, 1, 0}},
                    {Monomial::FkSq, Monomial::FPrevNext},
                    0,
                    1};
    }
    throw std::invalid_argument("template_shape: unknown template id");
}

mpz_class monomial_value(const SequenceCache& seq, Monomial m, long long k) {
    switch (m) {
        case Monomial::LkSq: {
            const mpz_class v = seq.lucas(k);
            return v * v;
        }
        case Monomial::LPrevNext: return seq.lucas(k - 1) * seq.lucas(k + 1);
        case Monomial::FkSq: {
            const mpz_class v = seq.fibonacci(k);
            return v * v;
        }
        case Monomial::FPrevNext: return seq.fibonacci(k - 1) * seq.fibonacci(k + 1);
    }
    throw std::invalid_argument("monomial_value: unknown monomial");
}

// Exact check of the fully assembled identity at one (P, k).
bool holds_at(const TemplateShape& shape, const std::vector<CoeffTerm>& terms,
              const SequenceCache& seq, const mpz_class& D, long long k) {
    mpq_class lhs(0);
    for (const FixedTerm& f : shape.fixed)
        lhs += mpq_class(mpz_class(f.c0) + f.c1 * D) * mpq_class(monomial_value(seq, f.mono, k));
    for (const CoeffTerm& term : terms)
        lhs += (term.constant + term.d_multiple * mpq_class(D)) *
               mpq_class(monomial_value(seq, term.mono, k));
    const mpq_class rhs = mpq_class(mpz_class(shape.rhs0) + shape.rhs1 * D) *
                          mpq_class(unit_sign(k));
    return lhs == rhs;
}

}  // namespace

const char* template_name(TemplateId id) {
    switch (id) {
        case TemplateId::Psi4: return "psi4";
        case TemplateId::Psi6: return "psi6";
        case TemplateId::Psi7: return "psi7";
    }
    throw std::invalid_argument("template_name: unknown template id");
}

TemplateId parse_template(const std::string& name) {
    for (TemplateId id : all_templates())
        if (name == template_name(id)) return id;
    throw std::invalid_argument("parse_template: unknown template '" + name + "'");
}

const std::vector<TemplateId>& all_templates() {
    static const std::vector<TemplateId> ids = {TemplateId::Psi4, TemplateId::Psi6,
                                                TemplateId::Psi7};
    return ids;
}

const char* monomial_name(Monomial m) {
    switch (m) {
        case Monomial::LkSq: return "L(k)^2";
        case Monomial::LPrevNext: return "L(k-1)*L(k+1)";
        case Monomial::FkSq: return "F(k)^2";
        case Monomial::FPrevNext: return "F(k-1)*F(k+1)";
    }
    throw std::invalid_argument("monomial_name: unknown monomial");
}

CoeffSolution discover_coefficients(TemplateId id, const std::vector<long long>& P_set,
                                    const std::vector<long long>& k_set) {
    const TemplateShape shape = template_shape(id);
    const std::size_t unknown_scalars = 2 * shape.unknowns.size();
    if (P_set.empty() || k_set.empty())
        throw std::domain_error("discover_coefficients: empty sampling grid");
    if (P_set.size() * k_set.size() < unknown_scalars + 2)
        throw std::domain_error("discover_coefficients: need at least " +
                                std::to_string(unknown_scalars + 2) +
                                " equations, the grid provides only " +
                                std::to_string(P_set.size() * k_set.size()));

    std::vector<std::vector<mpz_class>> A;
    std::vector<mpz_class> b;
    A.reserve(P_set.size() * k_set.size());
    b.reserve(P_set.size() * k_set.size());
    for (long long P : P_set) {
        const SequenceCache seq(make_params(P));
        const mpz_class P_z = to_mpz(P);
        const mpz_class D = P_z * P_z + 4;
        for (long long k : k_set) {
            std::vector<mpz_class> row;
            row.reserve(unknown_scalars);
            for (Monomial m : shape.unknowns) {
                mpz_class v = monomial_value(seq, m, k);
                row.push_back(v);
                row.push_back(D * v);
            }
            mpz_class rhs = (mpz_class(shape.rhs0) + shape.rhs1 * D) * unit_sign(k);
            for (const FixedTerm& f : shape.fixed)
                rhs -= (mpz_class(f.c0) + f.c1 * D) * monomial_value(seq, f.mono, k);
            A.push_back(std::move(row));
            b.push_back(std::move(rhs));
        }
    }

    const LinearSolution sol = solve_exact(std::move(A), std::move(b));
    if (sol.status == LinearSolution::Status::Underdetermined)
        throw std::runtime_error(
            "discover_coefficients: the grid does not determine the coefficients "
            "(rank " + std::to_string(sol.rank) + " of " +
            std::to_string(unknown_scalars) + "); vary P, not just k");
    if (sol.status == LinearSolution::Status::Inconsistent)
        throw std::runtime_error(
            "discover_coefficients: no exact coefficients exist; the template "
            "contradicts the sequences");

    CoeffSolution out;
    out.template_id = id;
    for (std::size_t i = 0; i < shape.unknowns.size(); ++i)
        out.terms.push_back({shape.unknowns[i], sol.x[2 * i], sol.x[2 * i + 1]});

    // Re-verify on P values strictly beyond the sampled ones, over a wider
    // k window, so the confirmation shares no data point with the solve.
    const long long max_P = *std::max_element(P_set.begin(), P_set.end());
    out.checked_P = {max_P + 1, max_P + 2};
    out.checked_k_min = -10;
    out.checked_k_max = 50;
    for (long long P : out.checked_P) {
        const SequenceCache seq(make_params(P));
        const mpz_class P_z = to_mpz(P);
        const mpz_class D = P_z * P_z + 4;
        for (long long k = out.checked_k_min; k <= out.checked_k_max; ++k)
            if (!holds_at(shape, out.terms, seq, D, k))
                throw std::runtime_error(
                    "discover_coefficients: re-verification failed at P = " +
                    std::to_string(P) + ", k = " + std::to_string(k));
    }
    return out;
}

std::string coeff_to_text(const CoeffTerm& term) {
    const mpq_class& u = term.constant;
    const mpq_class& v = term.d_multiple;
    std::ostringstream out;
    if (v == 0) {
        out << u;
        return out.str();
    }
    if (v == 1)
        out << "D";
    else if (v == -1)
        out << "-D";
    else
        out << v << "*D";
    if (u > 0)
        out << " + " << u;
    else if (u < 0)
        out << " - " << mpq_class(-u);
    return out.str();
}

std::string to_text(const CoeffSolution& solution) {
    std::ostringstream out;
    out << "template: " << template_name(solution.template_id) << "\n";
    for (const CoeffTerm& term : solution.terms)
        out << "  coefficient[" << monomial_name(term.mono) << "] = "
            << coeff_to_text(term) << "\n";
    out << "  re-verified: P in {";
    for (std::size_t i = 0; i < solution.checked_P.size(); ++i)
        out << (i ? ", " : "") << solution.checked_P[i];
    out << "}, k in [" << solution.checked_k_min << ", " << solution.checked_k_max
        << "]\n";
    return out.str();
}

}  // namespace helixforge
