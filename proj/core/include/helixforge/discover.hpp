#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "helixforge/metallic.hpp"

namespace helixforge {

// Identity templates with unknown coefficients. Each one fixes part of a
// quadratic combination of neighboring L and F terms and leaves the rest to
// be solved for, exactly, from sequence data alone. The point is to settle
// disputed coefficients by computation instead of trusting any transcription.
enum class TemplateId { Psi4, Psi6, Psi7 };

const char* template_name(TemplateId id);
TemplateId parse_template(const std::string& name);
const std::vector<TemplateId>& all_templates();

// The quadratic monomials the templates draw on.
enum class Monomial { LkSq, LPrevNext, FkSq, FPrevNext };

const char* monomial_name(Monomial m);  // "L(k)^2", "L(k-1)*L(k+1)", ...

// One solved coefficient, reported as constant + d_multiple * D so a single
// answer covers every P at once (D = P^2 + 4).
struct CoeffTerm {
    Monomial mono = Monomial::FkSq;
    mpq_class constant;
    mpq_class d_multiple;
};

struct CoeffSolution {
    TemplateId template_id = TemplateId::Psi4;
    std::vector<CoeffTerm> terms;
    std::vector<long long> checked_P;  // re-verification grid, disjoint from the input
    long long checked_k_min = 0;
    long long checked_k_max = 0;
};

// Sets up one exact linear equation per (P, k) pair and solves for the
// unknown coefficients. Requires at least two more equations than unknown
// scalars. Throws std::runtime_error when the system is underdetermined
// (grid too thin, e.g. a single P) or has no exact solution. The returned
// coefficients have already been re-verified on a disjoint grid of larger
// P values; a re-verification miss also throws.
CoeffSolution discover_coefficients(TemplateId id, const std::vector<long long>& P_set,
                                    const std::vector<long long>& k_set);

std::string coeff_to_text(const CoeffTerm& term);  // "D - 1", "-2*D", "-1", ...
std::string to_text(const CoeffSolution& solution);

}  // namespace helixforge
