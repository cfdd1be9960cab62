#pragma once

namespace helixforge {

// Integer parameter P >= 1 together with the derived data of the
// characteristic polynomial x^2 - P x - 1: the discriminant D = P^2 + 4
// (exact) and the two real roots. lambda1 > 1 and lambda2 = -1/lambda1,
// so lambda1 * lambda2 = -1 and lambda1 + lambda2 = P.
struct MetallicParams {
    long long P = 1;
    long long D = 5;
    double lambda1 = 1.6180339887498949;
    double lambda2 = -0.61803398874989479;
};

// Largest admissible P: beyond this P^2 + 4 no longer fits in long long.
inline constexpr long long kMaxParam = 3037000499LL;

// Validates P and fills in the derived fields. lambda2 is computed as
// -1/lambda1 rather than (P - sqrt(D))/2; the subtraction cancels almost
// completely for large P while the reciprocal stays fully accurate.
MetallicParams make_params(long long P);

// Largest |t| for which lambda1^|t| still fits in a double, with a small
// safety margin. Floating-point evaluation beyond it reports overflow.
double evaluation_horizon(const MetallicParams& params);

}  // namespace helixforge
