#pragma once

#include <complex>

#include "helixforge/metallic.hpp"

namespace helixforge::detail {

using CompLD = std::complex<long double>;

// Extended-precision inner layer. The defining combinations of the curve
// maps cancel terms of size lambda1^(2|t|) down to an O(ratio) result, so
// every extra bit carried through the powers and products lands directly in
// the final answer. With plain double powers the cancellation residue
// already exceeds 1e-6 near t = 10; with 64-bit mantissas it stays below
// 1e-12 across the whole window where the check is meaningful at all.
// Callers handle horizon checks and final rounding.
long double cospi_ld(long double t);
long double sinpi_ld(long double t);
long double lambda1_pow_ld(const MetallicParams& params, long double t);
CompLD lambda2_pow_ld(const MetallicParams& params, long double t);
CompLD g_eval_ld(const MetallicParams& params, long double t);
CompLD h_eval_ld(const MetallicParams& params, long double t);

}  // namespace helixforge::detail
