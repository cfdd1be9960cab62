#pragma once

#include <complex>

#include "helixforge/metallic.hpp"

namespace helixforge {

using Complex = std::complex<double>;

// cos(pi t) and sin(pi t), exact at integer and half-integer arguments.
// Folding out the nearest integer first keeps the residual argument small,
// so sin(pi k) is exactly zero instead of drifting like sin(3.14159... * k).
double cospi(double t);
double sinpi(double t);

// Principal-branch power of the negative root: with lambda2 = -1/lambda1,
//   lambda2^t = e^{i pi t} / lambda1^t = (cos(pi t) + i sin(pi t)) / lambda1^t.
// Real and of modulus < 1 at integer t; genuinely complex elsewhere.
Complex lambda2_pow(const MetallicParams& params, double t);

// g(t) = lambda1^t + lambda2^t. Coincides with the Lucas-type sequence at
// integer t: g(k) = L_k up to floating-point error.
Complex g_eval(const MetallicParams& params, double t);

// h(t) = (lambda1^t - lambda2^t) / sqrt(D). Coincides with the
// Fibonacci-type sequence at integer t: h(k) = F_k.
Complex h_eval(const MetallicParams& params, double t);

}  // namespace helixforge
