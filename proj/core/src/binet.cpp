#include "helixforge/binet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "binet_detail.hpp"

namespace helixforge {
namespace detail {
namespace {

// Splits t into nearest integer and residue with |residue| <= 1/2; the
// subtraction is exact (Sterbenz), so the half-turn reduction loses nothing.
struct PiArg {
    long double residue;
    bool odd;
};

PiArg reduce_half_turns(long double t) {
    const long double n = std::nearbyint(t);
    return {t - n, std::fmod(n, 2.0L) != 0.0L};
}

}  // namespace

long double cospi_ld(long double t) {
    const PiArg arg = reduce_half_turns(t);
    long double c;
    if (arg.residue == 0.0L)
        c = 1.0L;
    else if (arg.residue == 0.5L || arg.residue == -0.5L)
        c = 0.0L;
    else
        c = std::cos(std::numbers::pi_v<long double> * arg.residue);
    return arg.odd ? -c : c;
}

long double sinpi_ld(long double t) {
    const PiArg arg = reduce_half_turns(t);
    if (arg.residue == 0.0L) return 0.0L;  // exact zero at integers, either parity
    long double s;
    if (arg.residue == 0.5L)
        s = 1.0L;
    else if (arg.residue == -0.5L)
        s = -1.0L;
    else
        s = std::sin(std::numbers::pi_v<long double> * arg.residue);
    return arg.odd ? -s : s;
}

long double lambda1_pow_ld(const MetallicParams& params, long double t) {
    return std::exp(t * std::log(static_cast<long double>(params.lambda1)));
}

CompLD lambda2_pow_ld(const MetallicParams& params, long double t) {
    const long double inv = 1.0L / lambda1_pow_ld(params, t);
    return {cospi_ld(t) * inv, sinpi_ld(t) * inv};
}

CompLD g_eval_ld(const MetallicParams& params, long double t) {
    const CompLD tail = lambda2_pow_ld(params, t);
    return {lambda1_pow_ld(params, t) + tail.real(), tail.imag()};
}

CompLD h_eval_ld(const MetallicParams& params, long double t) {
    const CompLD tail = lambda2_pow_ld(params, t);
    const long double root = std::sqrt(static_cast<long double>(params.D));
    return {(lambda1_pow_ld(params, t) - tail.real()) / root, -tail.imag() / root};
}

}  // namespace detail

namespace {

void check_horizon(const MetallicParams& params, double t, const char* who) {
    if (!std::isfinite(t))
        throw std::domain_error(std::string(who) + ": argument must be finite");
    if (!(std::abs(t) <= evaluation_horizon(params)))
        throw std::overflow_error(std::string(who) + ": |t| = " + std::to_string(std::abs(t)) +
                                  " is outside the evaluation horizon for P = " +
                                  std::to_string(params.P));
}

Complex round_to_double(detail::CompLD z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

Complex require_finite(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::overflow_error(std::string(who) + ": evaluation produced a non-finite value");
    return z;
}

}  // namespace

double cospi(double t) { return static_cast<double>(detail::cospi_ld(t)); }

double sinpi(double t) { return static_cast<double>(detail::sinpi_ld(t)); }

Complex lambda2_pow(const MetallicParams& params, double t) {
    check_horizon(params, t, "lambda2_pow");
    return require_finite(round_to_double(detail::lambda2_pow_ld(params, t)), "lambda2_pow");
}

Complex g_eval(const MetallicParams& params, double t) {
    check_horizon(params, t, "g_eval");
    return require_finite(round_to_double(detail::g_eval_ld(params, t)), "g_eval");
}

Complex h_eval(const MetallicParams& params, double t) {
    check_horizon(params, t, "h_eval");
    return require_finite(round_to_double(detail::h_eval_ld(params, t)), "h_eval");
}

}  // namespace helixforge
