#include "helixforge/sequence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace helixforge {
namespace {

void seed_values(SequenceKind kind, long long P, mpz_class& a0, mpz_class& a1) {
    if (kind == SequenceKind::Lucas) {
        a0 = 2;
        a1 = to_mpz(P);
    } else {
        a0 = 0;
        a1 = 1;
    }
}

}  // namespace

const char* kind_name(SequenceKind kind) {
    return kind == SequenceKind::Lucas ? "lucas" : "fibonacci";
}

mpz_class lucas(const MetallicParams& params, long long k) {
    return term(params, SequenceKind::Lucas, k).value;
}

mpz_class fibonacci(const MetallicParams& params, long long k) {
    return term(params, SequenceKind::Fibonacci, k).value;
}

SequenceTerm term(const MetallicParams& params, SequenceKind kind, long long k) {
    const mpz_class P = to_mpz(params.P);
    mpz_class a, b;  // invariant: a = term(i), b = term(i + 1)
    seed_values(kind, params.P, a, b);
    if (k >= 0) {
        for (long long i = 0; i < k; ++i) {
            mpz_class next = P * b + a;
            a = std::move(b);
            b = std::move(next);
        }
    } else {
        for (long long i = 0; i > k; --i) {
            mpz_class prev = b - P * a;
            b = std::move(a);
            a = std::move(prev);
        }
    }
    return {kind, k, std::move(a)};
}

double binet_float(const MetallicParams& params, SequenceKind kind, long long n) {
    if (n < 0)
        throw std::domain_error("binet_float: index must be non-negative, got " +
                                std::to_string(n));
    if (static_cast<double>(n) > evaluation_horizon(params))
        throw std::overflow_error("binet_float: lambda1^n overflows double for n = " +
                                  std::to_string(n) + ", P = " + std::to_string(params.P));
    const double l1n = std::exp(static_cast<double>(n) * std::log(params.lambda1));
    const double l2n = (n % 2 == 0 ? 1.0 : -1.0) / l1n;  // lambda2^n = (-1)^n / lambda1^n
    if (kind == SequenceKind::Lucas) return l1n + l2n;
    return (l1n - l2n) / std::sqrt(static_cast<double>(params.D));
}

SequenceCache::SequenceCache(const MetallicParams& params)
    : params_(params), P_(to_mpz(params.P)) {
    lucas_.fwd.resize(2);
    fibonacci_.fwd.resize(2);
    seed_values(SequenceKind::Lucas, params_.P, lucas_.fwd[0], lucas_.fwd[1]);
    seed_values(SequenceKind::Fibonacci, params_.P, fibonacci_.fwd[0], fibonacci_.fwd[1]);
}

const mpz_class& SequenceCache::at(const Strip& strip, long long j) const {
    return j >= 0 ? strip.fwd[static_cast<std::size_t>(j)]
                  : strip.bwd[static_cast<std::size_t>(-1 - j)];
}

void SequenceCache::ensure(Strip& strip, long long k) const {
    while (static_cast<long long>(strip.fwd.size()) <= k) {
        const long long n = static_cast<long long>(strip.fwd.size());
        strip.fwd.push_back(P_ * at(strip, n - 1) + at(strip, n - 2));
    }
    while (static_cast<long long>(strip.bwd.size()) < -k) {
        const long long j = -1 - static_cast<long long>(strip.bwd.size());
        strip.bwd.push_back(at(strip, j + 2) - P_ * at(strip, j + 1));
    }
}

mpz_class SequenceCache::fetch(Strip& strip, long long k) const {
    std::lock_guard<std::mutex> lock(mutex_);
    ensure(strip, k);
    return at(strip, k);
}

mpz_class SequenceCache::lucas(long long k) const { return fetch(lucas_, k); }

mpz_class SequenceCache::fibonacci(long long k) const { return fetch(fibonacci_, k); }

SequenceTerm SequenceCache::term(SequenceKind kind, long long k) const {
    return {kind, k, kind == SequenceKind::Lucas ? lucas(k) : fibonacci(k)};
}

}  // namespace helixforge
