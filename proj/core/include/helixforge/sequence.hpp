#pragma once

#include <gmpxx.h>

#include <deque>
#include <mutex>

#include "helixforge/metallic.hpp"

namespace helixforge {

// gmpxx provides no long long overloads; on this target long is wide enough,
// and the assertion keeps the conversion honest elsewhere.
static_assert(sizeof(long) >= sizeof(long long), "index type must fit in long");
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

enum class SequenceKind { Lucas, Fibonacci };

const char* kind_name(SequenceKind kind);

// One exact term, indexed over all of Z.
struct SequenceTerm {
    SequenceKind kind;
    long long index;
    mpz_class value;
};

// Exact L_k resp. F_k for any integer k. Both sequences satisfy
// a_{k+2} = P a_{k+1} + a_k with seeds L_0 = 2, L_1 = P and F_0 = 0,
// F_1 = 1; negative indices run the recurrence backwards,
// a_{k} = a_{k+2} - P a_{k+1}, the unique extension to Z.
mpz_class lucas(const MetallicParams& params, long long k);
mpz_class fibonacci(const MetallicParams& params, long long k);
SequenceTerm term(const MetallicParams& params, SequenceKind kind, long long k);

// Floating-point Binet value lambda1^n + lambda2^n resp.
// (lambda1^n - lambda2^n)/sqrt(D) for n >= 0. Throws std::domain_error for
// n < 0 and std::overflow_error past the evaluation horizon.
double binet_float(const MetallicParams& params, SequenceKind kind, long long n);

// Memoized two-sided prefix of both sequences for a fixed P. Lookups extend
// the stored strips on demand; extension is mutex-protected, so one cache
// may be shared across threads.
class SequenceCache {
  public:
    explicit SequenceCache(const MetallicParams& params);

    const MetallicParams& params() const { return params_; }

    mpz_class lucas(long long k) const;
    mpz_class fibonacci(long long k) const;
    SequenceTerm term(SequenceKind kind, long long k) const;

  private:
    struct Strip {
        std::deque<mpz_class> fwd;  // fwd[i] holds term(i)
        std::deque<mpz_class> bwd;  // bwd[i] holds term(-1 - i)
    };

    const mpz_class& at(const Strip& strip, long long j) const;
    void ensure(Strip& strip, long long k) const;
    mpz_class fetch(Strip& strip, long long k) const;

    MetallicParams params_;
    mpz_class P_;
    mutable std::mutex mutex_;
    mutable Strip lucas_;
    mutable Strip fibonacci_;
};

}  // namespace helixforge
