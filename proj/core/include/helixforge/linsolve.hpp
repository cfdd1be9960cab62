#pragma once

#include <gmpxx.h>

#include <vector>

namespace helixforge {

// Outcome of an exact solve of A x = b over the rationals.
struct LinearSolution {
    enum class Status { Unique, Underdetermined, Inconsistent };
    Status status = Status::Underdetermined;
    int rank = 0;
    std::vector<mpq_class> x;  // filled only when status == Unique
};

// Fraction-free (Bareiss) elimination on integer entries: every intermediate
// value stays an exact integer minor, so no rounding and no fraction blowup.
// Rank deficiency and inconsistency are detected exactly.
LinearSolution solve_exact(std::vector<std::vector<mpz_class>> A,
                           std::vector<mpz_class> b);

}  // namespace helixforge
