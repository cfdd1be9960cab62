#include "helixforge/linsolve.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace helixforge {
namespace {

// One-step division in the Bareiss scheme. The quotient is exact by the
// minor identity; a nonzero remainder would mean corrupted elimination
// state, so it is checked rather than assumed.
mpz_class exact_div(const mpz_class& a, const mpz_class& d) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw std::logic_error("solve_exact: Bareiss division left a remainder");
    return q;
}

}  // namespace

LinearSolution solve_exact(std::vector<std::vector<mpz_class>> A,
                           std::vector<mpz_class> b) {
    const std::size_t m = A.size();
    if (m == 0 || A[0].empty())
        throw std::invalid_argument("solve_exact: empty system");
    const std::size_t n = A[0].size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("solve_exact: ragged matrix");
    if (b.size() != m) throw std::invalid_argument("solve_exact: rhs size mismatch");

    std::vector<std::size_t> pivot_cols;
    mpz_class prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && A[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(A[p], A[row]);
        std::swap(b[p], b[row]);
        const mpz_class pivot = A[row][col];
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                A[i][j] = exact_div(A[i][j] * pivot - A[i][col] * A[row][j], prev);
            b[i] = exact_div(b[i] * pivot - A[i][col] * b[row], prev);
            A[i][col] = 0;
        }
        prev = pivot;
        pivot_cols.push_back(col);
        ++row;
    }

    const std::size_t rank = row;
    LinearSolution out;
    out.rank = static_cast<int>(rank);
    for (std::size_t i = rank; i < m; ++i)
        if (b[i] != 0) {
            out.status = LinearSolution::Status::Inconsistent;
            return out;
        }
    if (rank < n) {
        out.status = LinearSolution::Status::Underdetermined;
        return out;
    }

    out.status = LinearSolution::Status::Unique;
    out.x.assign(n, mpq_class(0));
    for (std::size_t i = rank; i-- > 0;) {
        const std::size_t col = pivot_cols[i];
        mpq_class sum(b[i]);
        for (std::size_t j = col + 1; j < n; ++j)
            sum -= mpq_class(A[i][j]) * out.x[j];
        out.x[col] = sum / mpq_class(A[i][col]);
    }
    return out;
}

}  // namespace helixforge
