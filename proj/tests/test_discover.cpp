#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "helixforge/discover.hpp"
#include "helixforge/identity.hpp"
#include "helixforge/linsolve.hpp"

using namespace helixforge;

namespace {

std::vector<std::vector<mpz_class>> mat(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::vector<mpz_class>> out;
    for (const auto& row : rows) {
        out.emplace_back();
        for (int v : row) out.back().push_back(mpz_class(v));
    }
    return out;
}

std::vector<mpz_class> vec(std::initializer_list<int> values) {
    std::vector<mpz_class> out;
    for (int v : values) out.push_back(mpz_class(v));
    return out;
}

}  // namespace

TEST_CASE("exact solver: unique integer solution") {
    const LinearSolution s = solve_exact(mat({{2, 1}, {1, 3}}), vec({5, 10}));
    REQUIRE(s.status == LinearSolution::Status::Unique);
    CHECK(s.rank == 2);
    CHECK(s.x[0] == 1);
    CHECK(s.x[1] == 3);
}

TEST_CASE("exact solver: rational solution without rounding") {
    const LinearSolution s = solve_exact(mat({{3}}), vec({1}));
    REQUIRE(s.status == LinearSolution::Status::Unique);
    CHECK(s.x[0] == mpq_class(1, 3));

    const LinearSolution t = solve_exact(mat({{2, 0}, {0, 4}}), vec({3, 1}));
    REQUIRE(t.status == LinearSolution::Status::Unique);
    CHECK(t.x[0] == mpq_class(3, 2));
    CHECK(t.x[1] == mpq_class(1, 4));
}

TEST_CASE("exact solver: zero pivot forces a row swap") {
    const LinearSolution s =
        solve_exact(mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), vec({1, 2, 3}));
    REQUIRE(s.status == LinearSolution::Status::Unique);
    CHECK(s.x[0] == 2);
    CHECK(s.x[1] == 1);
    CHECK(s.x[2] == 3);
}

TEST_CASE("exact solver: overdetermined but consistent stacks stay unique") {
    const LinearSolution s =
        solve_exact(mat({{1, 1}, {1, -1}, {2, 0}}), vec({4, 0, 4}));
    REQUIRE(s.status == LinearSolution::Status::Unique);
    CHECK(s.x[0] == 2);
    CHECK(s.x[1] == 2);
}

TEST_CASE("exact solver: rank deficiency and contradictions are told apart") {
    CHECK(solve_exact(mat({{1, 1}}), vec({2})).status ==
          LinearSolution::Status::Underdetermined);
    CHECK(solve_exact(mat({{1, 1}, {2, 2}}), vec({2, 4})).status ==
          LinearSolution::Status::Underdetermined);
    CHECK(solve_exact(mat({{1, 1}, {2, 2}}), vec({2, 5})).status ==
          LinearSolution::Status::Inconsistent);
    CHECK(solve_exact(mat({{1}, {1}}), vec({1, 2})).status ==
          LinearSolution::Status::Inconsistent);

    const LinearSolution r = solve_exact(mat({{1, 1}, {2, 2}}), vec({2, 4}));
    CHECK(r.rank == 1);
}

TEST_CASE("exact solver: malformed systems are rejected") {
    CHECK_THROWS_AS(solve_exact(mat({{1, 2}, {1}}), vec({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(solve_exact(mat({{1, 2}}), vec({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(solve_exact({}, {}), std::invalid_argument);
}

TEST_CASE("template names round-trip") {
    for (TemplateId id : all_templates()) CHECK(parse_template(template_name(id)) == id);
    CHECK_THROWS_AS(parse_template("psi5"), std::invalid_argument);
}

TEST_CASE("recovered coefficients, first template") {
    const CoeffSolution s =
        discover_coefficients(TemplateId::Psi4, {1, 2, 3}, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    REQUIRE(s.terms.size() == 2);
    CHECK(s.terms[0].mono == Monomial::FkSq);
    CHECK(s.terms[0].constant == -1);
    CHECK(s.terms[0].d_multiple == 1);
    CHECK(coeff_to_text(s.terms[0]) == "D - 1");
    CHECK(s.terms[1].mono == Monomial::FPrevNext);
    CHECK(s.terms[1].constant == 1);
    CHECK(s.terms[1].d_multiple == -1);
    CHECK(coeff_to_text(s.terms[1]) == "-D + 1");

    // Re-verification happened on parameters the solve never saw.
    REQUIRE(s.checked_P.size() == 2);
    CHECK(s.checked_P[0] == 4);
    CHECK(s.checked_P[1] == 5);
    CHECK(s.checked_k_min == -10);
    CHECK(s.checked_k_max == 50);
}

TEST_CASE("recovered coefficients, second and third templates") {
    const CoeffSolution six =
        discover_coefficients(TemplateId::Psi6, {1, 2, 3}, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    REQUIRE(six.terms.size() == 2);
    CHECK(six.terms[0].constant == 1);
    CHECK(six.terms[0].d_multiple == -1);
    CHECK(coeff_to_text(six.terms[0]) == "-D + 1");
    CHECK(six.terms[1].constant == -1);
    CHECK(six.terms[1].d_multiple == 0);
    CHECK(coeff_to_text(six.terms[1]) == "-1");

    const CoeffSolution seven =
        discover_coefficients(TemplateId::Psi7, {1, 2, 3}, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    REQUIRE(seven.terms.size() == 2);
    CHECK(seven.terms[0].constant == 0);
    CHECK(seven.terms[0].d_multiple == -2);
    CHECK(coeff_to_text(seven.terms[0]) == "-2*D");
    CHECK(seven.terms[1].constant == 0);
    CHECK(seven.terms[1].d_multiple == 2);
    CHECK(coeff_to_text(seven.terms[1]) == "2*D");
}

TEST_CASE("solved coefficients agree with the verified identity catalog") {
    // Evaluate the symbolic answer at a fresh P and compare against the
    // coefficient the always-true identity uses there.
    const CoeffSolution six =
        discover_coefficients(TemplateId::Psi6, {1, 2, 3}, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    const long P = 7;
    const long D = P * P + 4;
    const mpq_class fsq = six.terms[0].constant + six.terms[0].d_multiple * mpq_class(D);
    CHECK(fsq == mpq_class(1 - D));
    CHECK(verify_identity(IdentityId::Psi6Expanded, P, -20, 60).all_pass());
    CHECK(verify_identity(IdentityId::Psi7Expanded, P, -20, 60).all_pass());
}

TEST_CASE("discovery refuses grids that cannot pin the answer") {
    // A single P leaves the constant/D split free.
    CHECK_THROWS_AS(
        discover_coefficients(TemplateId::Psi6, {2}, {0, 1, 2, 3, 4, 5, 6, 7, 8}),
        std::runtime_error);
    // Fewer equations than unknown scalars plus slack.
    CHECK_THROWS_AS(discover_coefficients(TemplateId::Psi6, {1}, {0, 1, 2, 3, 4}),
                    std::domain_error);
    CHECK_THROWS_AS(discover_coefficients(TemplateId::Psi6, {0, 1}, {0, 1, 2, 3}),
                    std::domain_error);
}

TEST_CASE("coefficient rendering covers the sign and scale cases") {
    auto term = [](int num_c, int den_c, int num_d, int den_d) {
        CoeffTerm t;
        t.mono = Monomial::FkSq;
        t.constant = mpq_class(num_c, den_c);
        t.d_multiple = mpq_class(num_d, den_d);
        return t;
    };
    CHECK(coeff_to_text(term(3, 1, 2, 1)) == "2*D + 3");
    CHECK(coeff_to_text(term(-1, 2, 0, 1)) == "-1/2");
    CHECK(coeff_to_text(term(1, 1, -1, 1)) == "-D + 1");
    CHECK(coeff_to_text(term(0, 1, 1, 1)) == "D");
    CHECK(coeff_to_text(term(-4, 1, 1, 2)) == "1/2*D - 4");

    const CoeffSolution s =
        discover_coefficients(TemplateId::Psi7, {1, 2, 3}, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    const std::string text = to_text(s);
    CHECK(text.find("template: psi7") == 0);
    CHECK(text.find("coefficient[F(k)^2] = -2*D") != std::string::npos);
    CHECK(text.find("coefficient[F(k-1)*F(k+1)] = 2*D") != std::string::npos);
    CHECK(text.find("re-verified: P in {4, 5}, k in [-10, 50]") != std::string::npos);
}
