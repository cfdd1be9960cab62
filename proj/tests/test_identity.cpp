#include <doctest.h>

#include <stdexcept>
#include <string>

#include "helixforge/helix.hpp"
#include "helixforge/identity.hpp"

using namespace helixforge;

TEST_CASE("identity names round-trip and the catalog excludes the controls") {
    const IdentityId all[] = {
        IdentityId::CassiniLucas, IdentityId::CassiniFibonacci, IdentityId::DoubleIndex,
        IdentityId::PellForm,     IdentityId::Psi4Expanded,     IdentityId::Psi5Expanded,
        IdentityId::Psi6Expanded, IdentityId::Psi7Expanded,     IdentityId::Psi6Candidate,
        IdentityId::Psi7Candidate,
    };
    for (IdentityId id : all) CHECK(parse_identity(identity_name(id)) == id);
    CHECK_THROWS_AS(parse_identity("cassini"), std::invalid_argument);

    CHECK(consistent_catalog().size() == 8);
    for (IdentityId id : consistent_catalog()) {
        CHECK(id != IdentityId::Psi6Candidate);
        CHECK(id != IdentityId::Psi7Candidate);
    }
}

TEST_CASE("every catalog identity holds exactly on a two-sided window") {
    for (long long P = 1; P <= 10; ++P)
        for (IdentityId id : consistent_catalog()) {
            const IdentityReport r = verify_identity(id, P, -50, 200);
            CHECK(r.all_pass());
            CHECK(r.P == P);
            CHECK(r.k_min == -50);
            CHECK(r.k_max == 200);
        }
}

TEST_CASE("candidate controls fail at predictable offsets") {
    // First control: one coefficient off by one. Holds at k = 1 by luck,
    // fails at the four other small indices with these exact residues.
    const IdentityReport six = verify_identity(IdentityId::Psi6Candidate, 1, 0, 4);
    REQUIRE(six.failures.size() == 4);
    CHECK(six.failures[0].k == 0);
    CHECK(six.failures[0].lhs == 2);
    CHECK(six.failures[0].rhs == 3);
    CHECK(six.failures[1].k == 2);
    CHECK(six.failures[1].lhs == 1);
    CHECK(six.failures[1].rhs == 3);
    CHECK(six.failures[2].k == 3);
    CHECK(six.failures[2].lhs == -6);
    CHECK(six.failures[2].rhs == -3);
    CHECK(six.failures[3].k == 4);
    CHECK(six.failures[3].lhs == -7);
    CHECK(six.failures[3].rhs == 3);

    // Second control: scrambled combination, wrong at every small index.
    const IdentityReport seven = verify_identity(IdentityId::Psi7Candidate, 1, 0, 2);
    REQUIRE(seven.failures.size() == 3);
    CHECK(seven.failures[0].lhs == -3);
    CHECK(seven.failures[0].rhs == 5);
    CHECK(seven.failures[1].lhs == 4);
    CHECK(seven.failures[1].rhs == -5);
    CHECK(seven.failures[2].lhs == -2);
    CHECK(seven.failures[2].rhs == 5);
}

TEST_CASE("report text is stable") {
    const IdentityReport pass = verify_identity(IdentityId::CassiniLucas, 1, -50, 200);
    CHECK(to_text(pass) ==
          "identity: cassini-lucas\n"
          "P: 1\n"
          "k-range: [-50, 200]\n"
          "status: all-pass\n");

    const IdentityReport fail = verify_identity(IdentityId::Psi6Candidate, 1, 0, 4);
    const std::string text = to_text(fail);
    CHECK(text.find("status: failed (4 of 5)") != std::string::npos);
    CHECK(text.find("  k=3 lhs=-6 rhs=-3\n") != std::string::npos);
}

TEST_CASE("verification rejects bad arguments") {
    CHECK_THROWS_AS(verify_identity(IdentityId::PellForm, 0, 0, 5), std::domain_error);
    CHECK_THROWS_AS(verify_identity(IdentityId::PellForm, 1, 5, 0), std::domain_error);
}

TEST_CASE("quadratic-form certificates") {
    const MetallicParams p1 = make_params(1);

    const PellWitness w0 = pell_certificate(p1, 0);
    CHECK(w0.x == 2);
    CHECK(w0.y == 0);
    CHECK(w0.rhs == 4);
    CHECK(w0.D == 5);

    const PellWitness w3 = pell_certificate(p1, 3);
    CHECK(w3.x == 4);
    CHECK(w3.y == 2);
    CHECK(w3.rhs == -4);

    const PellWitness wneg = pell_certificate(p1, -3);
    CHECK(wneg.x == -4);
    CHECK(wneg.y == 2);
    CHECK(wneg.rhs == -4);

    // The witness satisfies the form by construction; confirm independently.
    for (long long P = 1; P <= 20; ++P) {
        const MetallicParams p = make_params(P);
        for (long long k = -20; k <= 100; ++k) {
            const PellWitness w = pell_certificate(p, k);
            CHECK(w.x * w.x - w.D * w.y * w.y == w.rhs);
        }
    }
}

TEST_CASE("quadratic form agrees with the closed-form radius at integers") {
    // The same alternating value 4 (-1)^k shows up as the real part of the
    // radius-4 strand at integer parameters.
    for (long long P = 1; P <= 3; ++P) {
        const MetallicParams p = make_params(P);
        for (long long k = -5; k <= 5; ++k) {
            const PellWitness w = pell_certificate(p, k);
            const Complex z = psi_closed(MapId::Psi3, p, static_cast<double>(k));
            CHECK(w.rhs.get_d() == z.real());
        }
    }
}
