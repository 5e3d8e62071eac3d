#include "doctest.h"

#include "dbp/identities.hpp"

#include <set>

using namespace jl;

TEST_CASE("catalog holds the fourteen identities plus the two long section identities") {
    std::set<std::string> ids;
    for (auto& r : catalog()) ids.insert(r.id);
    for (int j = 1; j <= 7; ++j) CHECK(ids.count("fd1-" + std::to_string(j)) == 1);
    for (int j = 0; j <= 6; ++j) CHECK(ids.count("fd2-" + std::to_string(j)) == 1);
    CHECK_THROWS_AS(find_identity("fd9-9"), UnknownIdentity);
}

TEST_CASE("verified transcriptions agree with random sampling") {
    for (auto& r : catalog()) {
        VerifyResult v = verify(r);
        // the sampling oracle is independent of the symbolic reduction
        CHECK_MESSAGE(v.verified == sampling_agrees(r, 11), r.id);
        CHECK_MESSAGE(v.verified == v.residual.is_zero(), r.id);
    }
}

TEST_CASE("transcriptions that carry a residual") {
    for (const char* id : {"fd1-3", "fd1-6", "fd1-7"}) {
        VerifyResult v = verify(id);
        CHECK_FALSE_MESSAGE(v.verified, id);
        CHECK_FALSE(sampling_agrees(find_identity(id), 5));
    }
}

TEST_CASE("perturbed fd1-2 leaves lambda (f')^2") {
    IdentityRecord r = find_identity("fd1-2");
    r.rhs_quadratic = r.rhs_quadratic - DiffExpr::bilinear(Rational(1), 1, 1, 1);
    VerifyResult v = verify(r);
    CHECK_FALSE(v.verified);
    CHECK(v.residual == diff_reduce(DiffExpr::bilinear(Rational(1), 1, 1, 1)));
}

TEST_CASE("decompose reconstructs independently") {
    IdentityRecord d4 = decompose(4, 1);
    CHECK(diff_reduce(d4.rhs_quadratic) ==
          diff_reduce(DiffExpr::bilinear(Rational(-12), 1, 1, 1) + DiffExpr::bilinear(Rational(6), 3, 2, 2)));
    IdentityRecord d5 = decompose(5, 2);
    CHECK(diff_reduce(d5.rhs_quadratic) ==
          diff_reduce(DiffExpr::bilinear(Rational(-60), 3, 2, 2) + DiffExpr::bilinear(Rational(9), 5, 3, 3)));
    IdentityRecord d1 = decompose(1, 1);
    CHECK(d1.rhs_quadratic.is_zero());
    CHECK(equal_mod_constants(d1.rhs_derivative_argument, DiffExpr::bilinear(Rational(1, 2), 0, 0, 0)));
    CHECK_THROWS_AS(decompose(8, 1), DegreeOutOfRange);
    for (int j = 1; j <= 7; ++j) CHECK(verify(decompose(j, 1)).verified);
    for (int j = 0; j <= 6; ++j) CHECK(verify(decompose(j, 2)).verified);
}
