#include "doctest.h"

#include "algebra/diffring.hpp"
#include "dbp/reduce.hpp"

using namespace jl;

TEST_CASE("d/dlambda on monomials") {
    DiffExpr e = DiffExpr::lam(3) * DiffExpr::f(2);
    DiffExpr want = DiffExpr(3) * DiffExpr::lam(2) * DiffExpr::f(2) + DiffExpr::lam(3) * DiffExpr::f(3);
    CHECK(diff_reduce(e.derive()) == diff_reduce(want));
    DiffExpr half_sq = DiffExpr(Rational(1, 2)) * DiffExpr::f(0) * DiffExpr::f(0);
    CHECK(diff_reduce(half_sq.derive()) == diff_reduce(DiffExpr::f(0) * DiffExpr::f(1)));
    CHECK(diff_reduce(e - e).is_zero());
    CHECK(diff_reduce(DiffExpr::c(2).derive()).is_zero());
}

TEST_CASE("evaluation against a concrete polynomial") {
    // f = x^3 at lambda: lambda^2 f' = 3 lambda^4
    UPoly f = UPoly::x().pow(3);
    DiffExpr e = DiffExpr::lam(2) * DiffExpr::f(1);
    CHECK(e.eval(f, {}) == UPoly::monomial(Rational(3), 4));
    CHECK(e.derive().eval(f, {}) == e.eval(f, {}).derive());
}

TEST_CASE("integration by parts reduction") {
    // lambda^2 f' f'' = -lambda (f')^2 + d(lambda^2 (f')^2 / 2)
    Decomposition d = reduce_bilinear(DiffExpr::bilinear(Rational(1), 2, 1, 2));
    CHECK(diff_reduce(d.quadratic) == diff_reduce(DiffExpr::bilinear(Rational(-1), 1, 1, 1)));
    CHECK(equal_mod_constants(d.argument, DiffExpr::bilinear(Rational(1, 2), 2, 1, 1)));
    CHECK_THROWS_AS(reduce_bilinear(DiffExpr::f(0) * DiffExpr::f(0) * DiffExpr::f(1)), NotBilinear);
}
