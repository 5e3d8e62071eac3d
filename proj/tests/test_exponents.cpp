#include "doctest.h"

#include "exponents/exponents.hpp"

#include <cmath>

using namespace jl;

namespace {

// smaller positive root of (k+8)/k J0(k) = q0 by long double bisection
long double R1_oracle(long n) {
    auto f = [n](long double k) {
        long double J = 1, H = 1, q = (n - 8) / 2.0L;
        for (int i = 0; i < 4; ++i) {
            J *= (k + 2 * i) * (n - 2 - 2 * i - k);
            H *= q + 2 * i;
        }
        return (k + 8) / k * J - H * H;
    };
    long double a = 1e-12L, b = (n - 10) / 2.0L;
    for (int i = 0; i < 300; ++i) {
        long double m = (a + b) / 2;
        if ((f(m) < 0) == (f(a) < 0)) a = m;
        else b = m;
    }
    return (a + b) / 2;
}

}  // namespace

TEST_CASE("thresholds and infinite exponents") {
    CHECK(threshold(1) == 10);
    CHECK(threshold(2) == 12);
    CHECK(threshold(3) == 14);
    CHECK(threshold(4) == 17);
    CHECK(pc(4, 17).infinite);
    CHECK(pc(2, 12).infinite);
    CHECK_FALSE(pc(2, 13).infinite);
    CHECK_FALSE(pc(3, 15).infinite);
    CHECK_THROWS_AS(pc(4, 8), DomainError);
}

TEST_CASE("harmonic exponent at n = 11") {
    ExponentRecord r = pc(1, 11);
    REQUIRE(r.p_c);
    RInterval want = (RInterval(37L, 256) + RInterval(8L, 256) * RInterval(10L, 256).sqrt()) / RInterval(9L, 256);
    CHECK_NOTHROW(r.p_c->intersect(want));
    CHECK(r.p_c->mid_double() == doctest::Approx((37 + 8 * std::sqrt(10.0)) / 9));
}

TEST_CASE("d(n) against the raw spectral equation") {
    for (long n : {18L, 20L, 33L, 120L}) {
        RInterval d = eval_d(n);
        long double R1 = R1_oracle(n);
        CHECK(static_cast<double>((n - 10) / 2.0L - d.mid_double()) == doctest::Approx(static_cast<double>(R1)).epsilon(1e-12));
        CHECK(d.certainly_less(RInterval(n, 256).sqrt()));
        CHECK(d.positive());
    }
    CHECK(5 - eval_d(20).mid_double() == doctest::Approx(0.9244642513).epsilon(1e-10));
    CHECK_THROWS_AS(eval_d(17), DomainError);
}

TEST_CASE("triharmonic radical") {
    RInterval D = eval_D_tri(15);
    CHECK(D.positive());
    ExponentRecord r = pc(3, 15);
    REQUIRE(r.p_c);
    CHECK(RInterval(Rational(19, 7), 256).certainly_less(*r.p_c));
    CHECK_THROWS_AS(eval_D_tri(14), DomainError);
}

TEST_CASE("cascade of the radical") {
    DCascade a = derived_d_cascade(), b = printed_d_cascade();
    CHECK(a.d0 == b.d0);
    CHECK(a.d3 == b.d3);
    CHECK(a.d4 == b.d4);
    CHECK(a.d5 == b.d5);
    CHECK(a.d1 - b.d1 == UPoly::x().pow(15) * Rational(-4));
    CHECK(d1_positive_from_18());
    CHECK(pc_identity_holds());
    // the displayed constant shifts d(20)
    CHECK(eval_d_printed(20).mid_double() == doctest::Approx(4.08497).epsilon(1e-5));
}

TEST_CASE("root validation and stability residual") {
    for (long n : {18L, 100L}) {
        RootValidation v = validate_root(n);
        CHECK(v.ok);
        CHECK(v.quartic_value.contains_zero());
        CHECK(v.quartic_value.width_below(Rational(mpz_class(1), mpz_class("100000000000000000000"))));
    }
    CHECK_THROWS_AS(validate_root(17), DomainError);
    for (auto [m, n] : {std::pair{1, 11L}, std::pair{2, 20L}, std::pair{3, 16L}, std::pair{4, 20L}, std::pair{4, 60L}})
        CHECK(stability_residual(pc(m, n)).contains_zero());
}

TEST_CASE("d(n) below sqrt(n)") {
    auto v = certify_d_lt_sqrt(18, 400);
    for (auto& c : v) CHECK(c.certified);
    SqrtCertificate big = certify_d_lt_sqrt(100000000);
    CHECK(big.certified);
    CHECK(RInterval(Rational(99, 100), 64).certainly_less(big.ratio));
    CHECK(big.ratio.certainly_less(RInterval(1L, 64)));
    CHECK_THROWS(certify_d_lt_sqrt(19, 18));
    CHECK_THROWS(certify_d_lt_sqrt(10, 20));
}
