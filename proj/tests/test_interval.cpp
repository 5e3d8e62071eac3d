#include "doctest.h"

#include "algebra/interval.hpp"
#include "algebra/radical.hpp"

#include <cmath>

using namespace jl;

TEST_CASE("outward rounded enclosures") {
    RInterval four(4L, 64);
    RInterval r = four.sqrt();
    CHECK(r.contains(Rational(2)));
    CHECK(r.width_below(Rational(1, 1L << 60)));
    RInterval third = RInterval(1L, 64) / RInterval(3L, 64);
    CHECK(third.contains(Rational(1, 3)));
    CHECK_FALSE(third.contains(Rational(1, 2)));
    CHECK_THROWS_AS(RInterval(-1L, 64).sqrt(), NegativeRadicand);
    CHECK_THROWS_AS(RInterval(1L, 64) / RInterval::hull(Rational(-1), Rational(1), 64), DivisionByZeroInterval);
    CHECK(RInterval(-8L, 128).cbrt().contains(Rational(-2)));
}

TEST_CASE("gamma enclosure against tgamma") {
    for (double x : {0.5, 1.0, 2.5, 7.25, 13.0}) {
        RInterval g = gamma_enclosure(RInterval(Rational::parse(std::to_string(x)), 128));
        double ref = std::tgamma(x);
        CHECK(g.mid_double() == doctest::Approx(ref).epsilon(1e-13));
    }
    CHECK(gamma_enclosure(RInterval(5L, 128)).contains(Rational(24)));
    CHECK(gamma_enclosure(RInterval(Rational(1, 2), 256)).square().contains(Rational(0)) == false);
}

TEST_CASE("radical expressions") {
    RExpr n = RExpr::param();
    // sqrt(n - 1) at n = 10 is 3
    RInterval v = interval_eval(RExpr::sqrt(n - RExpr::constant(Rational(1))), Rational(10), 128);
    CHECK(v.contains(Rational(3)));
    CHECK_THROWS_AS(interval_eval(RExpr::sqrt(RExpr::constant(Rational(-1))), Rational(0), 64), NegativeRadicand);
    // adaptive evaluation tightens until accepted
    auto acc = [](const RInterval& x) { return x.width_below(Rational(1, 1000000)) ; };
    AdaptiveResult a = interval_eval_adaptive(RExpr::cbrt(n), Rational(2), 32, 1024, acc);
    CHECK(a.value.mid_double() == doctest::Approx(std::cbrt(2.0)));
}
