#include "doctest.h"

#include "algebra/bipoly.hpp"
#include "algebra/poly_parse.hpp"
#include "algebra/sturm.hpp"
#include "cascade/cascade.hpp"
#include "cert/lemmas.hpp"

#include <cmath>
#include <functional>
#include <random>

using namespace jl;

namespace {

// plain double bisection, independent of the Sturm code
double bisect(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a);
    for (int i = 0; i < 200; ++i) {
        double m = 0.5 * (a + b), fm = f(m);
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational::parse("0.8001464380") == Rational(8001464380L, 10000000000L));
    CHECK(Rational::parse("-3.9194703e5") == Rational(-391947030, 1000));
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("univariate operations") {
    UPoly k = UPoly::x();
    CHECK((k.pow(2)).derive() == k * Rational(2));
    CHECK((k + UPoly(1)) * (k - UPoly(1)) == k.pow(2) - UPoly(1));
    UPoly p = parse_upoly("3n^2-2n+5");
    CHECK(p.eval(Rational(2)) == Rational(13));
    CHECK(p.compose(k + UPoly(1)) == parse_upoly("3n^2+4n+6"));
    UPoly q, r;
    UPoly::divmod(k.pow(3) - UPoly(1), k - UPoly(1), q, r);
    CHECK(r.is_zero());
    CHECK(q == k.pow(2) + k + UPoly(1));
    CHECK(((k - UPoly(1)).pow(2) * (k + UPoly(2))).squarefree() == (k - UPoly(1)) * (k + UPoly(2)));
}

TEST_CASE("bivariate operations and substitution") {
    BiPoly k = BiPoly::outer(), n = BiPoly::inner();
    CHECK((k * k).derive_outer() == Rational(2) * k);
    CHECK((k + BiPoly(1)) * (k - BiPoly(1)) == k * k - BiPoly(1));
    CHECK(parse_bipoly("-6k^2+(6n-72)k+30n-178") == Rational(-6) * k * k + (Rational(6) * n - BiPoly(72)) * k +
                                                        Rational(30) * n - BiPoly(178));
    CHECK(parse_bipoly("1/16n^6") == Rational(1, 16) * BiPoly(UPoly::x().pow(6)));
    CHECK(lemma_target("Aa1").eval(Rational(0), Rational(14)) == Rational(46156));

    // k := (t^2-10)/2 - a t, n := t^2, with outer a and inner t
    BiPoly a = BiPoly::outer(), t = BiPoly::inner();
    BiPoly ksub = (t * t - BiPoly(10)) * Rational(1, 2) - a * t;
    UPoly nsub = UPoly::x().pow(2);
    CHECK(substitute_bivariate(k, ksub, nsub) == ksub);
    // consistency with pointwise evaluation
    BiPoly Aa2 = lemma_target("Aa2");
    BiPoly S = substitute_bivariate(Aa2, ksub, nsub);
    for (auto [av, tv] : {std::pair{Rational(1, 3), Rational(5)}, std::pair{Rational(-2, 7), Rational(9, 2)}}) {
        Rational nv = tv * tv, kv = (nv - Rational(10)) / Rational(2) - av * tv;
        CHECK(S.eval(av, tv) == Aa2.eval(kv, nv));
    }
}

TEST_CASE("Aa2 under the t-substitution has constant -524 and leading 3/4 t^8") {
    BiPoly a = BiPoly::outer(), t = BiPoly::inner();
    BiPoly ksub = (t * t - BiPoly(10)) * Rational(1, 2) - a * t;
    BiPoly S = substitute_bivariate(lemma_target("Aa2"), ksub, UPoly::x().pow(2));
    CHECK(S.coeff(0).coeff(0) == Rational(-524));
    CHECK(S.coeff(0).degree() == 8);
    CHECK(S.coeff(0).coeff(8) == Rational(3, 4));
}

TEST_CASE("sturm counting") {
    UPoly k = UPoly::x();
    CHECK(sturm_count((k - UPoly(1)) * (k - UPoly(2)), Rational(0), Rational(3)) == 2);
    CHECK(sturm_count(k.pow(2) + UPoly(1), Rational(-10), Rational(10)) == 0);
    CHECK(count_open((k - UPoly(1)) * (k - UPoly(2)), Rational(0), Rational(2)) == 1);
    CHECK(sturm_count((k - UPoly(1)).pow(3), Rational(0), Rational(2)) == 1);
}

TEST_CASE("Bb2 at n=30 against a bisection oracle") {
    UPoly p = lemma_target("Bb2").at_inner(Rational(30));
    auto f = [&](double x) {
        double acc = 0;
        for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].raw().get_d();
        return acc;
    };
    // concave quadratic: two roots around its vertex
    double vert = -p.coeff(1).raw().get_d() / (2 * p.coeff(2).raw().get_d());
    double r1 = bisect(f, -1000, vert), r2 = bisect(f, vert, 1000);
    double left = 10 - std::sqrt(30.0), right = 11;
    CHECK(r1 < left);
    CHECK(r2 > right);
    CHECK(sturm_count(p, Rational(0), Rational(11)) == ((r1 > 0 ? 1 : 0) + (r2 <= 11 ? 1 : 0)));
    CHECK(count_open(p, sqrt_lower(30) * Rational(-1) + Rational(10), Rational(11)) == 0);
}

TEST_CASE("sign certificates") {
    UPoly c1 = parse_bipoly("-6k^2+(6n-72)k+30n-178").at_inner(Rational(9));
    SignCertificate cert = certify_sign_open(c1, Rational(0), Rational(1, 2), Sign::Positive);
    CHECK(cert.root_count == 0);
    CHECK(reverify(cert));
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        Rational x(static_cast<long>(rng() % 1000 + 1), 2001);
        CHECK(c1.eval(x).sign() > 0);
    }
    CHECK_THROWS_AS(certify_sign_open(lemma_target("Bb2").at_inner(Rational(17)), Rational(0), Rational(9, 2),
                                      Sign::Positive),
                    SignViolation);
    UPoly neg = -(UPoly::x().pow(2) + UPoly(1));
    CHECK_THROWS_AS(certify_sign_open(neg, Rational(0), Rational(1), Sign::Positive), SignViolation);
    CHECK(certify_sign_open(neg, Rational(0), Rational(1), Sign::Negative).midpoint_sign == -1);
    // a root at an endpoint of the open interval is allowed
    UPoly k = UPoly::x();
    auto e = certify_sign_open(k * (UPoly(1) - k), Rational(0), Rational(1), Sign::Positive);
    CHECK(e.root_at_a);
    CHECK(e.root_at_b);
}

TEST_CASE("root isolation") {
    UPoly k = UPoly::x();
    UPoly p = (k.pow(2) - UPoly(2)) * (k - UPoly(Rational(1, 3)));
    auto roots = isolate_all_roots(p, Rational(1, 1000000));
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].lo < Rational(-1414213, 1000000));
    CHECK(roots[0].hi > Rational(-1414214, 1000000));
    CHECK(roots[1].lo <= Rational(1, 3));
    CHECK(roots[1].hi >= Rational(1, 3));
    CHECK(roots[2].lo < Rational(1414214, 1000000));
    CHECK(roots[2].hi > Rational(1414213, 1000000));
    // bracket whose left end is itself a root of p
    auto r = isolate_roots(UPoly::x().pow(3) - UPoly::x() * Rational(2), Rational(0), Rational(3), Rational(1, 1000));
    REQUIRE(r.size() == 1);
    CHECK(r[0].lo > Rational(1));
}
