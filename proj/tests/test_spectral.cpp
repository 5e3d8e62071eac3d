#include "doctest.h"

#include "algebra/poly_parse.hpp"
#include "exponents/exponents.hpp"
#include "spectral/spectral.hpp"

#include <cmath>
#include <map>

using namespace jl;

namespace {

BiPoly K() { return BiPoly::outer(); }
BiPoly N() { return BiPoly::inner(); }

}  // namespace

TEST_CASE("J and q") {
    const SpectralTable& S = spectral_table();
    for (int j = 0; j < 4; ++j) CHECK(S.J[j] == S.J_decomp[j]);
    // J0(k) = J0(n-8-k)
    CHECK(S.J[0].compose_outer(N() - BiPoly(8) - K()) == S.J[0]);
    CHECK(S.J[0].compose_outer(BiPoly(0)).is_zero());
    BiPoly mid = S.J[0].compose_outer((N() - BiPoly(8)) * Rational(1, 2));
    CHECK(mid == BiPoly(S.q[0]));
    BiPoly negJ3 = (K() + BiPoly(6)) * (K() + BiPoly(8) - N()) + (K() + BiPoly(4)) * (K() + BiPoly(6) - N()) +
                   K() * (K() + BiPoly(2) - N()) + (K() + BiPoly(2)) * (K() + BiPoly(4) - N());
    CHECK(-S.J[3] == negJ3);
    CHECK(S.q[0].eval(Rational(10)) == Rational(11025));
    UPoly n = UPoly::x(), q = (n - UPoly(8)) * Rational(1, 2);
    CHECK(S.q[3] == ((q + UPoly(2)) * (n - q - UPoly(4)) + q * (n - q - UPoly(2))) * Rational(2));
}

TEST_CASE("W polynomials") {
    const SpectralTable& S = spectral_table();
    for (int j = 1; j <= 3; ++j) CHECK(S.W[j] == printed_W(j));
    CHECK(S.W[3].coeff(2) == parse_upoly("4n-64"));
    CHECK(S.W[1].coeff(0) == parse_upoly("384n^3-6912n^2+39936n-73728"));
    // outer t, inner a
    BiPoly w2 = t_substitute(S.W[2]).swapped();
    CHECK(w2.coeff(0) == UPoly(554));
    CHECK(w2.degree_outer() == 8);
    CHECK(w2.coeff(8) == parse_upoly("3-3/2a^2", 'a'));
    BiPoly w3 = t_substitute(S.W[3]).swapped();
    CHECK(w3.coeff(0) == UPoly(-140));
    CHECK(w3.coeff(4) == parse_upoly("-2a^2+8", 'a'));
    CHECK(w3.coeff(3) == parse_upoly("4a^3-4a", 'a'));  // hand expansion
    for (int j = 1; j <= 3; ++j) CHECK(W_t_form(j) == printed_W_t_form(j));
}

TEST_CASE("quartic reduction") {
    const SpectralTable& S = spectral_table();
    UPoly n = UPoly::x();
    CHECK(S.quartic[4] == UPoly(1));
    CHECK(S.quartic[3] * n.pow(3) == printed_quartic_coefficient(3));
    CHECK(printed_quartic_coefficient(3) == parse_upoly("-n^5-20n^3"));
    CHECK(printed_quartic_coefficient(4) == n.pow(4));
    CHECK(S.quartic[0] == parse_upoly("81+1/16n^7-7/16n^6-2n^5+115/8n^4+16n^3-109n^2"));
    CHECK(S.quartic[2] * n.pow(2) == printed_quartic_coefficient(2));
    // the displayed a^2 coefficient has -2n^3 where the reduction gives -23n^3
    CHECK(S.quartic[1] * n - printed_quartic_coefficient(1) == n.pow(3) * Rational(-21));

    // independent oracle: p J0 - q0 from the raw product at k = (n-10)/2 - a
    for (long nv : {18L, 25L}) {
        for (Rational a : {Rational(1, 3), Rational(7, 4)}) {
            Rational k = Rational(nv - 10, 2) - a, q0(1), J0(1);
            Rational qq(nv - 8, 2);
            for (int i = 0; i < 4; ++i) {
                J0 *= (k + Rational(2 * i)) * (Rational(nv - 2 - 2 * i) - k);
                q0 *= qq + Rational(2 * i);
            }
            Rational direct = (k + Rational(8)) / k * J0 - q0 * q0;
            CHECK(quartic_at(Rational(nv)).eval(a * a) == direct);
        }
    }
}

TEST_CASE("gamma cross-check") {
    RInterval R1 = RInterval(5L, 256) - eval_d(20, 256);
    RInterval r = gamma_crosscheck(20, R1);
    CHECK(r.contains_zero());
    CHECK(r.width_below(Rational(1, 1000000000)));
    RInterval off = gamma_crosscheck(18, RInterval(Rational(5, 2), 256));
    CHECK_FALSE(off.contains_zero());
    CHECK_THROWS_AS(gamma_crosscheck(18, RInterval::hull(Rational(0), Rational(1, 1000), 128)), GammaPole);
}
