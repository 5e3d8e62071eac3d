#include "spectral/spectral.hpp"

#include "algebra/poly_parse.hpp"
#include "cascade/radial.hpp"

#include <map>

namespace jl {
namespace {

BiPoly K() { return BiPoly::outer(); }
BiPoly N() { return BiPoly::inner(); }
BiPoly lin(long shift, bool minus_n) { return K() + BiPoly(shift) - (minus_n ? N() : BiPoly()); }

// (k + 2i)(k + 2i + 2 - n)
BiPoly pair(int i) { return lin(2 * i, false) * lin(2 * i + 2, true); }

UPoly qvar() { return (UPoly::x() - UPoly(8)) * Rational(1, 2); }
UPoly nvar() { return UPoly::x(); }

BiPoly without_k_factor(const BiPoly& p) {
    if (!p.coeff(0).is_zero()) throw std::logic_error("polynomial not divisible by k");
    std::vector<UPoly> c(p.coeffs().begin() + 1, p.coeffs().end());
    return BiPoly(std::move(c));
}

}  // namespace

BiPoly t_substitute(const BiPoly& p) {
    BiPoly ksub = BiPoly((UPoly::x().pow(2) - UPoly(10)) * Rational(1, 2)) - BiPoly::outer() * BiPoly(UPoly::x());
    return substitute_bivariate(p, ksub, UPoly::x().pow(2));
}

SpectralTable build_spectral_table() {
    SpectralTable S;
    BiPoly P0 = pair(0), P1 = pair(1), P2 = pair(2), P3 = pair(3);
    S.J[0] = P0 * P1 * P2 * P3;
    // printed as -J_1, -J_3
    S.J[1] = -(P0 * P2 * P3 + P1 * P2 * P3 + P0 * P1 * P3 + P0 * P1 * P2);
    S.J[2] = P2 * P3 + P0 * P3 + P1 * P3 + P0 * P2 + P1 * P2 + P0 * P1;
    S.J[3] = -(P3 + P2 + P0 + P1);

    SphereDecomposition sd = build_sphere_decomposition(4);
    for (int s = 0; s < 4; ++s) {
        BiPoly v = sd.F[static_cast<size_t>(s)].apply_to_inverse_power();
        S.J_decomp[static_cast<size_t>(s)] = (s % 2 == 1) ? -v : v;
    }

    const UPoly q = qvar(), n = nvar();
    const UPoly A = q * (q + UPoly(2) - n);  // q(q+2-n)
    const UPoly B = (q + UPoly(2)) * (q + UPoly(4) - n);
    const UPoly Cq = (q + UPoly(2)) * (n - q - UPoly(4)) + q * (n - q - UPoly(2));
    S.q[0] = (A * B).pow(2);
    S.q[1] = Cq * A * B * Rational(2);
    S.q[2] = (B + A).pow(2) + A * B * Rational(2);
    S.q[3] = Cq * Rational(2);

    for (int j = 0; j < 4; ++j)
        S.W[static_cast<size_t>(j)] =
            (K() + BiPoly(8)) * S.J[static_cast<size_t>(j)] - K() * BiPoly(S.q[static_cast<size_t>(j)]);

    // p J_0 - q_0 = (k+8) J_0/k - q_0
    BiPoly red = (K() + BiPoly(8)) * without_k_factor(S.J[0]) - BiPoly(S.q[0]);
    // k := (n-10)/2 - a; outer variable becomes a
    BiPoly shift = BiPoly((nvar() - UPoly(10)) * Rational(1, 2)) - K();
    BiPoly in_a = red.compose_outer(shift);
    for (int i = 0; i <= in_a.degree_outer(); ++i) {
        if (i % 2 == 1 && !in_a.coeff(static_cast<unsigned>(i)).is_zero())
            throw OddPowerResidue("a^" + std::to_string(i) + " coefficient " + in_a.coeff(static_cast<unsigned>(i)).str());
    }
    if (in_a.degree_outer() != 8) throw std::logic_error("quartic reduction: unexpected degree");
    for (int j = 0; j <= 4; ++j) S.quartic[static_cast<size_t>(j)] = in_a.coeff(static_cast<unsigned>(2 * j));
    return S;
}

const SpectralTable& spectral_table() {
    static const SpectralTable s = build_spectral_table();
    return s;
}

BiPoly printed_W(int j) {
    static const std::map<int, std::string> forms = {
        {1, "-4k^7+(-128+12n)k^6+(-12n^2+324n-1696)k^5+(4n^3-264n^2+3488n-12032)k^4"
            "+(68n^3-2168n^2+19056n-49216)k^3+(376n^3-8176n^2+55104n-115712)k^2"
            "+(-144384-1/16n^6+3/4n^5+732n^3-13520n^2+78336n)k+384n^3-6912n^2+39936n-73728"},
        {2, "6k^5+(144-12n)k^4+(6n^2-228n+1352)k^3+(84n^2-1544n+6272)k^2"
            "+(14464-3/8n^4+3n^3+338n^2-4512n)k+352n^2-4480n+13824"},
        {3, "-4k^3+(-64+4n)k^2+(-n^2+48n-320)k-640+96n"},
    };
    return parse_bipoly(forms.at(j));
}

BiPoly printed_W_t_form(int j) {
    static const std::map<int, std::string> forms = {
        {1, "-108+(1/2-3/8a^2)t^12+(3/4a^3-3/4a)t^11+(-51/8+3/2a^4+9/4a^2)t^10+(-3a^5+9/4a)t^9"
            "+(3/4-2a^6-9a^4+11a^2)t^8+(4a^7+2a^3+28a)t^7+(351/2+12a^6-2a^4-10a^2)t^6"
            "+(-44a^5-32a^3-47a)t^5+(-132a^4-150a^2-157)t^4+(76a^3-224a)t^3+(228a^2-1126)t^2-36at"},
        {2, "554+(3-3/2a^2)t^8+(3a^3-3a)t^7+(-51/2+3a^4+3a^2)t^6+(-6a^5-3a)t^5"
            "+(-6a^4+34a^2-51)t^4+(28a^3+80a)t^3+(92a^2+427)t^2+106at"},
        {3, "-140+(-2a^2+8)t^4+(4a^3-4a)t^3+(-4a^2-34)t^2-20at"},
    };
    return parse_bipoly(forms.at(j), 'a', 't');
}

BiPoly W_t_form(int j) {
    const BiPoly& w = spectral_table().W.at(static_cast<size_t>(j));
    // outer a, inner t
    return t_substitute(w);
}

UPoly printed_quartic_coefficient(int j) {
    static const std::map<int, std::string> forms = {
        {4, "n^4"},
        {3, "-n^5-20n^3"},
        {2, "3/8n^6+5n^4+118n^2"},
        {1, "-1/16n^7+5/4n^5-2n^3-180n"},
        {0, "81+1/16n^7-7/16n^6-2n^5+115/8n^4+16n^3-109n^2"},
    };
    return parse_upoly(forms.at(j));
}

std::vector<Comparison> compare_spectral(const SpectralTable& S) {
    std::vector<Comparison> out;
    auto cmp = [&](std::string sym, const BiPoly& c, const BiPoly& p, bool hard, std::string note = {}) {
        BiPoly d = c - p;
        out.push_back({std::move(sym), d.is_zero(), d, hard, std::move(note)});
    };
    for (int j = 0; j < 4; ++j) cmp("J" + std::to_string(j) + "-dual", S.J[j], S.J_decomp[j], true);
    BiPoly mirror = BiPoly(UPoly::x() - UPoly(8)) - BiPoly::outer();
    cmp("J0-symmetry", S.J[0], S.J[0].compose_outer(mirror), true);
    // q_0 is J_0 at the midpoint
    cmp("q0-midpoint", S.J[0].compose_outer(BiPoly(qvar())), BiPoly(S.q[0]), false);
    for (int j = 1; j <= 3; ++j) {
        cmp("W" + std::to_string(j), S.W[j], printed_W(j), true);
        cmp("W" + std::to_string(j) + "-t-form", W_t_form(j), printed_W_t_form(j), false,
            "substitution k=(n-10)/2-a*t, n=t^2");
    }
    // the display is in the rescaled variable a/sqrt(n): coefficient of a^(2j) carries n^j
    for (int j = 0; j <= 4; ++j) {
        UPoly scaled = S.quartic[j] * UPoly::x().pow(static_cast<unsigned>(j));
        cmp("quartic-t" + std::to_string(j), BiPoly(scaled), BiPoly(printed_quartic_coefficient(j)), true);
    }
    return out;
}

UPoly quartic_at(const Rational& n) {
    const auto& S = spectral_table();
    std::vector<Rational> c;
    for (auto& e : S.quartic) c.push_back(e.eval(n));
    return UPoly(std::move(c));
}

RInterval quartic_eval(const Rational& n, const RInterval& t) {
    UPoly p = quartic_at(n);
    mpfr_prec_t P = t.precision();
    RInterval acc(0L, P);
    for (int i = p.degree(); i >= 0; --i) acc = acc * t + RInterval(p.coeff(static_cast<unsigned>(i)), P);
    return acc;
}

RInterval gamma_crosscheck(long n, const RInterval& k) {
    mpfr_prec_t P = k.precision();
    if (!k.positive()) throw GammaPole("k enclosure touches 0");
    RInterval half(Rational(1, 2), P);
    RInterval nn(n, P);
    RInterval kh = k * half;
    RInterval p = RInterval(1L, P) + RInterval(8L, P) / k;
    RInterval lhs = p * gamma_enclosure(nn * half - kh) * gamma_enclosure(RInterval(4L, P) + kh) /
                    (gamma_enclosure(kh) * gamma_enclosure(RInterval(Rational(n - 8, 2), P) - kh));
    RInterval g1 = gamma_enclosure(RInterval(Rational(n + 8, 4), P));
    RInterval g2 = gamma_enclosure(RInterval(Rational(n - 8, 4), P));
    RInterval rhs = (g1 / g2).square();
    return lhs / rhs - RInterval(1L, P);
}

}  // namespace jl
