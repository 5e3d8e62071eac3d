#include "exponents/exponents.hpp"

#include "algebra/bipoly.hpp"
#include "algebra/poly_parse.hpp"
#include "algebra/sturm.hpp"
#include "spectral/spectral.hpp"

#include <algorithm>

namespace jl {
namespace {

RExpr P(const std::string& s) { return RExpr::poly(parse_upoly(s)); }
RExpr C(long v) { return RExpr::constant(Rational(v)); }
RExpr C(long p, long q) { return RExpr::constant(Rational(p, q)); }

RExpr build_d(const DCascade& c) {
    RExpr d2 = RExpr::cbrt(RExpr::poly(c.d0) + C(12) * RExpr::sqrt(RExpr::poly(c.d1)));
    RExpr d3 = RExpr::poly(c.d3), d4 = RExpr::poly(c.d4), d5 = RExpr::poly(c.d5);
    RExpr d6 = d5 / C(2) + d2 / C(6) - d4 / d2;
    RExpr d7 = d5 - d2 / C(6) + d4 / d2;
    RExpr s6 = RExpr::sqrt(d6);
    return RExpr::sqrt(P("1/4n^2+5") + s6 / C(2) - RExpr::sqrt(d7 + d3 / s6) / C(2));
}

RInterval eval_at(const RExpr& e, long n, mpfr_prec_t P0) {
    return interval_eval_adaptive(e, Rational(n), P0, std::max(P0, kMaxPrecision)).value;
}

void gate(int order, long n) {
    if (order < 1 || order > 4) throw DomainError("order must be 1..4");
    if (n < 2L * order + 1) throw DomainError("n must be at least 2m+1");
}

}  // namespace

DCascade printed_d_cascade() {
    DCascade c;
    c.d0 = parse_upoly("2097152-45/4n^10+180n^9-396n^8-5184n^7+36928n^6+27648n^5-132096n^4+147456n^3-1572864n^2");
    c.d1 = parse_upoly(
        "3/65536n^24-9/4096n^23+81/2048n^22-33/128n^21-123/128n^20+303/16n^19+21/8n^18-1056n^17+3888n^16"
        "+25396n^15-279456n^14+947712n^13+1979904n^12-48427008n^11+135979008n^10+677117952n^9"
        "-2620588032n^8-3265265664n^7+14294188032n^6+2415919104n^5-16106127360n^4");
    c.d3 = parse_upoly("128n^2");
    c.d4 = parse_upoly("-8192/3+1/32n^8-1/2n^7+n^6+16n^5-584/3n^4-128n^3+4096/3n^2");
    c.d5 = parse_upoly("40/3n^2+128/3");
    return c;
}

DCascade derived_d_cascade() {
    // t^4 + b t^3 + c t^2 + d t + e
    const auto& q = spectral_table().quartic;
    const UPoly &b = q[3], &cc = q[2], &d = q[1], &e = q[0];
    UPoly D0 = cc * cc - b * d * Rational(3) + e * Rational(12);
    UPoly D1 = cc.pow(3) * Rational(2) - b * cc * d * Rational(9) + b * b * e * Rational(27) + d * d * Rational(27) -
               cc * e * Rational(72);
    UPoly depressed_p = (cc * Rational(8) - b * b * Rational(3)) * Rational(1, 8);
    UPoly depressed_q = (b.pow(3) - b * cc * Rational(4) + d * Rational(8)) * Rational(1, 8);
    DCascade out;
    out.d0 = D1 * Rational(4);
    out.d1 = (D1 * D1 - D0.pow(3) * Rational(4)) * Rational(1, 9);
    out.d3 = depressed_q * Rational(-2);
    out.d4 = D0 * Rational(-2, 3);
    out.d5 = depressed_p * Rational(-4, 3);
    return out;
}

RExpr d_expression(bool printed_d1) {
    static const RExpr derived = build_d(derived_d_cascade());
    static const RExpr printed = [] {
        DCascade c = derived_d_cascade();
        c.d1 = printed_d_cascade().d1;
        return build_d(c);
    }();
    return printed_d1 ? printed : derived;
}

RExpr D_tri_expression() {
    static const RExpr D = [] {
        RExpr D1 = P("-94976+20736n+103104n^2-10368n^3+1296n^5-3024n^4-108n^6");
        RExpr D2 = P("6131712-16644096n^2+6915840n^4-690432n^6-3039232n+4818944n^3-1936384n^5+251136n^7"
                     "-30864n^8-4320n^9+1800n^10-216n^11+9n^12");
        RExpr D0 = -RExpr::cbrt(D1 + C(36) * RExpr::sqrt(D2));
        return RExpr::sqrt(P("9n^2+96") - P("1536+1152n^2") / D0 - C(3, 2) * D0) / C(6);
    }();
    return D;
}

RExpr pc_expression(int order) {
    RExpr n = RExpr::param();
    switch (order) {
    case 1:
        return (P("(n-2)^2-4n") + C(8) * RExpr::sqrt(P("n-1"))) / P("(n-2)(n-10)");
    case 2: {
        RExpr s = RExpr::sqrt(P("n^2+4") - n * RExpr::sqrt(P("n^2-8n+32")));
        return (P("n+2") - s) / (P("n-6") - s);
    }
    case 3: {
        RExpr D = D_tri_expression();
        return (P("n+4") - C(2) * D) / (P("n-8") - C(2) * D);
    }
    case 4: {
        RExpr d = d_expression();
        return (P("n+6") - C(2) * d) / (P("n-10") - C(2) * d);
    }
    }
    throw DomainError("order must be 1..4");
}

RInterval eval_d(long n, mpfr_prec_t P) {
    if (n < 18) throw DomainError("d(n) is defined for n >= 18");
    return eval_at(d_expression(), n, P);
}

RInterval eval_d_printed(long n, mpfr_prec_t P) {
    if (n < 18) throw DomainError("d(n) is defined for n >= 18");
    return eval_at(d_expression(true), n, P);
}

RInterval eval_D_tri(long n, mpfr_prec_t P) {
    if (n < 15) throw DomainError("D(n) is defined for n >= 15");
    return eval_at(D_tri_expression(), n, P);
}

int threshold(int order) {
    static const int t[] = {0, 10, 12, 14, 17};
    if (order < 1 || order > 4) throw DomainError("order must be 1..4");
    return t[order];
}

ExponentRecord pc(int order, long n, mpfr_prec_t P) {
    gate(order, n);
    ExponentRecord r;
    r.order = order;
    r.n = n;
    r.precision = P;
    if (n <= threshold(order)) {
        r.infinite = true;
        return r;
    }
    auto res = interval_eval_adaptive(pc_expression(order), Rational(n), P, std::max(P, kMaxPrecision));
    r.p_c = res.value;
    r.precision = res.precision;
    if (order == 3) {
        r.radical = eval_D_tri(n, P);
        r.notes.push_back("D_0 used for the d_0 occurrence inside D(n)");
    }
    if (order == 4) {
        RInterval d = eval_d(n, P);
        RInterval mid(Rational(n - 10, 2), d.precision());
        r.radical = d;
        r.R1 = mid - d;
        r.R2 = mid + d;
        r.notes.push_back("d_1 n^15 coefficient 25392 (derived), displayed value 25396");
    }
    return r;
}

bool pc_identity_holds() {
    // outer d, inner n
    BiPoly d = BiPoly::outer(), n = BiPoly::inner();
    BiPoly den = n - BiPoly(10) - BiPoly(2) * d;
    BiPoly lhs_num = n + BiPoly(6) - BiPoly(2) * d;
    // 1 + 8/R1 with R1 = den/2, over the common denominator den
    BiPoly rhs_num = den + BiPoly(16);
    return (lhs_num - rhs_num).is_zero();
}

RInterval stability_residual(const ExponentRecord& r) {
    if (r.infinite || !r.p_c) throw DomainError("no finite exponent");
    const RInterval& p = *r.p_c;
    mpfr_prec_t Pr = p.precision();
    RInterval one(1L, Pr);
    RInterval k = RInterval(2L * r.order, Pr) / (p - one);
    RInterval q(Rational(r.n - 2 * r.order, 2), Pr);
    RInterval J = one, H = one;
    for (int i = 0; i < r.order; ++i) {
        RInterval s(2L * i, Pr), n2(r.n - 2, Pr);
        J = J * (k + s) * (n2 - k - s);
        H = H * (q + s);
    }
    RInterval H2 = H.square();
    return (p * J - H2) / H2;
}

RootValidation validate_root(long n) {
    if (n < 18) throw DomainError("root validation needs n >= 18");
    RootValidation v;
    const Rational width = Rational(1, 100000000000000000L) / Rational(1000);  // 1e-20
    for (mpfr_prec_t P = kDefaultPrecision; P <= kMaxPrecision; P *= 2) {
        RInterval d = eval_d(n, P);
        RInterval t = d.square();
        v.quartic_value = quartic_eval(Rational(n), t);
        v.R1 = RInterval(Rational(n - 10, 2), d.precision()) - d;
        v.precision = P;
        if (!v.quartic_value.contains_zero()) return v;
        if (v.quartic_value.width_below(width)) {
            v.ok = v.R1.positive() && v.R1.certainly_less(RInterval(Rational(n - 8, 2), P));
            return v;
        }
    }
    throw PrecisionExhausted("quartic enclosure at n=" + std::to_string(n));
}

SqrtCertificate certify_d_lt_sqrt(long n) {
    SqrtCertificate c;
    c.n = n;
    for (mpfr_prec_t P = kDefaultPrecision; P <= kMaxPrecision; P *= 2) {
        c.d = eval_d(n, P);
        c.sqrt_n = RInterval(n, c.d.precision()).sqrt();
        c.ratio = c.d / c.sqrt_n;
        c.precision = c.d.precision();
        if (c.d.certainly_less(c.sqrt_n)) {
            c.certified = true;
            return c;
        }
        if (c.sqrt_n.certainly_less(c.d)) return c;
    }
    throw PrecisionExhausted("d(n) < sqrt(n) undecided at n=" + std::to_string(n));
}

std::vector<SqrtCertificate> certify_d_lt_sqrt(long n_lo, long n_hi) {
    if (n_lo < 18 || n_lo > n_hi) throw DomainError("need 18 <= n_lo <= n_hi");
    std::vector<SqrtCertificate> out;
    out.reserve(static_cast<size_t>(n_hi - n_lo + 1));
    for (long n = n_lo; n <= n_hi; ++n) out.push_back(certify_d_lt_sqrt(n));
    return out;
}

bool d1_positive_from_18() {
    UPoly d1 = derived_d_cascade().d1;
    Rational B = cauchy_bound(d1);
    if (B <= Rational(18)) B = Rational(19);
    return d1.eval(Rational(18)).sign() > 0 && sturm_count(d1, Rational(18), B) == 0 && d1.lead().sign() > 0;
}

}  // namespace jl
