#include "cert/params.hpp"

#include "cascade/cascade.hpp"
#include "exponents/exponents.hpp"

#include <algorithm>
#include <map>

namespace jl {

namespace {

const std::map<long, std::string>& x_table() {
    static const std::map<long, std::string> t = {
        {14, "0.8001464380"}, {15, "0.8269799811"}, {16, "0.8483737807"}, {17, "0.8657397553"},
        {18, "0.8800558112"}, {19, "0.8920168923"}, {20, "0.9021282144"},
    };
    return t;
}

UPoly at(const std::string& sym, long n) { return lemma_target(sym).at_inner(Rational(n)); }

Rational tol_for(const std::string& printed) {
    int digits = 0;
    bool lead = true;
    for (char c : printed) {
        if (c < '0' || c > '9') continue;
        if (lead && c == '0') continue;
        lead = false;
        ++digits;
    }
    return digits >= 10 ? Rational(1, 100000000) : Rational(1, 1000000);
}

ConstantCheck compare_constant(const std::string& name, const std::string& printed, const Rational& lo,
                               const Rational& hi, std::string note = {}) {
    ConstantCheck c;
    c.name = name;
    c.printed = printed;
    c.lo = lo;
    c.hi = hi;
    c.tolerance = tol_for(printed);
    Rational v = Rational::parse(printed);
    c.reproduced = lo - c.tolerance <= v && v <= hi + c.tolerance;
    c.note = std::move(note);
    return c;
}

const Rational kRootWidth(1, 1000000000000000000L);

// real root of p closest to the printed value
std::optional<RootBracket> nearest_root(const UPoly& p, const Rational& v) {
    std::optional<RootBracket> best;
    Rational bd;
    for (auto& r : isolate_all_roots(p, kRootWidth)) {
        Rational d = ((r.lo + r.hi) / Rational(2) - v).abs();
        if (!best || d < bd) {
            best = r;
            bd = d;
        }
    }
    return best;
}

ConstantCheck root_constant(const std::string& name, const std::string& printed, const UPoly& p,
                            const std::string& what) {
    auto r = nearest_root(p, Rational::parse(printed));
    if (!r) {
        ConstantCheck c;
        c.name = name;
        c.printed = printed;
        c.tolerance = tol_for(printed);
        c.note = what + " has no real root";
        return c;
    }
    return compare_constant(name, printed, r->lo, r->hi, "nearest real root of " + what);
}

ConstantCheck min_constant(const std::string& name, const std::string& printed, const UPoly& p, const Rational& a,
                           const Rational& b, const std::string& what) {
    MinResult m = minimize_on_interval(p, a, b);
    ConstantCheck c;
    c.name = name;
    c.printed = printed;
    c.lo = m.lo;
    c.hi = m.hi;
    c.reproduced = m.exact && m.value == Rational::parse(printed);
    c.note = "exact minimum of " + what + " on [" + a.pretty() + ", " + b.pretty() + "] at k in [" +
             m.argmin.lo.pretty() + ", " + m.argmin.hi.pretty() + "]";
    return c;
}

// p > 0 at a single rational point, recorded as a degenerate instance
InstanceCertificate point_check(const std::string& lemma, const std::string& target, long n, const UPoly& p,
                                const Rational& k) {
    InstanceCertificate c;
    c.lemma_id = lemma;
    c.target = target;
    c.n = n;
    c.interval = {k, k, "point"};
    c.method = "point";
    c.polynomial = p.primitive(true);
    c.midpoint_sign = p.eval(k).sign();
    c.result = c.midpoint_sign > 0;
    return c;
}

std::string bracket_str(const RootBracket& r) {
    return "[" + r.lo.decimal(12) + ", " + r.hi.decimal(12) + "]";
}

UPoly parse_decimal_poly(const std::map<int, std::string>& coeffs) {
    int deg = coeffs.rbegin()->first;
    std::vector<Rational> v(static_cast<size_t>(deg + 1));
    for (auto& [i, s] : coeffs) v[static_cast<size_t>(i)] = Rational::parse(s);
    return UPoly(std::move(v));
}

// condition (i): threshold c(x) below the first coefficient pointwise on the interval
InstanceCertificate threshold_check(const std::string& lemma, const std::string& sym, long n, const Rational& c,
                                    const RationalInterval& iv) {
    InstanceCertificate ic = certify_instance(lemma, sym + " - " + c.decimal(6), n, at(sym, n) - UPoly(c), iv);
    return ic;
}

}  // namespace

Rational printed_x(long n) { return Rational::parse(printed_x_string(n)); }

std::string printed_x_string(long n) {
    auto it = x_table().find(n);
    if (it == x_table().end()) throw std::invalid_argument("no parameter x for n = " + std::to_string(n));
    return it->second;
}

RootBracket critical_x(const Rational& m) {
    // m (1-x)^2 - 2304 x
    UPoly x = UPoly::x();
    UPoly q = (UPoly(1) - x).pow(2) * m - x * Rational(2304);
    auto r = isolate_roots(q, Rational(0), Rational(1), kRootWidth);
    if (r.size() != 1) throw std::logic_error("critical_x: expected one root in (0,1)");
    return r.front();
}

SplitCheck split_check(const std::string& lemma, const std::string& sname, const std::string& dname, long n,
                       const UPoly& S, const UPoly& D, const Rational& lo, const Rational& hi, bool closed_left,
                       bool closed_right) {
    SplitCheck out;
    Rational w = (hi - lo) / Rational(mpz_class(mpz_class(1) << 60));
    if (S.degree() >= 1) {
        for (auto& r : isolate_roots(S, lo, hi, w))
            if (closed_right || !(r.lo == hi)) out.s_roots.push_back(r);
    }
    if (D.degree() >= 1) out.d_roots = isolate_roots(D, lo, hi, w);

    // pieces in order: segment, bracket, segment, ..., segment
    struct Piece {
        Rational a, b;
        bool need;
    };
    std::vector<Piece> pieces;
    Rational cur = lo;
    auto segment = [&](const Rational& a, const Rational& b) {
        if (!(a < b)) return;
        Rational m = (a + b) / Rational(2);
        pieces.push_back({a, b, S.eval(m).sign() < 0});
    };
    for (auto& r : out.s_roots) {
        segment(cur, r.lo);
        pieces.push_back({r.lo, r.hi, true});
        cur = r.hi;
    }
    segment(cur, hi);
    if (closed_left && S.eval(lo).sign() < 0) pieces.insert(pieces.begin(), {lo, lo, true});

    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < pieces.size();) {
        if (!pieces[i].need) {
            ++i;
            continue;
        }
        Rational a = pieces[i].a, b = pieces[i].b;
        size_t j = i;
        while (j + 1 < pieces.size() && pieces[j + 1].need) b = pieces[++j].b;
        bool a_incl = !(a == lo) || closed_left;
        bool b_incl = !(b == hi) || closed_right;
        if (a == b) {
            InstanceCertificate pc = point_check(lemma, dname, n, D, a);
            ok = ok && pc.result;
            out.pieces.push_back(std::move(pc));
        } else {
            InstanceCertificate ic = certify_instance(lemma, dname, n, D, {a, b, "where " + sname + " < 0"});
            if (a_incl && D.eval(a).sign() <= 0) {
                ic.result = false;
                ic.errata.push_back("left endpoint not positive");
            }
            if (b_incl && D.eval(b).sign() <= 0) {
                ic.result = false;
                ic.errata.push_back("right endpoint not positive");
            }
            ok = ok && ic.result;
            detail += dname + " > 0 required on [" + a.decimal(10) + ", " + b.decimal(10) + "]: " +
                      (ic.result ? "holds" : "fails") + "; ";
            out.pieces.push_back(std::move(ic));
        }
        i = j + 1;
    }
    if (out.pieces.empty()) detail += sname + " >= 0 throughout; ";
    out.pass = ok;
    out.detail = detail;
    return out;
}

LemmaReport param_check_n14_20(long n, const Rational& x, mpfr_prec_t P) {
    if (n < 14 || n > 20 || n == 17)
        throw std::invalid_argument("param_check_n14_20 requires 14 <= n <= 20, n != 17 (n = " + std::to_string(n) +
                                    ")");
    if (!(x.sign() > 0 && x < Rational(1))) throw std::invalid_argument("param_check_n14_20 requires 0 < x < 1");
    LemmaReport rep;
    rep.id = "Aa-n14-20";
    RationalInterval iv = resolve_interval(n <= 17 ? KInterval::Full : KInterval::R1ToEnd, n, P);
    const UPoly A1 = at("Aa1", n), S = at("Aa2", n) + at("Aa3", n) * Rational(4);
    const Rational c = Rational(2304) * x / ((Rational(1) - x) * (Rational(1) - x));

    InstanceCertificate ci = threshold_check(rep.id, "Aa1", n, c, iv);
    ci.precision = P;
    ci.errata.push_back("condition (i): 576 Aa4 x/(1-x)^2 < Aa1 with x = " + x.decimal(10));

    MinResult m = minimize_on_interval(A1, iv.lo, iv.hi);
    RootBracket xs = critical_x(m.lo);
    std::string xnote = "critical x from min Aa1 = " + m.lo.decimal(4) + ": " + bracket_str(xs);
    if (!ci.result) {
        ci.errata.push_back(xnote + "; x exceeds it");
        rep.notes.push_back("n=" + std::to_string(n) + ": x = " + x.decimal(10) + " violates condition (i) near k = " +
                            (ci.offending ? bracket_str(*ci.offending) : std::string("?")) + "; " + xnote);
    }
    rep.instances.push_back(std::move(ci));

    const UPoly D = A1 * (Rational(576) * x) - S * S;
    SplitCheck sc = split_check(rep.id, "Aa2+4Aa3", "144x Aa1 Aa4-(Aa2+4Aa3)^2", n, S, D, iv.lo, iv.hi, false, false);
    for (auto& p : sc.pieces) {
        p.precision = P;
        p.errata.push_back(iv.note);
        rep.instances.push_back(std::move(p));
    }
    rep.notes.push_back("n=" + std::to_string(n) + ": " + sc.detail);

    if (n == 14) {
        rep.constants.push_back(min_constant("min Aa1 (n=14)", "46156", A1, Rational(0), Rational(3), "Aa1|n=14"));
        rep.constants.push_back(root_constant("Aa2+4Aa3 root (n=14)", "0.02572910109", S, "Aa2+4Aa3 at n=14"));
        rep.constants.push_back(root_constant("d root (n=14)", "0.7919464848", D, "144x Aa1 Aa4-(Aa2+4Aa3)^2 at n=14"));
    }
    if (n == 20) {
        rep.constants.push_back(min_constant("min Aa1 (n=20)", "216988", A1, Rational(0), Rational(6), "Aa1|n=20"));
        RInterval d = eval_d(20, P);
        RInterval r1 = RInterval(5, P) - d;
        rep.constants.push_back(compare_constant("R1(20)", "0.9244642513", r1.lo_rational(), r1.hi_rational(),
                                                 "(n-10)/2 - d(n) enclosure"));
        rep.constants.push_back(root_constant("Aa2+4Aa3 root (n=20)", "1.026523007", S, "Aa2+4Aa3 at n=20"));
        rep.constants.push_back(root_constant("d root (n=20)", "1.894875455", D, "144x Aa1 Aa4-(Aa2+4Aa3)^2 at n=20"));
    }
    bool ok = true;
    for (auto& i : rep.instances) ok = ok && i.result;
    rep.pass = ok;
    if (!ok) throw ParamInfeasible("conditions fail at n = " + std::to_string(n) + ", x = " + x.decimal(10), rep);
    return rep;
}

N17Polys n17_polys(const Rational& x1, const Rational& x2, const Rational& y) {
    const long n = 17;
    UPoly d1 = at("Aa1", n), d2 = at("Aa2", n), d3 = at("Aa3", n), d4 = at("Aa4", n);
    Rational one(1);
    Rational c = (one - x1) * y + (one - x2) * (one - y);
    Rational u = x1 * y, v = x2 * (one - y);
    N17Polys p;
    p.f1 = d1 * (c * c) - d3 * (Rational(4) * u) - d4 * (Rational(576) * v);
    p.f2 = p.f1 * p.f1 - d3 * d4 * (Rational(96 * 96) * u * v);
    UPoly s = d2 + d3 * Rational(4);
    p.h1 = s * s - d1 * d3 * (Rational(4) * u) - d1 * d4 * (Rational(144) * v);
    p.h2 = d3 * d4 * d1 * d1 * (Rational(48 * 48) * u * v) - p.h1 * p.h1;
    return p;
}

N17Polys n17_printed_polys() {
    N17Polys p;
    p.f1 = parse_decimal_poly({{6, "-0.16"}, {5, "4.64"}, {4, "-31.68"}, {3, "-93.28"}, {2, "556.64"},
                               {1, "4947.52"}, {0, "2745.6"}});
    p.f2 = parse_decimal_poly({{12, "0.0256"}, {11, "-1.48480312"}, {10, "31.6672860"}, {9, "-264.138939"},
                               {8, "-40.20787"}, {7, "9492.1751"}, {6, "18460.169"}, {5, "-3.9194703e5"},
                               {4, "-7.8719259e5"}, {3, "4.99650206e6"}, {2, "2.75922586e7"}, {1, "2.66134182e7"},
                               {0, "7.3936205e6"}});
    p.h1 = parse_decimal_poly({{8, "748.16"}, {7, "-25955.84"}, {6, "2.5965440e5"}, {5, "1.8144000e5"},
                               {4, "-1.370264514e7"}, {3, "2.783143502e7"}, {2, "1.905355534e8"},
                               {1, "-2.946605150e8"}, {0, "1.316646282e7"}});
    p.h2 = parse_decimal_poly({{16, "-5.597433856e5"}, {15, "3.883824251e7"}, {14, "-1.062469518e9"},
                               {13, "1.322360547e10"}, {12, "-3.79196866e10"}, {11, "-8.42043516e11"},
                               {10, "8.22093182e12"}, {9, "7.5489982e11"}, {8, "-3.114952088e14"},
                               {7, "8.52692786e14"}, {6, "4.523393231e15"}, {5, "-1.881709367e16"},
                               {4, "-1.943781276e16"}, {3, "1.138472739e17"}, {2, "-8.750277873e16"},
                               {1, "1.045307292e16"}, {0, "2.689086e14"}});
    return p;
}

LemmaReport param_check_n17(mpfr_prec_t P) {
    const long n = 17;
    LemmaReport rep;
    rep.id = "Aa-n17";
    const Rational x1(4, 5), x2(4, 5), y(1, 10), cut(1, 25), end(9, 2);
    N17Polys p = n17_polys(x1, x2, y);

    // A-branch on (0, 1/25]
    RationalInterval a_iv{Rational(0), cut, "A-branch (0, 1/25]"};
    for (auto [name, poly] : {std::pair{"f1", &p.f1}, std::pair{"f2", &p.f2}}) {
        InstanceCertificate c = certify_instance(rep.id, name, n, *poly, a_iv);
        if (poly->eval(cut).sign() <= 0) {
            c.result = false;
            c.errata.push_back("not positive at 1/25");
        }
        c.precision = P;
        rep.instances.push_back(std::move(c));
    }
    SplitCheck h = split_check(rep.id, "-h1", "h2", n, -p.h1, p.h2, Rational(0), cut, false, true);
    for (auto& c : h.pieces) rep.instances.push_back(std::move(c));
    rep.notes.push_back("A-branch (h1 <= 0 or h2 > 0): " + h.detail);

    // remark branch: method of the n=14..20 lemma with x = 0.8657397553 on [1/25, 9/2)
    const Rational x = printed_x(17);
    const UPoly A1 = at("Aa1", n), S = at("Aa2", n) + at("Aa3", n) * Rational(4);
    const Rational c = Rational(2304) * x / ((Rational(1) - x) * (Rational(1) - x));
    RationalInterval r_iv{cut, end, "remark branch [1/25, 9/2)"};
    InstanceCertificate ci = threshold_check(rep.id, "Aa1", n, c, r_iv);
    if ((A1 - UPoly(c)).eval(cut).sign() <= 0) ci.result = false;
    rep.instances.push_back(std::move(ci));
    const UPoly D = A1 * (Rational(576) * x) - S * S;
    SplitCheck sc = split_check(rep.id, "Aa2+4Aa3", "144x Aa1 Aa4-(Aa2+4Aa3)^2", n, S, D, cut, end, true, false);
    for (auto& c2 : sc.pieces) rep.instances.push_back(std::move(c2));
    rep.notes.push_back("remark branch: " + sc.detail);
    if (auto r = nearest_root(D, Rational::parse("0.02175341614")); r && Rational::parse("0.02175341614") < r->lo)
        rep.notes.push_back("lower end of the stated remark range 0.02175341614 lies below the root " +
                            bracket_str(*r) + "; the A-branch covers up to 1/25 so no gap remains");

    rep.constants.push_back(min_constant("min Aa1 (n=17)", "110656", A1, Rational(0), end, "Aa1|n=17"));
    rep.constants.push_back(root_constant("Aa2+4Aa3 root (n=17)", "0.5256119817", S, "Aa2+4Aa3 at n=17"));
    rep.constants.push_back(root_constant("remark d root, left", "0.02175341614", D, "d at n=17, x=0.8657397553"));
    rep.constants.push_back(root_constant("remark d root, right", "1.358050900", D, "d at n=17, x=0.8657397553"));
    N17Polys pr = n17_printed_polys();
    auto with_printed = [&](ConstantCheck cc, const UPoly& shown, const std::string& what) {
        auto r = nearest_root(shown, Rational::parse(cc.printed));
        cc.note += r ? "; displayed-coefficient " + what + " root " + bracket_str(*r)
                     : "; displayed-coefficient " + what + " has no real root";
        return cc;
    };
    rep.constants.push_back(with_printed(root_constant("f1 bound", "13.82353260", p.f1, "f1"), pr.f1, "f1"));
    rep.constants.push_back(with_printed(root_constant("f2 bound", "9.306459393", p.f2, "f2"), pr.f2, "f2"));
    rep.constants.push_back(with_printed(root_constant("h1 bound", "0.04606463340", p.h1, "h1"), pr.h1, "h1"));
    rep.constants.push_back(with_printed(root_constant("h2 bound", "0.1757218049", p.h2, "h2"), pr.h2, "h2"));

    bool ok = true;
    for (auto& i : rep.instances) {
        i.precision = P;
        ok = ok && i.result;
    }
    rep.pass = ok;
    return rep;
}

LemmaReport bb_check_n17(mpfr_prec_t P) {
    const long n = 17;
    LemmaReport rep;
    rep.id = "Bb-n17";
    const Rational eps(9508, 10000);
    RationalInterval iv = resolve_interval(KInterval::R1ToEnd, n, P);
    const UPoly B1 = at("Bb1", n), B2 = at("Bb2", n), B3 = at("Bb3", n);
    const Rational c = Rational(32) * eps / ((Rational(1) - eps) * (Rational(1) - eps));
    InstanceCertificate ci = threshold_check(rep.id, "Bb1", n, c, iv);
    ci.errata.push_back("32 eps/(1-eps)^2 < Bb1 with eps = 0.9508");
    rep.instances.push_back(std::move(ci));

    const UPoly S = B2 + B3 * Rational(4);
    const UPoly D = B1 * (Rational(32) * eps) - S * S;
    SplitCheck sc = split_check(rep.id, "Bb2+4Bb3", "32eps Bb1-(Bb2+4Bb3)^2", n, S, D, iv.lo, iv.hi, false, false);
    for (auto& p : sc.pieces) rep.instances.push_back(std::move(p));
    rep.notes.push_back("mean-value reading Bb2+4Bb3: " + sc.detail);

    // second reading, reported only
    const UPoly Sb = B2 + B3;
    const UPoly Db = B1 * (Rational(32) * eps) - Sb * Sb;
    SplitCheck alt = split_check(rep.id, "Bb2+4Bb3", "32eps Bb1-(Bb2+Bb3)^2", n, S, Db, iv.lo, iv.hi, false, false);
    auto rb = isolate_roots(Db, iv.lo, iv.hi, kRootWidth);
    auto ra = isolate_roots(D, iv.lo, iv.hi, kRootWidth);
    rep.notes.push_back(std::string("reading (Bb2+Bb3)^2: ") + (alt.pass ? "also covers" : "does not cover") +
                        " the region where Bb2+4Bb3 < 0" +
                        (rb.empty() ? std::string() : ", first root " + bracket_str(rb.front())) +
                        "; reading (Bb2+4Bb3)^2" +
                        (ra.empty() ? std::string() : " first root " + bracket_str(ra.front())));
    rep.constants.push_back(min_constant("min Bb1 (n=17)", "12606", B1, Rational(0), Rational(9, 2), "Bb1|n=17"));

    bool ok = true;
    for (auto& i : rep.instances) {
        i.precision = P;
        ok = ok && i.result;
    }
    rep.pass = ok;
    return rep;
}

std::vector<ConstantCheck> printed_constants(mpfr_prec_t P) {
    std::vector<ConstantCheck> out;
    auto take = [&](const LemmaReport& r) {
        for (auto& c : r.constants) out.push_back(c);
    };
    for (long n : {14L, 20L}) {
        try {
            take(param_check_n14_20(n, printed_x(n), P));
        } catch (const ParamInfeasible& e) {
            take(e.report);
        }
    }
    take(param_check_n17(P));
    take(bb_check_n17(P));
    return out;
}

}  // namespace jl
