#include "cert/lemmas.hpp"

#include "algebra/poly_parse.hpp"
#include "cascade/cascade.hpp"
#include "cert/params.hpp"
#include "exponents/exponents.hpp"
#include "spectral/spectral.hpp"

#include <algorithm>
#include <map>

namespace jl {

std::string to_string(KInterval k) {
    switch (k) {
    case KInterval::Full: return "(0,(n-8)/2)";
    case KInterval::R1ToEnd: return "(max(0,R1),(n-8)/2)";
    case KInterval::SqrtToEnd: return "(max(0,(n-10)/2-sqrt(n)),(n-8)/2)";
    case KInterval::R1R2: return "(R1,R2)";
    case KInterval::SqrtWindow: return "((n-10)/2-sqrt(n),(n-10)/2+sqrt(n))";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
    case Method::SturmPerN: return "sturm_per_n";
    case Method::TSubstitution: return "t_substitution";
    case Method::Parameterized: return "parameterized";
    }
    return "?";
}

Rational outer_lo(const RInterval& x) {
    Rational s{mpz_class(mpz_class(1) << 64)};
    return Rational((x.lo_rational() * s).floor()) / s;
}

Rational outer_hi(const RInterval& x) {
    Rational s{mpz_class(mpz_class(1) << 64)};
    return Rational((x.hi_rational() * s).ceil()) / s;
}

Rational sqrt_lower(long n) {
    mpz_class v = mpz_class(n) << 64, r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return Rational(r, mpz_class(1) << 32);
}

RationalInterval resolve_interval(KInterval kind, long n, mpfr_prec_t P) {
    const Rational end(n - 8, 2), mid(n - 10, 2);
    auto R1_lo = [&] { return mid - outer_hi(eval_d(n, P)); };
    auto sqrt_hi = [&] { return outer_hi(RInterval(n, P).sqrt()); };
    switch (kind) {
    case KInterval::Full:
        return {Rational(0), end, "exact"};
    case KInterval::R1ToEnd: {
        if (n < 18) return {Rational(0), end, "n < 18: no real R1, using 0"};
        Rational lo = R1_lo();
        if (lo.sign() <= 0) return {Rational(0), end, "R1 lower bound <= 0, using 0"};
        return {lo, end, "left endpoint: rational lower bound of R1"};
    }
    case KInterval::SqrtToEnd: {
        Rational lo = mid - sqrt_hi();
        if (lo.sign() <= 0) return {Rational(0), end, "(n-10)/2-sqrt(n) <= 0, using 0"};
        return {lo, end, "left endpoint: rational lower bound of (n-10)/2-sqrt(n)"};
    }
    case KInterval::R1R2: {
        RInterval d = eval_d(n, P);
        return {mid - outer_hi(d), mid + outer_hi(d), "rational outer bounds of R1, R2"};
    }
    case KInterval::SqrtWindow: {
        Rational s = sqrt_hi();
        return {mid - s, mid + s, "rational outer bounds of the sqrt(n) window"};
    }
    }
    throw std::logic_error("bad interval kind");
}

BiPoly lemma_target(const std::string& s) {
    const CascadeTable& T = cascade_table();
    if (s == "C1") return T.C[1];
    if (s == "c1") return T.c_small[1];
    if (s == "Bb2+4Bb3") return T.Bb[2] + BiPoly(4) * T.Bb[3];
    if (s.size() == 3 && s.rfind("Aa", 0) == 0) return T.Aa.at(static_cast<size_t>(s[2] - '0'));
    if (s.size() == 3 && s.rfind("Bb", 0) == 0) return T.Bb.at(static_cast<size_t>(s[2] - '0'));
    if (s.size() == 2 && s[0] == 'W') return spectral_table().W.at(static_cast<size_t>(s[1] - '0'));
    throw UnknownLemma("no target " + s);
}

namespace {

void merge_param_report(LemmaReport& into, const LemmaReport& r) {
    for (auto& c : r.instances) into.instances.push_back(c);
    for (auto& c : r.constants) into.constants.push_back(c);
    for (auto& c : r.notes) into.notes.push_back(c);
    for (auto& t : r.tails) into.tails.push_back(t);
}

KInterval iv_full(long) { return KInterval::Full; }
KInterval iv_bb2(long n) {
    if (n <= 17) return KInterval::Full;
    if (n <= 20) return KInterval::R1ToEnd;
    return KInterval::SqrtToEnd;
}
KInterval iv_aa3(long n) { return n <= 17 ? KInterval::Full : KInterval::R1ToEnd; }
KInterval iv_aa2(long n) { return n <= 13 ? KInterval::Full : KInterval::R1ToEnd; }
KInterval iv_r1(long) { return KInterval::R1ToEnd; }
KInterval iv_r1r2(long) { return KInterval::R1R2; }
KInterval iv_window(long) { return KInterval::SqrtWindow; }

bool in_domain(const LemmaSpec& s, long n) {
    if (s.id == "Aa2") return n <= 13 || n >= 21;
    if (s.id == "Aa-n14-20") return n != 17;
    return true;
}

}  // namespace

const std::vector<LemmaSpec>& registry() {
    static const std::vector<LemmaSpec> r = {
        {"C1", "C1 > 0 and c1 > 0 for 0 < k < (n-8)/2", {"C1", "c1"}, 9, -1, {}, Method::SturmPerN, iv_full, -1},
        {"Bb1", "Bb1 > 0 for 0 < k < (n-8)/2", {"Bb1"}, 9, -1, {}, Method::SturmPerN, iv_full, -1},
        {"Bb2", "Bb2 > 0 above the stability window except n = 17, 18", {"Bb2"}, 9, -1, {17, 18},
         Method::TSubstitution, iv_bb2, 21},
        {"Bb-n18", "Bb2 + 4 Bb3 > 0 on (R1, (n-8)/2) at n = 18", {"Bb2+4Bb3"}, 18, 18, {}, Method::SturmPerN, iv_r1,
         -1},
        {"Bb-n17", "mean value split with eps = 0.9508 at n = 17", {"Bb1", "Bb2", "Bb3"}, 17, 17, {},
         Method::Parameterized, iv_full, -1},
        {"Aa1", "Aa1 > 0 for 0 < k < (n-8)/2", {"Aa1"}, 9, -1, {}, Method::SturmPerN, iv_full, -1},
        {"Aa3", "Aa3 > 0 on (max(0,R1), (n-8)/2)", {"Aa3"}, 9, -1, {}, Method::TSubstitution, iv_aa3, 19},
        {"Aa2", "Aa2 > 0 on (max(0,R1), (n-8)/2) for n in [9,13] and n >= 21", {"Aa2"}, 9, -1, {},
         Method::TSubstitution, iv_aa2, 29},
        {"Aa-n14-20", "mean value split in x for n = 14..20, n != 17", {"Aa1", "Aa2", "Aa3", "Aa4"}, 14, 20, {},
         Method::Parameterized, iv_full, -1},
        {"Aa-n17", "three-parameter split (y, x1, x2) = (0.1, 0.8, 0.8) at n = 17", {"Aa1", "Aa2", "Aa3", "Aa4"}, 17,
         17, {}, Method::Parameterized, iv_full, -1},
        {"W1", "W1 > 0 on (R1, R2)", {"W1"}, 18, 120, {}, Method::TSubstitution, iv_r1r2, 118},
        {"W2", "W2 > 0 on (R1, R2)", {"W2"}, 18, 29, {}, Method::TSubstitution, iv_r1r2, 30},
        {"W3", "W3 > 0 on the sqrt(n) window", {"W3"}, 12, -1, {}, Method::TSubstitution, iv_window, 12},
        {"W-lowdim", "W1, W2, W3 > 0 on (0, (n-8)/2) for n <= 17", {"W1", "W2", "W3"}, 9, 17, {},
         Method::SturmPerN, iv_full, -1},
        {"d-lt-sqrt", "d(n) < sqrt(n)", {}, 18, -1, {}, Method::SturmPerN, nullptr, -1},
    };
    return r;
}

const LemmaSpec& find_lemma(const std::string& id) {
    for (auto& s : registry())
        if (s.id == id) return s;
    throw UnknownLemma(id);
}

InstanceCertificate certify_instance(const std::string& lemma, const std::string& target, long n, const UPoly& p,
                                     const RationalInterval& iv, Sign claimed) {
    InstanceCertificate c;
    c.lemma_id = lemma;
    c.target = target;
    c.n = n;
    c.interval = iv;
    c.method = "sturm_per_n";
    c.claimed = claimed;
    c.polynomial = p.primitive(true);
    try {
        SignCertificate s = certify_sign_open(p, iv.lo, iv.hi, claimed);
        c.root_count = s.root_count;
        c.midpoint_sign = s.midpoint_sign;
        c.result = true;
        if (!s.note.empty()) c.errata.push_back(s.note);
    } catch (const SignViolation& v) {
        c.result = false;
        c.offending = v.offending;
        c.midpoint_sign = v.midpoint_sign;
        c.root_count = count_open(p, iv.lo, iv.hi);
    }
    return c;
}

MinResult minimize_on_interval(const UPoly& p, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("minimize_on_interval requires a < b");
    struct Cand {
        Rational lo, hi;
        bool exact;
        RootBracket at;
    };
    std::vector<Cand> c;
    c.push_back({p.eval(a), p.eval(a), true, {a, a}});
    c.push_back({p.eval(b), p.eval(b), true, {b, b}});
    UPoly dp = p.derive();
    if (!dp.is_zero() && dp.degree() >= 1) {
        Rational w = (b - a) / Rational(mpz_class(mpz_class(1) << 80));
        for (auto& r : isolate_roots(dp, a, b, w)) {
            if (r.lo == r.hi) {
                Rational v = p.eval(r.lo);
                c.push_back({v, v, true, r});
            } else {
                auto [lo, hi] = eval_range(p, r.lo, r.hi);
                c.push_back({lo, hi, false, r});
            }
        }
    }
    size_t best = 0;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i].hi < c[best].hi) best = i;
    MinResult m;
    m.argmin = c[best].at;
    Rational lo = c[best].lo;
    for (auto& x : c) lo = std::min(lo, x.lo);
    m.exact = c[best].exact && lo == c[best].lo;
    m.value = c[best].hi;
    m.lo = m.exact ? m.value : lo;
    m.hi = c[best].hi;
    return m;
}

namespace {

// p > 0 on (t0, inf): p(t0) > 0, no roots in (t0, B], positive lead
bool certify_positive_ray(const UPoly& p, const Rational& t0) {
    if (p.is_zero() || p.lead().sign() <= 0) return false;
    if (p.eval(t0).sign() <= 0) return false;
    if (p.degree() < 1) return true;
    Rational B = std::max(cauchy_bound(p), t0 + Rational(1));
    return sturm_count(p, t0, B) == 0;
}

}  // namespace

TailProof envelope_tail(const std::string& target, const BiPoly& p, const Rational& a_lo, const Rational& a_hi,
                        long n_from) {
    TailProof tp;
    tp.target = target;
    tp.kind = "envelope";
    tp.n_from = n_from;
    tp.t0 = sqrt_lower(n_from);
    tp.a_lo = a_lo;
    tp.a_hi = a_hi;
    // outer t, inner a
    BiPoly in_t = t_substitute(p).swapped();
    std::vector<Rational> bound;
    for (int j = 0; j <= in_t.degree_outer(); ++j) {
        UPoly cj = in_t.coeff(static_cast<unsigned>(j));
        if (cj.degree() < 1) {
            bound.push_back(cj.eval(Rational(0)));
            continue;
        }
        bound.push_back(minimize_on_interval(cj, a_lo, a_hi).lo);
    }
    tp.bound = UPoly(std::move(bound));
    tp.pass = certify_positive_ray(tp.bound, tp.t0);
    tp.note = "coefficientwise lower bound over a in [" + a_lo.pretty() + ", " + a_hi.pretty() +
              "], k = (n-10)/2 - a t, n = t^2";
    return tp;
}

UPoly root_condition_polynomial(const BiPoly& q) {
    if (q.degree_outer() != 2 || q.coeff(2).degree() > 0) throw std::invalid_argument("not a quadratic in k");
    Rational alpha = q.coeff(2).eval(Rational(0));
    UPoly beta = q.coeff(1), gamma = q.coeff(0);
    UPoly D = beta * beta - gamma * (alpha * Rational(4));
    UPoly m = beta * (Rational(-1) / (Rational(2) * alpha));
    UPoly t = UPoly::x(), n = t.pow(2);
    UPoly L = (n - UPoly(10)) * Rational(1, 2) - t;
    UPoly gap = m.compose(n) - L;
    return D.compose(n) - gap * gap * (Rational(4) * alpha * alpha);
}

TailProof root_condition_tail(const std::string& target, const BiPoly& q, long n_from) {
    TailProof tp;
    tp.target = target;
    tp.kind = "root-condition";
    tp.n_from = n_from;
    tp.t0 = sqrt_lower(n_from);
    Rational alpha = q.coeff(2).eval(Rational(0));
    UPoly m = q.coeff(1) * (Rational(-1) / (Rational(2) * alpha));
    UPoly t = UPoly::x(), n = t.pow(2);
    UPoly L = (n - UPoly(10)) * Rational(1, 2) - t;
    UPoly gap = m.compose(n) - L;                                   // vertex minus left end
    UPoly right = m.compose(n) - (n - UPoly(8)) * Rational(1, 2);   // vertex minus right end
    tp.bound = root_condition_polynomial(q);
    bool concave = alpha.sign() < 0;
    bool gap_pos = certify_positive_ray(gap, tp.t0);
    bool right_ok = right.degree() < 1 ? right.eval(Rational(0)).sign() >= 0 : certify_positive_ray(right, tp.t0);
    tp.pass = concave && gap_pos && right_ok && certify_positive_ray(tp.bound, tp.t0);
    tp.note = "smaller root below (n-10)/2-sqrt(n), larger root above (n-8)/2";
    return tp;
}

namespace {

AuxiliaryCheck auxiliary_for(const std::string& target, const BiPoly& q, const std::string& printed, long from) {
    AuxiliaryCheck a;
    a.target = target;
    a.printed = parse_upoly(printed, 't');
    a.derived = root_condition_polynomial(q);
    a.equivalent = a.printed.primitive(false) == a.derived.primitive(false);
    a.printed_from = sqrt_lower(from);
    a.printed_holds = certify_positive_ray(a.printed, a.printed_from);
    if (!a.equivalent)
        a.note = "displayed auxiliary inequality differs from the root condition; derived form " +
                 UPoly::from_integers(a.derived.primitive(false)).str("t");
    return a;
}

void run_d_lt_sqrt(LemmaReport& rep, const CertifyOptions& opt, long lo, long hi) {
    for (long n = lo; n <= hi; ++n) {
        SqrtCertificate s = certify_d_lt_sqrt(n);
        InstanceCertificate c;
        c.lemma_id = "d-lt-sqrt";
        c.target = "d(n)<sqrt(n)";
        c.n = n;
        c.interval = {outer_hi(s.d), outer_lo(s.sqrt_n), "upper bound of d(n), lower bound of sqrt(n)"};
        c.method = "interval";
        c.result = s.certified;
        c.precision = s.precision;
        c.midpoint_sign = s.certified ? 1 : -1;
        (void)opt;
        rep.instances.push_back(std::move(c));
    }
}

}  // namespace

LemmaReport certify_lemma(const std::string& id, const CertifyOptions& opt) {
    const LemmaSpec& s = find_lemma(id);
    LemmaReport rep;
    rep.id = id;
    long lo = std::max(opt.n_lo, s.n_lo);
    long hi = s.n_hi < 0 ? opt.n_hi : std::min(opt.n_hi, s.n_hi);

    if (s.method == Method::Parameterized) {
        if (id == "Aa-n14-20") {
            for (long n = lo; n <= hi; ++n) {
                if (!in_domain(s, n)) continue;
                try {
                    merge_param_report(rep, param_check_n14_20(n, printed_x(n), opt.precision));
                } catch (const ParamInfeasible& e) {
                    merge_param_report(rep, e.report);
                }
            }
        } else if (id == "Aa-n17") {
            if (lo <= 17 && 17 <= hi) merge_param_report(rep, param_check_n17(opt.precision));
        } else if (id == "Bb-n17") {
            if (lo <= 17 && 17 <= hi) merge_param_report(rep, bb_check_n17(opt.precision));
        }
    } else if (id == "d-lt-sqrt") {
        run_d_lt_sqrt(rep, opt, lo, hi);
    } else {
        for (long n = lo; n <= hi; ++n) {
            if (!in_domain(s, n)) continue;
            RationalInterval iv = resolve_interval(s.interval(n), n, opt.precision);
            iv.note = to_string(s.interval(n)) + "; " + iv.note;
            for (auto& t : s.targets) {
                InstanceCertificate c = certify_instance(id, t, n, lemma_target(t).at_inner(Rational(n)), iv);
                c.precision = opt.precision;
                c.expected_failure = std::find(s.exceptions.begin(), s.exceptions.end(), n) != s.exceptions.end();
                rep.instances.push_back(std::move(c));
            }
        }
    }

    if (s.tail_from > 0 && opt.n_hi >= s.tail_from) {
        if (id == "Bb2" || id == "Aa3") {
            BiPoly q = lemma_target(s.targets[0]);
            rep.tails.push_back(root_condition_tail(s.targets[0], q, s.tail_from));
            if (id == "Bb2") {
                rep.auxiliary.push_back(auxiliary_for("Bb2", q, "133t^4-1976t^2-3344t-1292", 21));
                // displayed root radicand 133n^2-532n+664 against the discriminant
                UPoly D = q.coeff(1) * q.coeff(1) - q.coeff(0) * (q.coeff(2) * Rational(4));
                UPoly shown = parse_upoly("133n^2-532n+664") * Rational(4);
                if (!(D - shown).is_zero())
                    rep.notes.push_back("Bb2 root radicand: discriminant/4 is " + (D * Rational(1, 4)).str("n") +
                                        ", displayed 133n^2-532n+664");
            } else {
                rep.auxiliary.push_back(auxiliary_for("Aa3", q, "21t^4-85t^2-32t-196", 7));
            }
        } else if (id == "Aa2") {
            // a = ((n-10)/2 - k)/t lies in (-1/t, 1) above R1; t >= t0 gives a > -1/t0
            Rational t0 = sqrt_lower(s.tail_from);
            rep.tails.push_back(envelope_tail("Aa2", lemma_target("Aa2"), Rational(-1) / t0, Rational(1), s.tail_from));
        } else {
            rep.tails.push_back(envelope_tail(s.targets[0], lemma_target(s.targets[0]), Rational(-1), Rational(1),
                                              s.tail_from));
        }
    }
    for (auto& a : rep.auxiliary)
        if (!a.note.empty()) rep.notes.push_back(a.note);

    bool ok = true;
    std::vector<long> failed;
    for (auto& c : rep.instances) {
        if (!c.result) {
            if (failed.empty() || failed.back() != c.n) failed.push_back(c.n);
            if (!c.expected_failure) ok = false;
        }
    }
    rep.failed_n = failed;
    for (long e : s.exceptions) {
        if (e < lo || e > hi) continue;
        if (std::find(failed.begin(), failed.end(), e) == failed.end()) rep.exceptions_confirmed = false;
    }
    for (auto& t : rep.tails) ok = ok && t.pass;
    rep.applicable = !rep.instances.empty() || !rep.tails.empty();
    rep.pass = ok && rep.applicable;
    return rep;
}

void require_certified(const LemmaReport& r) {
    for (auto& c : r.instances)
        if (!c.result)
            throw CertificationFailure(r.id + ": " + c.target + " at n = " + std::to_string(c.n), c.n, c.offending);
    for (auto& t : r.tails)
        if (!t.pass) throw CertificationFailure(r.id + ": tail proof for " + t.target, t.n_from, std::nullopt);
    if (!r.applicable) throw CertificationFailure(r.id + ": nothing to certify in range", 0, std::nullopt);
}

}  // namespace jl
