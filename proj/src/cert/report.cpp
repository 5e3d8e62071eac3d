#include "cert/report.hpp"

#include "dbp/identities.hpp"
#include "spectral/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace jl {

json poly_json(const UPoly& p) {
    json a = json::array();
    for (auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

UPoly poly_from_json(const json& j) {
    std::vector<Rational> v;
    for (auto& s : j) v.push_back(Rational::parse(s.get<std::string>()));
    return UPoly(std::move(v));
}

json bipoly_json(const BiPoly& p) {
    json a = json::array();
    for (auto& c : p.coeffs()) a.push_back(poly_json(c));
    return a;
}

namespace {

int digits_for(const RInterval& x) {
    const int cap = std::min(80, static_cast<int>(static_cast<double>(x.precision()) * 0.30103));
    double w = x.width_double();
    if (w == 0.0) return std::max(17, cap);
    double mag = std::max(std::fabs(mpfr_get_d(x.lo(), MPFR_RNDN)), std::fabs(mpfr_get_d(x.hi(), MPFR_RNDN)));
    double rel = mag > 0 ? w / mag : w;
    int d = static_cast<int>(std::ceil(-std::log10(rel))) + 2;
    return std::clamp(d, 3, std::max(3, cap));
}

json str_array(const std::vector<std::string>& v) {
    json a = json::array();
    for (auto& s : v) a.push_back(s);
    return a;
}

std::vector<std::string> strings_from(const json& j) {
    std::vector<std::string> v;
    for (auto& s : j) v.push_back(s.get<std::string>());
    return v;
}

json bracket_json(const RootBracket& r) { return json{{"lo", r.lo.str()}, {"hi", r.hi.str()}}; }
RootBracket bracket_from(const json& j) {
    return {Rational::parse(j.at("lo").get<std::string>()), Rational::parse(j.at("hi").get<std::string>())};
}

}  // namespace

std::string render_lo(const RInterval& x) { return x.lo_dec(digits_for(x)); }
std::string render_hi(const RInterval& x) { return x.hi_dec(digits_for(x)); }

json interval_json(const RInterval& x) { return json::array({render_lo(x), render_hi(x)}); }

json to_json(const InstanceCertificate& c) {
    json poly = json::array();
    for (auto& z : c.polynomial) poly.push_back(z.get_str());
    json j{{"lemma_id", c.lemma_id},
           {"target", c.target},
           {"n", c.n},
           {"interval", {{"lo", c.interval.lo.str()}, {"hi", c.interval.hi.str()}, {"note", c.interval.note}}},
           {"polynomial", poly},
           {"method", c.method},
           {"root_count", c.root_count},
           {"midpoint_sign", c.midpoint_sign},
           {"claimed_sign", static_cast<int>(c.claimed)},
           {"result", c.result},
           {"expected_failure", c.expected_failure},
           {"precision_bits", static_cast<long>(c.precision)},
           {"errata", str_array(c.errata)}};
    j["offending"] = c.offending ? bracket_json(*c.offending) : json(nullptr);
    return j;
}

InstanceCertificate instance_from_json(const json& j) {
    InstanceCertificate c;
    c.lemma_id = j.at("lemma_id").get<std::string>();
    c.target = j.at("target").get<std::string>();
    c.n = j.at("n").get<long>();
    const json& iv = j.at("interval");
    c.interval = {Rational::parse(iv.at("lo").get<std::string>()), Rational::parse(iv.at("hi").get<std::string>()),
                  iv.at("note").get<std::string>()};
    for (auto& s : j.at("polynomial")) c.polynomial.emplace_back(s.get<std::string>());
    c.method = j.at("method").get<std::string>();
    c.root_count = j.at("root_count").get<int>();
    c.midpoint_sign = j.at("midpoint_sign").get<int>();
    c.claimed = j.at("claimed_sign").get<int>() < 0 ? Sign::Negative : Sign::Positive;
    c.result = j.at("result").get<bool>();
    c.expected_failure = j.at("expected_failure").get<bool>();
    c.precision = j.at("precision_bits").get<long>();
    c.errata = strings_from(j.at("errata"));
    if (!j.at("offending").is_null()) c.offending = bracket_from(j.at("offending"));
    return c;
}

namespace {

json tail_json(const TailProof& t) {
    return json{{"target", t.target}, {"kind", t.kind},   {"n_from", t.n_from},     {"t0", t.t0.str()},
                {"a_lo", t.a_lo.str()}, {"a_hi", t.a_hi.str()}, {"bound", poly_json(t.bound)}, {"pass", t.pass},
                {"note", t.note}};
}

TailProof tail_from(const json& j) {
    TailProof t;
    t.target = j.at("target").get<std::string>();
    t.kind = j.at("kind").get<std::string>();
    t.n_from = j.at("n_from").get<long>();
    t.t0 = Rational::parse(j.at("t0").get<std::string>());
    t.a_lo = Rational::parse(j.at("a_lo").get<std::string>());
    t.a_hi = Rational::parse(j.at("a_hi").get<std::string>());
    t.bound = poly_from_json(j.at("bound"));
    t.pass = j.at("pass").get<bool>();
    t.note = j.at("note").get<std::string>();
    return t;
}

json aux_json(const AuxiliaryCheck& a) {
    return json{{"target", a.target},
                {"printed", poly_json(a.printed)},
                {"derived", poly_json(a.derived)},
                {"equivalent", a.equivalent},
                {"printed_holds", a.printed_holds},
                {"printed_from", a.printed_from.str()},
                {"note", a.note}};
}

AuxiliaryCheck aux_from(const json& j) {
    AuxiliaryCheck a;
    a.target = j.at("target").get<std::string>();
    a.printed = poly_from_json(j.at("printed"));
    a.derived = poly_from_json(j.at("derived"));
    a.equivalent = j.at("equivalent").get<bool>();
    a.printed_holds = j.at("printed_holds").get<bool>();
    a.printed_from = Rational::parse(j.at("printed_from").get<std::string>());
    a.note = j.at("note").get<std::string>();
    return a;
}

json const_json(const ConstantCheck& c) {
    return json{{"name", c.name},           {"printed", c.printed},       {"lo", c.lo.str()},
                {"hi", c.hi.str()},         {"lo_dec", c.lo.decimal(14)}, {"hi_dec", c.hi.decimal(14)},
                {"tolerance", c.tolerance.str()}, {"reproduced", c.reproduced}, {"note", c.note}};
}

ConstantCheck const_from(const json& j) {
    ConstantCheck c;
    c.name = j.at("name").get<std::string>();
    c.printed = j.at("printed").get<std::string>();
    c.lo = Rational::parse(j.at("lo").get<std::string>());
    c.hi = Rational::parse(j.at("hi").get<std::string>());
    c.tolerance = Rational::parse(j.at("tolerance").get<std::string>());
    c.reproduced = j.at("reproduced").get<bool>();
    c.note = j.at("note").get<std::string>();
    return c;
}

}  // namespace

json to_json(const LemmaReport& r) {
    json inst = json::array(), tails = json::array(), aux = json::array(), consts = json::array();
    for (auto& c : r.instances) inst.push_back(to_json(c));
    for (auto& t : r.tails) tails.push_back(tail_json(t));
    for (auto& a : r.auxiliary) aux.push_back(aux_json(a));
    for (auto& c : r.constants) consts.push_back(const_json(c));
    return json{{"id", r.id},
                {"pass", r.pass},
                {"applicable", r.applicable},
                {"failed_n", r.failed_n},
                {"exceptions_confirmed", r.exceptions_confirmed},
                {"certificates", inst},
                {"tails", tails},
                {"auxiliary", aux},
                {"constants", consts},
                {"notes", str_array(r.notes)}};
}

LemmaReport lemma_report_from_json(const json& j) {
    LemmaReport r;
    r.id = j.at("id").get<std::string>();
    r.pass = j.at("pass").get<bool>();
    r.applicable = j.at("applicable").get<bool>();
    r.failed_n = j.at("failed_n").get<std::vector<long>>();
    r.exceptions_confirmed = j.at("exceptions_confirmed").get<bool>();
    for (auto& c : j.at("certificates")) r.instances.push_back(instance_from_json(c));
    for (auto& t : j.at("tails")) r.tails.push_back(tail_from(t));
    for (auto& a : j.at("auxiliary")) r.auxiliary.push_back(aux_from(a));
    for (auto& c : j.at("constants")) r.constants.push_back(const_from(c));
    r.notes = strings_from(j.at("notes"));
    return r;
}

bool same(const InstanceCertificate& a, const InstanceCertificate& b) { return to_json(a) == to_json(b); }
bool same(const LemmaReport& a, const LemmaReport& b) { return to_json(a) == to_json(b); }

bool reverify_instance(const InstanceCertificate& c) {
    if (c.method == "interval") {
        // lo: upper bound of d(n), hi: lower bound of sqrt(n)
        const Rational& a = c.interval.lo;
        const Rational& b = c.interval.hi;
        bool holds = a < b && b * b <= Rational(c.n) && outer_hi(eval_d(c.n, c.precision)) <= a;
        return holds == c.result;
    }
    if (c.polynomial.empty()) return false;
    UPoly p = UPoly::from_integers(c.polynomial);
    const Rational& a = c.interval.lo;
    const Rational& b = c.interval.hi;
    if (c.method == "point") return a == b && p.eval(a).sign() == c.midpoint_sign && (c.midpoint_sign > 0) == c.result;
    if (!(a < b)) return false;
    int roots = count_open(p, a, b);
    int mid = p.eval((a + b) / Rational(2)).sign();
    bool holds = roots == 0 && mid == static_cast<int>(c.claimed);
    return holds == c.result && (!c.result || (roots == c.root_count && mid == c.midpoint_sign));
}

FuzzResult fuzz_certificates(const std::vector<InstanceCertificate>& certs, long samples_per_instance,
                             std::uint64_t seed) {
    FuzzResult fr;
    std::mt19937_64 rng(seed);
    const mpz_class scale = mpz_class(1) << 32;
    for (auto& c : certs) {
        if (!c.result || c.polynomial.empty() || !(c.interval.lo < c.interval.hi)) continue;
        if (c.method == "point" || c.method == "interval") continue;
        ++fr.instances;
        // k = (A*scale + W*u) / M, M > 0
        const mpz_class a = c.interval.lo.num(), b = c.interval.lo.den();
        const mpz_class cc = c.interval.hi.num(), d = c.interval.hi.den();
        const mpz_class A = a * d * scale, W = cc * b - a * d, M = b * d * scale;
        const size_t deg = c.polynomial.size() - 1;
        std::vector<mpz_class> mp(deg + 1);
        mp[0] = 1;
        for (size_t i = 1; i <= deg; ++i) mp[i] = mp[i - 1] * M;
        std::vector<mpz_class> scaled(deg + 1);
        for (size_t i = 0; i <= deg; ++i) scaled[i] = c.polynomial[i] * mp[deg - i];
        mpz_class N, acc;
        const int want = static_cast<int>(c.claimed);
        for (long s = 0; s < samples_per_instance; ++s) {
            unsigned long u = 1 + static_cast<unsigned long>(rng() % 0xFFFFFFFFul);  // 1 .. 2^32-1
            N = W;
            N *= u;
            N += A;
            acc = scaled[deg];
            for (size_t i = deg; i-- > 0;) {
                acc *= N;
                acc += scaled[i];
            }
            ++fr.samples;
            if (sgn(acc) != want) {
                ++fr.contradictions;
                if (fr.details.size() < 20)
                    fr.details.push_back(c.lemma_id + "/" + c.target + " n=" + std::to_string(c.n) + " at k=" +
                                         Rational(N, M).str());
            }
        }
    }
    return fr;
}

FullReport full_report(long n_lo, long n_hi, mpfr_prec_t P) {
    if (n_lo < 9) throw UsageError("full_report needs n_lo >= 9 (got " + std::to_string(n_lo) + ")");
    if (n_lo > n_hi) throw UsageError("full_report needs n_lo <= n_hi");
    FullReport fr;
    fr.n_lo = n_lo;
    fr.n_hi = n_hi;
    fr.precision = P;
    bool ok = true;
    for (auto& s : registry()) {
        LemmaReport r = certify_lemma(s.id, {n_lo, n_hi, P});
        if (!r.applicable) continue;
        ok = ok && r.pass;
        for (auto& note : r.notes) fr.errata.push_back(s.id + ": " + note);
        if (s.id == "Bb2") {
            std::vector<long> want;
            for (long e : s.exceptions)
                if (e >= n_lo && e <= n_hi) want.push_back(e);
            fr.bb2_exceptions_exact = r.failed_n == want;
            ok = ok && fr.bb2_exceptions_exact;
        }
        fr.lemmas.push_back(std::move(r));
    }
    if (std::none_of(fr.lemmas.begin(), fr.lemmas.end(), [](auto& l) { return l.id == "Bb2"; }))
        fr.bb2_exceptions_exact = true;
    fr.pass = ok;
    return fr;
}

json to_json(const FullReport& r) {
    json lem = json::array();
    for (auto& l : r.lemmas) lem.push_back(to_json(l));
    return json{{"n_lo", r.n_lo},
                {"n_hi", r.n_hi},
                {"precision_bits", static_cast<long>(r.precision)},
                {"pass", r.pass},
                {"bb2_exceptions_exact", r.bb2_exceptions_exact},
                {"lemmas", lem},
                {"errata", str_array(r.errata)}};
}

std::vector<InstanceCertificate> all_instances(const FullReport& r) {
    std::vector<InstanceCertificate> v;
    for (auto& l : r.lemmas)
        for (auto& c : l.instances) v.push_back(c);
    return v;
}

json exponent_json(const ExponentRecord& r) {
    json j{{"order", r.order}, {"n", r.n}};
    j["p_c"] = r.infinite ? json("inf") : interval_json(*r.p_c);
    const char* rad = r.order == 4 ? "d" : r.order == 3 ? "D" : "radical";
    j[rad] = r.radical ? interval_json(*r.radical) : json(nullptr);
    j["R1"] = r.R1 ? interval_json(*r.R1) : json(nullptr);
    j["R2"] = r.R2 ? interval_json(*r.R2) : json(nullptr);
    j["precision_bits"] = static_cast<long>(r.precision);
    j["notes"] = str_array(r.notes);
    return j;
}

std::string table_csv(const std::vector<ExponentRecord>& rows) {
    std::ostringstream o;
    o << "order,n,p_c_lo,p_c_hi,radical_lo,radical_hi,R1_lo,R1_hi,R2_lo,R2_hi\n";
    auto pair = [&](const std::optional<RInterval>& x) {
        if (x) o << ',' << render_lo(*x) << ',' << render_hi(*x);
        else o << ",,";
    };
    for (auto& r : rows) {
        o << r.order << ',' << r.n;
        if (r.infinite) o << ",inf,inf";
        else pair(r.p_c);
        pair(r.radical);
        pair(r.R1);
        pair(r.R2);
        o << '\n';
    }
    return o.str();
}

json table_json(const std::vector<ExponentRecord>& rows) {
    json a = json::array();
    for (auto& r : rows) a.push_back(exponent_json(r));
    return a;
}

json comparisons_json(const std::vector<Comparison>& c) {
    json a = json::array();
    for (auto& x : c)
        a.push_back(json{{"symbol", x.symbol},
                         {"match", x.match},
                         {"hard", x.hard},
                         {"difference", x.difference.str("k", "n")},
                         {"note", x.note}});
    return a;
}

json identities_json(bool& all_ok) {
    all_ok = true;
    json ids = json::array();
    for (auto& r : catalog()) {
        VerifyResult v = verify(r);
        json e{{"id", r.id}, {"verified", v.verified}, {"residual", v.residual.is_zero() ? std::string("0") : v.residual.str()}};
        if (!r.note.empty()) e["note"] = r.note;
        ids.push_back(e);
    }
    json dec = json::array();
    for (int type = 1; type <= 2; ++type) {
        int lo = type == 1 ? 1 : 0, hi = type == 1 ? 7 : 6;
        for (int j = lo; j <= hi; ++j) {
            DecomposeCheck d = decompose_check(j, type);
            bool ok = d.quadratic_match && d.argument_match;
            dec.push_back(json{{"j", j},
                               {"type", type},
                               {"quadratic_match", d.quadratic_match},
                               {"argument_match", d.argument_match},
                               {"quadratic_difference", d.quadratic_difference.is_zero() ? std::string("0")
                                                                                         : d.quadratic_difference.str()}});
            all_ok = all_ok && ok;
        }
    }
    for (auto& e : ids) {
        std::string id = e["id"].get<std::string>();
        if (id.rfind("fd", 0) == 0) all_ok = all_ok && e["verified"].get<bool>();
    }
    return json{{"identities", ids}, {"decompositions", dec}};
}

json cascade_dump_json() {
    const CascadeTable& t = cascade_table();
    auto fam = [](const std::vector<BiPoly>& v, size_t from) {
        json o = json::object();
        for (size_t i = from; i < v.size(); ++i) o[std::to_string(i)] = bipoly_json(v[i]);
        return o;
    };
    json map = json::array();
    for (auto& row : t.coefficient_map) {
        json r = json::array();
        for (auto& c : row) r.push_back(c.str());
        map.push_back(r);
    }
    return json{{"variables", {{"outer", "k"}, {"inner", "n"}}},
                {"a", bipoly_json(t.a)},
                {"aF0", fam(t.aF0, 0)},
                {"bF1", fam(t.bF1, 0)},
                {"vF2", fam(t.vF2, 0)},
                {"k", fam(t.k, 0)},
                {"t", fam(t.t, 0)},
                {"e", fam(t.e, 0)},
                {"alpha", bipoly_json(t.alpha)},
                {"beta", bipoly_json(t.beta)},
                {"A", fam(t.A, 1)},
                {"a", fam(t.a_small, 1)},
                {"B", fam(t.B, 1)},
                {"b", fam(t.b_small, 1)},
                {"C", fam(t.C, 1)},
                {"c", fam(t.c_small, 1)},
                {"Aa", fam(t.Aa, 1)},
                {"Bb", fam(t.Bb, 1)},
                {"Cc", fam(t.Cc, 1)},
                {"coefficient_map", map}};
}

json spectral_dump_json() {
    const SpectralTable& s = spectral_table();
    json J = json::array(), Jd = json::array(), q = json::array(), W = json::object(), Q = json::array();
    for (int i = 0; i < 4; ++i) {
        J.push_back(bipoly_json(s.J[i]));
        Jd.push_back(bipoly_json(s.J_decomp[i]));
        q.push_back(poly_json(s.q[i]));
    }
    for (int i = 1; i < 4; ++i) W[std::to_string(i)] = bipoly_json(s.W[i]);
    for (auto& c : s.quartic) Q.push_back(poly_json(c));
    return json{{"variables", {{"outer", "k"}, {"inner", "n"}}},
                {"J", J},
                {"J_decomposition", Jd},
                {"q", q},
                {"W", W},
                {"quartic_in_t", Q}};
}

std::vector<GammaRow> gamma_check(long n_lo, long n_hi, const Rational& tol, mpfr_prec_t P) {
    if (n_lo < 18 || n_lo > n_hi) throw UsageError("gamma-check needs 18 <= A <= B");
    std::vector<GammaRow> rows;
    for (long n = n_lo; n <= n_hi; ++n) {
        RInterval k = RInterval(Rational(n - 10, 2), P) - eval_d(n, P);
        GammaRow g{n, gamma_crosscheck(n, k), false};
        RInterval band = RInterval::hull(-tol, tol, P);
        g.ok = g.residual.subset_of(band);
        rows.push_back(std::move(g));
    }
    return rows;
}

json gamma_json(const std::vector<GammaRow>& rows, const Rational& tol) {
    json a = json::array();
    for (auto& r : rows) {
        json e{{"n", r.n}, {"residual", interval_json(r.residual)}, {"within_tol", r.ok}};
        if (!r.ok) {
            // ratio LHS/RHS, the exact factor by which the two sides disagree
            RInterval f = r.residual + RInterval(1L, r.residual.precision());
            e["discrepancy_factor"] = interval_json(f);
        }
        a.push_back(e);
    }
    return json{{"tolerance", tol.str()}, {"rows", a}};
}

json full_verification_report(long n_lo, long n_hi, mpfr_prec_t P, bool& ok) {
    bool ids_ok = false;
    json ids = identities_json(ids_ok);
    auto casc = compare_with_printed(cascade_table());
    auto spect = compare_spectral(spectral_table());
    FactorChecks fc = factor_checks(cascade_table());
    bool cmp_ok = fc.A1_ok && fc.a1_ok;
    for (auto& c : casc) cmp_ok = cmp_ok && (c.match || !c.hard);
    for (auto& c : spect) cmp_ok = cmp_ok && c.match;
    FullReport fr = full_report(n_lo, n_hi, P);
    std::vector<ExponentRecord> rows;
    for (int m = 1; m <= 4; ++m)
        for (long n = std::max<long>(9, 2 * m + 1); n <= 120; ++n) rows.push_back(pc(m, n, P));
    ok = ids_ok && cmp_ok && fr.pass;
    return json{{"precision_bits", static_cast<long>(P)},
                {"pass", ok},
                {"verify_identities", ids},
                {"identities_pass", ids_ok},
                {"cascade_comparison", comparisons_json(casc)},
                {"factorizations",
                 {{"A1", fc.A1_ok},
                  {"a1", fc.a1_ok},
                  {"A1_difference", fc.A1_difference.str("k", "n")},
                  {"a1_difference", fc.a1_difference.str("k", "n")}}},
                {"spectral_comparison", comparisons_json(spect)},
                {"comparisons_pass", cmp_ok},
                {"full_report", to_json(fr)},
                {"exponent_table", table_json(rows)}};
}

}  // namespace jl
