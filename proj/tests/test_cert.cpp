#include "doctest.h"

#include "algebra/poly_parse.hpp"
#include "cert/params.hpp"
#include "cert/report.hpp"

#include <algorithm>
#include <set>

using namespace jl;

TEST_CASE("registry") {
    std::set<std::string> ids;
    for (auto& s : registry()) ids.insert(s.id);
    for (const char* id : {"C1", "Bb1", "Bb2", "Bb-n18", "Bb-n17", "Aa1", "Aa3", "Aa2", "Aa-n14-20", "Aa-n17", "W1",
                           "W2", "W3", "W-lowdim", "d-lt-sqrt"})
        CHECK_MESSAGE(ids.count(id) == 1, id);
    const LemmaSpec& aa3 = find_lemma("Aa3");
    CHECK(aa3.interval(18) == KInterval::R1ToEnd);
    CHECK(aa3.interval(17) == KInterval::Full);
    CHECK(find_lemma("Bb2").exceptions == std::vector<long>{17, 18});
    CHECK(find_lemma("C1").n_lo == 9);
    CHECK_THROWS_AS(find_lemma("nope"), UnknownLemma);
}

TEST_CASE("interval resolution gives rational outer bounds") {
    RationalInterval f = resolve_interval(KInterval::Full, 14);
    CHECK(f.lo == Rational(0));
    CHECK(f.hi == Rational(3));
    RationalInterval r = resolve_interval(KInterval::R1ToEnd, 20);
    RInterval R1 = RInterval(5L, 512) - eval_d(20, 512);
    CHECK(RInterval(r.lo, 512).certainly_less(R1));
    CHECK(R1.hi_rational() - r.lo < Rational(1, 1000000000));
    CHECK(sqrt_lower(30) * sqrt_lower(30) <= Rational(30));
    RationalInterval w = resolve_interval(KInterval::SqrtWindow, 30);
    CHECK(w.hi - w.lo > Rational(2) * sqrt_lower(30));
}

TEST_CASE("minimize_on_interval") {
    auto m = minimize_on_interval(lemma_target("Aa1").at_inner(Rational(14)), Rational(0), Rational(3));
    CHECK(m.exact);
    CHECK(m.value == Rational(46156));
    CHECK(m.argmin.lo == Rational(0));
    CHECK(minimize_on_interval(lemma_target("Aa1").at_inner(Rational(17)), Rational(0), Rational(9, 2)).value ==
          Rational(110656));
    CHECK(minimize_on_interval(lemma_target("Aa1").at_inner(Rational(20)), Rational(0), Rational(6)).value ==
          Rational(216988));
    CHECK(minimize_on_interval(lemma_target("Bb1").at_inner(Rational(17)), Rational(0), Rational(9, 2)).value ==
          Rational(12606));
    // minimum 1 at the irrational point sqrt(2)
    UPoly k = UPoly::x();
    auto q = minimize_on_interval((k.pow(2) - UPoly(2)).pow(2) + UPoly(1), Rational(0), Rational(3));
    CHECK_FALSE(q.exact);
    CHECK(q.lo <= Rational(1));
    CHECK(q.hi >= Rational(1));
    CHECK(q.hi - q.lo < Rational(1, 1000000));
}

TEST_CASE("lemma certification") {
    LemmaReport bb1 = certify_lemma("Bb1", {9, 200});
    CHECK(bb1.pass);
    CHECK(bb1.instances.size() == 192);

    LemmaReport bb2 = certify_lemma("Bb2", {9, 200});
    CHECK(bb2.pass);
    CHECK(bb2.failed_n == std::vector<long>{17, 18});
    CHECK(bb2.exceptions_confirmed);
    REQUIRE(bb2.auxiliary.size() == 1);
    CHECK(bb2.auxiliary[0].equivalent);
    CHECK(bb2.auxiliary[0].printed_holds);

    LemmaReport at17 = certify_lemma("Bb2", {17, 17});
    CHECK_THROWS_AS(require_certified(at17), CertificationFailure);

    LemmaReport w3 = certify_lemma("W3", {12, 200});
    CHECK(w3.pass);
    REQUIRE(w3.tails.size() == 1);
    CHECK(w3.tails[0].pass);

    LemmaReport aa3 = certify_lemma("Aa3", {9, 60});
    CHECK(aa3.pass);
    REQUIRE(aa3.auxiliary.size() == 1);
    CHECK_FALSE(aa3.auxiliary[0].equivalent);
    CHECK(aa3.auxiliary[0].printed_holds);
    CHECK(UPoly::from_integers(aa3.auxiliary[0].derived.primitive()) == parse_upoly("3t^4-40t^2-64t-28", 't'));
}

TEST_CASE("root condition polynomial matches the explicit roots of Bb2") {
    // roots n/2 - 73/19 -+ sqrt(133n^2-532n+644)/38
    BiPoly q = lemma_target("Bb2");
    for (long n : {21L, 40L, 97L}) {
        UPoly p = q.at_inner(Rational(n));
        Rational vert = Rational(n, 2) - Rational(73, 19);
        Rational rad = Rational(133 * n * n - 532 * n + 644);
        // p(vert +- sqrt(rad)/38) = 0  <=>  p(vert) = -alpha rad / 38^2
        CHECK(p.eval(vert) == -p.coeff(2) * rad / Rational(38 * 38));
    }
}

TEST_CASE("parameter checks, n = 14..20") {
    CHECK_THROWS_AS(param_check_n14_20(17, printed_x(17)), std::invalid_argument);
    LemmaReport r20 = param_check_n14_20(20, printed_x(20));
    CHECK(r20.pass);
    auto c = std::find_if(r20.constants.begin(), r20.constants.end(), [](auto& x) { return x.printed == "1.894875455"; });
    REQUIRE(c != r20.constants.end());
    CHECK(c->reproduced);
    for (long n : {15L, 16L, 18L, 19L}) CHECK(param_check_n14_20(n, printed_x(n)).pass);

    // the printed x at n = 14 exceeds the critical value 0.800146437985...
    RootBracket xs = critical_x(Rational(46156));
    CHECK(xs.hi < printed_x(14));
    try {
        param_check_n14_20(14, printed_x(14));
        FAIL("expected ParamInfeasible");
    } catch (const ParamInfeasible& e) {
        for (auto& k : e.report.constants) CHECK_MESSAGE(k.reproduced, k.name);
    }
    CHECK(param_check_n14_20(14, Rational(8, 10)).pass);
}

TEST_CASE("n = 17 branches") {
    LemmaReport a = param_check_n17();
    CHECK(a.pass);
    auto find = [&](const std::string& printed) {
        return *std::find_if(a.constants.begin(), a.constants.end(), [&](auto& x) { return x.printed == printed; });
    };
    CHECK(find("13.82353260").reproduced);
    CHECK(find("1.358050900").reproduced);
    CHECK(find("0.02175341614").reproduced);
    // h2 from the construction has its root near 0.175714; the displayed rounded coefficients give 0.1757218049
    ConstantCheck h2 = find("0.1757218049");
    CHECK_FALSE(h2.reproduced);
    UPoly shown = n17_printed_polys().h2;
    CHECK(count_open(shown, Rational::parse("0.1757218048"), Rational::parse("0.1757218050")) == 1);

    // the displayed f1 is the construction rounded to two decimals
    N17Polys p = n17_polys(Rational(4, 5), Rational(4, 5), Rational(1, 10));
    CHECK(p.f1 == n17_printed_polys().f1);

    LemmaReport b = bb_check_n17();
    CHECK(b.pass);
}

TEST_CASE("full report, serialization and soundness") {
    CHECK_THROWS_AS(full_report(8, 10), UsageError);
    FullReport r17 = full_report(17, 17);
    CHECK(r17.pass);

    FullReport r = full_report(9, 30);
    CHECK(r.bb2_exceptions_exact);
    json j = to_json(r);
    for (size_t i = 0; i < r.lemmas.size(); ++i)
        CHECK(same(lemma_report_from_json(json::parse(j["lemmas"][i].dump())), r.lemmas[i]));
    CHECK(to_json(full_report(9, 30)).dump() == j.dump());

    auto inst = all_instances(r);
    for (auto& c : inst) CHECK_MESSAGE(reverify_instance(c), c.lemma_id << " n=" << c.n);
    FuzzResult f = fuzz_certificates(inst, 500);
    CHECK(f.instances > 0);
    CHECK(f.contradictions == 0);

    // a forged certificate is caught by sampling and by recomputation
    InstanceCertificate forged = certify_instance("Bb2", "Bb2", 17, lemma_target("Bb2").at_inner(Rational(17)),
                                                  {Rational(0), Rational(9, 2), "forged"});
    CHECK_FALSE(forged.result);
    forged.result = true;
    CHECK(fuzz_certificates({forged}, 2000).contradictions > 0);
    CHECK_FALSE(reverify_instance(forged));
}

TEST_CASE("tables and dumps") {
    std::string csv = table_csv({pc(4, 17), pc(4, 20)});
    CHECK(csv.rfind("order,n,p_c_lo,p_c_hi,radical_lo,radical_hi,R1_lo,R1_hi,R2_lo,R2_hi\n", 0) == 0);
    CHECK(csv.find("4,17,inf,inf") != std::string::npos);
    CHECK(csv.find("4,20,") != std::string::npos);
    CHECK(exponent_json(pc(4, 17))["p_c"] == "inf");
    json cj = cascade_dump_json();
    CHECK(cj["Aa"]["4"] == json::parse(R"([["4/1"]])"));
    json sj = spectral_dump_json();
    CHECK(sj["quartic_in_t"][4] == json::parse(R"(["1/1"])"));
    auto g = gamma_check(18, 22, Rational(1, 1000000000));
    for (auto& row : g) CHECK(row.ok);
    CHECK_THROWS_AS(gamma_check(17, 20, Rational(1)), UsageError);
}
