// One PASS/FAIL line per acceptance criterion; details on the following lines.
#include "cascade/cascade.hpp"
#include "cert/params.hpp"
#include "cert/report.hpp"
#include "dbp/identities.hpp"
#include "exponents/exponents.hpp"
#include "spectral/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace jl;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void run(int id, const char* title, double budget_s, const std::function<Outcome()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = dt <= budget_s;
    bool ok = o.pass && in_time;
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s (%.2f s of %.0f s)\n", ok ? "PASS" : "FAIL", id, title, dt, budget_s);
    if (!in_time) std::printf("    over time budget\n");
    std::istringstream in(o.detail);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) std::printf("    %s\n", line.c_str());
    std::fflush(stdout);
}

// n <= last gives an infinite exponent; the finite value must exceed the Sobolev exponent (n+2m)/(n-2m)
Outcome check_thresholds() {
    Outcome o{true, ""};
    const int last[] = {0, 10, 12, 14, 17};
    for (int m = 1; m <= 4; ++m) {
        if (threshold(m) != last[m]) {
            o.pass = false;
            o.detail += "m=" + std::to_string(m) + " threshold " + std::to_string(threshold(m)) + "\n";
        }
        for (long n = 2 * m + 1; n <= 100; ++n) {
            ExponentRecord r = pc(m, n);
            bool want_inf = n <= last[m];
            if (r.infinite != want_inf) {
                o.pass = false;
                o.detail += "m=" + std::to_string(m) + " n=" + std::to_string(n) + " wrong branch\n";
                continue;
            }
            if (!want_inf) {
                RInterval sob = RInterval(Rational(n + 2 * m, n - 2 * m), 256);
                if (!r.p_c || !sob.certainly_less(*r.p_c)) {
                    o.pass = false;
                    o.detail += "m=" + std::to_string(m) + " n=" + std::to_string(n) + " p_c not above Sobolev\n";
                }
            }
        }
    }
    return o;
}

Outcome check_identities() {
    Outcome o{true, ""};
    int count = 0;
    for (auto& r : catalog()) {
        if (r.id.rfind("fd", 0) != 0) continue;
        ++count;
        VerifyResult v = verify(r);
        if (!v.verified) {
            o.pass = false;
            o.detail += r.id + " residual " + v.residual.str() + "\n";
        }
    }
    if (count != 14) {
        o.pass = false;
        o.detail += "catalog has " + std::to_string(count) + " identities\n";
    }
    for (int type = 1; type <= 2; ++type)
        for (int j = (type == 1 ? 1 : 0); j <= (type == 1 ? 7 : 6); ++j) {
            DecomposeCheck d = decompose_check(j, type);
            if (!verify(d.derived).verified) {
                o.pass = false;
                o.detail += "decompose(" + std::to_string(j) + "," + std::to_string(type) + ") does not close\n";
            }
            std::string tag = "decompose(" + std::to_string(j) + "," + std::to_string(type) + ")";
            if (!d.quadratic_match)
                o.detail += tag + " quadratic part differs from the catalog by " + d.quadratic_difference.str() + "\n";
            if (!d.argument_match) o.detail += tag + " derivative argument differs from the catalog\n";
        }
    return o;
}

Outcome check_cascade() {
    Outcome o{true, ""};
    const CascadeTable& T = cascade_table();
    for (auto& c : compare_with_printed(T)) {
        if (!c.hard) continue;
        if (!c.match) {
            o.pass = false;
            o.detail += c.symbol + " differs by " + c.difference.str() + "\n";
        }
    }
    FactorChecks f = factor_checks(T);
    if (!f.A1_ok) {
        o.pass = false;
        o.detail += "A1 factorization differs by " + f.A1_difference.str() + "\n";
    }
    if (!f.a1_ok) {
        o.pass = false;
        o.detail += "a1 factorization differs by " + f.a1_difference.str() + "\n";
    }
    return o;
}

Outcome check_spectral() {
    Outcome o{true, ""};
    for (auto& c : compare_spectral(spectral_table())) {
        if (!c.match) {
            o.pass = false;
            o.detail += c.symbol + " differs by " + c.difference.str() + "\n";
        }
    }
    return o;
}

Outcome check_roots() {
    Outcome o{true, ""};
    const Rational w(mpz_class(1), mpz_class("100000000000000000000"));
    for (long n = 18; n <= 200; ++n) {
        RootValidation v = validate_root(n);
        if (!v.ok || !v.quartic_value.width_below(w)) {
            o.pass = false;
            o.detail += "n=" + std::to_string(n) + " quartic enclosure " + v.quartic_value.str(6) + "\n";
        }
    }
    long bad = 0;
    for (auto& c : certify_d_lt_sqrt(18, 10000)) bad += !c.certified;
    if (bad) {
        o.pass = false;
        o.detail += std::to_string(bad) + " values of n in 18..10000 without d<sqrt(n)\n";
    }
    SqrtCertificate big = certify_d_lt_sqrt(100000000);
    bool in = RInterval(Rational(99, 100), 64).certainly_less(big.ratio) && big.ratio.certainly_less(RInterval(1L, 64));
    if (!in) o.pass = false;
    o.detail += "ratio at n=1e8: " + big.ratio.str(16) + "\n";
    return o;
}

Outcome check_constants() {
    Outcome o{true, ""};
    auto cs = printed_constants();
    for (auto& c : cs) {
        if (!c.reproduced) o.pass = false;
        o.detail += std::string(c.reproduced ? "ok   " : "MISS ") + c.name + " printed " + c.printed + " computed [" +
                    c.lo.decimal(12) + ", " + c.hi.decimal(12) + "]" + (c.reproduced ? "" : "; " + c.note) + "\n";
    }
    if (cs.size() != 16) {
        o.pass = false;
        o.detail += "expected 16 constants, got " + std::to_string(cs.size()) + "\n";
    }
    return o;
}

FullReport& report_9_120() {
    static FullReport r = full_report(9, 120);
    return r;
}

Outcome check_lemmas() {
    Outcome o{true, ""};
    FullReport& r = report_9_120();
    o.pass = r.pass && r.bb2_exceptions_exact;
    for (auto& l : r.lemmas) {
        if (l.pass) continue;
        o.detail += l.id + " fails at n =";
        for (long n : l.failed_n) o.detail += " " + std::to_string(n);
        o.detail += "\n";
        for (auto& note : l.notes)
            if (note.find("violates") != std::string::npos) o.detail += "  " + note + "\n";
    }
    o.detail += std::string("Bb2 failing set exactly {17,18}: ") + (r.bb2_exceptions_exact ? "yes" : "no") + "\n";
    return o;
}

Outcome check_gamma() {
    Outcome o{true, ""};
    for (auto& g : gamma_check(18, 60, Rational(1, 1000000000))) {
        if (!g.ok) {
            o.pass = false;
            RInterval f = g.residual + RInterval(1L, g.residual.precision());
            o.detail += "n=" + std::to_string(g.n) + " residual " + g.residual.str(8) + " factor " + f.str(12) + "\n";
        }
    }
    return o;
}

Outcome check_fuzz() {
    auto inst = all_instances(report_9_120());
    FuzzResult f = fuzz_certificates(inst, 10000);
    Outcome o{f.contradictions == 0 && f.instances > 0, ""};
    o.detail = std::to_string(f.instances) + " certificates, " + std::to_string(f.samples) + " samples, " +
               std::to_string(f.contradictions) + " contradictions\n";
    for (auto& d : f.details) o.detail += d + "\n";
    return o;
}

}  // namespace

int main() {
    run(1, "threshold reproduction", 10, check_thresholds);
    run(2, "identity suite", 5, check_identities);
    run(3, "cascade oracle", 5, check_cascade);
    run(4, "spectral oracle", 10, check_spectral);
    run(5, "root membership and d(n) < sqrt(n)", 60, check_roots);
    run(6, "printed constants", 60, check_constants);
    run(7, "lemma suite full_report(9,120)", 300, check_lemmas);
    run(8, "gamma cross-check", 30, check_gamma);
    run(9, "soundness fuzzing", 300, check_fuzz);
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
