#include "jlverify/jlverify.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

struct Range {
    long lo = 0, hi = 0;
};

bool parse_range(const std::string& s, Range& r) {
    auto dots = s.find("..");
    if (dots == std::string::npos) return false;
    try {
        size_t used = 0;
        r.lo = std::stol(s.substr(0, dots), &used);
        if (used != dots) return false;
        std::string rest = s.substr(dots + 2);
        r.hi = std::stol(rest, &used);
        return used == rest.size() && r.lo <= r.hi;
    } catch (const std::exception&) {
        return false;
    }
}

int exit_code(jl_status s) {
    switch (s) {
    case JL_OK: return 0;
    case JL_USAGE:
    case JL_DOMAIN: return 2;
    default: return 1;
    }
}

int emit(jl_context* ctx, jl_status s, const std::string& out_path) {
    const char* doc = jl_output(ctx);
    if (doc && *doc) {
        if (out_path.empty()) {
            std::fputs(doc, stdout);
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "cannot write " << out_path << "\n";
                return 2;
            }
            f << doc;
        }
    }
    if (s != JL_OK && *jl_last_error(ctx)) std::cerr << jl_last_error(ctx) << "\n";
    return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the quadharmonic Joseph-Lundgren exponent and its positivity lemmas"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(jl_version()));

    long precision = 0;
    auto add_precision = [&](CLI::App* sc) {
        sc->add_option("--precision", precision, "working precision in bits (overrides JL_PRECISION_BITS)")
            ->check(CLI::Range(32L, 4096L));
    };

    int order = 4;
    long n = 0, n_min = 0, n_max = 0;
    std::string format = "json", out, lemma, range_s, tol = "1e-9";

    auto* exponent = app.add_subcommand("exponent", "critical exponent p_c(n) for one order and dimension");
    exponent->add_option("--order", order, "polyharmonic order m")->required()->check(CLI::Range(1, 4));
    exponent->add_option("--n", n, "dimension")->required()->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    add_precision(exponent);

    auto* table = app.add_subcommand("table", "exponent table over a dimension range");
    table->add_option("--order", order)->required()->check(CLI::Range(1, 4));
    table->add_option("--n-min", n_min)->required()->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    table->add_option("--n-max", n_max)->required()->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    table->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    add_precision(table);

    auto* certify = app.add_subcommand("certify", "certify one lemma over its range or a given one");
    certify->add_option("--lemma", lemma, "lemma id (see `lemmas`)")->required();
    auto* cert_n = certify->add_option("--n", n)->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    auto* cert_r = certify->add_option("--n-range", range_s, "A..B")->multi_option_policy(CLI::MultiOptionPolicy::Throw);
    cert_n->excludes(cert_r);
    certify->add_option("--out", out, "write the JSON certificate here");
    add_precision(certify);

    auto* lemmas = app.add_subcommand("lemmas", "list the lemma registry");

    auto* ident = app.add_subcommand("verify-identities", "reduce every differentiation-by-parts identity");

    auto* gamma = app.add_subcommand("gamma-check", "Gamma-quotient cross-check at k = R1(n)");
    gamma->add_option("--n-range", range_s, "A..B")->required();
    gamma->add_option("--tol", tol, "tolerance on the relative residual");
    add_precision(gamma);

    bool dump = false;
    auto* cascade = app.add_subcommand("cascade", "coefficient cascade tables");
    cascade->add_flag("--dump", dump, "emit all tables as JSON")->required();
    auto* spectral = app.add_subcommand("spectral", "spectral J/q/W polynomials");
    spectral->add_flag("--dump", dump, "emit coefficients as JSON")->required();

    std::string report_range = "9..120";
    auto* report = app.add_subcommand("report", "identities, printed-form comparisons, lemma suite and exponent table");
    report->add_option("--n-range", report_range, "lemma range A..B");
    report->add_option("--out", out);
    add_precision(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    jl_context* ctx = nullptr;
    jl_status st = jl_context_create(&ctx);
    if (st != JL_OK) {
        std::cerr << jl_last_error(ctx) << "\n";
        jl_context_free(ctx);
        return 2;
    }
    if (precision > 0 && jl_set_precision(ctx, precision) != JL_OK) {
        std::cerr << jl_last_error(ctx) << "\n";
        jl_context_free(ctx);
        return 2;
    }

    int rc = 0;
    Range r;
    if (*exponent) {
        rc = emit(ctx, jl_run_exponent(ctx, order, n), "");
    } else if (*table) {
        rc = emit(ctx, jl_run_table(ctx, order, n_min, n_max, format == "csv" ? JL_FORMAT_CSV : JL_FORMAT_JSON), "");
    } else if (*certify) {
        long lo = 0, hi = 0;
        if (*cert_n) {
            lo = hi = n;
        } else if (*cert_r) {
            if (!parse_range(range_s, r)) {
                std::cerr << "--n-range expects A..B\n";
                jl_context_free(ctx);
                return 2;
            }
            lo = r.lo;
            hi = r.hi;
        }
        rc = emit(ctx, jl_run_certify(ctx, lemma.c_str(), lo, hi), out);
    } else if (*lemmas) {
        rc = emit(ctx, jl_run_list_lemmas(ctx), "");
    } else if (*ident) {
        rc = emit(ctx, jl_run_verify_identities(ctx), "");
    } else if (*gamma) {
        if (!parse_range(range_s, r)) {
            std::cerr << "--n-range expects A..B\n";
            rc = 2;
        } else {
            rc = emit(ctx, jl_run_gamma_check(ctx, r.lo, r.hi, tol.c_str()), "");
        }
    } else if (*cascade) {
        rc = emit(ctx, jl_run_cascade_dump(ctx), "");
    } else if (*spectral) {
        rc = emit(ctx, jl_run_spectral_dump(ctx), "");
    } else if (*report) {
        if (!parse_range(report_range, r)) {
            std::cerr << "--n-range expects A..B\n";
            rc = 2;
        } else {
            rc = emit(ctx, jl_run_report(ctx, r.lo, r.hi), out);
        }
    }
    jl_context_free(ctx);
    return rc;
}
