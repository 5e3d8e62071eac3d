#include "jlverify/jlverify.h"

#include "cert/report.hpp"
#include "dbp/identities.hpp"
#include "exponents/exponents.hpp"

#include <cstdlib>
#include <string>

struct jl_context {
    mpfr_prec_t precision = jl::kDefaultPrecision;
    std::string error;
    std::string output;
};

struct jl_exponent {
    jl::ExponentRecord rec;
};

namespace {

constexpr long kMinBits = 32;

template <class F>
jl_status guarded(jl_context* ctx, F&& f) {
    if (!ctx) return JL_USAGE;
    ctx->error.clear();
    ctx->output.clear();
    try {
        return f();
    } catch (const jl::UsageError& e) {
        ctx->error = e.what();
        return JL_USAGE;
    } catch (const jl::DomainError& e) {
        ctx->error = e.what();
        return JL_DOMAIN;
    } catch (const jl::CertificationFailure& e) {
        ctx->error = e.what();
        return JL_FAILED;
    } catch (const std::invalid_argument& e) {
        ctx->error = e.what();
        return JL_USAGE;
    } catch (const std::exception& e) {
        ctx->error = e.what();
        return JL_INTERNAL;
    }
}

void check_order(int order) {
    if (order < 1 || order > 4) throw jl::UsageError("order must be 1..4");
}

jl_status bounds(const std::optional<jl::RInterval>& x, double* lo, double* hi) {
    if (!x || !lo || !hi) return JL_DOMAIN;
    *lo = mpfr_get_d(x->lo(), MPFR_RNDD);
    *hi = mpfr_get_d(x->hi(), MPFR_RNDU);
    return JL_OK;
}

}  // namespace

extern "C" {

const char* jl_version(void) { return "1.0.0"; }

jl_status jl_context_create(jl_context** out) {
    if (!out) return JL_USAGE;
    *out = new (std::nothrow) jl_context;
    if (!*out) return JL_INTERNAL;
    const char* env = std::getenv("JL_PRECISION_BITS");
    if (env && *env) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < kMinBits || v > jl::kMaxPrecision) {
            (*out)->error = "JL_PRECISION_BITS must be an integer in [32, 4096]";
            return JL_USAGE;
        }
        (*out)->precision = v;
    }
    return JL_OK;
}

void jl_context_free(jl_context* ctx) { delete ctx; }

jl_status jl_set_precision(jl_context* ctx, long bits) {
    if (!ctx) return JL_USAGE;
    if (bits < kMinBits || bits > jl::kMaxPrecision) {
        ctx->error = "precision must be in [32, 4096] bits";
        return JL_USAGE;
    }
    ctx->precision = bits;
    return JL_OK;
}

long jl_get_precision(const jl_context* ctx) { return ctx ? static_cast<long>(ctx->precision) : 0; }
const char* jl_last_error(const jl_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }
const char* jl_output(const jl_context* ctx) { return ctx ? ctx->output.c_str() : ""; }

jl_status jl_exponent_new(jl_context* ctx, int order, long n, jl_exponent** out) {
    return guarded(ctx, [&] {
        if (!out) throw jl::UsageError("null output handle");
        check_order(order);
        *out = new jl_exponent{jl::pc(order, n, ctx->precision)};
        return JL_OK;
    });
}

void jl_exponent_free(jl_exponent* e) { delete e; }
int jl_exponent_is_infinite(const jl_exponent* e) { return e && e->rec.infinite ? 1 : 0; }
jl_status jl_exponent_pc(const jl_exponent* e, double* lo, double* hi) { return e ? bounds(e->rec.p_c, lo, hi) : JL_USAGE; }
jl_status jl_exponent_radical(const jl_exponent* e, double* lo, double* hi) {
    return e ? bounds(e->rec.radical, lo, hi) : JL_USAGE;
}
jl_status jl_exponent_R1(const jl_exponent* e, double* lo, double* hi) { return e ? bounds(e->rec.R1, lo, hi) : JL_USAGE; }
jl_status jl_exponent_R2(const jl_exponent* e, double* lo, double* hi) { return e ? bounds(e->rec.R2, lo, hi) : JL_USAGE; }

jl_status jl_run_exponent(jl_context* ctx, int order, long n) {
    return guarded(ctx, [&] {
        check_order(order);
        ctx->output = jl::exponent_json(jl::pc(order, n, ctx->precision)).dump(2) + "\n";
        return JL_OK;
    });
}

jl_status jl_run_table(jl_context* ctx, int order, long n_min, long n_max, jl_format fmt) {
    return guarded(ctx, [&] {
        check_order(order);
        if (n_min > n_max) throw jl::UsageError("n-min exceeds n-max");
        std::vector<jl::ExponentRecord> rows;
        for (long n = n_min; n <= n_max; ++n) rows.push_back(jl::pc(order, n, ctx->precision));
        if (fmt == JL_FORMAT_CSV) ctx->output = jl::table_csv(rows);
        else ctx->output = jl::table_json(rows).dump(2) + "\n";
        return JL_OK;
    });
}

jl_status jl_run_certify(jl_context* ctx, const char* lemma_id, long n_lo, long n_hi) {
    return guarded(ctx, [&] {
        if (!lemma_id) throw jl::UsageError("missing lemma id");
        const jl::LemmaSpec& s = jl::find_lemma(lemma_id);
        jl::CertifyOptions opt;
        opt.precision = ctx->precision;
        if (n_lo <= 0) {
            opt.n_lo = s.n_lo;
            opt.n_hi = s.n_hi < 0 ? 200 : s.n_hi;
        } else {
            if (n_lo < 9 || n_lo > n_hi) throw jl::UsageError("n range must satisfy 9 <= A <= B");
            opt.n_lo = n_lo;
            opt.n_hi = n_hi;
        }
        jl::LemmaReport r = jl::certify_lemma(lemma_id, opt);
        ctx->output = jl::to_json(r).dump(2) + "\n";
        if (!r.applicable) throw jl::UsageError(std::string(lemma_id) + " has nothing to certify in the range");
        jl::require_certified(r);
        return JL_OK;
    });
}

jl_status jl_run_list_lemmas(jl_context* ctx) {
    return guarded(ctx, [&] {
        jl::json a = jl::json::array();
        for (auto& s : jl::registry())
            a.push_back(jl::json{{"id", s.id},
                                 {"summary", s.summary},
                                 {"targets", s.targets},
                                 {"n_lo", s.n_lo},
                                 {"n_hi", s.n_hi},
                                 {"exceptions", s.exceptions},
                                 {"method", jl::to_string(s.method)},
                                 {"tail_from", s.tail_from}});
        ctx->output = a.dump(2) + "\n";
        return JL_OK;
    });
}

jl_status jl_run_verify_identities(jl_context* ctx) {
    return guarded(ctx, [&] {
        bool ok = false;
        jl::json j = jl::identities_json(ok);
        j["pass"] = ok;
        ctx->output = j.dump(2) + "\n";
        return ok ? JL_OK : JL_FAILED;
    });
}

jl_status jl_run_gamma_check(jl_context* ctx, long n_lo, long n_hi, const char* tol) {
    return guarded(ctx, [&] {
        if (!tol) throw jl::UsageError("missing tolerance");
        jl::Rational t = jl::Rational::parse(tol);
        if (t.sign() <= 0) throw jl::UsageError("tolerance must be positive");
        auto rows = jl::gamma_check(n_lo, n_hi, t, ctx->precision);
        jl::json j = jl::gamma_json(rows, t);
        bool ok = true;
        for (auto& r : rows) ok = ok && r.ok;
        j["pass"] = ok;
        ctx->output = j.dump(2) + "\n";
        return ok ? JL_OK : JL_FAILED;
    });
}

jl_status jl_run_cascade_dump(jl_context* ctx) {
    return guarded(ctx, [&] {
        ctx->output = jl::cascade_dump_json().dump(2) + "\n";
        return JL_OK;
    });
}

jl_status jl_run_spectral_dump(jl_context* ctx) {
    return guarded(ctx, [&] {
        ctx->output = jl::spectral_dump_json().dump(2) + "\n";
        return JL_OK;
    });
}

jl_status jl_run_full_report(jl_context* ctx, long n_lo, long n_hi) {
    return guarded(ctx, [&] {
        jl::FullReport r = jl::full_report(n_lo, n_hi, ctx->precision);
        ctx->output = jl::to_json(r).dump(2) + "\n";
        return r.pass ? JL_OK : JL_FAILED;
    });
}

jl_status jl_run_report(jl_context* ctx, long n_lo, long n_hi) {
    return guarded(ctx, [&] {
        bool ok = false;
        jl::json j = jl::full_verification_report(n_lo, n_hi, ctx->precision, ok);
        ctx->output = j.dump(2) + "\n";
        return ok ? JL_OK : JL_FAILED;
    });
}

}  // extern "C"
