#ifndef JLVERIFY_JLVERIFY_H
#define JLVERIFY_JLVERIFY_H

#if defined(_WIN32)
#  if defined(JLVERIFY_BUILDING)
#    define JLVERIFY_API __declspec(dllexport)
#  else
#    define JLVERIFY_API __declspec(dllimport)
#  endif
#else
#  define JLVERIFY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jl_status {
    JL_OK = 0,
    JL_FAILED = 1,    /* a verification or certification did not go through */
    JL_USAGE = 2,     /* bad arguments */
    JL_DOMAIN = 3,    /* argument outside the mathematical domain (e.g. n below 2m+1) */
    JL_INTERNAL = 4
} jl_status;

typedef enum jl_format { JL_FORMAT_JSON = 0, JL_FORMAT_CSV = 1 } jl_format;

typedef struct jl_context jl_context;
typedef struct jl_exponent jl_exponent;

JLVERIFY_API const char* jl_version(void);

/* Reads JL_PRECISION_BITS; returns JL_USAGE (and still creates the context at
   256 bits) if it is set but not an integer in [32, 4096]. */
JLVERIFY_API jl_status jl_context_create(jl_context** out);
JLVERIFY_API void jl_context_free(jl_context* ctx);
JLVERIFY_API jl_status jl_set_precision(jl_context* ctx, long bits);
JLVERIFY_API long jl_get_precision(const jl_context* ctx);
JLVERIFY_API const char* jl_last_error(const jl_context* ctx);
/* document produced by the most recent jl_run_* call; owned by ctx */
JLVERIFY_API const char* jl_output(const jl_context* ctx);

/* exponent records */
JLVERIFY_API jl_status jl_exponent_new(jl_context* ctx, int order, long n, jl_exponent** out);
JLVERIFY_API void jl_exponent_free(jl_exponent* e);
JLVERIFY_API int jl_exponent_is_infinite(const jl_exponent* e);
/* enclosure endpoints rounded outward to double; JL_DOMAIN when the quantity is absent */
JLVERIFY_API jl_status jl_exponent_pc(const jl_exponent* e, double* lo, double* hi);
JLVERIFY_API jl_status jl_exponent_radical(const jl_exponent* e, double* lo, double* hi);
JLVERIFY_API jl_status jl_exponent_R1(const jl_exponent* e, double* lo, double* hi);
JLVERIFY_API jl_status jl_exponent_R2(const jl_exponent* e, double* lo, double* hi);

/* subcommands; each writes its document to jl_output */
JLVERIFY_API jl_status jl_run_exponent(jl_context* ctx, int order, long n);
JLVERIFY_API jl_status jl_run_table(jl_context* ctx, int order, long n_min, long n_max, jl_format fmt);
/* n_lo <= 0 selects the lemma's own range up to 200 */
JLVERIFY_API jl_status jl_run_certify(jl_context* ctx, const char* lemma_id, long n_lo, long n_hi);
JLVERIFY_API jl_status jl_run_list_lemmas(jl_context* ctx);
JLVERIFY_API jl_status jl_run_verify_identities(jl_context* ctx);
/* tol as a decimal or p/q string */
JLVERIFY_API jl_status jl_run_gamma_check(jl_context* ctx, long n_lo, long n_hi, const char* tol);
JLVERIFY_API jl_status jl_run_cascade_dump(jl_context* ctx);
JLVERIFY_API jl_status jl_run_spectral_dump(jl_context* ctx);
JLVERIFY_API jl_status jl_run_full_report(jl_context* ctx, long n_lo, long n_hi);
JLVERIFY_API jl_status jl_run_report(jl_context* ctx, long n_lo, long n_hi);

#ifdef __cplusplus
}
#endif

#endif
