#include "doctest.h"

#include "jlverify/jlverify.h"

#include <cstdlib>
#include <string>

namespace {

struct Ctx {
    jl_context* c = nullptr;
    Ctx() { REQUIRE(jl_context_create(&c) == JL_OK); }
    ~Ctx() { jl_context_free(c); }
};

}  // namespace

TEST_CASE("context and precision") {
    Ctx x;
    CHECK(jl_get_precision(x.c) == 256);
    CHECK(jl_set_precision(x.c, 8) == JL_USAGE);
    CHECK(std::string(jl_last_error(x.c)).find("precision") != std::string::npos);
    CHECK(jl_set_precision(x.c, 512) == JL_OK);
    CHECK(jl_get_precision(x.c) == 512);

    setenv("JL_PRECISION_BITS", "384", 1);
    jl_context* e = nullptr;
    CHECK(jl_context_create(&e) == JL_OK);
    CHECK(jl_get_precision(e) == 384);
    jl_context_free(e);
    setenv("JL_PRECISION_BITS", "lots", 1);
    CHECK(jl_context_create(&e) == JL_USAGE);
    jl_context_free(e);
    unsetenv("JL_PRECISION_BITS");
}

TEST_CASE("exponent handles") {
    Ctx x;
    jl_exponent* e = nullptr;
    REQUIRE(jl_exponent_new(x.c, 4, 17, &e) == JL_OK);
    CHECK(jl_exponent_is_infinite(e) == 1);
    double lo = 0, hi = 0;
    CHECK(jl_exponent_pc(e, &lo, &hi) == JL_DOMAIN);
    jl_exponent_free(e);

    REQUIRE(jl_exponent_new(x.c, 4, 20, &e) == JL_OK);
    CHECK(jl_exponent_R1(e, &lo, &hi) == JL_OK);
    CHECK(lo <= 0.9244642513);
    CHECK(hi >= 0.9244642512);
    CHECK(hi - lo < 1e-12);
    jl_exponent_free(e);

    CHECK(jl_exponent_new(x.c, 5, 20, &e) == JL_USAGE);
    CHECK(jl_exponent_new(x.c, 4, 8, &e) == JL_DOMAIN);
}

TEST_CASE("subcommand entry points") {
    Ctx x;
    CHECK(jl_run_exponent(x.c, 4, 17) == JL_OK);
    CHECK(std::string(jl_output(x.c)).find("\"p_c\": \"inf\"") != std::string::npos);
    CHECK(jl_run_table(x.c, 4, 18, 20, JL_FORMAT_CSV) == JL_OK);
    std::string csv = jl_output(x.c);
    long lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == 4);
    CHECK(jl_run_table(x.c, 4, 20, 18, JL_FORMAT_CSV) == JL_USAGE);
    CHECK(jl_run_certify(x.c, "Bb1", 9, 40) == JL_OK);
    CHECK(jl_run_certify(x.c, "Bb2", 17, 17) == JL_FAILED);
    CHECK(std::string(jl_output(x.c)).find("\"lemma_id\": \"Bb2\"") != std::string::npos);
    CHECK(jl_run_certify(x.c, "unknown", 9, 10) == JL_USAGE);
    CHECK(jl_run_certify(x.c, "Bb1", 8, 10) == JL_USAGE);
    CHECK(jl_run_gamma_check(x.c, 18, 20, "1e-9") == JL_OK);
    CHECK(jl_run_gamma_check(x.c, 18, 20, "-1") == JL_USAGE);
    CHECK(jl_run_cascade_dump(x.c) == JL_OK);
    CHECK(jl_run_spectral_dump(x.c) == JL_OK);
    CHECK(jl_run_list_lemmas(x.c) == JL_OK);
    CHECK(jl_run_full_report(x.c, 8, 10) == JL_USAGE);
    CHECK(jl_run_full_report(x.c, 17, 17) == JL_OK);
}
