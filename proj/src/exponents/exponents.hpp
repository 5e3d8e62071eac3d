#pragma once

#include "algebra/interval.hpp"
#include "algebra/radical.hpp"
#include "algebra/upoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jl {

struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& w) : std::invalid_argument("DomainError: " + w) {}
};

// polynomial stages of the quadharmonic radical cascade, in n
struct DCascade {
    UPoly d0, d1, d3, d4, d5;
};
DCascade derived_d_cascade();  // from the quartic through the resolvent cubic
DCascade printed_d_cascade();  // as displayed (d1 carries the misprinted n^15 coefficient)

RExpr d_expression(bool printed_d1 = false);
RExpr D_tri_expression();
RExpr pc_expression(int order);  // finite branch of the closed form

RInterval eval_d(long n, mpfr_prec_t P = kDefaultPrecision);
RInterval eval_d_printed(long n, mpfr_prec_t P = kDefaultPrecision);
RInterval eval_D_tri(long n, mpfr_prec_t P = kDefaultPrecision);

int threshold(int order);  // last n with infinite exponent

struct ExponentRecord {
    int order = 0;
    long n = 0;
    bool infinite = false;
    std::optional<RInterval> p_c, radical, R1, R2;
    mpfr_prec_t precision = kDefaultPrecision;
    std::vector<std::string> notes;
};

ExponentRecord pc(int order, long n, mpfr_prec_t P = kDefaultPrecision);

// (n+6-2d)/(n-10-2d) = 1 + 8/R1 as rational functions of the symbol d
bool pc_identity_holds();

// (p J - H^2)/H^2 at the computed exponent, k = 2m/(p-1), q = (n-2m)/2,
// J = prod (k+2i)(n-2-2i-k), H = prod (q+2i)
RInterval stability_residual(const ExponentRecord& r);

struct RootValidation {
    bool ok = false;
    RInterval quartic_value;
    RInterval R1;
    mpfr_prec_t precision = 0;
};
RootValidation validate_root(long n);

struct SqrtCertificate {
    long n = 0;
    bool certified = false;
    RInterval d, sqrt_n, ratio;
    mpfr_prec_t precision = 0;
};
SqrtCertificate certify_d_lt_sqrt(long n);
std::vector<SqrtCertificate> certify_d_lt_sqrt(long n_lo, long n_hi);

// d1 > 0 on [18, inf), by one Sturm count over the reals
bool d1_positive_from_18();

}  // namespace jl
