#pragma once

#include "cert/lemmas.hpp"

namespace jl {

struct ParamInfeasible : std::runtime_error {
    ParamInfeasible(const std::string& w, LemmaReport r)
        : std::runtime_error("ParamInfeasible: " + w), report(std::move(r)) {}
    LemmaReport report;
};

// x as the exact rational of its printed digits; n = 15, 16, 18, 19 have no
// printed value and use a ten-digit truncation of the critical x
Rational printed_x(long n);
std::string printed_x_string(long n);

// 2304 x/(1-x)^2 = m, root in (0,1)
RootBracket critical_x(const Rational& m);

// "S >= 0 or D > 0" at every point between lo and hi; S and D polynomials in k
struct SplitCheck {
    bool pass = false;
    std::vector<RootBracket> s_roots, d_roots;
    std::vector<InstanceCertificate> pieces;
    std::string detail;
};
SplitCheck split_check(const std::string& lemma, const std::string& sname, const std::string& dname, long n,
                       const UPoly& S, const UPoly& D, const Rational& lo, const Rational& hi, bool closed_left,
                       bool closed_right);

LemmaReport param_check_n14_20(long n, const Rational& x, mpfr_prec_t P = 256);
LemmaReport param_check_n17(mpfr_prec_t P = 256);
LemmaReport bb_check_n17(mpfr_prec_t P = 256);

// f1, f2, h1, h2 of the n = 17 split at (x1, x2, y)
struct N17Polys {
    UPoly f1, f2, h1, h2;
};
N17Polys n17_polys(const Rational& x1, const Rational& x2, const Rational& y);
// the same polynomials from the coefficients shown in the text (decimal, rounded)
N17Polys n17_printed_polys();

// every decimal and integer constant named in the acceptance list
std::vector<ConstantCheck> printed_constants(mpfr_prec_t P = 256);

}  // namespace jl
