#pragma once

#include "algebra/rational.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace jl {

struct NegativeRadicand : std::domain_error {
    explicit NegativeRadicand(const std::string& w) : std::domain_error("NegativeRadicand: " + w) {}
};
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& w) : std::runtime_error("PrecisionExhausted: " + w) {}
};
struct GammaPole : std::domain_error {
    explicit GammaPole(const std::string& w) : std::domain_error("GammaPole: " + w) {}
};
struct DivisionByZeroInterval : std::domain_error {
    explicit DivisionByZeroInterval(const std::string& w) : std::domain_error("DivisionByZeroInterval: " + w) {}
};

// Closed interval [lo, hi] of MPFR floats, every operation rounded outward.
class RInterval {
public:
    explicit RInterval(mpfr_prec_t prec = 256);
    RInterval(const Rational& q, mpfr_prec_t prec);
    RInterval(long v, mpfr_prec_t prec);
    static RInterval hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
    RInterval(const RInterval& o);
    RInterval(RInterval&& o) noexcept;
    RInterval& operator=(const RInterval& o);
    RInterval& operator=(RInterval&& o) noexcept;
    ~RInterval();

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lo() const { return lo_; }
    const mpfr_t& hi() const { return hi_; }

    RInterval operator-() const;
    friend RInterval operator+(const RInterval& a, const RInterval& b);
    friend RInterval operator-(const RInterval& a, const RInterval& b);
    friend RInterval operator*(const RInterval& a, const RInterval& b);
    friend RInterval operator/(const RInterval& a, const RInterval& b);

    RInterval sqrt() const;   // throws NegativeRadicand unless lo > 0 (or exactly [0,0])
    RInterval cbrt() const;   // real cube root, monotone
    RInterval log() const;
    RInterval exp() const;
    RInterval square() const;
    RInterval pow(unsigned e) const;

    bool contains(const Rational& q) const;
    bool contains_zero() const;
    bool positive() const { return mpfr_sgn(lo_) > 0; }
    bool negative() const { return mpfr_sgn(hi_) < 0; }
    // True when every point of *this is below every point of o.
    bool certainly_less(const RInterval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }
    bool subset_of(const RInterval& o) const;

    Rational lo_rational() const;
    Rational hi_rational() const;
    double mid_double() const;
    double width_double() const;  // rounded up
    // width <= 2^-bits, computed exactly
    bool width_below(const Rational& w) const;
    RInterval intersect(const RInterval& o) const;  // throws if disjoint
    RInterval with_precision(mpfr_prec_t p) const;  // outward re-rounding

    std::string lo_hex() const;
    std::string hi_hex() const;
    std::string lo_dec(int digits = 20) const;  // rounded down
    std::string hi_dec(int digits = 20) const;  // rounded up
    std::string str(int digits = 20) const;

private:
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
};

// Gamma over a positive (or non-pole) enclosure, via shifted Stirling series
// with an explicit remainder bound.
RInterval gamma_enclosure(const RInterval& x);
RInterval lgamma_enclosure(const RInterval& x);  // requires x > 0
RInterval pi_enclosure(mpfr_prec_t p);

}  // namespace jl
