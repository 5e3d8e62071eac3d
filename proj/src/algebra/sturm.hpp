#pragma once

#include "algebra/upoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jl {

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("ZeroPolynomial: Sturm chain of the zero polynomial") {}
};

// Sturm chain of the squarefree part, each entry a primitive integer polynomial.
class SturmChain {
public:
    explicit SturmChain(const UPoly& p);
    int variations(const Rational& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;
    // Distinct real roots in (a, b].
    int count(const Rational& a, const Rational& b) const;
    const UPoly& base() const { return chain_.front(); }
    size_t length() const { return chain_.size(); }

private:
    std::vector<UPoly> chain_;
};

int sturm_count(const UPoly& p, const Rational& a, const Rational& b);
// Distinct real roots strictly inside (a, b).
int count_open(const UPoly& p, const Rational& a, const Rational& b);

struct RootBracket {
    Rational lo, hi;  // exactly one root in [lo, hi]; lo == hi when the root is rational and hit
};

// A bound B with every real root in (-B, B).
Rational cauchy_bound(const UPoly& p);

// Isolate the distinct real roots in (a, b], each bracket narrower than width.
std::vector<RootBracket> isolate_roots(const UPoly& p, const Rational& a, const Rational& b,
                                       const Rational& width);
std::vector<RootBracket> isolate_all_roots(const UPoly& p, const Rational& width);
RootBracket refine_root(const UPoly& p, RootBracket br, const Rational& width);

// Exact interval evaluation of p over [lo, hi] (naive Horner extension).
std::pair<Rational, Rational> eval_range(const UPoly& p, const Rational& lo, const Rational& hi);

enum class Sign { Negative = -1, Positive = 1 };

struct SignCertificate {
    std::vector<mpz_class> primitive;  // positive integer multiple of p, low degree first
    Rational a, b;
    int root_count = 0;                // distinct roots in the open interval (a, b)
    bool root_at_a = false, root_at_b = false;
    Rational midpoint;
    int midpoint_sign = 0;
    Sign claimed = Sign::Positive;
    std::string note;
};

struct SignViolation : std::runtime_error {
    SignViolation(const std::string& what, std::optional<RootBracket> root, int mid_sign)
        : std::runtime_error(what), offending(std::move(root)), midpoint_sign(mid_sign) {}
    std::optional<RootBracket> offending;
    int midpoint_sign;
};

// Issues a certificate only if p has no root in (a, b) and p((a+b)/2) has the claimed sign.
SignCertificate certify_sign_open(const UPoly& p, const Rational& a, const Rational& b, Sign claimed);
// Recompute from serialized fields alone.
bool reverify(const SignCertificate& c);

}  // namespace jl
