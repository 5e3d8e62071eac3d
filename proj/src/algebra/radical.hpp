#pragma once

#include "algebra/interval.hpp"
#include "algebra/upoly.hpp"

#include <functional>
#include <memory>
#include <string>

namespace jl {

// Radical expression DAG over one integer parameter n.
class RExpr {
public:
    enum class Op { Const, N, Poly, Add, Sub, Mul, Div, Neg, Sqrt, Cbrt, Gamma };

    static RExpr constant(const Rational& c);
    static RExpr param();
    static RExpr poly(const UPoly& p);  // polynomial in n, evaluated exactly
    static RExpr sqrt(const RExpr& a);
    static RExpr cbrt(const RExpr& a);
    static RExpr gamma(const RExpr& a);

    friend RExpr operator+(const RExpr& a, const RExpr& b);
    friend RExpr operator-(const RExpr& a, const RExpr& b);
    friend RExpr operator*(const RExpr& a, const RExpr& b);
    friend RExpr operator/(const RExpr& a, const RExpr& b);
    RExpr operator-() const;

    Op op() const;
    std::string str() const;

    struct Node;

private:
    explicit RExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
    friend RInterval interval_eval(const RExpr&, const Rational&, mpfr_prec_t);
    friend struct RExprAccess;
};

// Single-precision evaluation; throws NegativeRadicand etc. on failure.
RInterval interval_eval(const RExpr& e, const Rational& n, mpfr_prec_t P);

constexpr mpfr_prec_t kDefaultPrecision = 256;
constexpr mpfr_prec_t kMaxPrecision = 4096;

// Doubles P from P0 until evaluation succeeds and accept(result) holds.
// Successive successful enclosures are intersected, so results nest.
// Throws PrecisionExhausted past Pmax (rethrows the last radicand error if no
// level succeeded at all).
struct AdaptiveResult {
    RInterval value;
    mpfr_prec_t precision;
};
AdaptiveResult interval_eval_adaptive(const RExpr& e, const Rational& n, mpfr_prec_t P0 = kDefaultPrecision,
                                      mpfr_prec_t Pmax = kMaxPrecision,
                                      const std::function<bool(const RInterval&)>& accept = {});

}  // namespace jl
