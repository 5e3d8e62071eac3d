#pragma once

#include "algebra/upoly.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace jl {

struct DerivativeOrderOverflow : std::domain_error {
    DerivativeOrderOverflow() : std::domain_error("DerivativeOrderOverflow: derivative order above 8") {}
};

constexpr int kMaxOrder = 8;
constexpr int kNumConsts = 6;

// lambda^e * prod f^(i)^m_i * prod c_s^p_s
struct Monomial {
    int lam = 0;
    std::array<int, kMaxOrder + 1> f{};
    std::array<int, kNumConsts> c{};
    auto operator<=>(const Monomial&) const = default;
    int f_degree() const;
};

// Element of Q[lambda, f, f', ..., f^(8), c0..c5] with d/dlambda.
class DiffExpr {
public:
    DiffExpr() = default;
    DiffExpr(const Rational& q);
    DiffExpr(long q) : DiffExpr(Rational(q)) {}
    DiffExpr(int q) : DiffExpr(Rational(q)) {}

    static DiffExpr lam(int e = 1);
    static DiffExpr f(int order);
    static DiffExpr c(int s);
    // coef * lambda^m * f^(a) * f^(b)
    static DiffExpr bilinear(const Rational& coef, int m, int a, int b);

    DiffExpr derive() const;  // d/dlambda
    bool is_zero() const { return t_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return t_; }

    DiffExpr& operator+=(const DiffExpr& o);
    DiffExpr& operator-=(const DiffExpr& o);
    friend DiffExpr operator+(DiffExpr a, const DiffExpr& b) { return a += b; }
    friend DiffExpr operator-(DiffExpr a, const DiffExpr& b) { return a -= b; }
    friend DiffExpr operator*(const DiffExpr& a, const DiffExpr& b);
    DiffExpr operator-() const;
    friend bool operator==(const DiffExpr& a, const DiffExpr& b) { return a.t_ == b.t_; }

    void add_term(const Monomial& m, const Rational& coef);

    // Substitute f := fpoly(lambda) and c_s := cvals[s]; result is a polynomial in lambda.
    UPoly eval(const UPoly& fpoly, const std::vector<Rational>& cvals) const;

    std::string str() const;

private:
    std::map<Monomial, Rational> t_;
};

// Canonical form: merged coefficients, zero terms dropped, sorted monomials.
DiffExpr diff_reduce(const DiffExpr& e);

}  // namespace jl
