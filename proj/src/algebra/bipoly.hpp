#pragma once

#include "algebra/upoly.hpp"

#include <string>
#include <vector>

namespace jl {

// Polynomial in an outer variable (k by convention) whose coefficients are
// polynomials in an inner variable (n). Also reused for (a, t) after substitution.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const Rational& c) : c_{UPoly(c)} { trim(); }
    BiPoly(long c) : BiPoly(Rational(c)) {}
    BiPoly(int c) : BiPoly(Rational(c)) {}
    BiPoly(const UPoly& inner_only) : c_{inner_only} { trim(); }
    explicit BiPoly(std::vector<UPoly> c) : c_(std::move(c)) { trim(); }

    static BiPoly outer() { return BiPoly(std::vector<UPoly>{UPoly(), UPoly(1)}); }
    static BiPoly inner() { return BiPoly(UPoly::x()); }

    const std::vector<UPoly>& coeffs() const { return c_; }
    int degree_outer() const { return static_cast<int>(c_.size()) - 1; }
    int degree_inner() const;
    bool is_zero() const { return c_.empty(); }
    UPoly coeff(unsigned i) const { return i < c_.size() ? c_[i] : UPoly(); }
    Rational coeff(unsigned i, unsigned j) const { return coeff(i).coeff(j); }

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    BiPoly pow(unsigned e) const;
    BiPoly derive_outer() const;
    BiPoly derive_inner() const;

    // p(outer := s), s may itself depend on the inner variable.
    BiPoly compose_outer(const BiPoly& s) const;
    // p(inner := s) with s a polynomial in the inner variable.
    BiPoly compose_inner(const UPoly& s) const;

    UPoly at_inner(const Rational& n) const;   // polynomial in outer
    UPoly at_outer(const Rational& k) const;   // polynomial in inner
    Rational eval(const Rational& k, const Rational& n) const;

    // Exchange roles of the two variables.
    BiPoly swapped() const;

    std::string str(const std::string& outer = "k", const std::string& inner = "n") const;

private:
    void trim();
    std::vector<UPoly> c_;
};

// p(k := ksub(a,t), n := nsub(t)); the result has outer variable a, inner t.
BiPoly substitute_bivariate(const BiPoly& p, const BiPoly& ksub, const UPoly& nsub);

}  // namespace jl
