#pragma once

#include "algebra/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace jl {

// Dense univariate polynomial over Q; coeffs[i] multiplies x^i.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c) : c_{c} { trim(); }
    UPoly(long c) : UPoly(Rational(c)) {}
    UPoly(int c) : UPoly(Rational(c)) {}
    UPoly(std::initializer_list<Rational> c) : c_(c) { trim(); }
    explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static UPoly x() { return UPoly{Rational(0), Rational(1)}; }
    static UPoly monomial(const Rational& c, unsigned deg);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational eval(const Rational& x) const;
    UPoly derive() const;
    UPoly compose(const UPoly& inner) const;
    UPoly pow(unsigned e) const;
    UPoly operator-() const;

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    UPoly& operator*=(const UPoly& o);
    UPoly& operator*=(const Rational& s);

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // Euclidean division over Q.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    static UPoly gcd(UPoly a, UPoly b);
    UPoly monic() const;
    UPoly squarefree() const;

    // Integer multiple with coprime integer coefficients; positive leading term
    // unless keep_sign, in which case the multiplier is positive.
    std::vector<mpz_class> primitive(bool keep_sign = false) const;
    static UPoly from_integers(const std::vector<mpz_class>& z);

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace jl
