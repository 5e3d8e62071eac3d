#include "algebra/rational.hpp"

#include <stdexcept>

namespace jl {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class p, q;
        if (p.set_str(s.substr(0, slash), 10) != 0 || q.set_str(s.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        return Rational(p, q);
    }
    // decimal with optional exponent
    std::string mant = s;
    long exp10 = 0;
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
        mant = s.substr(0, e);
        exp10 = std::stol(s.substr(e + 1));
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        mant.erase(0, 1);
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty()) throw std::invalid_argument("bad rational literal: " + s);
    mpz_class m;
    if (m.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (neg) m = -m;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    return exp10 >= 0 ? Rational(mpz_class(m * p10)) : Rational(m, p10);
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(n, d);
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return r;
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::pretty() const {
    return is_integer() ? v_.get_num().get_str() : str();
}

std::string Rational::decimal(int digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class a = abs().num() * scale;
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), v_.get_den_mpz_t());
    std::string s = q.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits + 1 - s.size()), '0');
    std::string out = s.substr(0, s.size() - static_cast<size_t>(digits));
    if (digits > 0) out += "." + s.substr(s.size() - static_cast<size_t>(digits));
    return (sign() < 0 ? "-" : "") + out;
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

}  // namespace jl
