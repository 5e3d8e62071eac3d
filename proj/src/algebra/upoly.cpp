#include "algebra/upoly.hpp"

#include <stdexcept>

namespace jl {

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(const Rational& c, unsigned deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return UPoly(std::move(v));
}

Rational UPoly::eval(const Rational& x) const {
    mpq_class acc = 0;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= x.raw();
        acc += c_[i].raw();
    }
    return Rational(acc);
}

UPoly UPoly::derive() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return UPoly(std::move(d));
}

UPoly UPoly::compose(const UPoly& inner) const {
    UPoly acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * inner;
        acc += UPoly(c_[i]);
    }
    return acc;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly r(1), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& q : acc) out.emplace_back(q);
    return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const UPoly& o) { return *this = *this * o; }

UPoly& UPoly::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    std::vector<Rational> qc(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    Rational lb = b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        unsigned shift = static_cast<unsigned>(r.degree() - b.degree());
        Rational f = r.lead() / lb;
        qc[shift] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c_[i + shift] -= f * b.c_[i];
        r.trim();
    }
    q = UPoly(std::move(qc));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / lead());
}

UPoly UPoly::squarefree() const {
    if (degree() < 1) return *this;
    UPoly g = gcd(*this, derive());
    UPoly q, r;
    divmod(*this, g, q, r);
    return q;
}

std::vector<mpz_class> UPoly::primitive(bool keep_sign) const {
    if (is_zero()) return {};
    mpz_class l = 1;
    for (auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(c_.size());
    mpz_class g = 0;
    for (auto& c : c_) {
        mpz_class v = c.num() * (l / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        z.push_back(v);
    }
    if (!keep_sign && z.back() < 0) g = -g;
    for (auto& v : z) v /= g;
    return z;
}

UPoly UPoly::from_integers(const std::vector<mpz_class>& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (auto& v : z) c.emplace_back(v);
    return UPoly(std::move(c));
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        std::string mag = c.abs().pretty();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = c.abs() == Rational(1);
        if (i == 0) {
            out += mag;
        } else {
            if (!unit) out += mag + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace jl
