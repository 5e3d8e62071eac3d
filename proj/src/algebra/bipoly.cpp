#include "algebra/bipoly.hpp"

#include <algorithm>

namespace jl {

void BiPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BiPoly::degree_inner() const {
    int d = -1;
    for (auto& u : c_) d = std::max(d, u.degree());
    return d;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& u : r.c_) u = -u;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
    for (auto& u : c_) u *= s;
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<UPoly> acc(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i] * b.c_[j];
    }
    return BiPoly(std::move(acc));
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r(1), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

BiPoly BiPoly::derive_outer() const {
    if (c_.size() <= 1) return {};
    std::vector<UPoly> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return BiPoly(std::move(d));
}

BiPoly BiPoly::derive_inner() const {
    std::vector<UPoly> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i].derive();
    return BiPoly(std::move(d));
}

BiPoly BiPoly::compose_outer(const BiPoly& s) const {
    BiPoly acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * s;
        acc += BiPoly(c_[i]);
    }
    return acc;
}

BiPoly BiPoly::compose_inner(const UPoly& s) const {
    std::vector<UPoly> d(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) d[i] = c_[i].compose(s);
    return BiPoly(std::move(d));
}

UPoly BiPoly::at_inner(const Rational& n) const {
    std::vector<Rational> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].eval(n);
    return UPoly(std::move(v));
}

UPoly BiPoly::at_outer(const Rational& k) const {
    UPoly acc;
    for (size_t i = c_.size(); i-- > 0;) {
        acc *= k;
        acc += c_[i];
    }
    return acc;
}

Rational BiPoly::eval(const Rational& k, const Rational& n) const { return at_inner(n).eval(k); }

BiPoly BiPoly::swapped() const {
    int di = degree_inner();
    if (di < 0) return {};
    std::vector<std::vector<Rational>> rows(static_cast<size_t>(di) + 1,
                                            std::vector<Rational>(c_.size()));
    for (size_t i = 0; i < c_.size(); ++i)
        for (int j = 0; j <= c_[i].degree(); ++j) rows[static_cast<size_t>(j)][i] = c_[i].coeff(static_cast<unsigned>(j));
    std::vector<UPoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return BiPoly(std::move(out));
}

std::string BiPoly::str(const std::string& outer, const std::string& inner) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string c = c_[i].str(inner);
        bool single = c_[i].degree() == 0;
        std::string mono = i == 0 ? "" : (i == 1 ? outer : outer + "^" + std::to_string(i));
        std::string term;
        if (i == 0) {
            term = single ? c : "(" + c + ")";
        } else if (single && c == "1") {
            term = mono;
        } else if (single && c == "-1") {
            term = "-" + mono;
        } else {
            term = (single ? c : "(" + c + ")") + "*" + mono;
        }
        if (!out.empty()) out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        else out = term;
    }
    return out;
}

BiPoly substitute_bivariate(const BiPoly& p, const BiPoly& ksub, const UPoly& nsub) {
    BiPoly acc;
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * ksub;
        acc += BiPoly(p.coeffs()[i].compose(nsub));
    }
    return acc;
}

}  // namespace jl
