#include "algebra/diffring.hpp"

namespace jl {

int Monomial::f_degree() const {
    int s = 0;
    for (int m : f) s += m;
    return s;
}

DiffExpr::DiffExpr(const Rational& q) {
    if (!q.is_zero()) t_[Monomial{}] = q;
}

DiffExpr DiffExpr::lam(int e) {
    DiffExpr r;
    Monomial m;
    m.lam = e;
    r.t_[m] = Rational(1);
    return r;
}

DiffExpr DiffExpr::f(int order) {
    if (order < 0 || order > kMaxOrder) throw DerivativeOrderOverflow();
    DiffExpr r;
    Monomial m;
    m.f[order] = 1;
    r.t_[m] = Rational(1);
    return r;
}

DiffExpr DiffExpr::c(int s) {
    if (s < 0 || s >= kNumConsts) throw std::out_of_range("constant index");
    DiffExpr r;
    Monomial m;
    m.c[s] = 1;
    r.t_[m] = Rational(1);
    return r;
}

DiffExpr DiffExpr::bilinear(const Rational& coef, int m, int a, int b) {
    if (a < 0 || b < 0 || a > kMaxOrder || b > kMaxOrder) throw DerivativeOrderOverflow();
    Monomial mo;
    mo.lam = m;
    mo.f[a] += 1;
    mo.f[b] += 1;
    DiffExpr r;
    r.add_term(mo, coef);
    return r;
}

void DiffExpr::add_term(const Monomial& m, const Rational& coef) {
    if (coef.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
        t_.emplace(m, coef);
        return;
    }
    it->second += coef;
    if (it->second.is_zero()) t_.erase(it);
}

DiffExpr& DiffExpr::operator+=(const DiffExpr& o) {
    for (auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

DiffExpr& DiffExpr::operator-=(const DiffExpr& o) {
    for (auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

DiffExpr DiffExpr::operator-() const {
    DiffExpr r;
    for (auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

DiffExpr operator*(const DiffExpr& a, const DiffExpr& b) {
    DiffExpr r;
    for (auto& [ma, ca] : a.t_)
        for (auto& [mb, cb] : b.t_) {
            Monomial m;
            m.lam = ma.lam + mb.lam;
            for (int i = 0; i <= kMaxOrder; ++i) m.f[i] = ma.f[i] + mb.f[i];
            for (int s = 0; s < kNumConsts; ++s) m.c[s] = ma.c[s] + mb.c[s];
            r.add_term(m, ca * cb);
        }
    return r;
}

DiffExpr DiffExpr::derive() const {
    DiffExpr r;
    for (auto& [m, c] : t_) {
        if (m.lam != 0) {
            Monomial d = m;
            d.lam -= 1;
            r.add_term(d, c * Rational(static_cast<long>(m.lam)));
        }
        for (int i = 0; i <= kMaxOrder; ++i) {
            if (m.f[i] == 0) continue;
            if (i == kMaxOrder) throw DerivativeOrderOverflow();
            Monomial d = m;
            d.f[i] -= 1;
            d.f[i + 1] += 1;
            r.add_term(d, c * Rational(static_cast<long>(m.f[i])));
        }
    }
    return r;
}

UPoly DiffExpr::eval(const UPoly& fpoly, const std::vector<Rational>& cvals) const {
    std::vector<UPoly> ders{fpoly};
    for (int i = 1; i <= kMaxOrder; ++i) ders.push_back(ders.back().derive());
    UPoly out;
    for (auto& [m, c] : t_) {
        if (m.lam < 0) throw std::domain_error("negative lambda power");
        Rational s = c;
        for (int j = 0; j < kNumConsts; ++j)
            if (m.c[j]) s *= cvals.at(j).pow(static_cast<unsigned>(m.c[j]));
        UPoly term = UPoly::monomial(s, static_cast<unsigned>(m.lam));
        for (int i = 0; i <= kMaxOrder; ++i)
            if (m.f[i]) term *= ders[i].pow(static_cast<unsigned>(m.f[i]));
        out += term;
    }
    return out;
}

std::string DiffExpr::str() const {
    if (t_.empty()) return "0";
    std::string out;
    // highest lambda power first reads closer to the usual layout
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Monomial& m = it->first;
        const Rational& c = it->second;
        std::string body;
        for (int s = 0; s < kNumConsts; ++s) {
            if (!m.c[s]) continue;
            body += "k_" + std::to_string(s);
            if (m.c[s] > 1) body += "^" + std::to_string(m.c[s]);
        }
        if (m.lam) {
            body += "\\la";
            if (m.lam != 1) body += "^{" + std::to_string(m.lam) + "}";
        }
        for (int i = 0; i <= kMaxOrder; ++i) {
            if (!m.f[i]) continue;
            std::string sym = i == 0 ? std::string("f") : "f^{(" + std::to_string(i) + ")}";
            if (m.f[i] > 1) sym = (i == 0 ? sym : "(" + sym + ")") + "^" + std::to_string(m.f[i]);
            body += sym;
        }
        bool unit = c.abs() == Rational(1) && !body.empty();
        std::string mag = unit ? "" : c.abs().pretty();
        if (out.empty()) out += c.sign() < 0 ? "-" : "";
        else out += c.sign() < 0 ? " - " : " + ";
        out += mag + body;
    }
    return out;
}

DiffExpr diff_reduce(const DiffExpr& e) {
    DiffExpr r;
    for (auto& [m, c] : e.terms()) r.add_term(m, c);
    return r;
}

}  // namespace jl
