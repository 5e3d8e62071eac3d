#include "algebra/sturm.hpp"

#include <algorithm>

namespace jl {
namespace {

UPoly integer_form(const UPoly& p, bool keep_sign) {
    if (p.is_zero()) return p;
    return UPoly::from_integers(p.primitive(keep_sign));
}

int sign_at(const UPoly& p, const Rational& x) { return p.eval(x).sign(); }

int variations_of(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

SturmChain::SturmChain(const UPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    UPoly p0 = integer_form(p.squarefree(), false);
    chain_.push_back(p0);
    if (p0.degree() < 1) return;
    chain_.push_back(integer_form(p0.derive(), true));
    while (chain_.back().degree() > 0) {
        UPoly q, r;
        UPoly::divmod(chain_[chain_.size() - 2], chain_.back(), q, r);
        if (r.is_zero()) break;
        chain_.push_back(integer_form(-r, true));
    }
}

int SturmChain::variations(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (auto& p : chain_) s.push_back(sign_at(p, x));
    return variations_of(s);
}

int SturmChain::variations_pos_inf() const {
    std::vector<int> s;
    for (auto& p : chain_) s.push_back(p.lead().sign());
    return variations_of(s);
}

int SturmChain::variations_neg_inf() const {
    std::vector<int> s;
    for (auto& p : chain_) s.push_back(p.degree() % 2 == 0 ? p.lead().sign() : -p.lead().sign());
    return variations_of(s);
}

int SturmChain::count(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations(a) - variations(b);
}

int sturm_count(const UPoly& p, const Rational& a, const Rational& b) {
    if (!(a < b)) throw std::invalid_argument("sturm_count requires a < b");
    return SturmChain(p).count(a, b);
}

int count_open(const UPoly& p, const Rational& a, const Rational& b) {
    SturmChain s(p);
    return s.count(a, b) - (p.eval(b).is_zero() ? 1 : 0);
}

Rational cauchy_bound(const UPoly& p) {
    Rational m(0);
    Rational l = p.lead().abs();
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, p.coeff(static_cast<unsigned>(i)).abs() / l);
    return m + Rational(1);
}

RootBracket refine_root(const UPoly& p, RootBracket br, const Rational& width) {
    if (br.lo == br.hi) return br;
    const UPoly sq = p.squarefree();
    int slo = sign_at(sq, br.lo);
    if (slo == 0) return {br.lo, br.lo};
    if (sign_at(sq, br.hi) == 0) return {br.hi, br.hi};
    while (br.hi - br.lo > width) {
        Rational m = (br.lo + br.hi) / Rational(2);
        int sm = sign_at(sq, m);
        if (sm == 0) return {m, m};
        if (sm == slo) br.lo = m;
        else br.hi = m;
    }
    return br;
}

std::vector<RootBracket> isolate_roots(const UPoly& p, const Rational& a, const Rational& b,
                                       const Rational& width) {
    SturmChain s(p);
    std::vector<RootBracket> out;
    struct Job { Rational lo, hi; int n; };
    std::vector<Job> stack{{a, b, s.count(a, b)}};
    while (!stack.empty()) {
        Job j = stack.back();
        stack.pop_back();
        if (j.n == 0) continue;
        if (j.n == 1 && !s.base().eval(j.lo).is_zero()) {
            // root in (lo, hi]
            if (s.base().eval(j.hi).is_zero()) {
                out.push_back({j.hi, j.hi});
            } else {
                out.push_back(refine_root(p, {j.lo, j.hi}, width));
            }
            continue;
        }
        Rational m = (j.lo + j.hi) / Rational(2);
        stack.push_back({m, j.hi, s.count(m, j.hi)});
        stack.push_back({j.lo, m, s.count(j.lo, m)});
    }
    std::sort(out.begin(), out.end(), [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
    return out;
}

std::vector<RootBracket> isolate_all_roots(const UPoly& p, const Rational& width) {
    if (p.degree() < 1) return {};
    Rational B = cauchy_bound(p);
    return isolate_roots(p, -B, B, width);
}

std::pair<Rational, Rational> eval_range(const UPoly& p, const Rational& lo, const Rational& hi) {
    Rational rl(0), rh(0);
    const auto& c = p.coeffs();
    for (size_t i = c.size(); i-- > 0;) {
        Rational cands[4] = {rl * lo, rl * hi, rh * lo, rh * hi};
        Rational mn = cands[0], mx = cands[0];
        for (auto& v : cands) {
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        rl = mn + c[i];
        rh = mx + c[i];
    }
    return {rl, rh};
}

SignCertificate certify_sign_open(const UPoly& p, const Rational& a, const Rational& b, Sign claimed) {
    if (!(a < b)) throw std::invalid_argument("certify_sign_open requires a < b");
    SturmChain s(p);
    SignCertificate c;
    c.primitive = p.primitive(true);
    c.a = a;
    c.b = b;
    c.claimed = claimed;
    c.root_at_a = p.eval(a).is_zero();
    c.root_at_b = p.eval(b).is_zero();
    c.root_count = s.count(a, b) - (c.root_at_b ? 1 : 0);
    c.midpoint = (a + b) / Rational(2);
    c.midpoint_sign = p.eval(c.midpoint).sign();
    if (c.root_at_a || c.root_at_b) c.note = "endpoint root excluded by exact open-interval count";
    if (c.root_count != 0) {
        auto roots = isolate_roots(p, a, b, (b - a) / Rational(1L << 20));
        std::optional<RootBracket> bad;
        for (auto& r : roots) {
            if (r.lo == b && r.hi == b) continue;
            bad = r;
            break;
        }
        throw SignViolation("SignViolation: " + std::to_string(c.root_count) + " root(s) in (" +
                                a.pretty() + ", " + b.pretty() + ")",
                            bad, c.midpoint_sign);
    }
    if (c.midpoint_sign != static_cast<int>(claimed))
        throw SignViolation("SignViolation: midpoint sign does not match the claim", std::nullopt, c.midpoint_sign);
    return c;
}

bool reverify(const SignCertificate& c) {
    if (!(c.a < c.b) || c.primitive.empty()) return false;
    UPoly p = UPoly::from_integers(c.primitive);
    SturmChain s(p);
    bool rb = p.eval(c.b).is_zero();
    int cnt = s.count(c.a, c.b) - (rb ? 1 : 0);
    Rational m = (c.a + c.b) / Rational(2);
    return cnt == 0 && m == c.midpoint && p.eval(m).sign() == static_cast<int>(c.claimed) &&
           c.root_count == 0;
}

}  // namespace jl
