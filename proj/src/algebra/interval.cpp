#include "algebra/interval.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace jl {

RInterval::RInterval(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

RInterval::RInterval(const Rational& q, mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_q(lo_, q.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.raw().get_mpq_t(), MPFR_RNDU);
}

RInterval::RInterval(long v, mpfr_prec_t prec) : RInterval(Rational(v), prec) {}

RInterval RInterval::hull(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
    if (hi < lo) throw std::invalid_argument("RInterval::hull: lo > hi");
    RInterval r(prec);
    mpfr_set_q(r.lo_, lo.raw().get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, hi.raw().get_mpq_t(), MPFR_RNDU);
    return r;
}

RInterval::RInterval(const RInterval& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

RInterval::RInterval(RInterval&& o) noexcept : RInterval(o) {}

RInterval& RInterval::operator=(const RInterval& o) {
    if (this == &o) return *this;
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

RInterval& RInterval::operator=(RInterval&& o) noexcept {
    if (this == &o) return *this;
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
    return *this;
}

RInterval::~RInterval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

RInterval RInterval::operator-() const {
    RInterval r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

static mpfr_prec_t joint(const RInterval& a, const RInterval& b) {
    return std::max(a.precision(), b.precision());
}

RInterval operator+(const RInterval& a, const RInterval& b) {
    RInterval r(joint(a, b));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

RInterval operator-(const RInterval& a, const RInterval& b) {
    RInterval r(joint(a, b));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

RInterval operator*(const RInterval& a, const RInterval& b) {
    mpfr_prec_t p = joint(a, b);
    RInterval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    const mpfr_t* xs[2] = {&a.lo_, &a.hi_};
    const mpfr_t* ys[2] = {&b.lo_, &b.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_mul(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

RInterval operator/(const RInterval& a, const RInterval& b) {
    if (b.contains_zero()) throw DivisionByZeroInterval("divisor enclosure contains 0");
    mpfr_prec_t p = joint(a, b);
    RInterval r(p);
    mpfr_t t;
    mpfr_init2(t, p);
    const mpfr_t* xs[2] = {&a.lo_, &a.hi_};
    const mpfr_t* ys[2] = {&b.lo_, &b.hi_};
    bool first = true;
    for (auto x : xs)
        for (auto y : ys) {
            mpfr_div(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

RInterval RInterval::sqrt() const {
    if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) return *this;
    if (mpfr_sgn(lo_) <= 0) throw NegativeRadicand("radicand enclosure " + str(12) + " not certified positive");
    RInterval r(prec_);
    mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::cbrt() const {
    RInterval r(prec_);
    mpfr_cbrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_cbrt(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("log of an enclosure not certified positive");
    RInterval r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::exp() const {
    RInterval r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

RInterval RInterval::square() const {
    RInterval r(prec_);
    if (mpfr_sgn(lo_) >= 0) {
        mpfr_sqr(r.lo_, lo_, MPFR_RNDD);
        mpfr_sqr(r.hi_, hi_, MPFR_RNDU);
    } else if (mpfr_sgn(hi_) <= 0) {
        mpfr_sqr(r.lo_, hi_, MPFR_RNDD);
        mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
    } else {
        mpfr_set_zero(r.lo_, 1);
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_sqr(r.hi_, lo_, MPFR_RNDU);
        mpfr_sqr(t, hi_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
        mpfr_clear(t);
    }
    return r;
}

RInterval RInterval::pow(unsigned e) const {
    RInterval r(1L, prec_), b = *this;
    if (e % 2 == 0 && e > 0) {
        b = square();
        e /= 2;
    }
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b.square();
    }
    return r;
}

bool RInterval::contains(const Rational& q) const {
    mpq_srcptr v = q.raw().get_mpq_t();
    return mpfr_cmp_q(lo_, v) <= 0 && mpfr_cmp_q(hi_, v) >= 0;
}

bool RInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool RInterval::subset_of(const RInterval& o) const {
    return mpfr_greaterequal_p(lo_, o.lo_) && mpfr_lessequal_p(hi_, o.hi_);
}

Rational RInterval::lo_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), lo_);
    return Rational(q);
}

Rational RInterval::hi_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), hi_);
    return Rational(q);
}

double RInterval::mid_double() const {
    return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

double RInterval::width_double() const {
    mpfr_t t;
    mpfr_init2(t, prec_);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return d;
}

bool RInterval::width_below(const Rational& w) const { return hi_rational() - lo_rational() < w; }

RInterval RInterval::intersect(const RInterval& o) const {
    RInterval r(joint(*this, o));
    mpfr_max(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_min(r.hi_, hi_, o.hi_, MPFR_RNDU);
    if (mpfr_greater_p(r.lo_, r.hi_)) throw std::logic_error("disjoint enclosures of one quantity");
    return r;
}

RInterval RInterval::with_precision(mpfr_prec_t p) const {
    RInterval r(p);
    mpfr_set(r.lo_, lo_, MPFR_RNDD);
    mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

static std::string fmt(const char* f, int digits, const mpfr_t x) {
    char* buf = nullptr;
    if (digits < 0) mpfr_asprintf(&buf, f, x);
    else mpfr_asprintf(&buf, f, digits, x);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

std::string RInterval::lo_hex() const { return fmt("%Ra", -1, lo_); }
std::string RInterval::hi_hex() const { return fmt("%Ra", -1, hi_); }
std::string RInterval::lo_dec(int digits) const { return fmt("%.*RDg", digits, lo_); }
std::string RInterval::hi_dec(int digits) const { return fmt("%.*RUg", digits, hi_); }

std::string RInterval::str(int digits) const { return "[" + lo_dec(digits) + ", " + hi_dec(digits) + "]"; }

RInterval pi_enclosure(mpfr_prec_t p) {
    RInterval r(p);
    mpfr_const_pi(const_cast<mpfr_t&>(r.lo()), MPFR_RNDD);
    mpfr_const_pi(const_cast<mpfr_t&>(r.hi()), MPFR_RNDU);
    return r;
}

namespace {

constexpr int kMaxBernoulliPairs = 160;

// B_0 .. B_{2*kMaxBernoulliPairs+2}, computed once.
const std::vector<Rational>& bernoulli_table() {
    static const std::vector<Rational> table = [] {
        const unsigned N = 2 * kMaxBernoulliPairs + 3;
        std::vector<Rational> B(N);
        B[0] = Rational(1);
        for (unsigned m = 1; m < N; ++m) {
            if (m > 1 && m % 2 == 1) continue;  // odd ones past B_1 vanish
            Rational s(0);
            mpz_class c = 1;  // C(m+1, j)
            for (unsigned j = 0; j < m; ++j) {
                if (!B[j].is_zero()) s += Rational(c) * B[j];
                c = c * (m + 1 - j) / (j + 1);
            }
            B[m] = -s / Rational(static_cast<long>(m + 1));
        }
        return B;
    }();
    return table;
}

}  // namespace

RInterval lgamma_enclosure(const RInterval& x) {
    if (!x.positive()) throw GammaPole("lnGamma argument " + x.str(12) + " not certified positive");
    const mpfr_prec_t P = x.precision() + 32;
    const auto& B = bernoulli_table();
    double zmin = std::max(20.0, 0.12 * static_cast<double>(x.precision()) + 20.0);
    for (int attempt = 0; attempt < 12; ++attempt, zmin *= 2) {
        RInterval z = x.with_precision(P);
        RInterval shift_log(P);
        long steps = 0;
        // lnGamma(x) = lnGamma(x+N) - sum log(x+i)
        RInterval prod(1L, P);
        while (mpfr_cmp_d(z.lo(), zmin) < 0) {
            prod = prod * z;
            z = z + RInterval(1L, P);
            if (++steps % 64 == 0) {
                shift_log = shift_log + prod.log();
                prod = RInterval(1L, P);
            }
        }
        shift_log = shift_log + prod.log();

        RInterval half(Rational(1, 2), P);
        RInterval two_pi = pi_enclosure(P) * RInterval(2L, P);
        RInterval acc = (z - half) * z.log() - z + half * two_pi.log();
        RInterval zinv = RInterval(1L, P) / z;
        RInterval zinv2 = zinv.square();
        RInterval zpow = zinv;  // z^{-(2k-1)}
        Rational target = Rational(1) / Rational(mpz_class(1) << (x.precision() + 8), mpz_class(1));
        bool done = false;
        for (int k = 1; k <= kMaxBernoulliPairs; ++k) {
            Rational c = B[2 * k] / Rational(static_cast<long>(2 * k) * (2 * k - 1));
            acc = acc + RInterval(c, P) * zpow;
            zpow = zpow * zinv2;
            Rational cn = (B[2 * k + 2] / Rational(static_cast<long>(2 * k + 2) * (2 * k + 1))).abs();
            RInterval bound = RInterval(cn, P) * zpow;
            if (bound.hi_rational() < target) {
                RInterval rem = RInterval::hull(-bound.hi_rational(), bound.hi_rational(), P);
                acc = acc + rem;
                done = true;
                break;
            }
        }
        if (done) return (acc - shift_log).with_precision(x.precision());
    }
    throw PrecisionExhausted("Stirling series did not reach the requested accuracy");
}

RInterval gamma_enclosure(const RInterval& x) {
    const mpfr_prec_t P = x.precision();
    // pole check: any nonpositive integer inside x
    if (mpfr_sgn(x.lo()) <= 0) {
        Rational lo = x.lo_rational();
        Rational hi = std::min(x.hi_rational(), Rational(0));
        mpz_class c = hi.floor();
        if (Rational(c) >= lo) throw GammaPole("Gamma argument " + x.str(12) + " touches a nonpositive integer");
    }
    RInterval z = x;
    RInterval den(1L, P);
    while (!z.positive()) {
        den = den * z;
        z = z + RInterval(1L, P);
    }
    return lgamma_enclosure(z).exp() / den;
}

}  // namespace jl
