#include "dbp/reduce.hpp"

#include <tuple>

namespace jl {
namespace {

std::pair<int, int> orders(const Monomial& m) {
    int hi = -1, lo = -1;
    for (int i = kMaxOrder; i >= 0; --i) {
        for (int r = 0; r < m.f[i]; ++r) {
            if (hi < 0) hi = i;
            else lo = i;
        }
    }
    return {hi, lo};
}

Monomial with_orders(Monomial m, int lam, int a, int b) {
    m.f.fill(0);
    m.lam = lam;
    m.f[a] += 1;
    m.f[b] += 1;
    return m;
}

}  // namespace

Decomposition reduce_bilinear(const DiffExpr& e) {
    DiffExpr work = diff_reduce(e);
    Decomposition out;
    while (!work.is_zero()) {
        // pick the widest gap, then the highest order, then the highest lambda power
        const Monomial* best = nullptr;
        std::tuple<int, int, int> key{-1, -1, -1};
        for (auto& [m, c] : work.terms()) {
            if (m.f_degree() != 2) throw NotBilinear();
            auto [hi, lo] = orders(m);
            std::tuple<int, int, int> k{hi - lo, hi, m.lam};
            if (!best || k > key) {
                best = &m;
                key = k;
            }
        }
        Monomial m = *best;
        Rational c = work.terms().at(m);
        auto [hi, lo] = orders(m);
        work.add_term(m, -c);
        if (hi == lo) {
            out.quadratic.add_term(m, c);
            continue;
        }
        if (hi == lo + 1) {
            // lam^m f^(lo+1) f^(lo) = d(1/2 lam^m (f^(lo))^2) - m/2 lam^(m-1) (f^(lo))^2
            out.argument.add_term(with_orders(m, m.lam, lo, lo), c / Rational(2));
            if (m.lam > 0) work.add_term(with_orders(m, m.lam - 1, lo, lo), -c * Rational(m.lam) / Rational(2));
            continue;
        }
        // lam^m f^(hi) f^(lo) = d(lam^m f^(hi-1) f^(lo)) - m lam^(m-1) f^(hi-1) f^(lo) - lam^m f^(hi-1) f^(lo+1)
        out.argument.add_term(with_orders(m, m.lam, hi - 1, lo), c);
        if (m.lam > 0) work.add_term(with_orders(m, m.lam - 1, hi - 1, lo), -c * Rational(m.lam));
        work.add_term(with_orders(m, m.lam, hi - 1, lo + 1), -c);
    }
    return out;
}

bool equal_mod_constants(const DiffExpr& a, const DiffExpr& b) { return (a - b).derive().is_zero(); }

}  // namespace jl
