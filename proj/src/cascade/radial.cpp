#include "cascade/radial.hpp"

namespace jl {
namespace {

// x (x-1) ... (x-l+1)
Rational falling(long x, int l) {
    Rational r(1);
    for (int i = 0; i < l; ++i) r *= Rational(x - i);
    return r;
}

BiPoly k_poly() { return BiPoly::outer(); }

}  // namespace

RadialOperator RadialOperator::identity() {
    RadialOperator o;
    o.add(0, 0, UPoly(1));
    return o;
}

RadialOperator RadialOperator::r_power(int p) {
    RadialOperator o;
    o.add(p, 0, UPoly(1));
    return o;
}

RadialOperator RadialOperator::radial_laplacian() {
    RadialOperator o;
    o.add(0, 2, UPoly(1));
    o.add(-1, 1, UPoly::x() - UPoly(1));
    return o;
}

void RadialOperator::add(int p, int j, const UPoly& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(p, j);
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
}

RadialOperator operator*(const RadialOperator& a, const RadialOperator& b) {
    // (c r^p d^j)(e r^q d^i) = c e sum_l C(j,l) q(q-1)..(q-l+1) r^(p+q-l) d^(i+j-l)
    RadialOperator out;
    for (auto& [ka, ca] : a.t_) {
        auto [p, j] = ka;
        for (auto& [kb, cb] : b.t_) {
            auto [q, i] = kb;
            for (int l = 0; l <= j; ++l) {
                Rational f = binomial(static_cast<unsigned>(j), static_cast<unsigned>(l)) * falling(q, l);
                if (f.is_zero()) continue;
                out.add(p + q - l, i + j - l, (ca * cb) * f);
            }
        }
    }
    return out;
}

RadialOperator operator+(RadialOperator a, const RadialOperator& b) {
    for (auto& [key, c] : b.t_) a.add(key.first, key.second, c);
    return a;
}

int RadialOperator::order() const {
    int m = -1;
    for (auto& [key, c] : t_) m = std::max(m, key.second);
    return m;
}

std::vector<UPoly> RadialOperator::at_unit_radius() const {
    std::vector<UPoly> out(static_cast<size_t>(std::max(order(), 0) + 1));
    for (auto& [key, c] : t_) out[static_cast<size_t>(key.second)] += c;
    return out;
}

BiPoly RadialOperator::apply_to_inverse_power() const {
    // d^j r^(-k) = (-k)(-k-1)...(-k-j+1) r^(-k-j)
    BiPoly out;
    for (auto& [key, c] : t_) {
        BiPoly f(1);
        for (int i = 0; i < key.second; ++i) f = f * (-k_poly() - BiPoly(i));
        out += f * BiPoly(c);
    }
    return out;
}

std::vector<BiPoly> radial_to_lambda_closed(int j) {
    if (j < 1 || j > 6) throw OrderOutOfRange("radial_to_lambda needs 1 <= j <= 6, got " + std::to_string(j));
    std::vector<BiPoly> c(static_cast<size_t>(j + 1));
    for (int i = 0; i <= j; ++i) {
        BiPoly prod(1);
        for (int s = 0; s < j - i; ++s) prod = prod * (k_poly() + BiPoly(s));
        Rational sign((j - i) % 2 ? -1 : 1);
        c[static_cast<size_t>(i)] = prod * (sign * binomial(static_cast<unsigned>(j), static_cast<unsigned>(i)));
    }
    return c;
}

std::vector<BiPoly> radial_to_lambda_recursion(int j) {
    if (j < 1 || j > 6) throw OrderOutOfRange("radial_to_lambda needs 1 <= j <= 6, got " + std::to_string(j));
    // d_r^(j+1) u = lambda d/dlambda (d_r^j u) - (k + j) d_r^j u on r = 1
    std::vector<BiPoly> c{BiPoly(1)};
    for (int step = 0; step < j; ++step) {
        std::vector<BiPoly> nx(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) {
            nx[i] += c[i] * (BiPoly(static_cast<long>(i) - step) - k_poly());
            nx[i + 1] += c[i];
        }
        c = std::move(nx);
    }
    return c;
}

std::vector<BiPoly> radial_to_lambda(int j) {
    auto a = radial_to_lambda_closed(j);
    auto b = radial_to_lambda_recursion(j);
    if (a != b) throw std::logic_error("radial_to_lambda: closed form and recursion disagree at j=" + std::to_string(j));
    return a;
}

SphereDecomposition build_sphere_decomposition(int m) {
    if (m != 3 && m != 4) throw UnsupportedOrder("sphere decomposition needs m in {3, 4}, got " + std::to_string(m));
    // expand (L + r^-2 Dtheta)^m word by word; Dtheta commutes with every radial factor
    SphereDecomposition d;
    d.m = m;
    d.F.assign(static_cast<size_t>(m + 1), RadialOperator());
    const RadialOperator L = RadialOperator::radial_laplacian();
    const RadialOperator M = RadialOperator::r_power(-2);
    for (unsigned w = 0; w < (1u << m); ++w) {
        RadialOperator op = RadialOperator::identity();
        int s = 0;
        for (int pos = 0; pos < m; ++pos) {
            bool theta = (w >> pos) & 1u;
            op = op * (theta ? M : L);
            s += theta;
        }
        d.F[static_cast<size_t>(s)] = d.F[static_cast<size_t>(s)] + op;
    }
    for (auto& f : d.F) d.at_unit.push_back(f.at_unit_radius());
    return d;
}

}  // namespace jl
