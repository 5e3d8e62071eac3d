#pragma once

#include "algebra/bipoly.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jl {

struct OrderOutOfRange : std::invalid_argument {
    explicit OrderOutOfRange(const std::string& w) : std::invalid_argument("OrderOutOfRange: " + w) {}
};
struct UnsupportedOrder : std::invalid_argument {
    explicit UnsupportedOrder(const std::string& w) : std::invalid_argument("UnsupportedOrder: " + w) {}
};

// sum of c(n) r^p d^j/dr^j, keyed by (p, j)
class RadialOperator {
public:
    RadialOperator() = default;
    static RadialOperator identity();
    static RadialOperator r_power(int p);
    // d_rr + (n-1)/r d_r
    static RadialOperator radial_laplacian();

    const std::map<std::pair<int, int>, UPoly>& terms() const { return t_; }
    void add(int p, int j, const UPoly& c);

    friend RadialOperator operator*(const RadialOperator& a, const RadialOperator& b);  // a after b
    friend RadialOperator operator+(RadialOperator a, const RadialOperator& b);
    friend bool operator==(const RadialOperator& a, const RadialOperator& b) { return a.t_ == b.t_; }

    int order() const;
    // coefficient of d^j after setting r = 1
    std::vector<UPoly> at_unit_radius() const;
    // value at r = 1 of the operator applied to r^(-k), a polynomial in (k, n)
    BiPoly apply_to_inverse_power() const;

private:
    std::map<std::pair<int, int>, UPoly> t_;
};

// c_i with d^j u/dr^j = sum_i c_i lambda^i d^i u/dlambda^i on the unit sphere.
std::vector<BiPoly> radial_to_lambda_closed(int j);
std::vector<BiPoly> radial_to_lambda_recursion(int j);
std::vector<BiPoly> radial_to_lambda(int j);  // both routes, must agree

struct SphereDecomposition {
    int m = 0;
    std::vector<RadialOperator> F;              // coefficient of Delta_theta^s
    std::vector<std::vector<UPoly>> at_unit;    // [s][j] coefficient of d^j at r = 1
};
SphereDecomposition build_sphere_decomposition(int m);

}  // namespace jl
