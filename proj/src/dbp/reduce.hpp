#pragma once

#include "algebra/diffring.hpp"

namespace jl {

struct NotBilinear : std::invalid_argument {
    NotBilinear() : std::invalid_argument("NotBilinear: monomial is not quadratic in f") {}
};

// e = quadratic + d/dlambda(argument), quadratic a combination of lambda^m (f^(s))^2.
struct Decomposition {
    DiffExpr quadratic;
    DiffExpr argument;
};

// Repeated integration by parts, eliminating the widest mixed product first.
Decomposition reduce_bilinear(const DiffExpr& e);

// Derivative arguments agree when their difference has zero derivative.
bool equal_mod_constants(const DiffExpr& a, const DiffExpr& b);

}  // namespace jl
