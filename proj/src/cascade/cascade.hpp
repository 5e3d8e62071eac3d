#pragma once

#include "algebra/bipoly.hpp"
#include "cascade/radial.hpp"

#include <array>
#include <string>
#include <vector>

namespace jl {

// Slot s of a quadratic family multiplies lambda^(2s-1) (d^s/dlambda^s)^2; index 0 unused.
struct CascadeTable {
    BiPoly a;                          // n - 1
    std::vector<BiPoly> aF0, bF1, vF2;  // generator coefficients by derivative order
    std::vector<BiPoly> k, t, e;        // k_0..k_6, t_0..t_4, e_0..e_2
    BiPoly alpha, beta;
    std::vector<BiPoly> A, a_small, B, b_small, C, c_small;
    std::vector<BiPoly> Aa, Bb, Cc;
    // M[s][i]: coefficient of k_i in A_s, from integrating the basis integrands by parts
    std::array<std::array<Rational, 7>, 5> coefficient_map{};
    // lambda-weight split of the small-coefficient integrand under Delta_theta -> -mu
    std::vector<BiPoly> mu0, mu1, mu2;
};

const CascadeTable& cascade_table();
CascadeTable build_cascade_table();

struct Comparison {
    std::string symbol;
    bool match = false;
    BiPoly difference;  // computed - printed
    bool hard = false;  // closed form that the lemmas consume directly
    std::string note;
};

std::vector<Comparison> compare_with_printed(const CascadeTable& t);

struct FactorChecks {
    bool A1_ok = false, a1_ok = false;
    BiPoly A1_difference, a1_difference;
};
FactorChecks factor_checks(const CascadeTable& t);

// Printed closed forms, by symbol ("Aa1", "Bb2", "C1", "A1", "a1", ...).
BiPoly printed_closed_form(const std::string& symbol);

}  // namespace jl
