#pragma once

#include "algebra/bipoly.hpp"
#include "algebra/interval.hpp"
#include "cascade/cascade.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace jl {

struct OddPowerResidue : std::logic_error {
    explicit OddPowerResidue(const std::string& w) : std::logic_error("OddPowerResidue: " + w) {}
};

struct SpectralTable {
    std::array<BiPoly, 4> J;         // transcribed products
    std::array<BiPoly, 4> J_decomp;  // from the fourth-power sphere decomposition on r^(-k)
    std::array<UPoly, 4> q;          // in n
    std::array<BiPoly, 4> W;         // (k+8) J_j - k q_j
    // p J_0 - q_0 at k = (n-10)/2 - a, as a polynomial in t = a^2; quartic[j] multiplies t^j
    std::array<UPoly, 5> quartic;
};

const SpectralTable& spectral_table();
SpectralTable build_spectral_table();

BiPoly printed_W(int j);
// p(k := (n-10)/2 - a t, n := t^2), outer a, inner t. |a| < 1 covers the sqrt(n) window.
BiPoly t_substitute(const BiPoly& p);
BiPoly W_t_form(int j);
BiPoly printed_W_t_form(int j);
// printed coefficient of a^(2j) in the displayed degree-8 polynomial
UPoly printed_quartic_coefficient(int j);

std::vector<Comparison> compare_spectral(const SpectralTable& s);

// quartic with n fixed, variable t
UPoly quartic_at(const Rational& n);
RInterval quartic_eval(const Rational& n, const RInterval& t);

// LHS/RHS - 1 of the Gamma form of p J_0 = q_0, with p = 1 + 8/k
RInterval gamma_crosscheck(long n, const RInterval& k);

}  // namespace jl
