#pragma once

#include "algebra/diffring.hpp"
#include "dbp/reduce.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace jl {

struct UnknownIdentity : std::invalid_argument {
    explicit UnknownIdentity(const std::string& id) : std::invalid_argument("UnknownIdentity: " + id) {}
};
struct DegreeOutOfRange : std::invalid_argument {
    explicit DegreeOutOfRange(const std::string& w) : std::invalid_argument("DegreeOutOfRange: " + w) {}
};

// lhs = rhs_quadratic + d/dlambda(rhs_derivative_argument)
struct IdentityRecord {
    std::string id;
    DiffExpr lhs;
    DiffExpr rhs_quadratic;
    DiffExpr rhs_derivative_argument;
    std::string note;
};

// Transcriptions as printed; ids fd1-1..fd1-7, fd2-0..fd2-6, sec6-A, sec6-B.
const std::vector<IdentityRecord>& catalog();
const IdentityRecord& find_identity(const std::string& id);

struct VerifyResult {
    std::string id;
    bool verified = false;
    DiffExpr residual;  // lhs - quadratic - d(argument), canonical
};
VerifyResult verify(const IdentityRecord& r);
VerifyResult verify(const std::string& id);

// Type 1, j = 1..7: f f' for j = 1 and lambda^j f^(j) f' otherwise.
// Type 2, j = 0..6: lambda^(j+1) f^(j) f''.
DiffExpr basis_term(int j, int type);
IdentityRecord decompose(int j, int type);

struct DecomposeCheck {
    IdentityRecord derived;
    bool quadratic_match = false;
    bool argument_match = false;   // modulo additive constants
    DiffExpr quadratic_difference;  // derived - catalog
};
DecomposeCheck decompose_check(int j, int type);

// f := random degree-10 polynomial, c := random rationals; true when both sides agree.
bool sampling_agrees(const IdentityRecord& r, std::uint64_t seed);

}  // namespace jl
