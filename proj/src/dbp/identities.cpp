#include "dbp/identities.hpp"

#include <random>

namespace jl {
namespace {

struct Term {
    DiffExpr coef;
    int m, a, b;
};

DiffExpr sum(std::initializer_list<Term> ts) {
    DiffExpr e;
    for (auto& t : ts) e += t.coef * DiffExpr::bilinear(Rational(1), t.m, t.a, t.b);
    return e;
}

// constant + sum of k_s multiples
DiffExpr K(const Rational& c0, std::initializer_list<std::pair<int, Rational>> ks = {}) {
    DiffExpr e(c0);
    for (auto& [s, q] : ks) e += DiffExpr(q) * DiffExpr::c(s);
    return e;
}

DiffExpr R(long p, long q = 1) { return DiffExpr(Rational(p, q)); }

std::vector<IdentityRecord> build_catalog() {
    std::vector<IdentityRecord> v;
    auto add = [&](std::string id, DiffExpr lhs, DiffExpr q, DiffExpr arg, std::string note = {}) {
        v.push_back({std::move(id), std::move(lhs), std::move(q), std::move(arg), std::move(note)});
    };

    // type 1
    add("fd1-1", sum({{R(1), 0, 0, 1}}), DiffExpr(), sum({{R(1, 2), 0, 0, 0}}));
    add("fd1-2", sum({{R(1), 2, 2, 1}}), sum({{R(-1), 1, 1, 1}}), sum({{R(1, 2), 2, 1, 1}}));
    add("fd1-3", sum({{R(1), 3, 3, 1}}), sum({{R(3), 1, 1, 1}, {R(-1), 3, 2, 2}}), sum({{R(1), 3, 2, 1}}));
    add("fd1-4", sum({{R(1), 4, 4, 1}}), sum({{R(-12), 1, 1, 1}, {R(6), 3, 2, 2}}),
        sum({{R(1), 4, 3, 1}, {R(-1, 2), 4, 2, 2}, {R(-4), 3, 2, 1}, {R(6), 2, 1, 1}}));
    add("fd1-5", sum({{R(1), 5, 5, 1}}), sum({{R(60), 1, 1, 1}, {R(-40), 3, 2, 2}, {R(1), 5, 3, 3}}),
        sum({{R(1), 5, 4, 1}, {R(-1), 5, 3, 2}, {R(-5), 4, 3, 1}, {R(5), 4, 2, 2}, {R(20), 3, 2, 1},
             {R(-30), 2, 1, 1}}));
    add("fd1-6", sum({{R(1), 6, 6, 1}}), sum({{R(-360), 1, 1, 1}, {R(300), 3, 2, 2}, {R(-14), 5, 3, 3}}),
        sum({{R(1), 6, 5, 1}, {R(-6), 5, 4, 1}, {R(12), 5, 3, 2}, {R(30), 4, 3, 1}, {R(-45), 4, 2, 2},
             {R(-120), 3, 2, 1}, {R(180), 2, 1, 1}, {R(-1), 6, 4, 2}, {R(1, 2), 6, 3, 3}}));
    add("fd1-7", sum({{R(1), 7, 7, 1}}),
        sum({{R(2520), 1, 1, 1}, {R(-2520), 3, 2, 2}, {R(189), 5, 3, 3}, {R(-1), 7, 4, 4}}),
        sum({{R(1), 7, 6, 1}, {R(-7), 6, 5, 1}, {R(42), 5, 4, 1}, {R(-84), 5, 3, 2}, {R(-210), 4, 3, 1},
             {R(315), 4, 2, 2}, {R(840), 3, 2, 1}, {R(-1260), 2, 1, 1}, {R(7), 6, 4, 2}, {R(-7), 6, 3, 3},
             {R(-1), 7, 5, 2}, {R(1), 7, 4, 3}}));

    // type 2
    add("fd2-0", sum({{R(1), 1, 0, 2}}), sum({{R(-1), 1, 1, 1}}), sum({{R(1), 1, 0, 1}, {R(-1, 2), 0, 0, 0}}));
    add("fd2-1", sum({{R(1), 2, 1, 2}}), sum({{R(-1), 1, 1, 1}}), sum({{R(1, 2), 2, 1, 1}}));
    add("fd2-2", sum({{R(1), 3, 2, 2}}), sum({{R(1), 3, 2, 2}}), DiffExpr(),
        "already a square; no display, recorded as the trivial identity");
    add("fd2-3", sum({{R(1), 4, 3, 2}}), sum({{R(-2), 3, 2, 2}}), sum({{R(1, 2), 4, 2, 2}}));
    add("fd2-4", sum({{R(1), 5, 4, 2}}), sum({{R(10), 3, 2, 2}, {R(-1), 5, 3, 3}}),
        sum({{R(1), 5, 3, 2}, {R(-5, 2), 4, 2, 2}}));
    add("fd2-5", sum({{R(1), 6, 5, 2}}), sum({{R(-60), 3, 2, 2}, {R(9), 5, 3, 3}}),
        sum({{R(1), 6, 4, 2}, {R(-6), 5, 3, 2}, {R(15), 4, 2, 2}, {R(-1, 2), 6, 3, 3}}));
    add("fd2-6", sum({{R(1), 7, 6, 2}}), sum({{R(420), 3, 2, 2}, {R(-84), 5, 3, 3}, {R(1), 7, 4, 4}}),
        sum({{R(1), 7, 5, 2}, {R(-1), 7, 4, 3}, {R(7, 2), 6, 3, 3}, {R(-7), 6, 4, 2}, {R(42), 5, 3, 2},
             {R(-105), 4, 2, 2}, {R(7, 2), 6, 3, 3}}),
        "the 7/2 lambda^6 (f''')^2 term appears twice in the bracket; both copies kept");

    // composite identities with k_0..k_5 symbolic, k_6 = 1
    add("sec6-A",
        sum({{R(1), 7, 6, 2}, {K(0, {{5, 1}}), 6, 5, 2}, {K(0, {{4, 1}}), 5, 4, 2}, {K(0, {{3, 1}}), 4, 3, 2},
             {K(0, {{2, 1}}), 3, 2, 2}, {K(0, {{1, 1}}), 2, 1, 2}, {K(0, {{0, 1}}), 1, 0, 2}}),
        sum({{R(1), 7, 4, 4},
             {K(-84, {{5, 9}, {4, -1}}), 5, 3, 3},
             {K(420, {{5, -60}, {4, 10}, {3, -2}, {2, 1}}), 3, 2, 2},
             {K(0, {{0, -1}}), 1, 1, 1},
             {K(0, {{1, 1}}), 2, 1, 2}}),
        sum({{R(1), 7, 6, 2}, {R(-1), 7, 4, 3}, {K(-7, {{5, 1}}), 6, 4, 2},
             {K(7, {{5, Rational(-1, 2)}}), 6, 3, 3}, {K(42, {{5, -6}, {4, 1}}), 5, 3, 2},
             {K(-105, {{5, 15}, {4, Rational(-5, 2)}, {3, Rational(1, 2)}}), 4, 2, 2},
             {K(0, {{0, 1}}), 1, 0, 1}, {K(0, {{0, Rational(-1, 2)}}), 0, 0, 0}}));
    add("sec6-B",
        sum({{R(-1), 7, 7, 1}, {K(1, {{5, -1}}), 6, 6, 1}, {K(0, {{5, 2}, {4, -1}}), 5, 5, 1},
             {K(0, {{4, 3}, {3, -1}}), 4, 4, 1}, {K(0, {{3, 4}, {2, -1}}), 3, 3, 1},
             {K(0, {{2, 5}, {1, -1}}), 2, 2, 1}, {K(0, {{1, 6}, {0, -1}}), 1, 1, 1},
             {K(0, {{0, 7}}), 0, 0, 1}}),
        sum({{R(1), 7, 4, 4},
             {K(-138, {{5, 14}, {4, -1}}), 5, 3, 3},
             {K(22, {{5, -1}}), 6, 4, 3},
             {K(2820, {{5, -380}, {4, 58}, {3, -10}, {2, 1}}), 3, 2, 2},
             {K(0, {{1, 6}, {0, -1}}), 1, 1, 1},
             {K(2880, {{5, -480}, {4, 96}, {3, -24}, {2, 8}, {1, -1}}), 2, 2, 1}}),
        sum({{R(-1), 7, 6, 1}, {R(1), 7, 5, 2}, {R(-1), 7, 4, 3}, {K(8, {{5, -1}}), 6, 5, 1},
             {K(-15, {{5, 1}}), 6, 4, 2}, {K(138, {{5, -14}, {4, 1}}), 5, 3, 2},
             {K(-480, {{5, 55}, {4, Rational(-13, 2)}, {3, Rational(1, 2)}}), 4, 2, 2},
             {K(-48, {{5, 8}, {4, -1}}), 5, 4, 1}, {K(240, {{5, -40}, {4, 8}, {3, -1}}), 4, 3, 1},
             {K(-960, {{5, 160}, {4, -32}, {3, 8}, {2, -1}}), 3, 2, 1}, {K(0, {{0, Rational(7, 2)}}), 0, 0, 0}}),
        "the (22-k_5) lambda^6 f'''' f''' term is kept in the quadratic part as printed");
    return v;
}

}  // namespace

const std::vector<IdentityRecord>& catalog() {
    static const std::vector<IdentityRecord> c = build_catalog();
    return c;
}

const IdentityRecord& find_identity(const std::string& id) {
    for (auto& r : catalog())
        if (r.id == id) return r;
    throw UnknownIdentity(id);
}

VerifyResult verify(const IdentityRecord& r) {
    VerifyResult out;
    out.id = r.id;
    out.residual = diff_reduce(r.lhs - r.rhs_quadratic - r.rhs_derivative_argument.derive());
    out.verified = out.residual.is_zero();
    return out;
}

VerifyResult verify(const std::string& id) { return verify(find_identity(id)); }

DiffExpr basis_term(int j, int type) {
    if (type == 1) {
        if (j < 1 || j > 7) throw DegreeOutOfRange("type 1 needs 1 <= j <= 7, got " + std::to_string(j));
        if (j == 1) return DiffExpr::bilinear(Rational(1), 0, 0, 1);
        return DiffExpr::bilinear(Rational(1), j, j, 1);
    }
    if (type == 2) {
        if (j < 0 || j > 6) throw DegreeOutOfRange("type 2 needs 0 <= j <= 6, got " + std::to_string(j));
        return DiffExpr::bilinear(Rational(1), j + 1, j, 2);
    }
    throw DegreeOutOfRange("type must be 1 or 2");
}

IdentityRecord decompose(int j, int type) {
    DiffExpr lhs = basis_term(j, type);
    Decomposition d = reduce_bilinear(lhs);
    return {"fd" + std::to_string(type) + "-" + std::to_string(j), lhs, d.quadratic, d.argument, "derived"};
}

DecomposeCheck decompose_check(int j, int type) {
    DecomposeCheck out;
    out.derived = decompose(j, type);
    const IdentityRecord& cat = find_identity(out.derived.id);
    out.quadratic_difference = diff_reduce(out.derived.rhs_quadratic - cat.rhs_quadratic);
    out.quadratic_match = out.quadratic_difference.is_zero();
    out.argument_match = equal_mod_constants(out.derived.rhs_derivative_argument, cat.rhs_derivative_argument);
    return out;
}

bool sampling_agrees(const IdentityRecord& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
    std::vector<Rational> fc(11);
    for (auto& c : fc) c = Rational(num(rng), den(rng));
    if (fc.back().is_zero()) fc.back() = Rational(1);
    UPoly f(fc);
    std::vector<Rational> cv(kNumConsts);
    for (auto& c : cv) c = Rational(num(rng), den(rng));
    UPoly lhs = r.lhs.eval(f, cv);
    UPoly rhs = r.rhs_quadratic.eval(f, cv) + r.rhs_derivative_argument.eval(f, cv).derive();
    return lhs == rhs;
}

}  // namespace jl
