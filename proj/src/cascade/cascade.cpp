#include "cascade/cascade.hpp"

#include "algebra/diffring.hpp"
#include "algebra/poly_parse.hpp"
#include "dbp/reduce.hpp"

#include <map>
#include <stdexcept>

namespace jl {
namespace {

BiPoly K() { return BiPoly::outer(); }
BiPoly N() { return BiPoly::inner(); }

// k (k+1) ... (k+m-1)
BiPoly rising(int m) {
    BiPoly r(1);
    for (int s = 0; s < m; ++s) r = r * (K() + BiPoly(s));
    return r;
}

// basis integrand for k_i
DiffExpr basis_integrand(int i) {
    DiffExpr e = DiffExpr::bilinear(Rational(1), i + 1, i, 2) - DiffExpr::bilinear(Rational(1), i + 1, i + 1, 1);
    if (7 - i != 0) e += DiffExpr::bilinear(Rational(7 - i), i, i, 1);
    return e;
}

// coefficient of lambda^(2s-1) (f^(s))^2 in a reduced quadratic part, as a polynomial in c_0..c_5
std::map<std::array<int, kNumConsts>, Rational> slot_coefficient(const DiffExpr& quad, int s) {
    std::map<std::array<int, kNumConsts>, Rational> out;
    for (auto& [m, c] : quad.terms()) {
        if (m.lam != 2 * s - 1 || m.f[s] != 2) continue;
        out[m.c] += c;
    }
    return out;
}

BiPoly to_bipoly(const std::map<std::array<int, kNumConsts>, Rational>& poly, const std::vector<BiPoly>& vals,
                 int only_power_of = -1, int power = 0) {
    BiPoly out;
    for (auto& [ex, c] : poly) {
        if (only_power_of >= 0 && ex[static_cast<size_t>(only_power_of)] != power) continue;
        BiPoly term(c);
        for (int s = 0; s < kNumConsts; ++s) {
            if (s == only_power_of || ex[static_cast<size_t>(s)] == 0) continue;
            term = term * vals.at(static_cast<size_t>(s)).pow(static_cast<unsigned>(ex[static_cast<size_t>(s)]));
        }
        out += term;
    }
    return out;
}

void check_no_mixed(const DiffExpr& quad, const char* what) {
    for (auto& [m, c] : quad.terms()) {
        int sq = -1;
        for (int i = 0; i <= kMaxOrder; ++i)
            if (m.f[i] == 2) sq = i;
        if (sq < 1 || m.lam != 2 * sq - 1) throw std::logic_error(std::string("unexpected quadratic term in ") + what);
    }
}

}  // namespace

BiPoly printed_closed_form(const std::string& s) {
    static const std::map<std::string, std::string> forms = {
        {"Aa1", "-4k^6+(-88+12n)k^5+(-12n^2+208n-860)k^4+(4n^3-152n^2+1544n-4304)k^3"
                "+(32n^3-776n^2+5408n-11196)k^2+(92n^3-1576n^2+8428n-14040)k+64n^3-940n^2+4368n-6372"},
        {"Aa2", "28k^4+(464-56n)k^3+(32n^2-656n+2668)k^2+(-4n^3+232n^2-2364n+6456)k-16n^3+380n^2-2640n+5556"},
        {"Aa3", "-28k^2+(-216+28n)k-4n^2+96n-408"},
        {"Aa4", "4"},
        {"Bb1", "6k^4+(144-12n)k^3+(6n^2-204n+994)k^2+(60n^2-850n+2732)k+94n^2-1012n+2644"},
        {"Bb2", "-38k^2+(-292+38n)k-6n^2+132n-544"},
        {"Bb3", "8"},
        {"C1", "-6k^2+(-72+6n)k-178+30n"},
        {"Cc2", "8"},
        {"A1", "-2k^6+(-72+6n)k^5+(-6n^2+174n-818)k^4+(2n^3-132n^2+1492n-4272)k^3"
               "+(30n^3-768n^2+5412n-11222)k^2+(94n^3-1596n^2+8486n-14088)k+66n^3-954n^2+4398n-6390"},
        {"a1", "-2k^6+(-16+6n)k^5+(-6n^2+34n-42)k^4+(2n^3-20n^2+52n-32)k^3+(2n^3-8n^2-4n+26)k^2"
               "+(-2n^3+20n^2-58n+48)k-2n^3+14n^2-30n+18"},
        {"A1-factored", "(k+3)(k+1)(k-(n-3))(k-(n-5))(-2k^2+(2n-48)k+22n-142)"},
        {"a1-factored", "(k+1)^2(k-1)(k-(n-3))^2(k-(n-1))"},
        {"c1", "-2k^2+(2n-8)k+2n-6"},
    };
    auto it = forms.find(s);
    if (it == forms.end()) throw std::invalid_argument("no printed closed form for " + s);
    return parse_bipoly(it->second);
}

CascadeTable build_cascade_table() {
    CascadeTable T;
    T.a = N() - BiPoly(1);
    const BiPoly& a = T.a;

    SphereDecomposition sd = build_sphere_decomposition(3);
    auto lift = [](const std::vector<UPoly>& v) {
        std::vector<BiPoly> out;
        for (auto& u : v) out.emplace_back(u);
        return out;
    };
    T.aF0 = lift(sd.at_unit[0]);
    T.bF1 = lift(sd.at_unit[1]);
    T.vF2 = lift(sd.at_unit[2]);
    T.aF0.resize(7);
    T.bF1.resize(5);
    T.vF2.resize(3);

    auto cascade = [](const std::vector<BiPoly>& gen, int order) {
        std::vector<BiPoly> out(static_cast<size_t>(order + 1));
        for (int i = 0; i <= order; ++i) {
            if (gen[static_cast<size_t>(i)].is_zero()) continue;
            if (i == 0) {
                out[0] += gen[0];
                continue;
            }
            auto conv = radial_to_lambda(i);
            for (int j = 0; j <= i; ++j) out[static_cast<size_t>(j)] += gen[static_cast<size_t>(i)] * conv[static_cast<size_t>(j)];
        }
        return out;
    };
    T.k = cascade(T.aF0, 6);
    T.t = cascade(T.bF1, 4);
    for (auto& x : T.t) x = -x;  // F_1 = sum (-t_j) lambda^j d^j
    T.e = cascade(T.vF2, 2);

    T.alpha = a - BiPoly(2) * K();
    T.beta = K() * (BiPoly(2) + K() - N());

    // coefficient map from the basis integrands
    for (int i = 0; i <= 6; ++i) {
        Decomposition d = reduce_bilinear(basis_integrand(i));
        check_no_mixed(d.quadratic, "basis integrand");
        for (int s = 1; s <= 4; ++s) {
            auto c = slot_coefficient(d.quadratic, s);
            T.coefficient_map[static_cast<size_t>(s)][static_cast<size_t>(i)] = c[{}];
        }
    }
    auto apply_map = [&](const std::vector<BiPoly>& g, int slots) {
        std::vector<BiPoly> out(static_cast<size_t>(slots + 1));
        for (int s = 1; s <= slots; ++s)
            for (size_t i = 0; i < g.size(); ++i)
                out[static_cast<size_t>(s)] += g[i] * T.coefficient_map[static_cast<size_t>(s)][i];
        return out;
    };
    T.A = apply_map(T.k, 4);
    T.B = apply_map(T.t, 3);
    T.C = apply_map(T.e, 2);

    const BiPoly& al = T.alpha;
    const BiPoly& be = T.beta;
    T.a_small = {BiPoly(),
                 BiPoly(-2) * al.pow(3) + (BiPoly(2) * be + BiPoly(8)) * al.pow(2) + (BiPoly(2) * be.pow(2) - BiPoly(8)) * al -
                     BiPoly(2) * be.pow(3) - BiPoly(8) * be.pow(2) - BiPoly(8) * be,
                 BiPoly(2) * al.pow(3) + (BiPoly(-16) - BiPoly(2) * be) * al.pow(2) + BiPoly(16) * al + BiPoly(6) * be.pow(2) +
                     BiPoly(32) * be + BiPoly(40),
                 BiPoly(2) * al.pow(2) - BiPoly(2) * al - BiPoly(6) * be - BiPoly(28),
                 BiPoly(2)};
    T.b_small = {BiPoly(), BiPoly(-2) - BiPoly(2) * be, BiPoly(14) - BiPoly(2) * be, BiPoly(2)};
    T.c_small = {BiPoly(), BiPoly(2) * al - BiPoly(2) * be - BiPoly(4), BiPoly(2)};

    for (int s = 0; s <= 4; ++s) T.Aa.push_back(T.A[static_cast<size_t>(s)] + T.a_small[static_cast<size_t>(s)]);
    for (int s = 0; s <= 3; ++s) T.Bb.push_back(T.B[static_cast<size_t>(s)] + T.b_small[static_cast<size_t>(s)]);
    for (int s = 0; s <= 2; ++s) T.Cc.push_back(T.C[static_cast<size_t>(s)] + T.c_small[static_cast<size_t>(s)]);

    // (2al-2be-4) lam (w')^2 + 2 lam^3 (w'')^2 with Delta_theta -> -mu; c0 = al, c1 = be, c2 = mu
    {
        DiffExpr A = DiffExpr::c(0), Bt = DiffExpr::c(1), mu = DiffExpr::c(2);
        DiffExpr w1 = DiffExpr::lam(2) * DiffExpr::f(3) + (A + DiffExpr(2)) * DiffExpr::lam(1) * DiffExpr::f(2) +
                      (A + Bt - mu) * DiffExpr::f(1);
        DiffExpr w2 = DiffExpr::lam(2) * DiffExpr::f(4) + (A + DiffExpr(4)) * DiffExpr::lam(1) * DiffExpr::f(3) +
                      (DiffExpr(2) * A + Bt + DiffExpr(2) - mu) * DiffExpr::f(2);
        DiffExpr lhs = (DiffExpr(2) * A - DiffExpr(2) * Bt - DiffExpr(4)) * DiffExpr::lam(1) * w1 * w1 +
                       DiffExpr(2) * DiffExpr::lam(3) * w2 * w2;
        Decomposition d = reduce_bilinear(lhs);
        check_no_mixed(d.quadratic, "small-coefficient integrand");
        std::vector<BiPoly> vals{T.alpha, T.beta, BiPoly(), BiPoly(), BiPoly(), BiPoly()};
        T.mu0.assign(5, BiPoly());
        T.mu1.assign(5, BiPoly());
        T.mu2.assign(5, BiPoly());
        for (int s = 1; s <= 4; ++s) {
            auto c = slot_coefficient(d.quadratic, s);
            T.mu0[static_cast<size_t>(s)] = to_bipoly(c, vals, 2, 0);
            T.mu1[static_cast<size_t>(s)] = to_bipoly(c, vals, 2, 1);
            T.mu2[static_cast<size_t>(s)] = to_bipoly(c, vals, 2, 2);
        }
    }
    return T;
}

const CascadeTable& cascade_table() {
    static const CascadeTable t = build_cascade_table();
    return t;
}

std::vector<Comparison> compare_with_printed(const CascadeTable& T) {
    std::vector<Comparison> out;
    auto cmp = [&](std::string sym, const BiPoly& computed, const BiPoly& printed, bool hard, std::string note = {}) {
        BiPoly d = computed - printed;
        out.push_back({std::move(sym), d.is_zero(), d, hard, std::move(note)});
    };
    const BiPoly a = T.a;

    // generators from the word expansion
    std::vector<BiPoly> F0 = {BiPoly(), BiPoly(3) * a * (a - BiPoly(2)) * (a - BiPoly(4)),
                              BiPoly(-3) * a * (a - BiPoly(2)) * (a - BiPoly(4)), a * (a - BiPoly(2)) * (a - BiPoly(7)),
                              BiPoly(3) * a * (a - BiPoly(2)), BiPoly(3) * a, BiPoly(1)};
    std::vector<BiPoly> F1 = {BiPoly(8) * a.pow(2) - BiPoly(64) * a + BiPoly(120),
                              BiPoly(60) * a - BiPoly(9) * a.pow(2) - BiPoly(96),
                              BiPoly(3) * a.pow(2) - BiPoly(24) * a + BiPoly(42), BiPoly(6) * a - BiPoly(12), BiPoly(3)};
    std::vector<BiPoly> F2 = {BiPoly(26) - BiPoly(6) * a, BiPoly(3) * a - BiPoly(12), BiPoly(3)};
    for (int j = 0; j <= 6; ++j) cmp("aF0_" + std::to_string(j), T.aF0[j], F0[j], false);
    for (int j = 0; j <= 4; ++j) cmp("bF1_" + std::to_string(j), T.bF1[j], F1[j], false);
    for (int j = 0; j <= 2; ++j) cmp("vF2_" + std::to_string(j), T.vF2[j], F2[j], false);

    // printed recursions for k_j, t_j, e_j
    {
        const auto& g = F0;
        auto P = rising;
        std::vector<BiPoly> kp = {
            P(6) * g[6] - P(5) * g[5] + P(4) * g[4] - P(3) * g[3] + P(2) * g[2] - K() * g[1],
            BiPoly(-6) * P(5) * g[6] + BiPoly(5) * P(4) * g[5] - BiPoly(4) * P(3) * g[4] + BiPoly(3) * P(2) * g[3] -
                BiPoly(2) * K() * g[2] + g[1],
            BiPoly(15) * P(4) * g[6] - BiPoly(10) * P(3) * g[5] + BiPoly(6) * P(2) * g[4] - BiPoly(3) * K() * g[3] + g[2],
            BiPoly(-20) * P(3) * g[6] + BiPoly(10) * P(2) * g[5] - BiPoly(4) * K() * g[4] + g[3],
            BiPoly(15) * P(2) * g[6] - BiPoly(5) * K() * g[5] + g[4],
            BiPoly(-6) * K() * g[6] + g[5],
            BiPoly(1)};
        for (int j = 0; j <= 6; ++j) cmp("k_" + std::to_string(j), T.k[j], kp[j], false);
        const auto& b = F1;
        std::vector<BiPoly> tp = {
            BiPoly(-1) * b[4] * P(4) + b[3] * P(3) - b[2] * P(2) + b[1] * K() - b[0],
            BiPoly(4) * b[4] * P(3) - BiPoly(3) * b[3] * P(2) + BiPoly(2) * b[2] * K() - b[1],
            BiPoly(-6) * b[4] * P(2) + BiPoly(3) * b[3] * K() - b[2],
            BiPoly(4) * b[4] * K() - b[3],
            -b[4]};
        for (int j = 0; j <= 4; ++j) cmp("t_" + std::to_string(j), T.t[j], tp[j], false);
        std::vector<BiPoly> ep = {BiPoly(3) * P(2) - (BiPoly(3) * a - BiPoly(12)) * K() + BiPoly(26) - BiPoly(6) * a,
                                  BiPoly(-6) * K() + BiPoly(3) * a - BiPoly(12), BiPoly(3)};
        for (int j = 0; j <= 2; ++j) cmp("e_" + std::to_string(j), T.e[j], ep[j], false);
    }

    // printed linear forms, coefficients of k_0..k_6
    {
        const long rowsA[5][7] = {{0, 0, 0, 0, 0, 0, 0},
                                  {-2, 6, -8, 24, -96, 480, -2280},
                                  {0, 0, 2, -12, 68, -440, 3240},
                                  {0, 0, 0, 0, -2, 26, -288},
                                  {0, 0, 0, 0, 0, 0, 2}};
        for (int s = 1; s <= 4; ++s) {
            BiPoly printed;
            for (int i = 0; i <= 6; ++i) printed += T.k[i] * Rational(rowsA[s][i]);
            cmp("A" + std::to_string(s) + "-linear-form", T.A[s], printed, false,
                "printed combination of k_0..k_6 evaluated on the cascade");
        }
        const long rowsB[4][5] = {{0, 0, 0, 0, 0}, {-2, 6, -8, 24, -96}, {0, 0, 2, -12, 68}, {0, 0, 0, 0, -2}};
        for (int s = 1; s <= 3; ++s) {
            BiPoly printed;
            for (int i = 0; i <= 4; ++i) printed += T.t[i] * Rational(rowsB[s][i]);
            cmp("B" + std::to_string(s) + "-linear-form", T.B[s], printed, false);
        }
        cmp("B3", T.B[3], BiPoly(6), false);
        const long rowsC[3][3] = {{0, 0, 0}, {-2, 6, -8}, {0, 0, 2}};
        for (int s = 1; s <= 2; ++s) {
            BiPoly printed;
            for (int i = 0; i <= 2; ++i) printed += T.e[i] * Rational(rowsC[s][i]);
            cmp("C" + std::to_string(s) + "-linear-form", T.C[s], printed, false);
        }
    }

    // small coefficients against the mu-split of their defining integrand
    for (int s = 1; s <= 4; ++s) cmp("a" + std::to_string(s) + "-vs-mu0", T.mu0[s], T.a_small[s], false);
    for (int s = 1; s <= 3; ++s)
        cmp("b" + std::to_string(s) + "-vs-mu1", T.mu1[s], T.b_small[s], false,
            "gradient weights from the mu-linear part; diagnostic only, assembly uses the printed b_s");
    cmp("b4-vs-mu1", T.mu1[4], BiPoly(), false);
    for (int s = 1; s <= 2; ++s) cmp("c" + std::to_string(s) + "-vs-mu2", T.mu2[s], T.c_small[s], false);
    cmp("c1-expanded", T.c_small[1], printed_closed_form("c1"), false);

    // section 7 closed forms
    for (int s = 1; s <= 4; ++s) cmp("Aa" + std::to_string(s), T.Aa[s], printed_closed_form("Aa" + std::to_string(s)), true);
    for (int s = 1; s <= 3; ++s) cmp("Bb" + std::to_string(s), T.Bb[s], printed_closed_form("Bb" + std::to_string(s)), true);
    cmp("C1", T.C[1], printed_closed_form("C1"), true);
    cmp("Cc2", T.Cc[2], printed_closed_form("Cc2"), true);
    cmp("A1", T.A[1], printed_closed_form("A1"), true, "printed expansion");
    cmp("a1", T.a_small[1], printed_closed_form("a1"), true, "printed expansion");
    return out;
}

FactorChecks factor_checks(const CascadeTable& T) {
    FactorChecks f;
    f.A1_difference = T.A[1] - printed_closed_form("A1-factored");
    f.a1_difference = T.a_small[1] - printed_closed_form("a1-factored");
    f.A1_ok = f.A1_difference.is_zero();
    f.a1_ok = f.a1_difference.is_zero();
    return f;
}

}  // namespace jl
