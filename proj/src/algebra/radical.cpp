#include "algebra/radical.hpp"

#include <optional>
#include <vector>

namespace jl {

struct RExpr::Node {
    Op op;
    Rational c;
    UPoly p;
    std::vector<std::shared_ptr<const Node>> kids;
};

namespace {
using NodeP = std::shared_ptr<const RExpr::Node>;
}

struct RExprAccess {
    static NodeP node(const RExpr& e) { return e.node_; }
    static RExpr make(RExpr::Op op, std::vector<NodeP> kids, Rational c = Rational(0), UPoly p = UPoly()) {
        auto n = std::make_shared<RExpr::Node>();
        n->op = op;
        n->c = std::move(c);
        n->p = std::move(p);
        n->kids = std::move(kids);
        return RExpr(std::move(n));
    }
};

RExpr RExpr::constant(const Rational& c) { return RExprAccess::make(Op::Const, {}, c); }
RExpr RExpr::param() { return RExprAccess::make(Op::N, {}); }
RExpr RExpr::poly(const UPoly& p) { return RExprAccess::make(Op::Poly, {}, Rational(0), p); }
RExpr RExpr::sqrt(const RExpr& a) { return RExprAccess::make(Op::Sqrt, {a.node_}); }
RExpr RExpr::cbrt(const RExpr& a) { return RExprAccess::make(Op::Cbrt, {a.node_}); }
RExpr RExpr::gamma(const RExpr& a) { return RExprAccess::make(Op::Gamma, {a.node_}); }
RExpr operator+(const RExpr& a, const RExpr& b) { return RExprAccess::make(RExpr::Op::Add, {a.node_, b.node_}); }
RExpr operator-(const RExpr& a, const RExpr& b) { return RExprAccess::make(RExpr::Op::Sub, {a.node_, b.node_}); }
RExpr operator*(const RExpr& a, const RExpr& b) { return RExprAccess::make(RExpr::Op::Mul, {a.node_, b.node_}); }
RExpr operator/(const RExpr& a, const RExpr& b) { return RExprAccess::make(RExpr::Op::Div, {a.node_, b.node_}); }
RExpr RExpr::operator-() const { return RExprAccess::make(Op::Neg, {node_}); }
RExpr::Op RExpr::op() const { return node_->op; }

namespace {

std::string render(const NodeP& n) {
    using Op = RExpr::Op;
    switch (n->op) {
        case Op::Const: return n->c.pretty();
        case Op::N: return "n";
        case Op::Poly: return "(" + n->p.str("n") + ")";
        case Op::Add: return "(" + render(n->kids[0]) + " + " + render(n->kids[1]) + ")";
        case Op::Sub: return "(" + render(n->kids[0]) + " - " + render(n->kids[1]) + ")";
        case Op::Mul: return render(n->kids[0]) + "*" + render(n->kids[1]);
        case Op::Div: return render(n->kids[0]) + "/" + render(n->kids[1]);
        case Op::Neg: return "-" + render(n->kids[0]);
        case Op::Sqrt: return "sqrt(" + render(n->kids[0]) + ")";
        case Op::Cbrt: return "cbrt(" + render(n->kids[0]) + ")";
        case Op::Gamma: return "Gamma(" + render(n->kids[0]) + ")";
    }
    return "?";
}

// Shared subexpressions are evaluated once per call.
struct Evaluator {
    const Rational& n;
    mpfr_prec_t P;
    std::vector<std::pair<const RExpr::Node*, RInterval>> memo;

    RInterval eval(const NodeP& p) {
        for (auto& m : memo)
            if (m.first == p.get()) return m.second;
        RInterval v = compute(p);
        memo.emplace_back(p.get(), v);
        return v;
    }

    RInterval compute(const NodeP& p) {
        using Op = RExpr::Op;
        switch (p->op) {
            case Op::Const: return RInterval(p->c, P);
            case Op::N: return RInterval(n, P);
            case Op::Poly: return RInterval(p->p.eval(n), P);
            case Op::Add: return eval(p->kids[0]) + eval(p->kids[1]);
            case Op::Sub: return eval(p->kids[0]) - eval(p->kids[1]);
            case Op::Mul: return eval(p->kids[0]) * eval(p->kids[1]);
            case Op::Div: return eval(p->kids[0]) / eval(p->kids[1]);
            case Op::Neg: return -eval(p->kids[0]);
            case Op::Sqrt: return eval(p->kids[0]).sqrt();
            case Op::Cbrt: return eval(p->kids[0]).cbrt();
            case Op::Gamma: return gamma_enclosure(eval(p->kids[0]));
        }
        throw std::logic_error("bad RExpr node");
    }
};

}  // namespace

std::string RExpr::str() const { return render(node_); }

RInterval interval_eval(const RExpr& e, const Rational& n, mpfr_prec_t P) {
    Evaluator ev{n, P, {}};
    return ev.eval(e.node_);
}

AdaptiveResult interval_eval_adaptive(const RExpr& e, const Rational& n, mpfr_prec_t P0, mpfr_prec_t Pmax,
                                      const std::function<bool(const RInterval&)>& accept) {
    std::optional<RInterval> best;
    std::string last_error;
    bool radicand_failure = false;
    for (mpfr_prec_t P = P0; P <= Pmax; P *= 2) {
        try {
            RInterval v = interval_eval(e, n, P);
            best = best ? v.intersect(best->with_precision(P)) : v;
            if (!accept || accept(*best)) return {*best, P};
        } catch (const NegativeRadicand& ex) {
            last_error = ex.what();
            radicand_failure = true;
        } catch (const DivisionByZeroInterval& ex) {
            last_error = ex.what();
        }
    }
    if (!best && radicand_failure) throw NegativeRadicand(last_error + " (after refinement to " + std::to_string(Pmax) + " bits)");
    throw PrecisionExhausted("no acceptable enclosure up to " + std::to_string(Pmax) + " bits" +
                             (last_error.empty() ? "" : ": " + last_error));
}

}  // namespace jl
