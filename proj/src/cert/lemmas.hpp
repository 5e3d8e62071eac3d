#pragma once

#include "algebra/bipoly.hpp"
#include "algebra/interval.hpp"
#include "algebra/sturm.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jl {

struct CertificationFailure : std::runtime_error {
    CertificationFailure(const std::string& w, long n_, std::optional<RootBracket> r)
        : std::runtime_error("CertificationFailure: " + w), n(n_), root(std::move(r)) {}
    long n;
    std::optional<RootBracket> root;
};
struct UnknownLemma : std::invalid_argument {
    explicit UnknownLemma(const std::string& w) : std::invalid_argument("UnknownLemma: " + w) {}
};

enum class KInterval {
    Full,        // (0, (n-8)/2)
    R1ToEnd,     // (max(0, R1), (n-8)/2)
    SqrtToEnd,   // (max(0, (n-10)/2 - sqrt n), (n-8)/2)
    R1R2,        // (R1, R2)
    SqrtWindow,  // ((n-10)/2 - sqrt n, (n-10)/2 + sqrt n)
};
std::string to_string(KInterval k);

enum class Method { SturmPerN, TSubstitution, Parameterized };
std::string to_string(Method m);

struct RationalInterval {
    Rational lo, hi;
    std::string note;
};
// rational outer bounds of the k-interval at n
RationalInterval resolve_interval(KInterval kind, long n, mpfr_prec_t P = 256);

struct LemmaSpec {
    std::string id;
    std::string summary;
    std::vector<std::string> targets;  // symbols certified positive on each n
    long n_lo = 9;
    long n_hi = -1;  // -1: up to the configured maximum
    std::vector<long> exceptions;  // expected failures
    Method method = Method::SturmPerN;
    // interval per n
    KInterval (*interval)(long n) = nullptr;
    long tail_from = -1;  // t-substitution proof covers n >= tail_from
};

const std::vector<LemmaSpec>& registry();
const LemmaSpec& find_lemma(const std::string& id);

// polynomial by symbol: Aa1..4, Bb1..3, C1, c1, W1..3, Bb2+4Bb3
BiPoly lemma_target(const std::string& symbol);

struct InstanceCertificate {
    std::string lemma_id;
    std::string target;
    long n = 0;
    RationalInterval interval;
    std::vector<mpz_class> polynomial;  // primitive integer form, low degree first
    std::string method;
    int root_count = 0;
    int midpoint_sign = 0;
    bool result = false;
    bool expected_failure = false;
    mpfr_prec_t precision = 256;
    std::optional<RootBracket> offending;
    std::vector<std::string> errata;
    Sign claimed = Sign::Positive;
};

struct TailProof {
    std::string target;
    std::string kind;            // "envelope" or "root-condition"
    long n_from = 0;
    Rational t0;                 // rational lower bound of sqrt(n_from)
    Rational a_lo, a_hi;         // envelope: a-range
    UPoly bound;                 // polynomial in t certified positive on (t0, inf)
    bool pass = false;
    std::string note;
};

struct AuxiliaryCheck {
    std::string target;
    UPoly printed, derived;      // in t
    bool equivalent = false;     // same up to a positive factor
    bool printed_holds = false;  // on its stated range
    Rational printed_from;       // t lower bound
    std::string note;
};

// decimal constant from the text against a certified enclosure
struct ConstantCheck {
    std::string name;
    std::string printed;
    Rational lo, hi;     // enclosure of the recomputed quantity
    Rational tolerance;
    bool reproduced = false;
    std::string note;
};

struct LemmaReport {
    std::string id;
    bool pass = false;
    bool applicable = true;  // false when no instance or tail falls in the requested range
    std::vector<InstanceCertificate> instances;
    std::vector<long> failed_n;
    bool exceptions_confirmed = true;
    std::vector<TailProof> tails;
    std::vector<AuxiliaryCheck> auxiliary;
    std::vector<ConstantCheck> constants;
    std::vector<std::string> notes;
};

struct CertifyOptions {
    long n_lo = 9, n_hi = 200;
    mpfr_prec_t precision = 256;
};

// throws CertificationFailure at the first failed instance, expected or not
void require_certified(const LemmaReport& r);

// Per-n Sturm certification plus the asymptotic tail proofs. Never throws on a
// failed instance; the report carries it.
LemmaReport certify_lemma(const std::string& id, const CertifyOptions& opt = {});

// Single instance helper used by the lemma and parameter checks.
InstanceCertificate certify_instance(const std::string& lemma, const std::string& target, long n, const UPoly& p,
                                     const RationalInterval& iv, Sign claimed = Sign::Positive);

struct MinResult {
    bool exact = false;
    Rational value;          // when exact
    Rational lo, hi;         // enclosure otherwise (lo == hi == value when exact)
    RootBracket argmin;
};
MinResult minimize_on_interval(const UPoly& p, const Rational& a, const Rational& b);

// envelope proof: p(k := (n-10)/2 - a t, n := t^2) > 0 for a in [a_lo, a_hi], t > t0
TailProof envelope_tail(const std::string& target, const BiPoly& p, const Rational& a_lo, const Rational& a_hi,
                        long n_from);
// concave quadratic: both roots outside ((n-10)/2 - sqrt n, (n-8)/2) for n >= n_from
TailProof root_condition_tail(const std::string& target, const BiPoly& q, long n_from);
// t-polynomial equivalent to "smaller root < (n-10)/2 - sqrt n"
UPoly root_condition_polynomial(const BiPoly& q);

// rational r <= sqrt(n) (exact check), close to it
Rational sqrt_lower(long n);
Rational outer_lo(const RInterval& x);
Rational outer_hi(const RInterval& x);

}  // namespace jl
