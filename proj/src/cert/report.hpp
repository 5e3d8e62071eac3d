#pragma once

#include "cascade/cascade.hpp"
#include "cert/lemmas.hpp"
#include "exponents/exponents.hpp"

#include "json.hpp"

#include <cstdint>

namespace jl {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& w) : std::invalid_argument("UsageError: " + w) {}
};

json poly_json(const UPoly& p);     // rational strings, low degree first
UPoly poly_from_json(const json& j);
json bipoly_json(const BiPoly& p);  // k-degree-major: entry i is the n-polynomial multiplying k^i
json interval_json(const RInterval& x);

json to_json(const InstanceCertificate& c);
InstanceCertificate instance_from_json(const json& j);
json to_json(const LemmaReport& r);
LemmaReport lemma_report_from_json(const json& j);
bool same(const InstanceCertificate& a, const InstanceCertificate& b);
bool same(const LemmaReport& a, const LemmaReport& b);

// recheck a serialized certificate from its own fields
bool reverify_instance(const InstanceCertificate& c);

struct FuzzResult {
    long instances = 0;
    long samples = 0;
    long contradictions = 0;
    std::vector<std::string> details;
};
// random rationals in the open interval of every issued certificate
FuzzResult fuzz_certificates(const std::vector<InstanceCertificate>& certs, long samples_per_instance = 10000,
                             std::uint64_t seed = 0x5eed);

struct FullReport {
    long n_lo = 9, n_hi = 120;
    mpfr_prec_t precision = 256;
    std::vector<LemmaReport> lemmas;
    bool bb2_exceptions_exact = false;  // Bb2 fails exactly on {17, 18} within range
    bool pass = false;
    std::vector<std::string> errata;
};
FullReport full_report(long n_lo, long n_hi, mpfr_prec_t P = 256);
json to_json(const FullReport& r);
std::vector<InstanceCertificate> all_instances(const FullReport& r);

// enclosure rendered with as many digits as its width supports
std::string render_lo(const RInterval& x);
std::string render_hi(const RInterval& x);

json exponent_json(const ExponentRecord& r);
std::string table_csv(const std::vector<ExponentRecord>& rows);
json table_json(const std::vector<ExponentRecord>& rows);

json comparisons_json(const std::vector<Comparison>& c);
json identities_json(bool& all_ok);
json cascade_dump_json();
json spectral_dump_json();

struct GammaRow {
    long n = 0;
    RInterval residual;
    bool ok = false;
};
std::vector<GammaRow> gamma_check(long n_lo, long n_hi, const Rational& tol, mpfr_prec_t P = 256);
json gamma_json(const std::vector<GammaRow>& rows, const Rational& tol);

// identities + printed-form comparisons + full_report + exponent table 9..120
json full_verification_report(long n_lo, long n_hi, mpfr_prec_t P, bool& ok);

}  // namespace jl
