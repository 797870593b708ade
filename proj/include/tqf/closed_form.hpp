#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tqf/bigint.hpp"
#include "tqf/qform.hpp"

namespace tqf {

// ---- integer helpers ----

/// Largest e with ell^e | m. ell must be prime, m >= 1.
std::uint32_t val_of(std::uint64_t ell, std::uint64_t m);

/// Legendre symbol (a/p) for an odd prime p.
int legendre(std::int64_t a, std::uint64_t p);

/// ((-1)^((t-1)/2) * t / p) for odd t; the character showing up when a
/// count is transported across an odd-degree step.
int theta_factor(std::uint64_t t, std::uint64_t p);

/// Radical dimension of Tr(x^{q^b+1} - x^{q^a+1}) on F_{q^n}:
/// (b+a,n) + (b-a,n) - (b+a,b-a,n), dropping the last term when
/// nu_p(n) > max(nu_p(b+a), nu_p(b-a)).
std::uint32_t radical_dim_formula(const CurveParams& params, std::uint32_t n);

// ---- corrections ledger ----

/// The sign tables transcribed from the literature carry misprints; every
/// adjudicated override is recorded here as branch-id -> lambda rule, where a
/// rule is one of "+1", "-1", "0", "(-1)^((q+1)/2)", "(-1)^((q-1)/2)", "b0".
struct LedgerEntry {
    std::string branch;
    std::string original;
    std::string corrected;
    std::string evidence;
};

class CorrectionLedger {
public:
    /// Adjudicated defaults shipped with the library.
    static const CorrectionLedger& builtin();
    /// Tables exactly as printed, no overrides.
    static CorrectionLedger raw();
    /// Text format: `branch | original | corrected | evidence`, '#' comments.
    static CorrectionLedger load_file(const std::string& path);

    std::optional<std::string> override_for(const std::string& branch) const;
    const std::vector<LedgerEntry>& entries() const { return entries_; }
    void add(LedgerEntry e);

private:
    std::vector<LedgerEntry> entries_;
    std::map<std::string, std::string> by_branch_;
};

// ---- predictions ----

enum class PredictionStatus { Covered, OutsideTheorem };

struct Prediction {
    std::uint32_t n = 0;
    std::uint32_t w = 0;
    std::optional<int> lambda;
    std::optional<BigInt> zeros;
    std::optional<BigInt> points;
    std::string branch;
    PredictionStatus status = PredictionStatus::OutsideTheorem;

    bool covered() const { return status == PredictionStatus::Covered; }
};

struct SignResult {
    std::optional<int> lambda;
    std::string branch;
};

/// Sign of C_{q,b,0} at degree n (table dispatch on nu_2(b)).
SignResult sign_b0(const CurveParams& params, std::uint32_t n,
                   const CorrectionLedger& ledger = CorrectionLedger::builtin());

/// Sign of C_{q,b,a}, a >= 1; hypothesis nu_2(a) != nu_2(b).
SignResult sign_ba(const CurveParams& params, std::uint32_t n,
                   const CorrectionLedger& ledger = CorrectionLedger::builtin());

Prediction predict(const CurveParams& params, std::uint32_t n,
                   const CorrectionLedger& ledger = CorrectionLedger::builtin());

/// Literal transcription of the published case tables (hypothesis set v0):
/// dispatch on gcd with the printed modulus and the rows exactly as printed.
/// Known to disagree with exhaustive counts on several rows; kept so the
/// verify sweep can document them.
Prediction predict_printed_tables(const CurveParams& params, std::uint32_t n);

/// Transport of t_m = #X(F_{q^m}) - (q^m+1) from degree m to degree n = m*t:
/// q^{(n-m)/2} * t_m * factor, factor 1 when m*r is even, otherwise
/// theta(t,p) (or 1 when p | t).
BigInt reduce_difference(const BigInt& t_m, std::uint32_t m, std::uint32_t t,
                         const CurveParams& params);

enum class Classification { Minimal, Maximal, Neither };

Classification classify(const CurveParams& params, std::uint32_t n,
                        const CorrectionLedger& ledger = CorrectionLedger::builtin());
Classification classify_oracle(const CurveParams& params, const OracleResult& res);

struct PeriodInfo {
    std::uint32_t s = 0;        // smallest degree where the curve is minimal
    std::uint32_t witness = 0;  // degree at which minimality was established
    bool maximal_half = false;  // maximal over F_{q^{s/2}}
};

/// Scans degrees for the first minimal one. scan_bound 0 means the default
/// 4 * p * lcm(b+a, b-a).
PeriodInfo find_period(const CurveParams& params,
                       const CorrectionLedger& ledger = CorrectionLedger::builtin(),
                       std::uint64_t scan_bound = 0);

/// t_n = lambda (q-1) q^{(n+w)/2} for a covered prediction (0 when lambda=0).
BigInt prediction_difference(const CurveParams& params, const Prediction& pred);

} // namespace tqf
