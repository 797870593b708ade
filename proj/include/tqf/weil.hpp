#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tqf/bigint.hpp"
#include "tqf/qform.hpp"

namespace tqf {

enum class CountSource { Oracle, Predicted };

struct CountEntry {
    std::uint32_t n = 0;
    BigInt points;
    CountSource source = CountSource::Oracle;
};

/// Point counts #X(F_{q^n}) for n = 1..N, contiguous from 1.
struct CountSequence {
    CurveParams params;
    std::vector<CountEntry> entries;

    const CountEntry* at(std::uint32_t n) const;
    /// t_n = #X(F_{q^n}) - (q^n + 1)
    std::optional<BigInt> diff_at(std::uint32_t n) const;
};

/// (q-1) q^b / 2 for y^q - y = x^{q^b+1} - x^{q^a+1} (deg q^b+1 prime to p).
std::uint64_t genus(const CurveParams& params);

/// Numerator of the zeta function: prod (1 - eta_i T), degree 2g, integer
/// coefficients, constant term 1.
struct LPoly {
    std::uint32_t g = 0;
    std::vector<BigInt> coeffs;  // 2g+1 entries
};

/// Newton's identities on the power sums s_n = q^n + 1 - #X(F_{q^n}).
/// Needs oracle-sourced entries for n = 1..2g; every division must be exact.
LPoly lpoly_from_counts(const CountSequence& cs);

/// Core reconstruction from power sums of the Frobenius eigenvalues.
LPoly lpoly_from_power_sums(const std::vector<BigInt>& power_sums, std::uint32_t g);

/// c_{2g-i} = q^{g-i} c_i for all i.
bool check_functional_equation(const LPoly& L, const BigInt& q);

/// Point counts for n = 1..n_max implied by L (inverse of the reconstruction).
std::vector<BigInt> counts_from_lpoly(const LPoly& L, const BigInt& q, std::uint32_t n_max);

/// Period/supersingularity consistency: t_{n+s} = q^{s/2} t_n for every pair
/// of entries s apart, and t_s = -2g q^{s/2}. Requires s*r even and an entry
/// at s.
bool check_supersingular_period(const CountSequence& cs, std::uint32_t s);

/// For a curve maximal over F_{q^{s/2}} (established from the entries), and n
/// with gcd(n, s/2) != gcd(n, s): t_n = -q^{n/4} * t_{n/2}.
CheckResult halving_reduction_check(const CountSequence& cs, std::uint32_t s, std::uint32_t n);

/// Maximal over F_{q^{2n}} forces #X(F_{q^n}) = q^n + 1.
CheckResult maximal_half_count_check(const CountSequence& cs, std::uint32_t n);

} // namespace tqf
