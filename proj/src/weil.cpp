#include "tqf/weil.hpp"

#include <numeric>
#include <stdexcept>

namespace tqf {

const CountEntry* CountSequence::at(std::uint32_t n) const {
    for (const auto& e : entries)
        if (e.n == n) return &e;
    return nullptr;
}

std::optional<BigInt> CountSequence::diff_at(std::uint32_t n) const {
    const CountEntry* e = at(n);
    if (!e) return std::nullopt;
    return e->points - (big_pow(params.p, static_cast<std::uint64_t>(params.r) * n) + 1);
}

std::uint64_t genus(const CurveParams& params) {
    BigInt g = (params.q_big() - 1) * big_pow(params.p, static_cast<std::uint64_t>(params.r) * params.b) / 2;
    if (g > BigInt(std::uint64_t(1) << 62)) throw std::overflow_error("genus: too large");
    return static_cast<std::uint64_t>(g);
}

LPoly lpoly_from_power_sums(const std::vector<BigInt>& power_sums, std::uint32_t g) {
    if (power_sums.size() < 2 * g)
        throw std::invalid_argument("lpoly_from_power_sums: need 2g power sums");
    std::vector<BigInt> e(2 * g + 1);
    e[0] = 1;
    for (std::uint32_t k = 1; k <= 2 * g; ++k) {
        BigInt acc = 0;
        for (std::uint32_t i = 1; i <= k; ++i) {
            BigInt term = e[k - i] * power_sums[i - 1];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (acc % k != 0)
            throw OracleError("lpoly_from_power_sums: non-integral Newton division at k=" +
                              std::to_string(k) + " (wrong genus or bad counts)");
        e[k] = acc / k;
    }
    LPoly L;
    L.g = g;
    L.coeffs.resize(2 * g + 1);
    for (std::uint32_t j = 0; j <= 2 * g; ++j) L.coeffs[j] = (j % 2 == 0) ? e[j] : -e[j];
    return L;
}

LPoly lpoly_from_counts(const CountSequence& cs) {
    std::uint32_t g32 = static_cast<std::uint32_t>(genus(cs.params));
    std::vector<BigInt> ps;
    for (std::uint32_t n = 1; n <= 2 * g32; ++n) {
        const CountEntry* e = cs.at(n);
        if (!e)
            throw std::invalid_argument("lpoly_from_counts: missing count at n=" + std::to_string(n));
        if (e->source != CountSource::Oracle)
            throw std::invalid_argument(
                "lpoly_from_counts: entry at n=" + std::to_string(n) +
                " is predicted; reconstruction accepts exhaustive counts only");
        BigInt qn = big_pow(cs.params.p, static_cast<std::uint64_t>(cs.params.r) * n);
        ps.push_back(qn + 1 - e->points);
    }
    return lpoly_from_power_sums(ps, g32);
}

bool check_functional_equation(const LPoly& L, const BigInt& q) {
    if (L.coeffs.size() != 2 * static_cast<std::size_t>(L.g) + 1) return false;
    if (L.coeffs[0] != 1) return false;
    for (std::uint32_t i = 0; i <= L.g; ++i) {
        BigInt qpow = 1;
        for (std::uint32_t j = 0; j < L.g - i; ++j) qpow *= q;
        if (L.coeffs[2 * L.g - i] != qpow * L.coeffs[i]) return false;
    }
    return true;
}

std::vector<BigInt> counts_from_lpoly(const LPoly& L, const BigInt& q, std::uint32_t n_max) {
    // recover power sums from the elementary symmetric functions, then counts
    std::vector<BigInt> e(2 * L.g + 1);
    for (std::uint32_t j = 0; j <= 2 * L.g; ++j) e[j] = (j % 2 == 0) ? L.coeffs[j] : -L.coeffs[j];
    std::vector<BigInt> ps(n_max + 1);
    for (std::uint32_t k = 1; k <= n_max; ++k) {
        BigInt acc = 0;
        for (std::uint32_t i = 1; i < k && i <= 2 * L.g; ++i) {
            BigInt term = e[i] * ps[k - i];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (k <= 2 * L.g) {
            BigInt term = k * e[k];
            acc += (k % 2 == 1) ? term : -term;
        }
        ps[k] = acc;
    }
    std::vector<BigInt> counts(n_max);
    BigInt qn = 1;
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        qn *= q;
        counts[n - 1] = qn + 1 - ps[n];
    }
    return counts;
}

bool check_supersingular_period(const CountSequence& cs, std::uint32_t s) {
    if (s == 0) throw std::invalid_argument("check_supersingular_period: s must be positive");
    if ((static_cast<std::uint64_t>(s) * cs.params.r) % 2 != 0)
        throw std::invalid_argument("check_supersingular_period: q^{s/2} is not integral");
    auto ts = cs.diff_at(s);
    if (!ts) throw std::invalid_argument("check_supersingular_period: no entry at n=s");
    BigInt qhalf = big_pow(cs.params.p, static_cast<std::uint64_t>(cs.params.r) * s / 2);
    BigInt two_g = 2 * BigInt(genus(cs.params));
    if (*ts != -two_g * qhalf) return false;
    std::uint32_t max_n = 0;
    for (const auto& e : cs.entries) max_n = std::max(max_n, e.n);
    for (std::uint32_t n = 1; n + s <= max_n; ++n) {
        auto tn = cs.diff_at(n);
        auto tns = cs.diff_at(n + s);
        if (!tn || !tns) continue;
        if (*tns != qhalf * *tn) return false;
    }
    return true;
}

CheckResult halving_reduction_check(const CountSequence& cs, std::uint32_t s, std::uint32_t n) {
    const auto& pr = cs.params;
    if (s % 2 != 0 || n % 2 != 0) return CheckResult::NotApplicable;
    const std::uint32_t sp = s / 2;
    if (std::gcd(n, sp) == std::gcd(n, s)) return CheckResult::NotApplicable;
    // maximality over F_{q^{s/2}} established from the data
    if ((static_cast<std::uint64_t>(pr.r) * sp) % 2 != 0) return CheckResult::NotApplicable;
    auto t_half_period = cs.diff_at(sp);
    if (!t_half_period) return CheckResult::NotApplicable;
    BigInt two_g = 2 * BigInt(genus(pr));
    if (*t_half_period != two_g * big_pow(pr.p, static_cast<std::uint64_t>(pr.r) * sp / 2))
        return CheckResult::NotApplicable;
    if ((static_cast<std::uint64_t>(pr.r) * n) % 4 != 0) return CheckResult::NotApplicable;
    auto tn = cs.diff_at(n);
    auto th = cs.diff_at(n / 2);
    if (!tn || !th) return CheckResult::NotApplicable;
    BigInt qq = big_pow(pr.p, static_cast<std::uint64_t>(pr.r) * n / 4);
    return (*tn == -qq * *th) ? CheckResult::Pass : CheckResult::Fail;
}

CheckResult maximal_half_count_check(const CountSequence& cs, std::uint32_t n) {
    const auto& pr = cs.params;
    auto t2n = cs.diff_at(2 * n);
    if (!t2n) return CheckResult::NotApplicable;
    BigInt two_g = 2 * BigInt(genus(pr));
    if (*t2n != two_g * big_pow(pr.p, static_cast<std::uint64_t>(pr.r) * n))
        return CheckResult::NotApplicable;  // not maximal over F_{q^{2n}}
    const CountEntry* e = cs.at(n);
    if (!e) return CheckResult::NotApplicable;
    BigInt qn = big_pow(pr.p, static_cast<std::uint64_t>(pr.r) * n);
    return (e->points == qn + 1) ? CheckResult::Pass : CheckResult::Fail;
}

} // namespace tqf
