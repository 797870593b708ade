#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tqf/bigint.hpp"
#include "tqf/finite_field.hpp"

namespace tqf {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when exhaustive data contradicts the structure it must satisfy
/// (count not expressible in the sign form, radical routes disagreeing, ...).
struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultBudget = 50'000'000;

/// The curve y^q - y = x^{q^b+1} - x^{q^a+1} over F_q, q = p^r.
/// Normalized so that b > a >= 0; constructing with b < a swaps the terms,
/// which negates the form but keeps its zero set.
struct CurveParams {
    std::uint32_t p = 0;
    std::uint32_t r = 1;
    std::uint32_t b = 0;
    std::uint32_t a = 0;
    bool swapped = false;

    static CurveParams make(std::uint32_t p, std::uint32_t r, std::uint32_t b, std::uint32_t a);

    std::uint64_t q() const;       // p^r, guarded against overflow
    BigInt q_big() const { return big_pow(p, r); }
};

struct LinearizedTerm {
    std::uint32_t exp = 0;  // q-power Frobenius iterate
    int sign = 1;           // +1 or -1
};

/// Q(x) = Tr_{F_{q^n}/F_q}(x * L(x)) with L(x) = sum sign_i x^{q^{e_i}},
/// evaluated on the field of degree r*n over F_p.
struct QFormInstance {
    std::optional<CurveParams> params;  // set for the two-term family
    std::uint32_t r = 1;
    std::uint32_t n = 1;
    FieldSpec spec;
    SubfieldView view;
    std::vector<LinearizedTerm> terms;  // exponents reduced mod n
};

QFormInstance make_instance(const CurveParams& params, std::uint32_t n);
QFormInstance make_general_instance(std::uint32_t p, std::uint32_t r, std::uint32_t n,
                                    std::vector<LinearizedTerm> terms);

/// Slow reference evaluation with generic field operations; the counting
/// kernel never goes through this path.
FieldElement eval_form(const QFormInstance& inst, const FieldElement& x);

BigInt count_zeros(const QFormInstance& inst, std::uint64_t budget = kDefaultBudget,
                   std::uint32_t workers = 0);

/// Counts per level c of Q, indexed by the subfield index of c. Sums to q^n.
std::vector<BigInt> count_level_sets(const QFormInstance& inst,
                                     std::uint64_t budget = kDefaultBudget,
                                     std::uint32_t workers = 0);

/// Radical dimension over F_q via the Gram matrix of an F_q-basis
/// (entries B(x,y) = Q(x+y) - Q(x) - Q(y), evaluated with generic field ops).
std::uint32_t radical_dim_gram(const QFormInstance& inst);

/// Radical dimension via the kernel of x^{q^{2b}} - x^{q^{a+b}} - x^{q^{b-a}} + x.
std::uint32_t radical_dim_kernel(const CurveParams& params, std::uint32_t n);
std::uint32_t radical_dim_kernel(const QFormInstance& inst);

/// The unique lambda in {-1,0,1} with N = q^{n-1} + lambda (q-1) q^{(n+w)/2-1};
/// when n+w is odd, N must equal q^{n-1}. Throws OracleError otherwise.
int extract_sign(const BigInt& zeros, const BigInt& q, std::uint32_t n, std::uint32_t w);

BigInt curve_points(const BigInt& zeros, const BigInt& q);

struct OracleResult {
    std::uint32_t n = 0;
    BigInt zeros;
    std::uint32_t w = 0;
    int lambda = 0;
    BigInt points;
};

/// Exhaustive count plus radical dimension (both routes, cross-checked) and sign.
OracleResult run_oracle(const QFormInstance& inst, std::uint64_t budget = kDefaultBudget,
                        std::uint32_t workers = 0);

enum class CheckResult { Pass, Fail, NotApplicable };

/// Signs of y^{q^d} - y = xL(x) over F_{(q^d)^n} and of y^q - y = xL(x) over
/// F_{q^{dn}}, with L(x) = x^{(q^d)^b} - x^{(q^d)^a}. When the first sign is
/// nonzero the two must agree.
std::pair<int, int> descent_check(const CurveParams& params, std::uint32_t d, std::uint32_t n,
                                  std::uint64_t budget = kDefaultBudget,
                                  std::uint32_t workers = 0);

/// lambda_n = lambda_{n*ell} * q^{(n(ell-1)+w_{n*ell}-w_n)/2} (mod ell), both
/// sides from exhaustive counts. Both signs zero passes trivially; exactly one
/// zero is NotApplicable.
CheckResult congruence_check(const CurveParams& params, std::uint32_t n, std::uint32_t ell,
                             std::uint64_t budget = kDefaultBudget,
                             std::uint32_t workers = 0);

} // namespace tqf
