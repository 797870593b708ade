#include "tqf/closed_form.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tqf {

namespace {

std::uint64_t modpow_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    unsigned __int128 r = 1, b = base % m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(r);
}

// q = p^r mod 4 without computing q
int q_mod4(std::uint32_t p, std::uint32_t r) {
    if (p % 4 == 1) return 1;
    return (r % 2 == 0) ? 1 : 3;
}

std::string trim_copy(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

std::uint32_t val_of(std::uint64_t ell, std::uint64_t m) {
    if (!is_prime_u64(ell)) throw std::invalid_argument("val_of: ell must be prime");
    if (m == 0) throw std::invalid_argument("val_of: m must be positive");
    std::uint32_t e = 0;
    while (m % ell == 0) {
        m /= ell;
        ++e;
    }
    return e;
}

int legendre(std::int64_t a, std::uint64_t p) {
    if (!is_prime_u64(p) || p == 2) throw std::invalid_argument("legendre: p must be an odd prime");
    std::int64_t red = a % static_cast<std::int64_t>(p);
    if (red < 0) red += p;
    if (red == 0) return 0;
    std::uint64_t e = modpow_u64(static_cast<std::uint64_t>(red), (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::logic_error("legendre: euler criterion failed");
}

int theta_factor(std::uint64_t t, std::uint64_t p) {
    if (t % 2 == 0) throw std::invalid_argument("theta_factor: t must be odd");
    std::int64_t signed_t = static_cast<std::int64_t>(t % p);
    if (((t - 1) / 2) % 2 == 1) signed_t = -signed_t;
    return legendre(signed_t, p);
}

std::uint32_t radical_dim_formula(const CurveParams& params, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("radical_dim_formula: n must be positive");
    const std::uint64_t B = params.b + params.a;
    const std::uint64_t A = params.b - params.a;
    std::uint64_t gB = std::gcd<std::uint64_t>(B, n);
    std::uint64_t gA = std::gcd<std::uint64_t>(A, n);
    std::uint64_t gBA = std::gcd(std::gcd(B, A), static_cast<std::uint64_t>(n));
    std::uint32_t vp_n = val_of(params.p, n);
    std::uint32_t vp_max = std::max(val_of(params.p, B), val_of(params.p, A));
    if (vp_n <= vp_max) return static_cast<std::uint32_t>(gB + gA - gBA);
    return static_cast<std::uint32_t>(gB + gA);
}

// ---- corrections ledger ----

void CorrectionLedger::add(LedgerEntry e) {
    by_branch_[e.branch] = e.corrected;
    entries_.push_back(std::move(e));
}

std::optional<std::string> CorrectionLedger::override_for(const std::string& branch) const {
    auto it = by_branch_.find(branch);
    if (it == by_branch_.end()) return std::nullopt;
    return it->second;
}

const CorrectionLedger& CorrectionLedger::builtin() {
    // Adjudications of the published case tables against exhaustive counts
    // (`tqf verify --raw-paper-tables` reproduces the failures). The default
    // predictor already embodies the corrected reading, so these entries are
    // the audit record; they use the printed row ids and never collide with
    // the live dispatch, which a user ledger may still override.
    static const CorrectionLedger ledger = [] {
        CorrectionLedger l;
        l.add({"b0-k2(printed)/v2=2,vp<=l", "(-1)^((q-1)/2)", "+1",
               "m | b makes the form vanish identically; oracle: (3,1,4,0) n=4 has 81 zeros on "
               "F_81, same at n=8,16 and for (7,1,4,0) n=4,8"});
        l.add({"b0-k2(printed)/v2=1,vp=l+1", "(-1)^((q+1)/2)", "(-1)^((q+1)/2)",
               "table value confirmed against the (-1)^(p+1) variant stated in its derivation; "
               "oracle: (5,1,4,0) n=10 gives lambda=-1"});
        l.add({"b0-k1(printed)/v2=2,vp<=l", "(-1)^((q-1)/2)", "(-1)^((q-1)/2)",
               "confirmed; oracle: (3,1,2,0) n=4 lambda=-1, (5,1,2,0) n=4 lambda=+1, "
               "(7,1,2,0) n=4 lambda=-1"});
        l.add({"ba(printed)/s-modulus", "p*lcm(b+a,b-a), doubled only for min(nu2)=1 and p=1 mod 4",
               "doubled whenever odd, then again when the curve is maximal at that degree",
               "an odd modulus feeds theta an even argument; oracle: (3,1,2,1) n=2 and every "
               "even degree of that family"});
        l.add({"ba(printed)/v2>=1,vp<=l", "+1", "0 when m + w_m is odd",
               "oracle: (3,1,2,1) n=2 has 3 zeros on F_9, so lambda=0"});
        l.add({"ba(printed)/v2=0,vp=l+1", "0", "re-dispatch on the even modulus",
               "oracle: (3,1,3,2) n=6 lambda=-1, (5,1,2,1) n=10 lambda=+1"});
        l.add({"ba(printed)/v2>=1,vp=l+1", "lambda_n of C_{q,b,0}",
               "delegate only at the full-radical degree, with (-1)^((q+1)/2) fallback; "
               "(-1)^((p-1)/2) at nu2(m)=1 and (-1)^((p+1)/2) at nu2(m)>=2 otherwise",
               "the printed delegation lands on parity-zero degrees of C_{q,b,0}; oracle: "
               "(3,1,3,2) n=6 lambda=-1 vs n=12 lambda=+1, (5,1,2,1) n=10 lambda=+1, and "
               "q=9 (3,2,3,2) n=6 lambda=-1 pins the character to p, not q"});
        return l;
    }();
    return ledger;
}

CorrectionLedger CorrectionLedger::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ledger file: " + path);
    CorrectionLedger l;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim_copy(line);
        if (s.empty() || s[0] == '#') continue;
        std::stringstream ss(s);
        std::string branch, orig, corr, ev;
        if (!std::getline(ss, branch, '|') || !std::getline(ss, orig, '|') ||
            !std::getline(ss, corr, '|'))
            throw std::runtime_error("ledger line " + std::to_string(lineno) +
                                     ": expected `branch | original | corrected | evidence`");
        std::getline(ss, ev, '|');
        l.add({trim_copy(branch), trim_copy(orig), trim_copy(corr), trim_copy(ev)});
    }
    return l;
}

// ---- sign machinery ----

namespace {

constexpr const char* kTokPlus = "+1";
constexpr const char* kTokMinus = "-1";
constexpr const char* kTokZero = "0";
constexpr const char* kTokQPlus = "(-1)^((q+1)/2)";   // -1 iff q = 1 mod 4
constexpr const char* kTokQMinus = "(-1)^((q-1)/2)";  // -1 iff q = 3 mod 4
constexpr const char* kTokPPlus = "(-1)^((p+1)/2)";
constexpr const char* kTokPMinus = "(-1)^((p-1)/2)";
constexpr const char* kTokB0 = "b0";

struct FamilyCtx {
    CurveParams params;
    bool is_b0 = true;
    std::uint32_t k = 0;    // nu_2(b), two-term-with-a=0 family only
    std::uint32_t ell = 0;  // nu_p of the table modulus over p
    std::uint64_t s_table = 0;
    int top_sign = 0;   // sign at degree s_table; 0 = unresolved
    std::uint64_t s_star = 0;  // resolved period: s_table or 2*s_table
    std::string top_branch;
};

struct BaseSign {
    std::optional<int> lambda;
    std::string branch;
};

SignResult eval_sign(const FamilyCtx& ctx, std::uint32_t n, const CorrectionLedger& ledger);

// "b0" delegation is handled by the caller before this point.
int eval_token(const std::string& tok, const FamilyCtx& ctx) {
    const auto& pr = ctx.params;
    if (tok == kTokPlus) return 1;
    if (tok == kTokMinus) return -1;
    if (tok == kTokZero) return 0;
    if (tok == kTokQPlus) return q_mod4(pr.p, pr.r) == 1 ? -1 : 1;
    if (tok == kTokQMinus) return q_mod4(pr.p, pr.r) == 1 ? 1 : -1;
    if (tok == kTokPPlus) return pr.p % 4 == 1 ? -1 : 1;
    if (tok == kTokPMinus) return pr.p % 4 == 1 ? 1 : -1;
    throw std::runtime_error("unknown lambda rule `" + tok + "` in corrections ledger");
}

FamilyCtx make_b0_ctx(const CurveParams& params, const CorrectionLedger& ledger);

// Sign at a base degree m (a divisor of ctx.s_star). Dispatch order: the
// identically-zero and parity cases are exact, then the case rows, keyed so
// the ledger can override any of them.
BaseSign base_sign(const FamilyCtx& ctx, std::uint64_t m, const CorrectionLedger& ledger) {
    const auto& pr = ctx.params;
    const std::string fam = ctx.is_b0 ? "b0-k" + std::to_string(std::min<std::uint32_t>(ctx.k, 2)) : "ba";
    std::uint32_t w_m = radical_dim_formula(pr, static_cast<std::uint32_t>(m));
    if (w_m == m) return {1, fam + "/zero-form"};
    if ((m + w_m) % 2 == 1) return {0, fam + "/parity"};

    const std::uint32_t v2m = val_of(2, m);
    const std::uint32_t vpm = val_of(pr.p, m);
    const bool vp_top = vpm > ctx.ell;

    std::string branch;
    std::string tok;
    if (ctx.is_b0) {
        if (v2m == 1 && vp_top) {
            branch = fam + "/v2=1,vp=l+1";
            tok = kTokQPlus;
        } else if (v2m >= 2 && vp_top) {
            branch = fam + (ctx.k >= 2 ? "/v2>=2,vp=l+1" : "/v2=2,vp=l+1");
            tok = kTokMinus;
        } else if (v2m == 2 && !vp_top && ctx.k == 1) {
            branch = fam + "/v2=2,vp<=l";
            tok = kTokQMinus;
        } else {
            return {std::nullopt, fam + "/uncovered(v2=" + std::to_string(v2m) +
                                      ",vp=" + std::to_string(vpm) + ")"};
        }
    } else {
        const bool full = w_m == 2 * static_cast<std::uint64_t>(pr.b);
        if (!vp_top) {
            branch = v2m == 0 ? "ba/v2=0,vp<=l" : "ba/v2>=1,vp<=l";
            tok = kTokPlus;
        } else if (v2m >= 1 && m == 2 * ctx.s_table) {
            branch = "ba/v2=top";  // minimal immediately above the maximal degree
            tok = kTokMinus;
        } else if (v2m >= 1 && (full || m == ctx.s_table)) {
            branch = "ba/v2>=1,vp=l+1";
            tok = kTokB0;
        } else if (v2m == 1) {
            branch = "ba/v2=1,vp=l+1,nonfull";
            tok = kTokPMinus;
        } else if (v2m >= 2) {
            branch = "ba/v2>=2,vp=l+1,nonfull";
            tok = kTokPPlus;
        } else {
            return {std::nullopt, "ba/uncovered(v2=0,vp=l+1)"};
        }
    }

    if (auto ov = ledger.override_for(branch)) tok = *ov;

    if (tok == kTokB0) {
        CurveParams bp = CurveParams::make(pr.p, pr.r, pr.b, 0);
        SignResult sr = eval_sign(make_b0_ctx(bp, ledger), static_cast<std::uint32_t>(m), ledger);
        if (sr.lambda && *sr.lambda != 0) return {*sr.lambda, branch + "(" + sr.branch + ")"};
        // the printed delegation can land on a parity-zero degree of the
        // a=0 curve while this form is nondegenerate there; fall back
        std::string fb = kTokQPlus;
        if (auto ov = ledger.override_for("ba/delegate-fallback")) fb = *ov;
        int v = eval_token(fb, ctx);
        if (v == 0) return {std::nullopt, branch + "(fallback-gives-0)"};
        return {v, branch + "(fallback)"};
    }
    int v = eval_token(tok, ctx);
    if (v == 0) return {std::nullopt, branch + "(rule-gives-0-at-even-parity)"};
    return {v, branch};
}

SignResult eval_sign(const FamilyCtx& ctx, std::uint32_t n, const CorrectionLedger& ledger) {
    if (ctx.top_sign == 0)
        return {std::nullopt, "period-unresolved(" + ctx.top_branch + ")"};
    std::uint64_t m = std::gcd<std::uint64_t>(n, ctx.s_star);
    std::uint64_t t = n / m;
    BaseSign bs = base_sign(ctx, m, ledger);
    if (!bs.lambda) return {std::nullopt, bs.branch};
    int lam = *bs.lambda;
    if (lam != 0) {
        const bool mr_even = (m * ctx.params.r) % 2 == 0;
        if (!mr_even && t % ctx.params.p != 0) lam *= theta_factor(t, ctx.params.p);
        // even m*r, or odd m*r with p | t: factor 1
    }
    std::string branch = bs.branch;
    if (t > 1) branch += ",t=" + std::to_string(t);
    return {lam, branch};
}

void resolve_period(FamilyCtx& ctx, const CorrectionLedger& ledger) {
    ctx.s_star = ctx.s_table;  // provisional, so base_sign sees no top level
    BaseSign top = base_sign(ctx, ctx.s_table, ledger);
    ctx.top_branch = top.branch;
    // the curve must be maximal or minimal here; a rule (e.g. a ledger
    // override) returning anything else leaves the family unresolved
    ctx.top_sign = top.lambda.value_or(0);
    if (ctx.top_sign > 0) ctx.s_star = 2 * ctx.s_table;
}

FamilyCtx make_b0_ctx(const CurveParams& params, const CorrectionLedger& ledger) {
    FamilyCtx ctx;
    ctx.params = params;
    ctx.is_b0 = true;
    ctx.k = val_of(2, params.b);
    ctx.ell = val_of(params.p, params.b);
    std::uint64_t s = static_cast<std::uint64_t>(params.p) * params.b;
    if (s % 2 == 1) s *= 2;  // a period needs q^{s/2} integral
    ctx.s_table = s;
    resolve_period(ctx, ledger);
    return ctx;
}

FamilyCtx make_ba_ctx(const CurveParams& params, const CorrectionLedger& ledger) {
    FamilyCtx ctx;
    ctx.params = params;
    ctx.is_b0 = false;
    const std::uint64_t B = params.b + params.a;
    const std::uint64_t A = params.b - params.a;
    ctx.ell = std::max(val_of(params.p, B), val_of(params.p, A));
    std::uint64_t s = static_cast<std::uint64_t>(params.p) * std::lcm(B, A);
    if (s % 2 == 1) s *= 2;
    ctx.s_table = s;
    resolve_period(ctx, ledger);
    return ctx;
}

} // namespace

SignResult sign_b0(const CurveParams& params, std::uint32_t n, const CorrectionLedger& ledger) {
    if (params.a != 0) throw std::invalid_argument("sign_b0: requires a = 0");
    if (n == 0) throw std::invalid_argument("sign_b0: n must be positive");
    return eval_sign(make_b0_ctx(params, ledger), n, ledger);
}

SignResult sign_ba(const CurveParams& params, std::uint32_t n, const CorrectionLedger& ledger) {
    if (params.a == 0) throw std::invalid_argument("sign_ba: requires a >= 1");
    if (n == 0) throw std::invalid_argument("sign_ba: n must be positive");
    if (val_of(2, params.a) == val_of(2, params.b))
        return {std::nullopt, "ba/hypothesis(nu2(a)=nu2(b))"};
    return eval_sign(make_ba_ctx(params, ledger), n, ledger);
}

Prediction predict(const CurveParams& params, std::uint32_t n, const CorrectionLedger& ledger) {
    if (n == 0) throw std::invalid_argument("predict: n must be positive");
    Prediction pred;
    pred.n = n;
    pred.w = radical_dim_formula(params, n);

    SignResult sr = params.a == 0 ? sign_b0(params, n, ledger) : sign_ba(params, n, ledger);
    pred.branch = sr.branch;
    if (!sr.lambda) {
        pred.status = PredictionStatus::OutsideTheorem;
        return pred;
    }
    pred.status = PredictionStatus::Covered;
    pred.lambda = *sr.lambda;

    const bool parity_odd = (static_cast<std::uint64_t>(n) + pred.w) % 2 == 1;
    if (parity_odd != (*pred.lambda == 0))
        throw std::runtime_error("parity law violated at branch " + pred.branch +
                                 " (check ledger overrides)");

    BigInt q = params.q_big();
    BigInt zeros = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) zeros *= q;  // q^{n-1}
    if (*pred.lambda != 0) {
        BigInt step = q - 1;
        for (std::uint32_t i = 0; i + 1 < (n + pred.w) / 2; ++i) step *= q;
        zeros += *pred.lambda * step;
    }
    pred.zeros = zeros;
    pred.points = curve_points(zeros, q);
    return pred;
}

namespace {

// Rows exactly as printed. Returns nullopt when the tuple falls outside the
// printed rows (theta of an even t, or a 2-adic level the table omits).
SignResult printed_sign_b0(const CurveParams& params, std::uint32_t n) {
    const std::uint32_t p = params.p;
    const std::uint32_t k = val_of(2, params.b);
    const std::uint64_t b_odd = params.b >> k;
    const std::uint32_t ell = val_of(p, b_odd);
    std::uint64_t M = k == 0   ? 4ull * p * params.b
                      : k == 1 ? 4ull * p * b_odd
                               : (1ull << k) * p * b_odd;
    std::uint64_t m = std::gcd<std::uint64_t>(n, M);
    std::uint64_t t = n / m;
    std::uint32_t v2 = val_of(2, m);
    bool vp_top = val_of(p, m) == ell + 1;
    std::string fam = "b0-k" + std::to_string(std::min<std::uint32_t>(k, 2)) + "(printed)";
    auto row = [&](const char* id) { return fam + "/" + id; };
    int qp = q_mod4(params.p, params.r) == 1 ? -1 : 1;   // (-1)^((q+1)/2)
    int qm = q_mod4(params.p, params.r) == 1 ? 1 : -1;   // (-1)^((q-1)/2)
    if (v2 == 0 && !vp_top) {
        if (t % 2 == 0) return {std::nullopt, row("v2=0,vp<=l,theta-even-t")};
        return {theta_factor(t, p), row("v2=0,vp<=l")};
    }
    if (v2 == 0 && vp_top) return {0, row("v2=0,vp=l+1")};
    if (v2 == 1 && !vp_top) return {k == 0 ? 0 : 1, row("v2=1,vp<=l")};
    if (v2 == 1 && vp_top) return {qp, row("v2=1,vp=l+1")};
    if (v2 == 2 && !vp_top) return {k == 0 ? 0 : qm, row("v2=2,vp<=l")};
    if (v2 == 2 && vp_top) return {-1, row("v2=2,vp=l+1")};
    return {std::nullopt, row("v2>2,no-row")};
}

SignResult printed_sign_ba(const CurveParams& params, std::uint32_t n) {
    if (val_of(2, params.a) == val_of(2, params.b))
        return {std::nullopt, "ba(printed)/hypothesis(nu2(a)=nu2(b))"};
    const std::uint32_t p = params.p;
    const std::uint64_t B = params.b + params.a, A = params.b - params.a;
    const std::uint64_t L = std::lcm(B, A);
    const std::uint32_t ell = std::max(val_of(p, B), val_of(p, A));
    const std::uint32_t kappa = val_of(2, L);
    std::uint64_t s = static_cast<std::uint64_t>(p) * L;
    if (kappa == 1 && p % 4 == 1) s *= 2;
    std::uint64_t m = std::gcd<std::uint64_t>(n, s);
    std::uint64_t t = n / m;
    std::uint32_t v2 = val_of(2, m);
    bool vp_top = val_of(p, m) == ell + 1;
    if (v2 == 0 && !vp_top) {
        if (t % 2 == 0) return {std::nullopt, "ba(printed)/v2=0,vp<=l,theta-even-t"};
        return {theta_factor(t, p), "ba(printed)/v2=0,vp<=l"};
    }
    if (v2 >= 1 && !vp_top) return {1, "ba(printed)/v2>=1,vp<=l"};
    if (v2 == 0 && vp_top) return {0, "ba(printed)/v2=0,vp=l+1"};
    SignResult inner = printed_sign_b0(CurveParams::make(params.p, params.r, params.b, 0), n);
    if (!inner.lambda) return {std::nullopt, "ba(printed)/v2>=1,vp=l+1(" + inner.branch + ")"};
    return {*inner.lambda, "ba(printed)/v2>=1,vp=l+1(" + inner.branch + ")"};
}

} // namespace

Prediction predict_printed_tables(const CurveParams& params, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("predict_printed_tables: n must be positive");
    Prediction pred;
    pred.n = n;
    pred.w = radical_dim_formula(params, n);
    SignResult sr = params.a == 0 ? printed_sign_b0(params, n) : printed_sign_ba(params, n);
    pred.branch = sr.branch;
    if (!sr.lambda) {
        pred.status = PredictionStatus::OutsideTheorem;
        return pred;
    }
    pred.status = PredictionStatus::Covered;
    pred.lambda = *sr.lambda;
    // The printed rows can claim a nonzero sign where n+w is odd; emit the
    // sign with no count so the sweep can show exactly that disagreement.
    const bool parity_odd = (static_cast<std::uint64_t>(n) + pred.w) % 2 == 1;
    if (parity_odd && *pred.lambda != 0) return pred;
    BigInt q = params.q_big();
    BigInt zeros = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) zeros *= q;
    if (*pred.lambda != 0) {
        BigInt step = q - 1;
        for (std::uint32_t i = 0; i + 1 < (n + pred.w) / 2; ++i) step *= q;
        zeros += *pred.lambda * step;
    }
    pred.zeros = zeros;
    pred.points = curve_points(zeros, q);
    return pred;
}

BigInt reduce_difference(const BigInt& t_m, std::uint32_t m, std::uint32_t t,
                         const CurveParams& params) {
    if (m == 0 || t == 0) throw std::invalid_argument("reduce_difference: m, t must be positive");
    const std::uint64_t n = static_cast<std::uint64_t>(m) * t;
    const std::uint64_t shift = static_cast<std::uint64_t>(params.r) * (n - m);
    if (shift % 2 != 0)
        throw std::invalid_argument("reduce_difference: q^{(n-m)/2} is not integral (period bug?)");
    BigInt factor = big_pow(params.p, shift / 2);
    int chi = 1;
    if ((static_cast<std::uint64_t>(m) * params.r) % 2 == 1 && t % params.p != 0)
        chi = theta_factor(t, params.p);
    return factor * t_m * chi;
}

Classification classify(const CurveParams& params, std::uint32_t n, const CorrectionLedger& ledger) {
    Prediction pred = predict(params, n, ledger);
    if (!pred.covered() || !pred.lambda) return Classification::Neither;
    if (pred.w != 2 * params.b) return Classification::Neither;
    if (*pred.lambda == 1) return Classification::Maximal;
    if (*pred.lambda == -1) return Classification::Minimal;
    return Classification::Neither;
}

Classification classify_oracle(const CurveParams& params, const OracleResult& res) {
    if (res.w != 2 * params.b) return Classification::Neither;
    if (res.lambda == 1) return Classification::Maximal;
    if (res.lambda == -1) return Classification::Minimal;
    return Classification::Neither;
}

PeriodInfo find_period(const CurveParams& params, const CorrectionLedger& ledger,
                       std::uint64_t scan_bound) {
    if (scan_bound == 0) {
        const std::uint64_t B = params.b + params.a, A = params.b - params.a;
        scan_bound = 4 * static_cast<std::uint64_t>(params.p) * std::lcm(B, A);
    }
    for (std::uint64_t s = 1; s <= scan_bound; ++s) {
        if (classify(params, static_cast<std::uint32_t>(s), ledger) == Classification::Minimal) {
            PeriodInfo info;
            info.s = static_cast<std::uint32_t>(s);
            info.witness = info.s;
            info.maximal_half =
                s % 2 == 0 &&
                classify(params, static_cast<std::uint32_t>(s / 2), ledger) == Classification::Maximal;
            return info;
        }
    }
    throw std::runtime_error(
        "find_period: no minimal degree up to " + std::to_string(scan_bound) +
        "; parameters may be outside the covered family or a table row needs adjudication");
}

BigInt prediction_difference(const CurveParams& params, const Prediction& pred) {
    if (!pred.covered() || !pred.lambda)
        throw std::invalid_argument("prediction_difference: prediction carries no sign");
    if (*pred.lambda == 0) return 0;
    BigInt q = params.q_big();
    BigInt t = q - 1;
    for (std::uint32_t i = 0; i < (pred.n + pred.w) / 2; ++i) t *= q;
    return *pred.lambda * t;
}

} // namespace tqf
