#include "tqf/qform.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

namespace tqf {

namespace {

std::uint32_t hw_workers(std::uint32_t workers) {
    if (workers) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

modmat::Mat invert_square(modmat::Mat A, std::uint32_t n, std::uint32_t p) {
    // rref on [A | I]
    std::uint32_t cols = 2 * n;
    modmat::Mat G(static_cast<std::size_t>(n) * cols, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) G[static_cast<std::size_t>(i) * cols + j] = A[static_cast<std::size_t>(i) * n + j];
        G[static_cast<std::size_t>(i) * cols + n + i] = 1;
    }
    std::uint32_t row = 0;
    for (std::uint32_t c = 0; c < n; ++c) {
        std::uint32_t piv = n;
        for (std::uint32_t i = row; i < n; ++i)
            if (G[static_cast<std::size_t>(i) * cols + c] % p) {
                piv = i;
                break;
            }
        if (piv == n) throw std::logic_error("invert_square: singular matrix");
        for (std::uint32_t j = 0; j < cols; ++j)
            std::swap(G[static_cast<std::size_t>(row) * cols + j], G[static_cast<std::size_t>(piv) * cols + j]);
        std::uint32_t inv = modmat::inv_mod(G[static_cast<std::size_t>(row) * cols + c] % p, p);
        for (std::uint32_t j = 0; j < cols; ++j) {
            auto& v = G[static_cast<std::size_t>(row) * cols + j];
            v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p);
        }
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i == row) continue;
            std::uint64_t f = G[static_cast<std::size_t>(i) * cols + c] % p;
            if (!f) continue;
            for (std::uint32_t j = 0; j < cols; ++j) {
                auto& v = G[static_cast<std::size_t>(i) * cols + j];
                std::uint64_t s = f * G[static_cast<std::size_t>(row) * cols + j] % p;
                v = static_cast<std::uint32_t>((v + p - s) % p);
            }
        }
        ++row;
    }
    modmat::Mat R(static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) R[static_cast<std::size_t>(i) * n + j] = G[static_cast<std::size_t>(i) * cols + n + j];
    return R;
}

// r x d matrix mapping z to the coordinates of Tr_{F_{p^d}/F_q}(z) in the
// subfield basis of the view.
modmat::Mat trace_coord_matrix(const QFormInstance& inst) {
    const std::uint32_t p = inst.spec.p, d = inst.spec.d, r = inst.r, n = inst.n;
    modmat::Mat Fq = modmat::mat_pow(inst.spec.frob_p, r, d, p);
    modmat::Mat T(static_cast<std::size_t>(d) * d, 0);
    modmat::Mat P = modmat::identity(d);
    for (std::uint32_t i = 0; i < n; ++i) {
        T = modmat::add(T, P, d, p);
        P = modmat::mul(Fq, P, d, p);
    }
    // select coordinate positions where the basis matrix has full rank
    const auto& bm = inst.view.basis;  // r x d
    std::vector<std::uint32_t> sel;
    modmat::Mat acc;  // grows by one column of U per accepted position
    for (std::uint32_t j = 0; j < d && sel.size() < r; ++j) {
        modmat::Mat cand = acc;
        for (std::uint32_t k = 0; k < r; ++k) cand.push_back(bm[static_cast<std::size_t>(k) * d + j]);
        std::uint32_t rows = static_cast<std::uint32_t>(cand.size() / r);
        if (modmat::rank(cand, rows, r, p) == rows) {
            acc = cand;
            sel.push_back(j);
        }
    }
    if (sel.size() != r) throw std::logic_error("trace_coord_matrix: no coordinate section");
    modmat::Mat A(static_cast<std::size_t>(r) * r);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t k = 0; k < r; ++k) A[static_cast<std::size_t>(i) * r + k] = bm[static_cast<std::size_t>(k) * d + sel[i]];
    modmat::Mat Ainv = invert_square(A, r, p);
    // W = Ainv * P_sel * T
    modmat::Mat W(static_cast<std::size_t>(r) * d, 0);
    for (std::uint32_t k = 0; k < r; ++k)
        for (std::uint32_t j = 0; j < d; ++j) {
            std::uint64_t acc2 = 0;
            for (std::uint32_t i = 0; i < r; ++i)
                acc2 += static_cast<std::uint64_t>(Ainv[static_cast<std::size_t>(k) * r + i]) *
                        T[static_cast<std::size_t>(sel[i]) * d + j];
            W[static_cast<std::size_t>(k) * d + j] = static_cast<std::uint32_t>(acc2 % p);
        }
    return W;
}

// Coordinate-space representation of the form: one F_p-valued quadratic form
// per subfield coordinate, plus the delta tables driving the incremental walk
// over base-p counter increments.
struct CountKernel {
    std::uint32_t p = 0, d = 0, r = 0;
    std::uint64_t buckets = 0;           // p^r
    std::vector<std::uint32_t> M;        // r*d*d value matrices
    std::vector<std::uint32_t> Bsym;     // r*d*d, M + M^T
    std::vector<std::uint32_t> qdelta;   // r*d, Q_k(delta_c)
    std::vector<std::uint32_t> bdelta;   // d * (r*d), row c = B_k(delta_c, e_i)
    std::vector<std::uint64_t> remap;    // coordinate key -> subfield index

    void count_range(std::uint64_t start, std::uint64_t len, std::uint64_t* tally) const;
};

void CountKernel::count_range(std::uint64_t start, std::uint64_t len, std::uint64_t* tally) const {
    if (!len) return;
    const std::uint32_t P = p, D = d, R = r;
    std::vector<std::uint32_t> digits(D, 0);
    {
        std::uint64_t t = start;
        for (std::uint32_t i = 0; i < D && t; ++i) {
            digits[i] = static_cast<std::uint32_t>(t % P);
            t /= P;
        }
    }
    std::vector<std::uint32_t> val(R, 0), grad(static_cast<std::size_t>(R) * D, 0);
    for (std::uint32_t k = 0; k < R; ++k) {
        const std::uint32_t* Mk = &M[static_cast<std::size_t>(k) * D * D];
        const std::uint32_t* Bk = &Bsym[static_cast<std::size_t>(k) * D * D];
        std::uint64_t v = 0;
        for (std::uint32_t i = 0; i < D; ++i) {
            if (!digits[i]) continue;
            std::uint64_t rowacc = 0;
            for (std::uint32_t j = 0; j < D; ++j) rowacc += static_cast<std::uint64_t>(Mk[static_cast<std::size_t>(i) * D + j]) * digits[j];
            v += digits[i] * (rowacc % P);
        }
        val[k] = static_cast<std::uint32_t>(v % P);
        for (std::uint32_t i = 0; i < D; ++i) {
            std::uint64_t g = 0;
            for (std::uint32_t j = 0; j < D; ++j) g += static_cast<std::uint64_t>(Bk[static_cast<std::size_t>(i) * D + j]) * digits[j];
            grad[static_cast<std::size_t>(k) * D + i] = static_cast<std::uint32_t>(g % P);
        }
    }

    const std::uint32_t RD = R * D;
    for (std::uint64_t step = 0;; ++step) {
        std::uint64_t key = 0;
        for (std::uint32_t k = R; k-- > 0;) key = key * P + val[k];
        ++tally[key];
        if (step + 1 == len) break;

        std::uint32_t c = 0;
        while (digits[c] == P - 1) {
            digits[c] = 0;
            ++c;
        }
        ++digits[c];

        for (std::uint32_t k = 0; k < R; ++k) {
            std::uint32_t acc = val[k] + qdelta[static_cast<std::size_t>(k) * D + c];
            const std::uint32_t* g = &grad[static_cast<std::size_t>(k) * D];
            for (std::uint32_t i = 0; i <= c; ++i) acc += g[i];
            val[k] = acc % P;
        }
        const std::uint32_t* row = &bdelta[static_cast<std::size_t>(c) * RD];
        for (std::uint32_t t = 0; t < RD; ++t) {
            std::uint32_t v = grad[t] + row[t];
            grad[t] = v >= P ? v - P : v;
        }
    }
}

CountKernel build_kernel(const QFormInstance& inst) {
    const std::uint32_t p = inst.spec.p, d = inst.spec.d, r = inst.r;
    CountKernel K;
    K.p = p;
    K.d = d;
    K.r = r;
    K.buckets = 1;
    for (std::uint32_t i = 0; i < r; ++i) K.buckets *= p;

    modmat::Mat W = trace_coord_matrix(inst);
    modmat::Mat Fq = modmat::mat_pow(inst.spec.frob_p, r, d, p);

    // L as a matrix on coefficient vectors
    modmat::Mat L(static_cast<std::size_t>(d) * d, 0);
    for (const auto& term : inst.terms) {
        modmat::Mat Fe = modmat::mat_pow(Fq, term.exp, d, p);
        L = term.sign > 0 ? modmat::add(L, Fe, d, p) : modmat::sub(L, Fe, d, p);
    }

    K.M.assign(static_cast<std::size_t>(r) * d * d, 0);
    const std::uint32_t* zred = &inst.spec.red_rows[0];  // z^d mod modulus
    std::vector<std::uint32_t> cur(d), w(r);
    for (std::uint32_t j = 0; j < d; ++j) {
        for (std::uint32_t i = 0; i < d; ++i) cur[i] = L[static_cast<std::size_t>(i) * d + j];
        for (std::uint32_t i = 0; i < d; ++i) {
            // w = W * cur
            for (std::uint32_t k = 0; k < r; ++k) {
                std::uint64_t acc = 0;
                for (std::uint32_t t = 0; t < d; ++t)
                    acc += static_cast<std::uint64_t>(W[static_cast<std::size_t>(k) * d + t]) * cur[t];
                K.M[(static_cast<std::size_t>(k) * d + i) * d + j] = static_cast<std::uint32_t>(acc % p);
            }
            // cur *= z
            std::uint32_t top = cur[d - 1];
            for (std::uint32_t t = d; t-- > 1;) cur[t] = cur[t - 1];
            cur[0] = 0;
            if (top) {
                for (std::uint32_t t = 0; t < d; ++t)
                    cur[t] = static_cast<std::uint32_t>((cur[t] + static_cast<std::uint64_t>(top) * zred[t]) % p);
            }
        }
    }

    K.Bsym.assign(static_cast<std::size_t>(r) * d * d, 0);
    for (std::uint32_t k = 0; k < r; ++k)
        for (std::uint32_t i = 0; i < d; ++i)
            for (std::uint32_t j = 0; j < d; ++j)
                K.Bsym[(static_cast<std::size_t>(k) * d + i) * d + j] =
                    (K.M[(static_cast<std::size_t>(k) * d + i) * d + j] +
                     K.M[(static_cast<std::size_t>(k) * d + j) * d + i]) % p;

    // delta_c = e_0 + ... + e_c
    K.qdelta.assign(static_cast<std::size_t>(r) * d, 0);
    K.bdelta.assign(static_cast<std::size_t>(d) * r * d, 0);
    for (std::uint32_t c = 0; c < d; ++c) {
        for (std::uint32_t k = 0; k < r; ++k) {
            std::uint64_t qv = 0;
            for (std::uint32_t i = 0; i <= c; ++i)
                for (std::uint32_t j = 0; j <= c; ++j)
                    qv += K.M[(static_cast<std::size_t>(k) * d + i) * d + j];
            K.qdelta[static_cast<std::size_t>(k) * d + c] = static_cast<std::uint32_t>(qv % p);
            for (std::uint32_t i = 0; i < d; ++i) {
                std::uint64_t bv = 0;
                for (std::uint32_t j = 0; j <= c; ++j)
                    bv += K.Bsym[(static_cast<std::size_t>(k) * d + j) * d + i];
                K.bdelta[static_cast<std::size_t>(c) * (r * d) + k * d + i] =
                    static_cast<std::uint32_t>(bv % p);
            }
        }
    }

    // coordinate key -> canonical subfield index
    K.remap.assign(K.buckets, 0);
    for (std::uint64_t key = 0; key < K.buckets; ++key) {
        FieldElement e = fe_zero(inst.spec);
        std::uint64_t t = key;
        for (std::uint32_t k = 0; k < r; ++k) {
            std::uint32_t ck = static_cast<std::uint32_t>(t % p);
            t /= p;
            if (!ck) continue;
            for (std::uint32_t j = 0; j < d; ++j)
                e.c[j] = static_cast<std::uint32_t>(
                    (e.c[j] + static_cast<std::uint64_t>(ck) * inst.view.basis[static_cast<std::size_t>(k) * d + j]) % p);
        }
        auto idx = subfield_index(e, inst.view);
        if (!idx) throw std::logic_error("build_kernel: coordinate combination left the subfield");
        K.remap[key] = *idx;
    }
    return K;
}

std::vector<std::uint64_t> parallel_tally(const CountKernel& K, std::uint64_t total,
                                          std::uint32_t workers) {
    workers = hw_workers(workers);
    std::vector<std::uint64_t> out(K.buckets, 0);
    const std::uint64_t min_chunk = 1u << 16;
    std::uint64_t chunk = std::max<std::uint64_t>(min_chunk, total / (static_cast<std::uint64_t>(workers) * 32));
    if (chunk > total) chunk = total;
    std::uint64_t nchunks = (total + chunk - 1) / chunk;

    if (workers == 1 || nchunks <= 1) {
        for (std::uint64_t i = 0; i < nchunks; ++i) {
            std::uint64_t start = i * chunk;
            K.count_range(start, std::min(chunk, total - start), out.data());
        }
        return out;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<std::uint64_t>> acc(workers, std::vector<std::uint64_t>(K.buckets, 0));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= nchunks) break;
                std::uint64_t start = i * chunk;
                K.count_range(start, std::min(chunk, total - start), acc[w].data());
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& a : acc)
        for (std::uint64_t b = 0; b < K.buckets; ++b) out[b] += a[b];
    return out;
}

std::uint64_t checked_total(const QFormInstance& inst, std::uint64_t budget) {
    BigInt order = inst.spec.order();
    if (order > budget)
        throw BudgetExceeded("field of " + order.str() +
                             " elements exceeds the enumeration budget of " +
                             std::to_string(budget) + "; use the closed-form prediction instead");
    return static_cast<std::uint64_t>(order);
}

} // namespace

CurveParams CurveParams::make(std::uint32_t p, std::uint32_t r, std::uint32_t b, std::uint32_t a) {
    if (!is_prime_u64(p) || p == 2)
        throw std::invalid_argument("CurveParams: p must be an odd prime");
    if (r == 0) throw std::invalid_argument("CurveParams: r must be positive");
    if (b == a) throw std::invalid_argument("CurveParams: b = a makes the form identically zero");
    CurveParams cp;
    cp.p = p;
    cp.r = r;
    if (b > a) {
        cp.b = b;
        cp.a = a;
    } else {
        cp.b = a;
        cp.a = b;
        cp.swapped = true;
    }
    return cp;
}

std::uint64_t CurveParams::q() const {
    BigInt qb = q_big();
    if (qb > BigInt(std::uint64_t(1) << 62)) throw std::overflow_error("CurveParams: q does not fit");
    return static_cast<std::uint64_t>(qb);
}

QFormInstance make_instance(const CurveParams& params, std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("make_instance: n must be positive");
    QFormInstance inst;
    inst.params = params;
    inst.r = params.r;
    inst.n = n;
    inst.spec = build_field(params.p, params.r * n);
    inst.view = build_subfield_view(inst.spec, params.r);
    inst.terms = {{params.b % n, +1}, {params.a % n, -1}};
    return inst;
}

QFormInstance make_general_instance(std::uint32_t p, std::uint32_t r, std::uint32_t n,
                                    std::vector<LinearizedTerm> terms) {
    QFormInstance inst;
    inst.r = r;
    inst.n = n;
    inst.spec = build_field(p, r * n);
    inst.view = build_subfield_view(inst.spec, r);
    for (auto& t : terms) t.exp %= n;
    inst.terms = std::move(terms);
    return inst;
}

FieldElement eval_form(const QFormInstance& inst, const FieldElement& x) {
    FieldElement acc = fe_zero(inst.spec);
    for (const auto& term : inst.terms) {
        FieldElement y = mul(x, pow_q(x, term.exp, inst.r, inst.spec), inst.spec);
        acc = term.sign > 0 ? add(acc, y, inst.spec) : sub(acc, y, inst.spec);
    }
    return trace(acc, inst.r, inst.spec);
}

BigInt count_zeros(const QFormInstance& inst, std::uint64_t budget, std::uint32_t workers) {
    std::uint64_t total = checked_total(inst, budget);
    CountKernel K = build_kernel(inst);
    auto tally = parallel_tally(K, total, workers);
    return BigInt(tally[0]);
}

std::vector<BigInt> count_level_sets(const QFormInstance& inst, std::uint64_t budget,
                                     std::uint32_t workers) {
    std::uint64_t total = checked_total(inst, budget);
    CountKernel K = build_kernel(inst);
    auto tally = parallel_tally(K, total, workers);
    std::vector<BigInt> counts(K.buckets);
    for (std::uint64_t key = 0; key < K.buckets; ++key) counts[K.remap[key]] += tally[key];
    if (inst.params && inst.params->swapped) {
        // the normalized form is the negative of the requested one
        std::vector<BigInt> relabeled(counts.size());
        for (std::uint64_t i = 0; i < counts.size(); ++i) {
            FieldElement c = inst.view.elements[i];
            auto j = subfield_index(neg(c, inst.spec), inst.view);
            relabeled[i] = counts[*j];
        }
        return relabeled;
    }
    return counts;
}

std::uint32_t radical_dim_gram(const QFormInstance& inst) {
    const std::uint32_t p = inst.spec.p, d = inst.spec.d, r = inst.r, n = inst.n;
    // greedy F_q-basis of the big field from power-basis candidates
    std::vector<FieldElement> sub_basis;
    for (std::uint32_t k = 0; k < r; ++k) {
        FieldElement u = fe_zero(inst.spec);
        for (std::uint32_t j = 0; j < d; ++j) u.c[j] = inst.view.basis[static_cast<std::size_t>(k) * d + j];
        sub_basis.push_back(std::move(u));
    }
    std::vector<FieldElement> betas;
    modmat::Mat span;  // rows over F_p
    std::uint32_t span_rows = 0;
    for (std::uint32_t j = 0; j < d && betas.size() < n; ++j) {
        FieldElement cand = fe_zero(inst.spec);
        cand.c[j] = 1;
        modmat::Mat test = span;
        test.insert(test.end(), cand.c.begin(), cand.c.end());
        if (modmat::rank(test, span_rows + 1, d, p) == span_rows) continue;
        betas.push_back(cand);
        for (std::uint32_t k = 0; k < r; ++k) {
            FieldElement prod = mul(sub_basis[k], cand, inst.spec);
            span.insert(span.end(), prod.c.begin(), prod.c.end());
        }
        span_rows += r;
        modmat::Mat chk = span;
        if (modmat::rank(chk, span_rows, d, p) != span_rows)
            throw std::logic_error("radical_dim_gram: span bookkeeping failed");
    }
    if (betas.size() != n) throw std::logic_error("radical_dim_gram: no F_q-basis found");

    // Gram matrix over F_q, entries as subfield elements
    std::vector<FieldElement> qvals(n);
    for (std::uint32_t i = 0; i < n; ++i) qvals[i] = eval_form(inst, betas[i]);
    std::vector<std::vector<FieldElement>> G(n, std::vector<FieldElement>(n, fe_zero(inst.spec)));
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j) {
            FieldElement s = eval_form(inst, add(betas[i], betas[j], inst.spec));
            FieldElement bij = sub(sub(s, qvals[i], inst.spec), qvals[j], inst.spec);
            G[i][j] = bij;
            G[j][i] = bij;
        }

    // rank over F_q by elimination with field arithmetic
    std::uint32_t rank = 0;
    for (std::uint32_t c = 0; c < n && rank < n; ++c) {
        std::uint32_t piv = n;
        for (std::uint32_t i = rank; i < n; ++i)
            if (!G[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == n) continue;
        std::swap(G[rank], G[piv]);
        FieldElement inv = inverse(G[rank][c], inst.spec);
        for (std::uint32_t j = 0; j < n; ++j) G[rank][j] = mul(G[rank][j], inv, inst.spec);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (i == rank || G[i][c].is_zero()) continue;
            FieldElement f = G[i][c];
            for (std::uint32_t j = 0; j < n; ++j)
                G[i][j] = sub(G[i][j], mul(f, G[rank][j], inst.spec), inst.spec);
        }
        ++rank;
    }
    return n - rank;
}

std::uint32_t radical_dim_kernel(const CurveParams& params, std::uint32_t n) {
    const std::uint32_t p = params.p, r = params.r, d = r * n;
    FieldSpec spec = build_field(p, d);
    modmat::Mat Fq = modmat::mat_pow(spec.frob_p, r, d, p);
    auto fq_pow = [&](std::uint32_t e) { return modmat::mat_pow(Fq, e % n, d, p); };
    modmat::Mat A = modmat::add(fq_pow(2 * params.b), modmat::identity(d), d, p);
    A = modmat::sub(A, fq_pow(params.a + params.b), d, p);
    A = modmat::sub(A, fq_pow(params.b - params.a), d, p);
    std::uint32_t dim_p = d - modmat::rank(A, d, d, p);
    if (dim_p % r) throw OracleError("radical_dim_kernel: kernel is not an F_q-subspace");
    return dim_p / r;
}

std::uint32_t radical_dim_kernel(const QFormInstance& inst) {
    if (!inst.params) throw std::invalid_argument("radical_dim_kernel: two-term instance required");
    return radical_dim_kernel(*inst.params, inst.n);
}

int extract_sign(const BigInt& zeros, const BigInt& q, std::uint32_t n, std::uint32_t w) {
    BigInt base = 1;
    for (std::uint32_t i = 0; i + 1 < n; ++i) base *= q;  // q^{n-1}
    if ((n + w) % 2 == 1) {
        if (zeros != base)
            throw OracleError("extract_sign: odd n+w forces a count of q^(n-1), got " + zeros.str());
        return 0;
    }
    BigInt step = q - 1;
    for (std::uint32_t i = 0; i + 1 < (n + w) / 2; ++i) step *= q;  // (q-1) q^{(n+w)/2-1}
    BigInt diff = zeros - base;
    if (diff == 0) return 0;
    if (diff == step) return 1;
    if (diff == -step) return -1;
    throw OracleError("extract_sign: count " + zeros.str() + " has no sign in {-1,0,1}");
}

BigInt curve_points(const BigInt& zeros, const BigInt& q) { return q * zeros + 1; }

OracleResult run_oracle(const QFormInstance& inst, std::uint64_t budget, std::uint32_t workers) {
    if (!inst.params) throw std::invalid_argument("run_oracle: two-term instance required");
    OracleResult res;
    res.n = inst.n;
    res.zeros = count_zeros(inst, budget, workers);
    std::uint32_t wg = radical_dim_gram(inst);
    std::uint32_t wk = radical_dim_kernel(inst);
    if (wg != wk)
        throw OracleError("radical dimension mismatch: gram=" + std::to_string(wg) +
                          " kernel=" + std::to_string(wk));
    res.w = wg;
    BigInt q = inst.params->q_big();
    res.lambda = extract_sign(res.zeros, q, inst.n, res.w);
    if ((inst.n + res.w) % 2 == 0 && res.lambda == 0)
        throw OracleError("parity law violated: even n+w with zero sign");
    res.points = curve_points(res.zeros, q);
    return res;
}

std::pair<int, int> descent_check(const CurveParams& params, std::uint32_t d, std::uint32_t n,
                                  std::uint64_t budget, std::uint32_t workers) {
    if (d == 0) throw std::invalid_argument("descent_check: d must be positive");
    CurveParams big = CurveParams::make(params.p, params.r * d, params.b, params.a);
    CurveParams small = CurveParams::make(params.p, params.r, params.b * d, params.a * d);
    OracleResult rb = run_oracle(make_instance(big, n), budget, workers);
    OracleResult rs = run_oracle(make_instance(small, d * n), budget, workers);
    return {rb.lambda, rs.lambda};
}

CheckResult congruence_check(const CurveParams& params, std::uint32_t n, std::uint32_t ell,
                             std::uint64_t budget, std::uint32_t workers) {
    if (!is_prime_u64(ell) || ell == 2 || ell == params.p)
        throw std::invalid_argument("congruence_check: ell must be a prime coprime to 2p");
    OracleResult rn = run_oracle(make_instance(params, n), budget, workers);
    OracleResult rnl = run_oracle(make_instance(params, n * ell), budget, workers);
    if (rn.lambda == 0 && rnl.lambda == 0) return CheckResult::Pass;
    if (rn.lambda == 0 || rnl.lambda == 0) return CheckResult::NotApplicable;
    std::uint64_t e2 = static_cast<std::uint64_t>(n) * (ell - 1) + rnl.w - rn.w;
    if (e2 % 2) throw OracleError("congruence_check: non-integral exponent");
    std::uint64_t e = e2 / 2;
    std::uint64_t qm = static_cast<std::uint64_t>(params.q_big() % ell);
    std::uint64_t pw = 1, base = qm % ell;
    while (e) {
        if (e & 1) pw = pw * base % ell;
        base = base * base % ell;
        e >>= 1;
    }
    std::int64_t lhs = rn.lambda;
    std::int64_t rhs = rnl.lambda * static_cast<std::int64_t>(pw);
    std::int64_t diff = (lhs - rhs) % static_cast<std::int64_t>(ell);
    return diff == 0 ? CheckResult::Pass : CheckResult::Fail;
}

} // namespace tqf
