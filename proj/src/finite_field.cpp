#include "tqf/finite_field.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tqf {

namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& f, const Poly& g, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    Poly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i]) continue;
        std::uint64_t a = f[i];
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + a * g[j]) % p);
    }
    return out;
}

// f mod m, m monic
Poly poly_mod(Poly f, const Poly& m, std::uint32_t p) {
    trim(f);
    const std::size_t dm = m.size() - 1;
    while (f.size() > dm) {
        std::uint64_t c = f.back();
        std::size_t shift = f.size() - 1 - dm;
        if (c) {
            for (std::size_t i = 0; i < m.size(); ++i) {
                auto& v = f[shift + i];
                v = static_cast<std::uint32_t>((v + (p - m[i] % p) * c) % p);
            }
        }
        f.pop_back();
        trim(f);
        if (f.size() <= dm) break;
    }
    trim(f);
    return f;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
    Poly r = {1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly f, Poly g, std::uint32_t p) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        // make g monic for poly_mod
        std::uint32_t inv = modmat::inv_mod(g.back(), p);
        Poly gm = g;
        for (auto& v : gm) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p);
        f = poly_mod(std::move(f), gm, p);
        std::swap(f, g);
    }
    return f;
}

bool poly_is_x(const Poly& f) { return f.size() == 2 && f[0] == 0 && f[1] == 1; }

bool is_irreducible(const Poly& f, std::uint32_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // reject linear factors by evaluation
    for (std::uint32_t c = 1; c < p; ++c) {
        std::uint64_t v = 0, cp = 1;
        for (std::size_t i = 0; i <= d; ++i) {
            v = (v + f[i] * cp) % p;
            cp = cp * c % p;
        }
        if (v == 0) return false;
    }
    std::size_t n = d;
    std::vector<std::size_t> checkpoints;  // d/l for prime l | d, ascending
    for (std::size_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            checkpoints.push_back(d / k);
            while (n % k == 0) n /= k;
        }
    }
    if (n > 1) checkpoints.push_back(d / n);
    std::sort(checkpoints.begin(), checkpoints.end());
    // x^{p^i} mod f by repeated p-th powering, with gcd aborts on the way up
    Poly cur = {0, 1};
    std::size_t next_cp = 0;
    for (std::size_t i = 1; i <= d; ++i) {
        cur = poly_powmod(cur, p, f, p);
        if (next_cp < checkpoints.size() && i == checkpoints[next_cp]) {
            ++next_cp;
            Poly g = cur;
            if (g.size() < 2) g.resize(2, 0);
            g[1] = (g[1] + p - 1) % p;
            trim(g);
            if (g.empty()) return false;  // x^{p^{d/l}} = x already: f splits
            if (poly_gcd(f, g, p).size() != 1) return false;
        }
    }
    return poly_is_x(cur);
}

FieldElement from_poly(Poly f, std::uint32_t d) {
    f.resize(d, 0);
    return FieldElement{std::move(f)};
}

void check_spec_element(const FieldElement& a, const FieldSpec& s, const char* who) {
    if (a.c.size() != s.d)
        throw std::invalid_argument(std::string(who) + ": element does not match field spec");
    for (auto v : a.c)
        if (v >= s.p) throw std::invalid_argument(std::string(who) + ": coefficient out of range");
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

FieldSpec build_field(std::uint32_t p, std::uint32_t d) {
    if (!is_prime_u64(p)) throw std::invalid_argument("build_field: p is not prime");
    if (p == 2) throw std::invalid_argument("build_field: characteristic 2 is not supported");
    if (d == 0) throw std::invalid_argument("build_field: degree must be positive");

    FieldSpec s;
    s.p = p;
    s.d = d;

    // lexicographically smallest monic irreducible, low-degree coefficients
    // compared first; constant term 0 only works for degree 1
    Poly coeffs(d, 0);
    if (d > 1) coeffs[0] = 1;
    for (;;) {
        Poly f = coeffs;
        f.push_back(1);
        if (is_irreducible(f, p)) {
            s.modulus = f;
            break;
        }
        std::size_t i = d;
        while (i-- > 0) {
            if (++coeffs[i] < p) break;
            coeffs[i] = 0;
            if (i == 0) throw std::logic_error("build_field: no irreducible polynomial found");
        }
    }

    // z^(d+j) mod modulus for j = 0..d-1
    s.red_rows.assign(static_cast<std::size_t>(d) * d, 0);
    Poly cur(d + 1, 0);
    cur[d] = 1;
    cur = poly_mod(std::move(cur), s.modulus, p);
    for (std::uint32_t j = 0; j < d; ++j) {
        Poly row = cur;
        row.resize(d, 0);
        for (std::uint32_t i = 0; i < d; ++i) s.red_rows[static_cast<std::size_t>(j) * d + i] = row[i];
        cur.insert(cur.begin(), 0);
        cur = poly_mod(std::move(cur), s.modulus, p);
    }

    // p-power Frobenius matrix: column j = (z^p)^j
    Poly zp = poly_powmod({0, 1}, p, s.modulus, p);
    s.frob_p.assign(static_cast<std::size_t>(d) * d, 0);
    Poly col = {1};
    for (std::uint32_t j = 0; j < d; ++j) {
        Poly cc = col;
        cc.resize(d, 0);
        for (std::uint32_t i = 0; i < d; ++i) s.frob_p[static_cast<std::size_t>(i) * d + j] = cc[i];
        col = poly_mod(poly_mul(col, zp, p), s.modulus, p);
    }
    return s;
}

FieldElement fe_zero(const FieldSpec& s) { return FieldElement{std::vector<std::uint32_t>(s.d, 0)}; }

FieldElement fe_one(const FieldSpec& s) {
    FieldElement e = fe_zero(s);
    e.c[0] = 1;
    return e;
}

FieldElement fe_const(const FieldSpec& s, std::uint64_t value) {
    FieldElement e = fe_zero(s);
    e.c[0] = static_cast<std::uint32_t>(value % s.p);
    return e;
}

FieldElement add(const FieldElement& a, const FieldElement& b, const FieldSpec& s) {
    check_spec_element(a, s, "add");
    check_spec_element(b, s, "add");
    FieldElement r = a;
    for (std::uint32_t i = 0; i < s.d; ++i) r.c[i] = (r.c[i] + b.c[i]) % s.p;
    return r;
}

FieldElement sub(const FieldElement& a, const FieldElement& b, const FieldSpec& s) {
    check_spec_element(a, s, "sub");
    check_spec_element(b, s, "sub");
    FieldElement r = a;
    for (std::uint32_t i = 0; i < s.d; ++i) r.c[i] = (r.c[i] + s.p - b.c[i]) % s.p;
    return r;
}

FieldElement neg(const FieldElement& a, const FieldSpec& s) { return sub(fe_zero(s), a, s); }

FieldElement mul(const FieldElement& a, const FieldElement& b, const FieldSpec& s) {
    check_spec_element(a, s, "mul");
    check_spec_element(b, s, "mul");
    const std::uint32_t d = s.d, p = s.p;
    std::vector<std::uint64_t> prod(2 * d - 1, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
        if (!a.c[i]) continue;
        std::uint64_t av = a.c[i];
        for (std::uint32_t j = 0; j < d; ++j) prod[i + j] += av * b.c[j];
    }
    FieldElement r = fe_zero(s);
    for (std::uint32_t i = 0; i < d; ++i) r.c[i] = static_cast<std::uint32_t>(prod[i] % p);
    for (std::uint32_t j = 0; d + j < 2 * d - 1; ++j) {
        std::uint64_t c = prod[d + j] % p;
        if (!c) continue;
        const std::uint32_t* row = &s.red_rows[static_cast<std::size_t>(j) * d];
        for (std::uint32_t i = 0; i < d; ++i)
            r.c[i] = static_cast<std::uint32_t>((r.c[i] + c * row[i]) % p);
    }
    return r;
}

FieldElement inverse(const FieldElement& a, const FieldSpec& s) {
    check_spec_element(a, s, "inverse");
    if (a.is_zero()) throw std::invalid_argument("inverse: zero has no inverse");
    // extended euclid on (modulus, a)
    const std::uint32_t p = s.p;
    Poly r0 = s.modulus, r1(a.c.begin(), a.c.end());
    trim(r1);
    Poly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        std::uint32_t inv = modmat::inv_mod(r1.back(), p);
        Poly q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1, 0);
        Poly rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::uint64_t c = static_cast<std::uint64_t>(rem.back()) * inv % p;
            std::size_t shift = rem.size() - r1.size();
            q[shift] = static_cast<std::uint32_t>(c);
            for (std::size_t i = 0; i < r1.size(); ++i) {
                auto& v = rem[shift + i];
                v = static_cast<std::uint32_t>((v + (p - r1[i] % p) * c) % p);
            }
            trim(rem);
            if (rem.size() < r1.size()) break;
        }
        Poly tnew = t0;
        Poly qt = poly_mul(q, t1, p);
        tnew.resize(std::max(tnew.size(), qt.size()), 0);
        for (std::size_t i = 0; i < qt.size(); ++i) tnew[i] = (tnew[i] + p - qt[i] % p) % p;
        trim(tnew);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = tnew;
    }
    if (r0.size() != 1) throw std::logic_error("inverse: gcd is not constant");
    std::uint32_t inv = modmat::inv_mod(r0[0], p);
    Poly res = t0;
    for (auto& v : res) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p);
    res = poly_mod(std::move(res), s.modulus, p);
    return from_poly(std::move(res), s.d);
}

FieldElement fe_pow(const FieldElement& a, std::uint64_t e, const FieldSpec& s) {
    FieldElement r = fe_one(s), base = a;
    while (e) {
        if (e & 1) r = mul(r, base, s);
        base = mul(base, base, s);
        e >>= 1;
    }
    return r;
}

FieldElement pow_q(const FieldElement& x, std::uint32_t i, std::uint32_t r, const FieldSpec& s) {
    check_spec_element(x, s, "pow_q");
    std::uint64_t steps = (static_cast<std::uint64_t>(r) * i) % s.d;
    FieldElement out = x;
    std::vector<std::uint32_t> tmp(s.d);
    for (std::uint64_t k = 0; k < steps; ++k) {
        modmat::apply(s.frob_p, out.c.data(), tmp.data(), s.d, s.p);
        out.c = tmp;
    }
    return out;
}

FieldElement trace(const FieldElement& x, std::uint32_t r, const FieldSpec& s) {
    check_spec_element(x, s, "trace");
    if (r == 0 || s.d % r != 0)
        throw std::invalid_argument("trace: subfield degree must divide field degree");
    const std::uint32_t n = s.d / r;
    FieldElement acc = x, cur = x;
    for (std::uint32_t i = 1; i < n; ++i) {
        cur = pow_q(cur, 1, r, s);
        acc = add(acc, cur, s);
    }
    return acc;
}

SubfieldView build_subfield_view(const FieldSpec& s, std::uint32_t r) {
    if (r == 0 || s.d % r != 0)
        throw std::invalid_argument("build_subfield_view: subfield degree must divide field degree");
    BigInt count = big_pow(s.p, r);
    if (count > (BigInt(1) << 26))
        throw std::invalid_argument("build_subfield_view: subfield too large to index");

    modmat::Mat fr = modmat::mat_pow(s.frob_p, r, s.d, s.p);
    modmat::Mat diff = modmat::sub(fr, modmat::identity(s.d), s.d, s.p);
    auto basis = modmat::kernel_basis(diff, s.d, s.d, s.p);
    if (basis.size() != r) throw std::logic_error("build_subfield_view: wrong fixed-field dimension");

    // canonical reduced-echelon basis
    modmat::Mat bm(static_cast<std::size_t>(r) * s.d);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < s.d; ++j) bm[static_cast<std::size_t>(i) * s.d + j] = basis[i][j];
    modmat::Mat bm2 = bm;
    if (modmat::rank(bm2, r, s.d, s.p) != r)
        throw std::logic_error("build_subfield_view: dependent kernel basis");

    SubfieldView view;
    view.r = r;
    view.basis = bm;

    std::uint64_t total = static_cast<std::uint64_t>(count);
    view.elements.reserve(total);
    std::vector<std::uint32_t> combo(r, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        FieldElement e = fe_zero(s);
        std::uint64_t t = idx;
        for (std::uint32_t k = 0; k < r; ++k) {
            std::uint32_t ck = static_cast<std::uint32_t>(t % s.p);
            t /= s.p;
            if (!ck) continue;
            for (std::uint32_t j = 0; j < s.d; ++j)
                e.c[j] = static_cast<std::uint32_t>(
                    (e.c[j] + static_cast<std::uint64_t>(ck) * bm[static_cast<std::size_t>(k) * s.d + j]) % s.p);
        }
        view.elements.push_back(std::move(e));
    }
    std::sort(view.elements.begin(), view.elements.end());
    return view;
}

std::optional<std::uint64_t> subfield_index(const FieldElement& x, const SubfieldView& view) {
    auto it = std::lower_bound(view.elements.begin(), view.elements.end(), x);
    if (it == view.elements.end() || !(*it == x)) return std::nullopt;
    return static_cast<std::uint64_t>(it - view.elements.begin());
}

FieldElement element_from_index(const FieldSpec& s, std::uint64_t idx) {
    FieldElement e = fe_zero(s);
    for (std::uint32_t i = 0; i < s.d && idx; ++i) {
        e.c[i] = static_cast<std::uint32_t>(idx % s.p);
        idx /= s.p;
    }
    if (idx) throw std::invalid_argument("element_from_index: index out of range");
    return e;
}

std::uint64_t index_of_element(const FieldSpec& s, const FieldElement& x) {
    std::uint64_t idx = 0;
    for (std::uint32_t i = s.d; i-- > 0;) idx = idx * s.p + x.c[i];
    return idx;
}

std::vector<FieldElement> enumerate_chunk(const FieldSpec& s, std::uint64_t start,
                                          std::uint64_t len) {
    BigInt order = s.order();
    if (BigInt(start) + len > order) throw std::invalid_argument("enumerate_chunk: range overflow");
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(len));
    for (std::uint64_t i = 0; i < len; ++i) out.push_back(element_from_index(s, start + i));
    return out;
}

} // namespace tqf
