#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tqf/bigint.hpp"
#include "tqf/linalg.hpp"

namespace tqf {

/// F_{p^d} = F_p[z]/(modulus), odd p. The modulus is the lexicographically
/// smallest monic irreducible of degree d (coefficients compared low-degree
/// first), so a (p, d) pair always names the same field.
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t d = 0;
    std::vector<std::uint32_t> modulus;   // d+1 coefficients, low degree first, monic
    std::vector<std::uint32_t> red_rows;  // d x d: row j = coefficients of z^(d+j) mod modulus
    modmat::Mat frob_p;                   // d x d matrix of x -> x^p on coefficient vectors

    BigInt order() const { return big_pow(p, d); }
    bool same(const FieldSpec& o) const { return p == o.p && d == o.d; }
};

/// Coefficient vector in the power basis of the modulus root; length d.
struct FieldElement {
    std::vector<std::uint32_t> c;

    bool operator==(const FieldElement& o) const { return c == o.c; }
    bool operator<(const FieldElement& o) const { return c < o.c; }
    bool is_zero() const {
        for (auto v : c)
            if (v) return false;
        return true;
    }
};

/// The subfield F_{p^r} = {x : x^{p^r} = x} inside F_{p^d}, with a stable
/// indexing of its p^r elements (sorted by coefficient vector).
struct SubfieldView {
    std::uint32_t r = 0;
    std::vector<FieldElement> elements;  // index -> element, lexicographic order
    std::vector<std::uint32_t> basis;    // r x d row-major F_p-basis (reduced echelon)

    std::uint64_t size() const { return elements.size(); }
};

bool is_prime_u64(std::uint64_t n);

FieldSpec build_field(std::uint32_t p, std::uint32_t d);

FieldElement fe_zero(const FieldSpec& s);
FieldElement fe_one(const FieldSpec& s);
FieldElement fe_const(const FieldSpec& s, std::uint64_t value);  // image of an integer

FieldElement add(const FieldElement& a, const FieldElement& b, const FieldSpec& s);
FieldElement sub(const FieldElement& a, const FieldElement& b, const FieldSpec& s);
FieldElement neg(const FieldElement& a, const FieldSpec& s);
FieldElement mul(const FieldElement& a, const FieldElement& b, const FieldSpec& s);
FieldElement inverse(const FieldElement& a, const FieldSpec& s);
FieldElement fe_pow(const FieldElement& a, std::uint64_t e, const FieldSpec& s);

/// x^{q^i} with q = p^r, by iterating the precomputed p-power map.
FieldElement pow_q(const FieldElement& x, std::uint32_t i, std::uint32_t r, const FieldSpec& s);

/// Tr_{F_{p^d}/F_{p^r}}(x) = sum of x^{q^i}, i < d/r. Requires r | d.
FieldElement trace(const FieldElement& x, std::uint32_t r, const FieldSpec& s);

SubfieldView build_subfield_view(const FieldSpec& s, std::uint32_t r);

/// Position of x in the view's indexing, or nullopt if x is not fixed by
/// Frobenius^r. Index 0 is always the zero element.
std::optional<std::uint64_t> subfield_index(const FieldElement& x, const SubfieldView& view);

/// Element whose coefficient vector is the base-p expansion of idx.
FieldElement element_from_index(const FieldSpec& s, std::uint64_t idx);
std::uint64_t index_of_element(const FieldSpec& s, const FieldElement& x);

/// Elements with indices start .. start+len-1; chunks partition the field.
std::vector<FieldElement> enumerate_chunk(const FieldSpec& s, std::uint64_t start,
                                          std::uint64_t len);

} // namespace tqf
