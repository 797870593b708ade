#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "tqf/finite_field.hpp"

using namespace tqf;

namespace {

FieldElement random_element(const FieldSpec& s, std::mt19937& rng) {
    FieldElement e = fe_zero(s);
    std::uniform_int_distribution<std::uint32_t> dist(0, s.p - 1);
    for (auto& c : e.c) c = dist(rng);
    return e;
}

} // namespace

TEST_CASE("build_field picks the smallest modulus deterministically") {
    FieldSpec f31 = build_field(3, 1);
    CHECK(f31.modulus == std::vector<std::uint32_t>{0, 1});  // x

    // smallest monic irreducible quadratic over F_3: x^2 + 1
    FieldSpec f32 = build_field(3, 2);
    CHECK(f32.modulus == std::vector<std::uint32_t>{1, 0, 1});

    FieldSpec again = build_field(3, 2);
    CHECK(again.modulus == f32.modulus);

    CHECK_THROWS_AS(build_field(4, 2), std::invalid_argument);  // not prime
    CHECK_THROWS_AS(build_field(2, 3), std::invalid_argument);  // even characteristic
    CHECK_THROWS_AS(build_field(3, 0), std::invalid_argument);
}

TEST_CASE("modulus is monic with no roots in the prime field") {
    for (auto [p, d] : {std::pair<std::uint32_t, std::uint32_t>{3, 4}, {5, 3}, {7, 2}, {3, 9}}) {
        FieldSpec s = build_field(p, d);
        REQUIRE(s.modulus.size() == d + 1);
        CHECK(s.modulus[d] == 1);
        for (std::uint32_t c = 0; c < p; ++c) {
            std::uint64_t v = 0, cp = 1;
            for (std::uint32_t i = 0; i <= d; ++i) {
                v = (v + s.modulus[i] * cp) % p;
                cp = cp * c % p;
            }
            CHECK(v != 0);
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(42);
    for (auto [p, d] : {std::pair<std::uint32_t, std::uint32_t>{3, 4}, {5, 2}, {7, 3}}) {
        FieldSpec s = build_field(p, d);
        FieldElement one = fe_one(s);
        for (int i = 0; i < 300; ++i) {
            FieldElement x = random_element(s, rng), y = random_element(s, rng),
                         z = random_element(s, rng);
            CHECK(mul(x, y, s) == mul(y, x, s));
            CHECK(mul(mul(x, y, s), z, s) == mul(x, mul(y, z, s), s));
            CHECK(mul(x, add(y, z, s), s) == add(mul(x, y, s), mul(x, z, s), s));
            CHECK(add(x, neg(x, s), s) == fe_zero(s));
            CHECK(mul(x, one, s) == x);
        }
        int inverses = 0;
        while (inverses < 1000) {
            FieldElement x = random_element(s, rng);
            if (x.is_zero()) continue;
            CHECK(mul(x, inverse(x, s), s) == one);
            ++inverses;
        }
        CHECK_THROWS_AS(inverse(fe_zero(s), s), std::invalid_argument);
    }
}

TEST_CASE("frobenius is a field automorphism of the right order") {
    std::mt19937 rng(7);
    FieldSpec s = build_field(3, 6);
    for (int i = 0; i < 100; ++i) {
        FieldElement x = random_element(s, rng), y = random_element(s, rng);
        FieldElement fx = pow_q(x, 1, 1, s);
        CHECK(fx == fe_pow(x, 3, s));
        CHECK(pow_q(add(x, y, s), 1, 1, s) == add(fx, pow_q(y, 1, 1, s), s));
        CHECK(pow_q(mul(x, y, s), 1, 1, s) == mul(fx, pow_q(y, 1, 1, s), s));
        CHECK(pow_q(x, 0, 1, s) == x);
        CHECK(pow_q(x, 6, 1, s) == x);  // full orbit closes
        CHECK(pow_q(x, 3, 2, s) == x);  // q = p^2, q^3 = p^6
    }
}

TEST_CASE("trace lands in the subfield, is linear, surjective with equal fibers") {
    // over the prime subfield of F_9: trace of a constant c is c + c^3 = 2c
    FieldSpec f9 = build_field(3, 2);
    for (std::uint64_t c = 0; c < 3; ++c)
        CHECK(trace(fe_const(f9, c), 1, f9) == fe_const(f9, 2 * c % 3));
    CHECK_THROWS_AS(trace(fe_zero(f9), 3, f9), std::invalid_argument);  // 3 does not divide 2

    for (auto [p, d, r] :
         {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{3, 4, 1}, {3, 4, 2}, {5, 2, 1}}) {
        FieldSpec s = build_field(p, d);
        SubfieldView view = build_subfield_view(s, r);
        const std::uint32_t n = d / r;

        CHECK(trace(fe_zero(s), r, s).is_zero());
        CHECK(trace(fe_one(s), r, s) == fe_const(s, n));

        std::mt19937 rng(11);
        for (int i = 0; i < 50; ++i) {
            FieldElement x = random_element(s, rng), y = random_element(s, rng);
            FieldElement alpha = view.elements[i % view.elements.size()];
            FieldElement lhs = trace(add(mul(alpha, x, s), y, s), r, s);
            FieldElement rhs = add(mul(alpha, trace(x, r, s), s), trace(y, r, s), s);
            CHECK(lhs == rhs);
        }

        // exhaustive: every subfield value hit exactly q^{n-1} times
        std::map<std::uint64_t, std::uint64_t> fibers;
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < d; ++i) total *= p;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            FieldElement t = trace(element_from_index(s, idx), r, s);
            auto si = subfield_index(t, view);
            REQUIRE(si.has_value());
            ++fibers[*si];
        }
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < r; ++i) q *= p;
        CHECK(fibers.size() == q);
        for (auto& [idx, cnt] : fibers) CHECK(cnt == total / q);
        (void)n;
    }
}

TEST_CASE("subfield view indexes exactly the fixed points") {
    FieldSpec s = build_field(3, 6);
    SubfieldView view = build_subfield_view(s, 2);
    CHECK(view.size() == 9);
    CHECK(subfield_index(fe_zero(s), view) == 0);

    std::set<std::uint64_t> seen;
    std::uint64_t fixed = 0;
    for (std::uint64_t idx = 0; idx < 729; ++idx) {
        FieldElement x = element_from_index(s, idx);
        bool is_fixed = pow_q(x, 1, 2, s) == x;
        auto si = subfield_index(x, view);
        CHECK(si.has_value() == is_fixed);
        if (si) {
            CHECK(*si < 9);
            seen.insert(*si);
            ++fixed;
        }
    }
    CHECK(fixed == 9);
    CHECK(seen.size() == 9);

    CHECK_THROWS_AS(build_subfield_view(s, 4), std::invalid_argument);  // 4 does not divide 6
}

TEST_CASE("enumerate_chunk partitions the field") {
    FieldSpec s = build_field(3, 3);
    auto all = enumerate_chunk(s, 0, 27);
    std::set<std::vector<std::uint32_t>> uniq;
    for (const auto& e : all) uniq.insert(e.c);
    CHECK(all.size() == 27);
    CHECK(uniq.size() == 27);

    auto single = enumerate_chunk(s, 0, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].is_zero());

    auto left = enumerate_chunk(s, 0, 10);
    auto right = enumerate_chunk(s, 10, 17);
    std::set<std::vector<std::uint32_t>> both;
    for (const auto& e : left) both.insert(e.c);
    for (const auto& e : right) both.insert(e.c);
    CHECK(both.size() == 27);

    CHECK_THROWS_AS(enumerate_chunk(s, 20, 10), std::invalid_argument);

    // base-p digits: index 5 = 2 + 1*3 -> coefficients (2,1,0)
    CHECK(all[5].c == std::vector<std::uint32_t>{2, 1, 0});
    CHECK(index_of_element(s, all[5]) == 5);
}
