#include <doctest.h>

#include "tqf/closed_form.hpp"
#include "tqf/qform.hpp"
#include "tqf/weil.hpp"

using namespace tqf;

namespace {

CountSequence oracle_counts(const CurveParams& params, std::uint32_t n_max) {
    CountSequence cs;
    cs.params = params;
    for (std::uint32_t n = 1; n <= n_max; ++n)
        cs.entries.push_back(
            {n, run_oracle(make_instance(params, n)).points, CountSource::Oracle});
    return cs;
}

void extend_predicted(CountSequence& cs, std::uint32_t upto) {
    for (std::uint32_t n = static_cast<std::uint32_t>(cs.entries.size()) + 1; n <= upto; ++n) {
        Prediction pred = predict(cs.params, n);
        REQUIRE(pred.covered());
        cs.entries.push_back({n, *pred.points, CountSource::Predicted});
    }
}

} // namespace

TEST_CASE("genus of the curve family") {
    CHECK(genus(CurveParams::make(3, 1, 1, 0)) == 3);
    CHECK(genus(CurveParams::make(3, 1, 2, 1)) == 9);
    CHECK(genus(CurveParams::make(5, 1, 1, 0)) == 10);
    CHECK(genus(CurveParams::make(3, 2, 1, 0)) == 36);  // q = 9: (9-1)*9/2
}

TEST_CASE("genus zero reconstructs the constant polynomial") {
    LPoly L = lpoly_from_power_sums({}, 0);
    REQUIRE(L.coeffs.size() == 1);
    CHECK(L.coeffs[0] == 1);
    CHECK(check_functional_equation(L, 3));
}

TEST_CASE("L-polynomial of the witness curve") {
    CurveParams c110 = CurveParams::make(3, 1, 1, 0);
    CountSequence cs = oracle_counts(c110, 6);

    // counts pinned by enumeration
    std::vector<BigInt> expect_counts{10, 10, 28, 82, 190, 892};
    for (std::uint32_t n = 1; n <= 6; ++n) CHECK(cs.at(n)->points == expect_counts[n - 1]);

    LPoly L = lpoly_from_counts(cs);
    REQUIRE(L.g == 3);
    // derived by Newton's identities from the counts above
    CHECK(L.coeffs == std::vector<BigInt>{1, 6, 18, 36, 54, 54, 27});
    CHECK(check_functional_equation(L, 3));

    // round trip: the polynomial reproduces its input counts
    auto back = counts_from_lpoly(L, 3, 6);
    for (std::uint32_t n = 1; n <= 6; ++n) CHECK(back[n - 1] == expect_counts[n - 1]);

    // and extends to agree with the closed form far past the input range
    auto ext = counts_from_lpoly(L, 3, 24);
    for (std::uint32_t n = 7; n <= 24; ++n) {
        Prediction pred = predict(c110, n);
        REQUIRE(pred.covered());
        CAPTURE(n);
        CHECK(ext[n - 1] == *pred.points);
    }

    // any perturbed coefficient breaks the functional equation
    LPoly bad = L;
    bad.coeffs[2] += 1;
    CHECK_FALSE(check_functional_equation(bad, 3));
}

TEST_CASE("reconstruction rejects predicted entries and missing counts") {
    CurveParams c110 = CurveParams::make(3, 1, 1, 0);
    CountSequence cs = oracle_counts(c110, 5);
    CHECK_THROWS_AS(lpoly_from_counts(cs), std::invalid_argument);  // needs n = 1..6

    extend_predicted(cs, 6);
    CHECK_THROWS_AS(lpoly_from_counts(cs), std::invalid_argument);  // entry 6 is predicted

    // bad counts surface as a non-integral Newton division
    std::vector<BigInt> ps{0, 0, 1, 0, 0, 0};  // 3*e_3 = 1
    CHECK_THROWS_AS(lpoly_from_power_sums(ps, 3), OracleError);
}

TEST_CASE("weil bound holds with equality exactly at maximal/minimal degrees") {
    CurveParams c110 = CurveParams::make(3, 1, 1, 0);
    CountSequence cs = oracle_counts(c110, 12);
    BigInt two_g = 2 * BigInt(genus(c110));
    for (std::uint32_t n = 1; n <= 12; ++n) {
        BigInt t = *cs.diff_at(n);
        BigInt bound_sq = two_g * two_g * big_pow(3, n);
        CAPTURE(n);
        CHECK(t * t <= bound_sq);
        bool extremal = (n == 6 || n == 12);
        CHECK((t * t == bound_sq) == extremal);
    }
}

TEST_CASE("periodicity of the normalized differences") {
    CurveParams c110 = CurveParams::make(3, 1, 1, 0);
    CountSequence cs = oracle_counts(c110, 12);
    extend_predicted(cs, 24);

    CHECK(check_supersingular_period(cs, 12));
    CHECK(check_supersingular_period(cs, 24));   // multiples of the period work
    CHECK_FALSE(check_supersingular_period(cs, 8));
    CHECK_FALSE(check_supersingular_period(cs, 6));  // maximal, not minimal, at 6
    CHECK_THROWS_AS(check_supersingular_period(cs, 11), std::invalid_argument);  // odd s*r
}

TEST_CASE("halving step for curves with a maximal half-period") {
    CurveParams c110 = CurveParams::make(3, 1, 1, 0);
    CountSequence cs = oracle_counts(c110, 12);

    CHECK(halving_reduction_check(cs, 12, 12) == CheckResult::Pass);
    CHECK(halving_reduction_check(cs, 12, 4) == CheckResult::Pass);  // 0 = -q * 0
    // gcd(2,6) = gcd(2,12): the dispatch hypothesis fails
    CHECK(halving_reduction_check(cs, 12, 2) == CheckResult::NotApplicable);
    CHECK(halving_reduction_check(cs, 12, 3) == CheckResult::NotApplicable);  // odd n
}

TEST_CASE("maximal at 2n forces the plain count at n") {
    CurveParams c110 = CurveParams::make(3, 1, 1, 0);
    CountSequence cs = oracle_counts(c110, 12);

    CHECK(maximal_half_count_check(cs, 3) == CheckResult::Pass);  // 28 = 27 + 1
    CHECK(maximal_half_count_check(cs, 1) == CheckResult::NotApplicable);  // not maximal at 2
    CHECK(maximal_half_count_check(cs, 2) == CheckResult::NotApplicable);
    // lambda vanishes at every degree the check certifies
    OracleResult r3 = run_oracle(make_instance(c110, 3));
    CHECK(r3.lambda == 0);
}
