#include "rydgrav/angular.hpp"
#include "rydgrav/angular_oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace rydgrav;
using namespace rydgrav::angular;

namespace {

// A state with the requested (l, j); n chosen large enough to be valid.
QuantumState with_lj(long l, long twoj)
{
    return QuantumState(l + 2, l, twoj);
}

// All valid (l, twoj) combinations with twoj <= max_twoj.
std::vector<QuantumState> small_states(long max_twoj)
{
    std::vector<QuantumState> out;
    for (long l = 0; l <= (max_twoj + 1) / 2; ++l)
        for (long twoj : {2 * l - 1, 2 * l + 1})
            if (twoj >= 1 && twoj <= max_twoj)
                out.push_back(with_lj(l, twoj));
    return out;
}

} // namespace

TEST_SUITE_BEGIN("angular");

TEST_CASE("selection rules")
{
    SUBCASE("s to s blocked by l + l' >= 2")
    {
        const auto out = selection_rules(with_lj(0, 1), with_lj(0, 1));
        CHECK_FALSE(out.allowed);
        CHECK((out.violations & rule_l_sum) != 0);
    }
    SUBCASE("p3/2 to f7/2 allowed")
    {
        const auto out = selection_rules(with_lj(1, 3), with_lj(3, 7));
        CHECK(out.allowed);
        CHECK(out.delta_j == 2);
        CHECK(out.delta_l == 2);
    }
    SUBCASE("delta l = 1 blocked")
    {
        const auto out = selection_rules(with_lj(1, 3), with_lj(2, 5));
        CHECK_FALSE(out.allowed);
        CHECK((out.violations & rule_delta_l) != 0);
    }
    SUBCASE("delta j = 3 blocked")
    {
        const auto out = selection_rules(with_lj(1, 1), with_lj(3, 7));
        CHECK_FALSE(out.allowed);
        CHECK((out.violations & rule_delta_j) != 0);
    }
}

TEST_CASE("table values at small j")
{
    // delta j = +2 from j = 1/2: 6*4*6 / (64*2.5*1.5) = 3/5, the global maximum
    CHECK(reduced_c2(with_lj(0, 1), with_lj(2, 5)) == doctest::Approx(0.6).epsilon(1e-15));
    // delta j = +2 from j = 3/2: 6*6*8 / (64*3.5*2.5) = 18/35
    CHECK(reduced_c2(with_lj(1, 3), with_lj(3, 7)) == doctest::Approx(18.0 / 35.0).epsilon(1e-15));
    // structural zeros of the unused columns
    CHECK(reduced_c2_row(+1, 5, true) == 0.0);
    CHECK(reduced_c2_row(+2, 5, false) == 0.0);
    CHECK(reduced_c2_row(0, 5, false) == 0.0);
    // the j = 1/2 -> 1/2 cell vanishes through the (2j-1) factor
    CHECK(reduced_c2_row(0, 1, true) == 0.0);
}

TEST_CASE("disallowed transitions raise errors naming the rule")
{
    CHECK_THROWS_WITH_AS(reduced_c2(with_lj(0, 1), with_lj(0, 1)),
                         doctest::Contains("l+l'"), invalid_transition);
    CHECK_THROWS_WITH_AS(reduced_c2(with_lj(1, 3), with_lj(2, 5)),
                         doctest::Contains("delta_l"), invalid_transition);
    CHECK_THROWS_AS(reduced_c2_row(-2, 3, true), std::domain_error);
    CHECK_THROWS_AS(reduced_c2_row(-1, 1, false), std::domain_error);
    CHECK_THROWS_AS(reduced_c2_row(+3, 9, true), std::domain_error);
}

TEST_CASE("table agrees with the Wigner-algebra oracle for every allowed pair up to j = 21/2")
{
    const auto states = small_states(21);
    int tested = 0;
    double max_c = 0.0;
    long argmax_twoj = 0;
    long argmax_dj = 0;
    for (const auto& a : states) {
        for (const auto& b : states) {
            const auto rules = selection_rules(a, b);
            if (!rules.allowed)
                continue;
            const double table = reduced_c2(a, b);
            const double oracle = reduced_c2_oracle(a, b);
            CHECK(std::fabs(table - oracle) <= 1e-12);
            if (table > max_c) {
                max_c = table;
                argmax_twoj = a.twoj;
                argmax_dj = rules.delta_j;
            }
            ++tested;
        }
    }
    CHECK(tested == 97); // complete enumeration for j, j' <= 21/2
    // global maximum 3/5 at j = 1/2, delta j = +2
    CHECK(max_c == doctest::Approx(0.6).epsilon(1e-14));
    CHECK(argmax_twoj == 1);
    CHECK(argmax_dj == 2);
}

TEST_CASE("oracle vanishes for parity-forbidden delta l = 1")
{
    CHECK(std::fabs(reduced_c2_oracle(with_lj(1, 3), QuantumState(4, 2, 5))) <= 1e-15);
    CHECK(std::fabs(reduced_c2_oracle(with_lj(2, 5), QuantumState(5, 3, 7))) <= 1e-15);
}

TEST_CASE("table range and large-j limits")
{
    // range 0..3/5 across rows sampled up to j = 1e5
    for (long twoj : {1L, 3L, 9L, 101L, 2001L, 200001L}) {
        for (int dj : {-2, -1, 0, 1, 2}) {
            if ((dj == -2 && twoj < 4) || (dj == -1 && twoj <= 2))
                continue;
            for (bool preserved : {true, false}) {
                const double c = reduced_c2_row(dj, twoj, preserved);
                CHECK(c >= 0.0);
                CHECK(c <= 0.6 + 1e-15);
            }
        }
    }

    // delta j = +2 row tends to 3/8 and delta j = 0 row to 1/4, monotonically
    double prev2 = 1.0;
    double prev0 = 1.0;
    for (long twoj : {11L, 101L, 1001L, 10001L, 200001L}) {
        const double d2 = std::fabs(reduced_c2_row(+2, twoj, true) - 0.375);
        const double d0 = std::fabs(reduced_c2_row(0, twoj, true) - 0.25);
        CHECK(d2 < prev2);
        CHECK(d0 < prev0);
        prev2 = d2;
        prev0 = d0;
    }
    CHECK(reduced_c2_row(+2, 200001, true) == doctest::Approx(0.375).epsilon(1e-4));
    CHECK(reduced_c2_row(0, 200001, true) == doctest::Approx(0.25).epsilon(1e-4));
}

TEST_CASE("degeneracy-weighted factor")
{
    // (2/6) * (3/5) = 1/5
    CHECK(degeneracy_weighted_c2(with_lj(0, 1), with_lj(2, 5))
          == doctest::Approx(0.2).epsilon(1e-14));

    // j -> infinity limits: 3/8 for delta j = +2, 1/4 for delta j = 0
    const long l = 100000;
    const QuantumState lo(l + 1, l, 2 * l + 1);
    const QuantumState up2(l + 3, l + 2, 2 * l + 5);
    const QuantumState up0(l + 2, l, 2 * l + 1);
    CHECK(degeneracy_weighted_c2(lo, up2) == doctest::Approx(0.375).epsilon(1e-4));
    CHECK(degeneracy_weighted_c2(lo, up0) == doctest::Approx(0.25).epsilon(1e-4));
}

TEST_SUITE_END();
