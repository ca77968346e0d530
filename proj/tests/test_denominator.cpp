#include <utility>
#include <vector>

#include "doctest.h"
#include "incpat/denominator.hpp"

using namespace incpat;

TEST_CASE("denominator coefficients follow the mod-r pattern") {
    const PatternLength r3(3), r5(5);
    CHECK(denom_coeff(0, r3) == 1);
    CHECK(denom_coeff(1, r3) == -1);
    CHECK(denom_coeff(2, r3) == 0);
    CHECK(denom_coeff(3, r3) == 1);
    CHECK(denom_coeff(4, r3) == -1);
    CHECK(denom_coeff(5, r3) == 0);
    CHECK(denom_coeff(6, r3) == 1);
    CHECK(denom_coeff(7, r3) == -1);
    CHECK(denom_coeff(0, r5) == 1);
    CHECK(denom_coeff(5, r5) == 1);
    CHECK(denom_coeff(6, r5) == -1);
    CHECK(denom_coeff(4, r5) == 0);
}

TEST_CASE("pattern length 2 makes every coefficient alternate") {
    const PatternLength r2(2);
    for (int k = 0; k <= 12; ++k) CHECK(denom_coeff(k, r2) == (k % 2 == 0 ? 1 : -1));
}

TEST_CASE("cluster polynomials reproduce the small cases") {
    const PatternLength r3(3);
    const TPoly t = TPoly::variable();
    CHECK(p_poly(1, r3).is_zero());
    CHECK(p_poly(2, r3).is_zero());
    CHECK(p_poly(3, r3) == t - TPoly(1));
    CHECK(p_poly(4, r3) == pow(t - TPoly(1), 2));
    CHECK(p_poly(5, r3) == t * t * t - TPoly(2) * t * t + t);
    // P_5 = (t-1)(P_4 + P_3) = (t-1)((t-1) + (t-1)^2)
    CHECK(p_poly(5, r3) == (t - TPoly(1)) * (p_poly(4, r3) + p_poly(3, r3)));
}

TEST_CASE("pattern length 2 closed form") {
    const PatternLength r2(2);
    const TPoly tm1 = TPoly::variable() - TPoly(1);
    for (int k = 2; k <= 6; ++k) CHECK(p_poly(k, r2) == pow(tm1, k - 1));
}

TEST_CASE("cluster polynomial at t=0 reproduces the denominator coefficients") {
    for (int rv = 2; rv <= 5; ++rv) {
        const PatternLength r(rv);
        for (int k = rv; k <= 12; ++k)
            CHECK(p_poly(k, r).evaluate(BigInt(0)) == -denom_coeff(k, r));
    }
}

TEST_CASE("recurrence block walk visits nonzero coefficients in order") {
    std::vector<std::pair<long long, int>> blocks;
    for_each_recurrence_block(7, PatternLength(3),
                              [&](long long k, int sign) { blocks.emplace_back(k, sign); });
    const std::vector<std::pair<long long, int>> want{{1, 1}, {3, -1}, {4, 1}, {6, -1}, {7, 1}};
    CHECK(blocks == want);

    blocks.clear();
    for_each_recurrence_block(0, PatternLength(3),
                              [&](long long k, int sign) { blocks.emplace_back(k, sign); });
    CHECK(blocks.empty());
}
