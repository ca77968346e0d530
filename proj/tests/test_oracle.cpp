#include <set>
#include <vector>

#include "doctest.h"
#include "grids.hpp"
#include "incpat/counting.hpp"
#include "incpat/denominator.hpp"
#include "incpat/oracle.hpp"

using namespace incpat;
using oracle::Word;

TEST_CASE("occurrence counting") {
    const PatternLength r3(3);
    CHECK(oracle::occurrences({8, 3, 1, 4, 5, 6, 1, 7, 8}, r3) == 3);
    CHECK(oracle::occurrences({1, 2, 3, 4}, r3) == 2);
    CHECK(oracle::occurrences({2, 1}, r3) == 0);
    CHECK(oracle::occurrences({}, r3) == 0);
    CHECK(oracle::occurrences({1, 2, 3, 4}, PatternLength(2)) == 3);
    CHECK(oracle::occurrences({3, 2, 1}, PatternLength(2)) == 0);
    CHECK(oracle::occurrences({1, 1, 2}, r3) == 0);  // equal letters do not rise
}

TEST_CASE("multiset words enumerate exactly once in lexicographic order") {
    const auto words = oracle::words_of_multiset(canonicalize({2, 1}));
    const std::vector<Word> want{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}};
    CHECK(words == want);

    CHECK(oracle::words_of_multiset(canonicalize({})) == std::vector<Word>{{}});
    CHECK(oracle::words_of_multiset(canonicalize({1, 1, 1})).size() == 6);

    for (const auto& m : testgrid::canonical_multisets(6, 6)) {
        const auto all = oracle::words_of_multiset(m);
        CHECK(BigInt(all.size()) == multinomial(m));
        const std::set<Word> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
    }
}

TEST_CASE("oracle counts and weights") {
    const PatternLength r2(2), r3(3);
    const TPoly t = TPoly::variable();
    CHECK(oracle::oracle_count(canonicalize({1, 1, 1}), r3) == 5);
    CHECK(oracle::oracle_count(canonicalize({2, 1}), r3) == 3);
    CHECK(oracle::oracle_count(canonicalize({1, 1, 1, 1}), r2) == 1);
    CHECK(oracle::oracle_weight(canonicalize({1, 1, 1}), r3) == t + TPoly(5));
    CHECK(oracle::oracle_weight(canonicalize({2, 1}), r3) == TPoly(3));
    CHECK(oracle::oracle_weight(canonicalize({1, 1}), r2) == t + TPoly(1));
}

TEST_CASE("oracle weights specialize like the real enumerator") {
    for (int rv = 2; rv <= 3; ++rv) {
        const PatternLength r(rv);
        for (const auto& m : testgrid::canonical_multisets(6, 6)) {
            const TPoly g = oracle::oracle_weight(m, r);
            CHECK(g.evaluate(BigInt(0)) == oracle::oracle_count(m, r));
            CHECK(g.evaluate(BigInt(1)) == multinomial(m));
        }
    }
}

TEST_CASE("clusters on the increasing word") {
    const PatternLength r3(3), r4(4);
    const TPoly tm1 = TPoly::variable() - TPoly(1);
    CHECK(oracle::oracle_cluster_poly(2, r3).is_zero());
    CHECK(oracle::oracle_cluster_poly(3, r3) == tm1);
    CHECK(oracle::oracle_cluster_poly(4, r3) == pow(tm1, 2));
    // with r=4 and k=6 the second mark can only start at 2 or 3
    CHECK(oracle::oracle_cluster_poly(6, r4) ==
          tm1 * (oracle::oracle_cluster_poly(5, r4) + oracle::oracle_cluster_poly(4, r4)));
}

TEST_CASE("every yielded mark set is structurally a cluster") {
    for (int rv = 2; rv <= 4; ++rv) {
        const PatternLength r(rv);
        for (int k = 1; k <= 9; ++k) {
            oracle::for_each_cluster(k, r, [&](const std::vector<int>& starts) {
                REQUIRE_FALSE(starts.empty());
                CHECK(starts.front() == 1);
                CHECK(starts.back() + rv - 1 == k);
                for (std::size_t i = 0; i + 1 < starts.size(); ++i) {
                    CHECK(starts[i] < starts[i + 1]);                // strictly increasing
                    CHECK(starts[i + 1] <= starts[i] + rv - 1);      // adjacent overlap
                }
                for (int u : starts) {
                    CHECK(u >= 1);
                    CHECK(u + rv - 1 <= k);
                }
            });
        }
    }
}

TEST_CASE("cluster enumeration matches the recurrence polynomials") {
    for (int rv = 2; rv <= 5; ++rv) {
        const PatternLength r(rv);
        for (int k = 1; k <= 8; ++k)
            CHECK(oracle::oracle_cluster_poly(k, r) == p_poly(k, r));
    }
}

TEST_CASE("recurrences agree with brute force on a dense grid") {
    for (int rv = 2; rv <= 4; ++rv) {
        const PatternLength r(rv);
        for (const auto& m : testgrid::canonical_multisets(7, 4)) {
            CHECK(count_avoiders(m, r) == oracle::oracle_count(m, r));
            CHECK(weight_enumerator(m, r) == oracle::oracle_weight(m, r));
        }
    }
}
