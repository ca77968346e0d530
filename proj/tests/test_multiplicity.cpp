#include <stdexcept>

#include "doctest.h"
#include "incpat/multiplicity.hpp"

using namespace incpat;

TEST_CASE("pattern length must be at least 2") {
    CHECK_THROWS_AS(PatternLength(1), std::invalid_argument);
    CHECK_THROWS_AS(PatternLength(0), std::invalid_argument);
    CHECK_THROWS_AS(PatternLength(-3), std::invalid_argument);
    CHECK(PatternLength(2).value == 2);
    CHECK(PatternLength(9).value == 9);
}

TEST_CASE("canonicalize sorts, strips zeros, preserves the total") {
    CHECK(canonicalize({1, 2, 0, 1}).parts() == std::vector<int>{2, 1, 1});
    CHECK(canonicalize({}).parts().empty());
    CHECK(canonicalize({3, 3}).parts() == std::vector<int>{3, 3});
    CHECK(canonicalize({0, 0, 0}).parts().empty());
    CHECK(canonicalize({1, 2, 0, 1}).total() == 4);
    CHECK(canonicalize({5}).total() == 5);
    CHECK(canonicalize({}).total() == 0);
    CHECK_THROWS_AS(canonicalize({1, -1}), std::invalid_argument);
}

TEST_CASE("canonical form is permutation and zero-padding invariant") {
    CHECK(canonicalize({2, 1, 3}) == canonicalize({3, 2, 1}));
    CHECK(canonicalize({2, 1, 3}) == canonicalize({1, 3, 2}));
    CHECK(canonicalize({2, 1}) == canonicalize({2, 1, 0}));
    CHECK(canonicalize({2, 1}) == canonicalize({0, 2, 0, 1}));
}

TEST_CASE("multiplicity vector accessors and rendering") {
    const auto m = canonicalize({2, 1, 1});
    CHECK(m.size() == 3);
    CHECK_FALSE(m.empty());
    CHECK(m.str() == "(2,1,1)");
    CHECK(canonicalize({}).str() == "()");
    CHECK(canonicalize({}).empty());
}

TEST_CASE("class profile bookkeeping") {
    auto p = ClassProfile::uniform_start(3, 4);
    CHECK(p.order() == 3);
    CHECK(p.count_at(3) == 4);
    CHECK(p.count_at(2) == 0);
    CHECK(p.count_at(1) == 0);
    CHECK(p.total_letters() == 4);
    CHECK(p.total_instances() == 12);
    CHECK_FALSE(p.is_completed());
    CHECK(p.to_multiplicity_vector() == canonicalize({3, 3, 3, 3}));

    ClassProfile q(std::vector<int>{1, 2});  // one letter with 1 copy, two with 2
    CHECK(q.order() == 2);
    CHECK(q.total_letters() == 3);
    CHECK(q.total_instances() == 5);
    CHECK(q.to_multiplicity_vector() == canonicalize({2, 2, 1}));

    ClassProfile done(3);
    CHECK(done.is_completed());
    CHECK(done.to_multiplicity_vector() == canonicalize({}));

    q.set_count(1, 0);
    CHECK(q.to_multiplicity_vector() == canonicalize({2, 2}));
}
