#pragma once

#include <functional>
#include <vector>

#include "incpat/bigint.hpp"
#include "incpat/multiplicity.hpp"
#include "incpat/tpoly.hpp"

namespace incpat {
namespace oracle {

/// Brute-force ground truth. Everything here evaluates definitions directly
/// by exhaustive enumeration, independent of the recurrence implementations
/// it is used to check. Callers are responsible for keeping inputs small
/// (guideline: total multiplicity <= 10).

using Word = std::vector<int>;

/// Number of positions i with w_i < w_{i+1} < ... < w_{i+r-1}.
int occurrences(const Word& w, PatternLength r);

/// Visits every distinct arrangement of the multiset exactly once, in
/// lexicographic order. Letter i+1 appears parts()[i] times.
void for_each_word(const MultiplicityVector& m, const std::function<void(const Word&)>& fn);

/// Materialized variant of for_each_word.
std::vector<Word> words_of_multiset(const MultiplicityVector& m);

/// Arrangements of m with zero occurrences of the pattern.
BigInt oracle_count(const MultiplicityVector& m, PatternLength r);

/// Sum of t^occurrences(w) over all arrangements w of m.
TPoly oracle_weight(const MultiplicityVector& m, PatternLength r);

/// Visits every cluster on the increasing word 12...k: mark intervals
/// [u, u+r-1] whose starts strictly increase, where adjacent marks overlap,
/// the first mark starts at 1 and the last ends at k. fn receives the list
/// of mark starts.
void for_each_cluster(int k, PatternLength r,
                      const std::function<void(const std::vector<int>&)>& fn);

/// Sum of (t-1)^(number of marks) over all clusters on 12...k. Equals
/// p_poly(k, r).
TPoly oracle_cluster_poly(int k, PatternLength r);

}  // namespace oracle
}  // namespace incpat
