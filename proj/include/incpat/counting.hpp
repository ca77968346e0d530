#pragma once

#include "incpat/bigint.hpp"
#include "incpat/denominator.hpp"
#include "incpat/multiplicity.hpp"
#include "incpat/tpoly.hpp"

namespace incpat {

/// Total number of arrangements of the multiset m: (sum m_i)! / prod m_i!.
BigInt multinomial(const MultiplicityVector& m);

/// Number of arrangements of m that avoid the increasing consecutive pattern
/// 12...r. Memoized on the canonical vector; safe to call concurrently.
BigInt count_avoiders(const MultiplicityVector& m, PatternLength r);

/// Weight enumerator g(m; t) = sum over arrangements w of t^(occurrences of
/// the pattern in w). g(m; 0) = count_avoiders(m, r) and g(m; 1) =
/// multinomial(m). Memoized like count_avoiders.
TPoly weight_enumerator(const MultiplicityVector& m, PatternLength r);

/// Number of permutations of length n avoiding the pattern, via the fast
/// one-dimensional recurrence
///   a(n) = n a(n-1) - C(n,r) a(n-r) + C(n,r+1) a(n-r-1) - ...
/// All intermediate values are cached, so sequential calls are cheap.
BigInt count_permutations(int n, PatternLength r);

}  // namespace incpat
