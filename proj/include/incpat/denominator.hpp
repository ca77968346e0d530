#pragma once

#include "incpat/multiplicity.hpp"
#include "incpat/tpoly.hpp"

namespace incpat {

/// Coefficient of e_k in the avoidance generating-function denominator
///   1 - e_1 + e_r - e_{r+1} + e_{2r} - e_{2r+1} + ...
/// i.e. +1 for k = 0 and k = mr (m >= 1), -1 for k = 1 and k = mr + 1,
/// 0 otherwise. Every recurrence in this library takes its signs from here.
int denom_coeff(long long k, PatternLength r);

/// Cluster-weight polynomial attached to e_k in the t-weighted denominator
///   1 - e_1 - sum_{k>=r} P_k(t) e_k.
/// P_k = 0 for k < r, P_r = t - 1, and
/// P_k = (t-1) * (P_{k-1} + ... + P_{k-r+1}) for k > r.
/// Results are cached across calls; safe to call concurrently.
const TPoly& p_poly(int k, PatternLength r);

/// Invokes fn(k, sign) for every k in [1, kmax] whose recurrence coefficient
/// sign = -denom_coeff(k, r) is nonzero, in increasing k. This is the block
/// structure shared by all unweighted counting recurrences.
template <class Fn>
void for_each_recurrence_block(long long kmax, PatternLength r, Fn&& fn) {
    if (kmax >= 1) fn(1LL, -denom_coeff(1, r));
    for (long long m = 1;; ++m) {
        const long long k = m * r.value;
        if (k > kmax) break;
        fn(k, -denom_coeff(k, r));
        if (k + 1 <= kmax) fn(k + 1, -denom_coeff(k + 1, r));
    }
}

}  // namespace incpat
