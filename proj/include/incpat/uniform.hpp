#pragma once

#include <vector>

#include "incpat/bigint.hpp"
#include "incpat/multiplicity.hpp"
#include "incpat/tpoly.hpp"

namespace incpat {

/// Counting words with s copies of each of n letters runs on a class-profile
/// state space of size O(n^s), giving an O(n^{s+1}) algorithm. Two kernels
/// implement the same recurrence:
///
///  * the serial reference walks the recurrence top-down with a hash-keyed
///    memo (kept for testing and as the benchmark baseline);
///  * the default kernel sweeps the profile levels bottom-up and evaluates
///    each level's states in parallel (OpenMP when available).
///
/// Both are exact, deterministic, and agree value-for-value.

/// f(s^n): arrangements of s copies of each of 1..n avoiding the pattern.
BigInt count_uniform(int s, int n, PatternLength r);

/// All of f(s^0), ..., f(s^nmax) from a single sweep.
std::vector<BigInt> count_uniform_sequence(int s, int nmax, PatternLength r);

/// g(s^n; t), the t-weighted analogue of count_uniform.
TPoly weight_uniform(int s, int n, PatternLength r);

std::vector<TPoly> weight_uniform_sequence(int s, int nmax, PatternLength r);

/// Serial reference implementations (top-down memoized recursion).
BigInt count_uniform_serial(int s, int n, PatternLength r);
std::vector<BigInt> count_uniform_sequence_serial(int s, int nmax, PatternLength r);
TPoly weight_uniform_serial(int s, int n, PatternLength r);
std::vector<TPoly> weight_uniform_sequence_serial(int s, int nmax, PatternLength r);

}  // namespace incpat
