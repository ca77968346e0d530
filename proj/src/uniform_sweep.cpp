#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "incpat/uniform.hpp"
#include "profile_recurrence.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Level-synchronous kernels. Profiles are grouped by the number of letter
// instances still unplaced; every block of size k reads states exactly k
// levels below, so each level depends only on completed ones and its states
// can be evaluated in parallel. Exact integer arithmetic makes the result
// independent of evaluation order, so the sweep agrees with the serial
// reference bit for bit.

namespace incpat {
namespace {

template <class Value>
using StateMap = std::unordered_map<std::vector<int>, Value, VectorHash>;

// All states of one instance level: counts >= 0 with
// sum (j * counts[j-1]) = instances and sum counts[j-1] <= max_letters.
void enumerate_level(int order, int max_letters, long long instances,
                     std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> counts(static_cast<std::size_t>(order), 0);
    auto rec = [&](auto&& self, int j, long long left, long long letters_left) -> void {
        if (j == 1) {
            if (left <= letters_left) {
                counts[0] = static_cast<int>(left);
                out.push_back(counts);
            }
            return;
        }
        const long long hi = std::min<long long>(left / j, letters_left);
        for (long long c = 0; c <= hi; ++c) {
            counts[static_cast<std::size_t>(j - 1)] = static_cast<int>(c);
            self(self, j - 1, left - c * j, letters_left - c);
        }
        counts[static_cast<std::size_t>(j - 1)] = 0;
    };
    rec(rec, order, instances, max_letters);
}

template <class Value, class Coeff>
std::vector<Value> sweep_sequence(int s, int nmax, std::vector<std::pair<int, Coeff>> blocks) {
    const detail::ProfileRecurrence<Value, Coeff> recurrence(s, nmax, std::move(blocks));
    const long long top = static_cast<long long>(s) * nmax;

    std::vector<StateMap<Value>> levels(static_cast<std::size_t>(top) + 1);
    levels[0].emplace(std::vector<int>(static_cast<std::size_t>(s), 0), Value(1));

    std::vector<std::vector<int>> states;
    for (long long t = 1; t <= top; ++t) {
        enumerate_level(s, nmax, t, states);
        auto& level = levels[static_cast<std::size_t>(t)];
        level.reserve(states.size());
        std::vector<Value*> slots(states.size());
        for (std::size_t i = 0; i < states.size(); ++i)
            slots[i] = &level.emplace(states[i], Value{}).first->second;

        // Slots are distinct map entries and lower levels are read-only here.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long long i = 0; i < static_cast<long long>(states.size()); ++i) {
            *slots[static_cast<std::size_t>(i)] = recurrence.evaluate(
                states[static_cast<std::size_t>(i)],
                [&](const std::vector<int>& moved, int k) -> const Value& {
                    return levels[static_cast<std::size_t>(t - k)].at(moved);
                });
        }
    }

    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(nmax) + 1);
    for (int m = 0; m <= nmax; ++m) {
        std::vector<int> start(static_cast<std::size_t>(s), 0);
        start[static_cast<std::size_t>(s) - 1] = m;
        out.push_back(levels[static_cast<std::size_t>(s) * m].at(start));
    }
    return out;
}

void check_args(int s, int n) {
    if (s < 1) throw std::invalid_argument("uniform counting: s must be at least 1");
    if (n < 0) throw std::invalid_argument("uniform counting: n must be non-negative");
}

}  // namespace

std::vector<BigInt> count_uniform_sequence(int s, int nmax, PatternLength r) {
    check_args(s, nmax);
    return sweep_sequence<BigInt, int>(s, nmax, detail::count_blocks(nmax, r));
}

BigInt count_uniform(int s, int n, PatternLength r) {
    return count_uniform_sequence(s, n, r).back();
}

std::vector<TPoly> weight_uniform_sequence(int s, int nmax, PatternLength r) {
    check_args(s, nmax);
    return sweep_sequence<TPoly, TPoly>(s, nmax, detail::weight_blocks(nmax, r));
}

TPoly weight_uniform(int s, int n, PatternLength r) {
    return weight_uniform_sequence(s, n, r).back();
}

}  // namespace incpat
