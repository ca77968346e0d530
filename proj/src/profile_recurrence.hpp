#pragma once

// Shared core of the uniform-multiplicity kernels: the class-profile
// recurrence, generic over the value ring (BigInt counts or TPoly weight
// enumerators). uniform_serial.cpp wraps it in a top-down memo,
// uniform_sweep.cpp in a level-synchronous parallel sweep.

#include <utility>
#include <vector>

#include "incpat/bigint.hpp"
#include "incpat/denominator.hpp"
#include "incpat/multiplicity.hpp"
#include "incpat/tpoly.hpp"

namespace incpat::detail {

inline void add_block(BigInt& acc, int sign, const BigInt& sum) {
    if (sign > 0)
        acc += sum;
    else
        acc -= sum;
}

inline void add_block(TPoly& acc, const TPoly& coeff, const TPoly& sum) { acc += coeff * sum; }

inline void add_scaled(BigInt& acc, const BigInt& weight, const BigInt& value) {
    acc += weight * value;
}

inline void add_scaled(TPoly& acc, const BigInt& weight, const TPoly& value) {
    acc += TPoly(weight) * value;
}

/// Blocks (k, sign) of the unweighted recurrence, ascending k <= kmax.
inline std::vector<std::pair<int, int>> count_blocks(int kmax, PatternLength r) {
    std::vector<std::pair<int, int>> blocks;
    for_each_recurrence_block(kmax, r, [&](long long k, int sign) {
        blocks.emplace_back(static_cast<int>(k), sign);
    });
    return blocks;
}

/// Blocks (k, coefficient polynomial) of the t-weighted recurrence: k = 1
/// with coefficient 1, then every k in [r, kmax] with coefficient P_k(t).
inline std::vector<std::pair<int, TPoly>> weight_blocks(int kmax, PatternLength r) {
    std::vector<std::pair<int, TPoly>> blocks;
    if (kmax >= 1) blocks.emplace_back(1, TPoly(1));
    for (int k = r.value; k <= kmax; ++k) blocks.emplace_back(k, p_poly(k, r));
    return blocks;
}

/// The recurrence itself. State is the raw counts vector of a ClassProfile
/// (counts[j-1] letters have j copies left). A block of size k picks one copy
/// from each of k distinct letters; picked letters drop one class.
template <class Value, class Coeff>
class ProfileRecurrence {
public:
    ProfileRecurrence(int order, int max_letters, std::vector<std::pair<int, Coeff>> blocks)
        : order_(order), blocks_(std::move(blocks)), binomials_(max_letters) {}

    int order() const { return order_; }

    /// Value of one non-completed state. lookup(next_counts, k) must return
    /// the value of a state with k fewer letter instances.
    template <class Lookup>
    Value evaluate(const std::vector<int>& counts, Lookup&& lookup) const {
        long long active = 0;
        for (int c : counts) active += c;
        Value acc{};
        std::vector<int> next(counts.size());
        for (const auto& [k, coeff] : blocks_) {
            if (k > active) break;
            Value sum{};
            for_each_pick(counts, next, k, [&](const BigInt& weight, const std::vector<int>& moved) {
                add_scaled(sum, weight, lookup(moved, k));
            });
            add_block(acc, coeff, sum);
        }
        return acc;
    }

private:
    // Chooses picks[j] letters from class j (top class first), sum = k,
    // weighted by the product of binomials. next[] is filled in place:
    // class j keeps counts[j] - picks[j] letters and receives picks[j+1]
    // from above.
    template <class Fn>
    void for_each_pick(const std::vector<int>& counts, std::vector<int>& next, int k,
                       Fn&& fn) const {
        std::vector<long long> capacity(counts.size() + 1, 0);  // letters in classes 0..idx
        for (std::size_t idx = 0; idx < counts.size(); ++idx)
            capacity[idx + 1] = capacity[idx] + counts[idx];

        auto rec = [&](auto&& self, int idx, int remaining, const BigInt& weight,
                       int picked_above) -> void {
            if (idx < 0) {
                if (remaining == 0) fn(weight, next);
                return;
            }
            if (remaining > capacity[static_cast<std::size_t>(idx) + 1]) return;
            const int hi = std::min(counts[static_cast<std::size_t>(idx)], remaining);
            for (int take = 0; take <= hi; ++take) {
                next[static_cast<std::size_t>(idx)] =
                    counts[static_cast<std::size_t>(idx)] - take + picked_above;
                if (take == 0) {
                    self(self, idx - 1, remaining, weight, 0);
                } else {
                    self(self, idx - 1, remaining - take,
                         weight * binomials_.at(counts[static_cast<std::size_t>(idx)], take), take);
                }
            }
        };
        rec(rec, static_cast<int>(counts.size()) - 1, k, BigInt(1), 0);
    }

    int order_;
    std::vector<std::pair<int, Coeff>> blocks_;
    BinomialTable binomials_;
};

}  // namespace incpat::detail
