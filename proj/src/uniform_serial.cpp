#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "incpat/uniform.hpp"
#include "profile_recurrence.hpp"

// Serial reference kernels: plain top-down recursion over class profiles with
// a hash-keyed memo. Reachable profiles are a sparse subset of the simplex
// for large n, so the memo beats a dense s-dimensional array.

namespace incpat {
namespace {

template <class Value, class Coeff>
class TopDownMemo {
public:
    TopDownMemo(int s, int max_letters, std::vector<std::pair<int, Coeff>> blocks)
        : recurrence_(s, max_letters, std::move(blocks)) {}

    const Value& eval(const std::vector<int>& counts) {
        auto it = memo_.find(counts);
        if (it != memo_.end()) return it->second;

        long long active = 0;
        for (int c : counts) active += c;
        Value value;
        if (active == 0) {
            value = Value(1);
        } else {
            value = recurrence_.evaluate(
                counts, [&](const std::vector<int>& moved, int) -> const Value& {
                    return eval(moved);
                });
        }
        // Recursive eval() calls may have rehashed; pointers stay valid,
        // iterators do not.
        return memo_.emplace(counts, std::move(value)).first->second;
    }

private:
    detail::ProfileRecurrence<Value, Coeff> recurrence_;
    std::unordered_map<std::vector<int>, Value, VectorHash> memo_;
};

template <class Value, class Coeff>
std::vector<Value> serial_sequence(int s, int nmax, std::vector<std::pair<int, Coeff>> blocks) {
    TopDownMemo<Value, Coeff> memo(s, nmax, std::move(blocks));
    std::vector<Value> out;
    out.reserve(static_cast<std::size_t>(nmax) + 1);
    for (int m = 0; m <= nmax; ++m) {
        std::vector<int> start(static_cast<std::size_t>(s), 0);
        start[static_cast<std::size_t>(s) - 1] = m;
        out.push_back(memo.eval(start));
    }
    return out;
}

void check_args(int s, int n) {
    if (s < 1) throw std::invalid_argument("uniform counting: s must be at least 1");
    if (n < 0) throw std::invalid_argument("uniform counting: n must be non-negative");
}

}  // namespace

std::vector<BigInt> count_uniform_sequence_serial(int s, int nmax, PatternLength r) {
    check_args(s, nmax);
    return serial_sequence<BigInt, int>(s, nmax, detail::count_blocks(nmax, r));
}

BigInt count_uniform_serial(int s, int n, PatternLength r) {
    return count_uniform_sequence_serial(s, n, r).back();
}

std::vector<TPoly> weight_uniform_sequence_serial(int s, int nmax, PatternLength r) {
    check_args(s, nmax);
    return serial_sequence<TPoly, TPoly>(s, nmax, detail::weight_blocks(nmax, r));
}

TPoly weight_uniform_serial(int s, int n, PatternLength r) {
    return weight_uniform_sequence_serial(s, n, r).back();
}

}  // namespace incpat
