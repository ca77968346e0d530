#include "incpat/counting.hpp"

#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace incpat {

BigInt multinomial(const MultiplicityVector& m) {
    BigInt out = factorial(static_cast<unsigned long>(m.total()));
    for (int p : m.parts()) {
        const BigInt f = factorial(static_cast<unsigned long>(p));
        mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), f.get_mpz_t());
    }
    return out;
}

namespace {

struct PartClass {
    int value;
    int size;
};

// Equal parts of a canonical vector collapse into classes; a V_k move picks
// i_c letters from each class (weight prod C(size_c, i_c)) and decrements
// each picked part by one.
std::vector<PartClass> classes_of(const MultiplicityVector& m) {
    std::vector<PartClass> classes;
    for (int p : m.parts()) {
        if (!classes.empty() && classes.back().value == p)
            ++classes.back().size;
        else
            classes.push_back({p, 1});
    }
    return classes;
}

MultiplicityVector apply_move(const std::vector<PartClass>& classes, const std::vector<int>& picks) {
    std::vector<int> parts;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (int i = 0; i < classes[c].size - picks[c]; ++i) parts.push_back(classes[c].value);
        for (int i = 0; i < picks[c]; ++i) parts.push_back(classes[c].value - 1);
    }
    return canonicalize(parts);
}

// Enumerates all ways to pick k letters, one copy each, across the classes.
template <class Fn>
void for_each_move(const std::vector<PartClass>& classes, long long k, Fn&& fn) {
    std::vector<int> picks(classes.size(), 0);
    std::vector<long long> capacity_after(classes.size() + 1, 0);
    for (std::size_t c = classes.size(); c-- > 0;)
        capacity_after[c] = capacity_after[c + 1] + classes[c].size;

    auto rec = [&](auto&& self, std::size_t c, long long remaining, BigInt weight) -> void {
        if (remaining == 0) {
            for (std::size_t rest = c; rest < picks.size(); ++rest) picks[rest] = 0;
            fn(weight, picks);
            return;
        }
        if (c == classes.size() || remaining > capacity_after[c]) return;
        const int take_max = static_cast<int>(std::min<long long>(classes[c].size, remaining));
        for (int take = 0; take <= take_max; ++take) {
            picks[c] = take;
            self(self, c + 1, remaining - take,
                 take == 0 ? weight
                           : weight * binomial(static_cast<unsigned long>(classes[c].size),
                                               static_cast<unsigned long>(take)));
        }
        picks[c] = 0;
    };
    rec(rec, 0, k, BigInt(1));
}

template <class Value>
using MemoMap = std::unordered_map<MultiplicityVector, Value, MultiplicityVectorHash>;

template <class Value>
class RecurrenceCache {
public:
    // Returns nullptr on a miss; result pointers stay valid (values are never
    // erased) so callers may hold them across further insertions.
    const Value* find(int r, const MultiplicityVector& m) {
        std::scoped_lock lock(mutex_);
        auto& table = by_r_[r];
        auto it = table.find(m);
        return it == table.end() ? nullptr : &it->second;
    }

    const Value& store(int r, const MultiplicityVector& m, Value v) {
        std::scoped_lock lock(mutex_);
        return by_r_[r].emplace(m, std::move(v)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<int, MemoMap<Value>> by_r_;
};

RecurrenceCache<BigInt>& avoider_cache() {
    static RecurrenceCache<BigInt> cache;
    return cache;
}

RecurrenceCache<TPoly>& weight_cache() {
    static RecurrenceCache<TPoly> cache;
    return cache;
}

BigInt eval_avoiders(const MultiplicityVector& m, PatternLength r) {
    if (m.empty()) return 1;
    if (const BigInt* hit = avoider_cache().find(r.value, m)) return *hit;

    const auto classes = classes_of(m);
    const long long nparts = static_cast<long long>(m.size());
    BigInt acc = 0;
    for_each_recurrence_block(nparts, r, [&](long long k, int sign) {
        BigInt sum = 0;
        for_each_move(classes, k, [&](const BigInt& weight, const std::vector<int>& picks) {
            sum += weight * eval_avoiders(apply_move(classes, picks), r);
        });
        if (sign > 0)
            acc += sum;
        else
            acc -= sum;
    });
    return avoider_cache().store(r.value, m, std::move(acc));
}

TPoly eval_weight(const MultiplicityVector& m, PatternLength r) {
    if (m.empty()) return TPoly(1);
    if (const TPoly* hit = weight_cache().find(r.value, m)) return *hit;

    const auto classes = classes_of(m);
    const long long nparts = static_cast<long long>(m.size());
    TPoly acc;
    for_each_move(classes, 1, [&](const BigInt& weight, const std::vector<int>& picks) {
        acc += TPoly(weight) * eval_weight(apply_move(classes, picks), r);
    });
    for (long long k = r.value; k <= nparts; ++k) {
        TPoly block;
        for_each_move(classes, k, [&](const BigInt& weight, const std::vector<int>& picks) {
            block += TPoly(weight) * eval_weight(apply_move(classes, picks), r);
        });
        acc += p_poly(static_cast<int>(k), r) * block;
    }
    return weight_cache().store(r.value, m, std::move(acc));
}

}  // namespace

BigInt count_avoiders(const MultiplicityVector& m, PatternLength r) { return eval_avoiders(m, r); }

TPoly weight_enumerator(const MultiplicityVector& m, PatternLength r) { return eval_weight(m, r); }

namespace {

std::mutex perm_mutex;
std::map<int, std::vector<BigInt>> perm_cache;  // r -> a(0..n)

}  // namespace

BigInt count_permutations(int n, PatternLength r) {
    if (n < 0) throw std::invalid_argument("count_permutations: n must be non-negative");
    std::scoped_lock lock(perm_mutex);
    auto& a = perm_cache[r.value];
    if (a.empty()) a.push_back(BigInt(1));
    while (static_cast<int>(a.size()) <= n) {
        const long long i = static_cast<long long>(a.size());
        BigInt next = 0;
        for_each_recurrence_block(i, r, [&](long long k, int sign) {
            const BigInt term =
                binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(k)) *
                a[static_cast<std::size_t>(i - k)];
            if (sign > 0)
                next += term;
            else
                next -= term;
        });
        a.push_back(std::move(next));
    }
    return a[static_cast<std::size_t>(n)];
}

}  // namespace incpat
