#include <algorithm>

#include "incpat/oracle.hpp"

namespace incpat {
namespace oracle {

int occurrences(const Word& w, PatternLength r) {
    const int len = static_cast<int>(w.size());
    const int span = r.value;
    int count = 0;
    for (int i = 0; i + span <= len; ++i) {
        bool rising = true;
        for (int j = 1; j < span && rising; ++j) rising = w[i + j - 1] < w[i + j];
        if (rising) ++count;
    }
    return count;
}

void for_each_word(const MultiplicityVector& m, const std::function<void(const Word&)>& fn) {
    Word w;
    w.reserve(static_cast<std::size_t>(m.total()));
    for (std::size_t i = 0; i < m.size(); ++i)
        w.insert(w.end(), static_cast<std::size_t>(m.parts()[i]), static_cast<int>(i) + 1);
    if (w.empty()) {
        fn(w);
        return;
    }
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Word> words_of_multiset(const MultiplicityVector& m) {
    std::vector<Word> out;
    for_each_word(m, [&](const Word& w) { out.push_back(w); });
    return out;
}

BigInt oracle_count(const MultiplicityVector& m, PatternLength r) {
    BigInt total = 0;
    for_each_word(m, [&](const Word& w) {
        if (occurrences(w, r) == 0) ++total;
    });
    return total;
}

TPoly oracle_weight(const MultiplicityVector& m, PatternLength r) {
    std::vector<BigInt> counts;
    for_each_word(m, [&](const Word& w) {
        const std::size_t occ = static_cast<std::size_t>(occurrences(w, r));
        if (counts.size() <= occ) counts.resize(occ + 1);
        ++counts[occ];
    });
    return TPoly(std::move(counts));
}

void for_each_cluster(int k, PatternLength r,
                      const std::function<void(const std::vector<int>&)>& fn) {
    const int span = r.value;
    if (k < span) return;
    std::vector<int> starts{1};
    auto extend = [&](auto&& self, int end) -> void {
        if (end == k) fn(starts);
        // The next mark must start after the current one, overlap it, and
        // still fit on 12...k.
        const int lo = starts.back() + 1;
        const int hi = std::min(end, k - span + 1);
        for (int u = lo; u <= hi; ++u) {
            starts.push_back(u);
            self(self, u + span - 1);
            starts.pop_back();
        }
    };
    extend(extend, span);
}

TPoly oracle_cluster_poly(int k, PatternLength r) {
    const TPoly t_minus_1 = TPoly::variable() - TPoly(1);
    TPoly total;
    for_each_cluster(k, r, [&](const std::vector<int>& starts) {
        total += pow(t_minus_1, static_cast<int>(starts.size()));
    });
    return total;
}

}  // namespace oracle
}  // namespace incpat
