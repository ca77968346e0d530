#include "incpat/denominator.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace incpat {

int denom_coeff(long long k, PatternLength r) {
    if (k < 0) throw std::invalid_argument("denom_coeff: k must be non-negative");
    const long long rem = k % r.value;
    if (rem == 0) return +1;  // constant term and e_{mr}
    if (rem == 1) return -1;  // e_1 and e_{mr+1}
    return 0;
}

namespace {

std::mutex p_poly_mutex;
std::map<int, std::vector<TPoly>> p_poly_cache;  // r -> P_1..P_k (index k)

}  // namespace

const TPoly& p_poly(int k, PatternLength r) {
    if (k < 1) throw std::invalid_argument("p_poly: k must be at least 1");
    std::scoped_lock lock(p_poly_mutex);
    auto& table = p_poly_cache[r.value];
    if (table.empty()) table.resize(1);  // index 0 unused, stays zero
    const TPoly t_minus_1 = TPoly::variable() - TPoly(1);
    while (static_cast<int>(table.size()) <= k) {
        const int next = static_cast<int>(table.size());
        if (next < r.value) {
            table.emplace_back();  // zero
        } else if (next == r.value) {
            table.push_back(t_minus_1);
        } else {
            TPoly sum;
            for (int i = 1; i <= r.value - 1; ++i)
                if (next - i >= 1) sum += table[static_cast<std::size_t>(next - i)];
            table.push_back(t_minus_1 * sum);
        }
    }
    return table[static_cast<std::size_t>(k)];
}

}  // namespace incpat
