#include <algorithm>
#include <sstream>
#include <utility>

#include "incpat/counting.hpp"
#include "incpat/denominator.hpp"
#include "incpat/series.hpp"

namespace incpat {

void for_each_exponent_of_degree(int nvars, int degree,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    if (nvars < 1) throw std::invalid_argument("for_each_exponent_of_degree: nvars must be >= 1");
    if (degree < 0) return;
    std::vector<int> v(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int idx, int left) -> void {
        if (idx == nvars - 1) {
            v[static_cast<std::size_t>(idx)] = left;
            fn(v);
            return;
        }
        for (int e = left; e >= 0; --e) {
            v[static_cast<std::size_t>(idx)] = e;
            self(self, idx + 1, left - e);
        }
    };
    rec(rec, 0, degree);
}

TruncatedSeries<BigInt> theorem1_denominator(int nvars, PatternLength r, int degree_cap) {
    TruncatedSeries<BigInt> den(nvars, degree_cap);
    const int kmax = std::min(nvars, degree_cap);
    for (int k = 0; k <= kmax; ++k) {
        const int c = denom_coeff(k, r);
        if (c == 0) continue;
        auto ek = elementary_symmetric<BigInt>(nvars, k, degree_cap);
        ek.scale(BigInt(c));
        den += ek;
    }
    return den;
}

TruncatedSeries<TPoly> theorem2_denominator(int nvars, PatternLength r, int degree_cap) {
    auto den = TruncatedSeries<TPoly>::constant(nvars, degree_cap, TPoly(1));
    den -= elementary_symmetric<TPoly>(nvars, 1, degree_cap);
    const int kmax = std::min(nvars, degree_cap);
    for (int k = r.value; k <= kmax; ++k) {
        auto ek = elementary_symmetric<TPoly>(nvars, k, degree_cap);
        ek.scale(p_poly(k, r));
        den -= ek;
    }
    return den;
}

std::string VerifyReport::summary() const {
    std::ostringstream out;
    if (pass) {
        out << "pass (" << checked << " coefficients checked)";
        return out.str();
    }
    out << "FAIL at (";
    for (std::size_t i = 0; i < mismatch_at.size(); ++i) {
        if (i) out << ",";
        out << mismatch_at[i];
    }
    out << "): expected " << expected << ", got " << actual;
    return out.str();
}

VerifyReport verify_against_recurrence(int nvars, PatternLength r, int degree_cap,
                                       bool weighted) {
    VerifyReport report;
    if (weighted) {
        const auto inv = expand_reciprocal(theorem2_denominator(nvars, r, degree_cap));
        for (int d = 0; d <= degree_cap && report.pass; ++d) {
            for_each_exponent_of_degree(nvars, d, [&](const std::vector<int>& v) {
                if (!report.pass) return;
                const TPoly expected = weight_enumerator(canonicalize(v), r);
                const TPoly actual = inv.coeff(v);
                ++report.checked;
                if (expected != actual) {
                    report.pass = false;
                    report.mismatch_at = v;
                    report.expected = expected.str();
                    report.actual = actual.str();
                }
            });
        }
    } else {
        const auto inv = expand_reciprocal(theorem1_denominator(nvars, r, degree_cap));
        for (int d = 0; d <= degree_cap && report.pass; ++d) {
            for_each_exponent_of_degree(nvars, d, [&](const std::vector<int>& v) {
                if (!report.pass) return;
                const BigInt expected = count_avoiders(canonicalize(v), r);
                const BigInt actual = inv.coeff(v);
                ++report.checked;
                if (expected != actual) {
                    report.pass = false;
                    report.mismatch_at = v;
                    report.expected = to_string(expected);
                    report.actual = to_string(actual);
                }
            });
        }
    }
    return report;
}

VerifyReport egf_check(PatternLength r, int nmax) {
    if (nmax < 0) throw std::invalid_argument("egf_check: nmax must be >= 0");
    VerifyReport report;

    std::vector<BigRat> a_over_fact(static_cast<std::size_t>(nmax) + 1);
    std::vector<BigRat> c_over_fact(static_cast<std::size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) {
        const BigInt fact = factorial(n);
        a_over_fact[static_cast<std::size_t>(n)] = BigRat(count_permutations(n, r)) / fact;
        c_over_fact[static_cast<std::size_t>(n)] = BigRat(denom_coeff(n, r)) / fact;
    }

    for (int n = 0; n <= nmax; ++n) {
        BigRat sum = 0;
        for (int k = 0; k <= n; ++k)
            sum += c_over_fact[static_cast<std::size_t>(k)] *
                   a_over_fact[static_cast<std::size_t>(n - k)];
        ++report.checked;
        const BigRat expected = n == 0 ? 1 : 0;
        if (sum != expected) {
            report.pass = false;
            report.mismatch_at = {n};
            report.expected = expected.get_str();
            report.actual = sum.get_str();
            return report;
        }
    }
    return report;
}

}  // namespace incpat
