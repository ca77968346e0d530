#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "incpat/bigint.hpp"
#include "incpat/multiplicity.hpp"
#include "incpat/tpoly.hpp"

namespace incpat {

/// Multivariate polynomial truncated at a total degree, used to expand the
/// generating-function denominators and compare coefficients against the
/// recurrences. Exponent vectors are sparse map keys; coefficients are exact
/// (BigInt, or TPoly in the t-weighted variant).
template <class Coeff>
class TruncatedSeries {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Coeff>;

    TruncatedSeries(int nvars, int degree_cap) : nvars_(nvars), cap_(degree_cap) {
        if (nvars < 1) throw std::invalid_argument("TruncatedSeries: nvars must be >= 1");
        if (degree_cap < 0) throw std::invalid_argument("TruncatedSeries: degree cap must be >= 0");
    }

    static TruncatedSeries constant(int nvars, int degree_cap, Coeff c) {
        TruncatedSeries s(nvars, degree_cap);
        s.set(Exponents(static_cast<std::size_t>(nvars), 0), std::move(c));
        return s;
    }

    int nvars() const { return nvars_; }
    int degree_cap() const { return cap_; }
    const TermMap& terms() const { return terms_; }

    /// Coefficient at v; zero if absent.
    Coeff coeff(const Exponents& v) const {
        auto it = terms_.find(v);
        return it == terms_.end() ? Coeff{} : it->second;
    }

    void set(Exponents v, Coeff c) {
        check_exponents(v);
        if (c == Coeff{})
            terms_.erase(v);
        else
            terms_[std::move(v)] = std::move(c);
    }

    void add(const Exponents& v, const Coeff& c) {
        check_exponents(v);
        auto [it, inserted] = terms_.try_emplace(v, c);
        if (!inserted) {
            it->second += c;
            if (it->second == Coeff{}) terms_.erase(it);
        }
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        require_compatible(o);
        for (const auto& [v, c] : o.terms_) add(v, c);
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        require_compatible(o);
        for (const auto& [v, c] : o.terms_) add(v, Coeff{} - c);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_compatible(b);
        TruncatedSeries out(a.nvars_, a.cap_);
        Exponents sum(static_cast<std::size_t>(a.nvars_));
        for (const auto& [u, cu] : a.terms_) {
            const int du = std::accumulate(u.begin(), u.end(), 0);
            for (const auto& [v, cv] : b.terms_) {
                const int dv = std::accumulate(v.begin(), v.end(), 0);
                if (du + dv > a.cap_) continue;
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = u[i] + v[i];
                out.add(sum, cu * cv);
            }
        }
        return out;
    }

    TruncatedSeries& scale(const Coeff& c) {
        if (c == Coeff{}) {
            terms_.clear();
            return *this;
        }
        for (auto& [v, coeff] : terms_) coeff *= c;
        return *this;
    }

    bool operator==(const TruncatedSeries&) const = default;

private:
    void check_exponents(const Exponents& v) const {
        if (static_cast<int>(v.size()) != nvars_)
            throw std::invalid_argument("TruncatedSeries: exponent vector has wrong arity");
        long long total = 0;
        for (int e : v) {
            if (e < 0) throw std::invalid_argument("TruncatedSeries: negative exponent");
            total += e;
        }
        if (total > cap_) throw std::invalid_argument("TruncatedSeries: term exceeds degree cap");
    }

    void require_compatible(const TruncatedSeries& o) const {
        if (nvars_ != o.nvars_ || cap_ != o.cap_)
            throw std::invalid_argument("TruncatedSeries: incompatible operands");
    }

    int nvars_;
    int cap_;
    TermMap terms_;
};

/// Visits every exponent vector over nvars variables with the given total
/// degree, in lexicographic order.
void for_each_exponent_of_degree(int nvars, int degree,
                                 const std::function<void(const std::vector<int>&)>& fn);

/// Elementary symmetric function e_k over nvars variables, truncated at
/// degree_cap (e_k is homogeneous of degree k, so the result is empty when
/// k > degree_cap or k > nvars). k < 0 is an error.
template <class Coeff = BigInt>
TruncatedSeries<Coeff> elementary_symmetric(int nvars, int k, int degree_cap) {
    if (k < 0) throw std::invalid_argument("elementary_symmetric: k must be >= 0");
    TruncatedSeries<Coeff> out(nvars, degree_cap);
    if (k > nvars || k > degree_cap) return out;
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    // choose k distinct variable indices
    std::vector<int> pick(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int next, int remaining) -> void {
        if (remaining == 0) {
            out.set(exps, Coeff(1));
            return;
        }
        for (int i = next; i <= nvars - remaining; ++i) {
            exps[static_cast<std::size_t>(i)] = 1;
            self(self, i + 1, remaining - 1);
            exps[static_cast<std::size_t>(i)] = 0;
        }
    };
    rec(rec, 0, k);
    return out;
}

/// Denominator of the avoidance generating function over nvars variables:
/// sum_k denom_coeff(k, r) e_k, truncated at degree_cap.
TruncatedSeries<BigInt> theorem1_denominator(int nvars, PatternLength r, int degree_cap);

/// Denominator of the t-weighted generating function:
/// 1 - e_1 - sum_{k>=r} P_k(t) e_k, truncated at degree_cap.
TruncatedSeries<TPoly> theorem2_denominator(int nvars, PatternLength r, int degree_cap);

/// Multiplicative inverse of a series with constant term 1, exact up to the
/// degree cap: returns S with S * den = 1 + O(degree cap + 1). Throws
/// std::invalid_argument if the constant term is not 1.
template <class Coeff>
TruncatedSeries<Coeff> expand_reciprocal(const TruncatedSeries<Coeff>& den) {
    const int nvars = den.nvars();
    const int cap = den.degree_cap();
    const std::vector<int> origin(static_cast<std::size_t>(nvars), 0);
    if (den.coeff(origin) != Coeff(1))
        throw std::invalid_argument("expand_reciprocal: constant term must be 1");

    TruncatedSeries<Coeff> inv(nvars, cap);
    inv.set(origin, Coeff(1));
    std::vector<int> diff(static_cast<std::size_t>(nvars));
    for (int d = 1; d <= cap; ++d) {
        for_each_exponent_of_degree(nvars, d, [&](const std::vector<int>& v) {
            // 0 = sum_{u <= v} den(u) * inv(v - u) and den(0) = 1, so
            // inv(v) = -sum_{u != 0} den(u) * inv(v - u).
            Coeff acc{};
            for (const auto& [u, c] : den.terms()) {
                bool inside = true;
                bool zero = true;
                for (std::size_t i = 0; i < u.size(); ++i) {
                    if (u[i] > v[i]) {
                        inside = false;
                        break;
                    }
                    if (u[i] != 0) zero = false;
                    diff[i] = v[i] - u[i];
                }
                if (!inside || zero) continue;
                acc += c * inv.coeff(diff);
            }
            inv.set(v, Coeff{} - acc);
        });
    }
    return inv;
}

/// Outcome of a verification run. `mismatch_at` is the first offending
/// exponent vector (or {n} for the EGF check); empty on success.
struct VerifyReport {
    bool pass = true;
    long long checked = 0;
    std::vector<int> mismatch_at;
    std::string expected;
    std::string actual;

    std::string summary() const;
};

/// Expands the reciprocal of the degree-capped denominator (weighted:
/// t-coefficients) and compares every coefficient of total degree <= cap
/// against count_avoiders / weight_enumerator on the corresponding
/// multiplicity vector.
VerifyReport verify_against_recurrence(int nvars, PatternLength r, int degree_cap, bool weighted);

/// Multiplies sum_{n<=N} a_r(n) x^n / n! by the truncated series
/// sum_k denom_coeff(k, r) x^k / k! in exact rational arithmetic and checks
/// that the product is 1 + O(x^{N+1}).
VerifyReport egf_check(PatternLength r, int nmax);

}  // namespace incpat
