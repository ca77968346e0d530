#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace incpat {

/// Exact arbitrary-precision integer. Counts of avoiding words grow
/// super-exponentially, so all arithmetic in this library is exact.
using BigInt = mpz_class;

/// Exact rational, used by the exponential-generating-function check.
using BigRat = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// Pascal triangle of exact binomials, rows 0..max_n. The profile
/// recurrences look coefficients up millions of times, so rows are
/// precomputed once per kernel run.
class BinomialTable {
public:
    explicit BinomialTable(int max_n) : rows_(static_cast<std::size_t>(max_n) + 1) {
        for (int n = 0; n <= max_n; ++n) {
            auto& row = rows_[static_cast<std::size_t>(n)];
            row.resize(static_cast<std::size_t>(n) + 1);
            row[0] = 1;
            row[static_cast<std::size_t>(n)] = 1;
            for (int k = 1; k < n; ++k)
                row[static_cast<std::size_t>(k)] =
                    rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
                    rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
        }
    }

    /// C(n, k); zero outside the triangle.
    const BigInt& at(int n, int k) const {
        static const BigInt zero = 0;
        if (n < 0 || k < 0 || k > n || static_cast<std::size_t>(n) >= rows_.size()) return zero;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

private:
    std::vector<std::vector<BigInt>> rows_;
};

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace incpat
