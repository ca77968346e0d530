#pragma once

#include <string>
#include <vector>

#include "incpat/bigint.hpp"

namespace incpat {

/// Dense polynomial in t with exact integer coefficients. Canonical form has
/// no trailing zero coefficients; the zero polynomial is the empty list.
/// Degrees stay small (bounded by word length), so dense storage is the
/// simple choice.
class TPoly {
public:
    TPoly() = default;  // zero
    explicit TPoly(long constant);
    explicit TPoly(BigInt constant);
    explicit TPoly(std::vector<BigInt> coefficients);

    /// The monomial t.
    static TPoly variable();

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    /// Highest nonzero index; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of t^i (zero beyond the degree).
    const BigInt& coeff(int i) const;

    BigInt evaluate(const BigInt& t) const;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const TPoly& o);
    TPoly operator-() const;

    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);

    bool operator==(const TPoly&) const = default;

    /// Human-readable form, e.g. "t^2 - 2*t + 1"; "0" for the zero polynomial.
    std::string str() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;  // coeffs_[i] = coefficient of t^i
};

inline TPoly pow(TPoly base, int exponent) {
    TPoly out(1);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace incpat
