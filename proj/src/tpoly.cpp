#include "incpat/tpoly.hpp"

#include <sstream>
#include <utility>

namespace incpat {

TPoly::TPoly(long constant) {
    if (constant != 0) coeffs_.push_back(BigInt(constant));
}

TPoly::TPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

TPoly::TPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

TPoly TPoly::variable() {
    TPoly t;
    t.coeffs_ = {BigInt(0), BigInt(1)};
    return t;
}

const BigInt& TPoly::coeff(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(i)];
}

BigInt TPoly::evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return TPoly();
    TPoly out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.trim();
    return out;
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly TPoly::operator-() const {
    TPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = mag == 1;
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (!unit) out << mag.get_str() << '*';
            out << 't';
            if (i > 1) out << '^' << i;
        }
    }
    return out.str();
}

}  // namespace incpat
