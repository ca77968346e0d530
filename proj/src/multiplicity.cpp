#include "incpat/multiplicity.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace incpat {

PatternLength::PatternLength(int r) : value(r) {
    if (r < 2) throw std::invalid_argument("pattern length must be at least 2");
}

MultiplicityVector canonicalize(std::span<const int> parts) {
    MultiplicityVector m;
    m.parts_.reserve(parts.size());
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multiplicities must be non-negative");
        if (p > 0) m.parts_.push_back(p);
    }
    std::sort(m.parts_.begin(), m.parts_.end(), std::greater<>());
    m.total_ = std::accumulate(m.parts_.begin(), m.parts_.end(), 0LL);
    return m;
}

MultiplicityVector canonicalize(std::initializer_list<int> parts) {
    return canonicalize(std::span<const int>(parts.begin(), parts.size()));
}

std::string MultiplicityVector::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

ClassProfile::ClassProfile(std::vector<int> counts) : counts_(std::move(counts)) {
    for (int c : counts_)
        if (c < 0) throw std::invalid_argument("class counts must be non-negative");
}

ClassProfile ClassProfile::uniform_start(int s, int n) {
    if (s < 1) throw std::invalid_argument("multiplicity order s must be at least 1");
    if (n < 0) throw std::invalid_argument("letter count n must be non-negative");
    ClassProfile p(s);
    p.set_count(s, n);
    return p;
}

void ClassProfile::set_count(int j, int c) {
    if (c < 0) throw std::invalid_argument("class counts must be non-negative");
    counts_[static_cast<std::size_t>(j - 1)] = c;
}

long long ClassProfile::total_letters() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0LL);
}

long long ClassProfile::total_instances() const {
    long long total = 0;
    for (int j = 1; j <= order(); ++j) total += static_cast<long long>(j) * count_at(j);
    return total;
}

MultiplicityVector ClassProfile::to_multiplicity_vector() const {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(total_letters()));
    for (int j = order(); j >= 1; --j)
        for (int i = 0; i < count_at(j); ++i) parts.push_back(j);
    return canonicalize(parts);
}

}  // namespace incpat
