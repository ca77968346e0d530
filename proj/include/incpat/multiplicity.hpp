#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace incpat {

/// Length r of the increasing consecutive pattern 12...r. Only r >= 2 is
/// meaningful; the constructor enforces it so downstream code never has to.
struct PatternLength {
    int value;

    explicit PatternLength(int r);
};

/// Canonical multiset of letter multiplicities: parts sorted non-increasing,
/// zeros removed. The empty vector denotes the empty word. Counting functions
/// are symmetric in the letters, so the canonical form is also the memo key.
class MultiplicityVector {
public:
    MultiplicityVector() = default;

    const std::vector<int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long long total() const { return total_; }

    bool operator==(const MultiplicityVector&) const = default;

    std::string str() const;

    friend MultiplicityVector canonicalize(std::span<const int> parts);

private:
    std::vector<int> parts_;  // non-increasing, all >= 1
    long long total_ = 0;
};

/// Sorts non-increasing and drops zeros. Throws std::invalid_argument on a
/// negative entry.
MultiplicityVector canonicalize(std::span<const int> parts);
MultiplicityVector canonicalize(std::initializer_list<int> parts);

/// Letters grouped by how many copies remain unplaced: count_at(j) letters
/// still have exactly j copies left, for j = 1..order(). The all-zero profile
/// is the completed word. This is the dynamic-programming state for words
/// with uniform multiplicities.
class ClassProfile {
public:
    explicit ClassProfile(int order) : counts_(static_cast<std::size_t>(order), 0) {}
    explicit ClassProfile(std::vector<int> counts);

    /// Start state for n letters of multiplicity s each: count_at(s) = n.
    static ClassProfile uniform_start(int s, int n);

    int order() const { return static_cast<int>(counts_.size()); }
    int count_at(int j) const { return counts_[static_cast<std::size_t>(j - 1)]; }
    void set_count(int j, int c);

    /// Number of letters still active.
    long long total_letters() const;
    /// Number of letter instances still unplaced (sum of j * count_at(j)).
    long long total_instances() const;
    bool is_completed() const { return total_letters() == 0; }

    /// Expands entry j into count_at(j) parts equal to j; the result is
    /// canonical by construction.
    MultiplicityVector to_multiplicity_vector() const;

    const std::vector<int>& counts() const { return counts_; }
    bool operator==(const ClassProfile&) const = default;

private:
    std::vector<int> counts_;  // counts_[j-1] = number of letters with j copies left
};

struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct MultiplicityVectorHash {
    std::size_t operator()(const MultiplicityVector& m) const { return VectorHash{}(m.parts()); }
};

struct ClassProfileHash {
    std::size_t operator()(const ClassProfile& p) const { return VectorHash{}(p.counts()); }
};

}  // namespace incpat
