#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "incpat/bigint.hpp"

namespace incpat {

/// Raised on malformed b-file text; line is 1-based.
class BFileError : public std::runtime_error {
public:
    BFileError(long long line, const std::string& what);
    long long line() const { return line_; }

private:
    long long line_;
};

/// Raised on a binding whose index map leaves the computable domain.
class BindingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An OEIS-style sequence: identifier, offset (index of the first term) and
/// contiguous terms. terms[i] is the value at index offset + i.
struct SequenceRecord {
    std::string id;
    long long offset = 0;
    std::vector<BigInt> terms;

    bool operator==(const SequenceRecord&) const = default;
};

/// Parses b-file text: lines of "<index> <value>", '#'-prefixed comments and
/// blank lines ignored. Indices must increase by exactly 1. Throws BFileError
/// with the offending line number otherwise.
SequenceRecord parse_bfile(std::istream& in);
SequenceRecord parse_bfile(const std::string& text);

/// Renders "<index> <value>" lines; parse_bfile(render_bfile(r)) == r
/// (modulo the id, which b-files do not carry).
std::string render_bfile(const SequenceRecord& record);

enum class SequenceFamily { perm, uniform };

/// Connects an OEIS id to a computation: a(index) = family(n) where
/// n = scale * index + shift.
struct SequenceBinding {
    std::string id;
    SequenceFamily family = SequenceFamily::perm;
    int r = 0;
    int s = 0;  // uniform only
    long long scale = 1;
    long long shift = 0;
};

/// Parses the bindings table: whitespace-separated columns
///   <id> <family> <r> <s|-> <scale> <shift>
/// with '#' comments. Throws BFileError with line numbers on malformed rows.
std::vector<SequenceBinding> load_bindings(std::istream& in);
std::vector<SequenceBinding> load_bindings_file(const std::string& path);

/// Result of checking one sequence against a computed prefix.
struct SequenceComparison {
    std::string id;
    long long compared = 0;
    bool pass = true;
    bool vacuous = false;  // empty record: vacuous pass with a warning
    std::vector<long long> mismatched_indices;
    long long first_mismatch_index = 0;
    std::string expected;  // at the first mismatch
    std::string actual;

    std::string summary() const;
};

/// Computes min(max_terms, record size) terms through the binding and
/// compares them term by term. Read-only and deterministic. Throws
/// BindingError if the index map produces a negative argument.
SequenceComparison compare_sequence(const SequenceBinding& binding, const SequenceRecord& record,
                                    long long max_terms);

}  // namespace incpat
