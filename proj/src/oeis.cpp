#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "incpat/counting.hpp"
#include "incpat/oeis.hpp"
#include "incpat/uniform.hpp"

namespace incpat {
namespace {

std::string line_message(long long line, const std::string& what) {
    std::ostringstream out;
    out << "line " << line << ": " << what;
    return out.str();
}

bool is_integer_token(const std::string& tok) {
    if (tok.empty()) return false;
    std::size_t i = tok[0] == '-' ? 1 : 0;
    if (i == tok.size()) return false;
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9') return false;
    return true;
}

long long parse_index(const std::string& tok, long long line, const char* what) {
    if (!is_integer_token(tok))
        throw BFileError(line, std::string("malformed ") + what + " '" + tok + "'");
    try {
        return std::stoll(tok);
    } catch (const std::out_of_range&) {
        throw BFileError(line, std::string(what) + " out of range '" + tok + "'");
    }
}

// Strips comments and splits into tokens; returns false for skippable lines.
bool tokenize_line(const std::string& raw, std::vector<std::string>& tokens) {
    std::string text = raw;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    tokens.clear();
    std::istringstream fields(text);
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    return !tokens.empty();
}

}  // namespace

BFileError::BFileError(long long line, const std::string& what)
    : std::runtime_error(line_message(line, what)), line_(line) {}

SequenceRecord parse_bfile(std::istream& in) {
    SequenceRecord record;
    std::string raw;
    std::vector<std::string> tokens;
    long long line = 0;
    bool have_prev = false;
    long long prev_index = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!tokenize_line(raw, tokens)) continue;
        if (tokens.size() != 2)
            throw BFileError(line, "expected '<index> <value>'");
        const long long index = parse_index(tokens[0], line, "index");
        if (!is_integer_token(tokens[1]))
            throw BFileError(line, "malformed value '" + tokens[1] + "'");
        if (!have_prev) {
            record.offset = index;
            have_prev = true;
        } else if (index != prev_index + 1) {
            std::ostringstream what;
            what << "index " << index << " does not follow " << prev_index;
            throw BFileError(line, what.str());
        }
        prev_index = index;
        record.terms.emplace_back(tokens[1]);
    }
    return record;
}

SequenceRecord parse_bfile(const std::string& text) {
    std::istringstream in(text);
    return parse_bfile(in);
}

std::string render_bfile(const SequenceRecord& record) {
    std::ostringstream out;
    for (std::size_t i = 0; i < record.terms.size(); ++i)
        out << record.offset + static_cast<long long>(i) << " " << record.terms[i].get_str()
            << "\n";
    return out.str();
}

std::vector<SequenceBinding> load_bindings(std::istream& in) {
    std::vector<SequenceBinding> bindings;
    std::string raw;
    std::vector<std::string> tokens;
    long long line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!tokenize_line(raw, tokens)) continue;
        if (tokens.size() != 6)
            throw BFileError(line, "expected '<id> <family> <r> <s|-> <scale> <shift>'");
        SequenceBinding b;
        b.id = tokens[0];
        if (tokens[1] == "perm")
            b.family = SequenceFamily::perm;
        else if (tokens[1] == "uniform")
            b.family = SequenceFamily::uniform;
        else
            throw BFileError(line, "unknown family '" + tokens[1] + "'");
        b.r = static_cast<int>(parse_index(tokens[2], line, "r"));
        if (b.r < 2) throw BFileError(line, "r must be at least 2");
        if (b.family == SequenceFamily::uniform) {
            b.s = static_cast<int>(parse_index(tokens[3], line, "s"));
            if (b.s < 1) throw BFileError(line, "s must be at least 1");
        } else if (tokens[3] != "-") {
            throw BFileError(line, "perm rows take '-' in the s column");
        }
        b.scale = parse_index(tokens[4], line, "scale");
        b.shift = parse_index(tokens[5], line, "shift");
        bindings.push_back(std::move(b));
    }
    return bindings;
}

std::vector<SequenceBinding> load_bindings_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BindingError("cannot open bindings file '" + path + "'");
    return load_bindings(in);
}

std::string SequenceComparison::summary() const {
    std::ostringstream out;
    out << id << ": ";
    if (vacuous) {
        out << "vacuous pass (no terms)";
    } else if (pass) {
        out << "pass (" << compared << " terms)";
    } else {
        out << "FAIL at index " << first_mismatch_index << " (" << mismatched_indices.size()
            << " of " << compared << " mismatch): expected " << expected << ", got " << actual;
    }
    return out.str();
}

SequenceComparison compare_sequence(const SequenceBinding& binding, const SequenceRecord& record,
                                    long long max_terms) {
    SequenceComparison result;
    result.id = binding.id;
    const long long count =
        std::min<long long>(max_terms, static_cast<long long>(record.terms.size()));
    if (count <= 0) {
        result.vacuous = true;
        return result;
    }

    const long long last_index = record.offset + count - 1;
    long long n_min = binding.scale * record.offset + binding.shift;
    long long n_max = binding.scale * last_index + binding.shift;
    if (n_min > n_max) std::swap(n_min, n_max);
    if (n_min < 0) {
        std::ostringstream what;
        what << binding.id << ": index map sends index range [" << record.offset << ", "
             << last_index << "] to negative n " << n_min;
        throw BindingError(what.str());
    }

    // One sequence computation serves every index.
    std::vector<BigInt> values;
    const PatternLength r(binding.r);
    if (binding.family == SequenceFamily::perm) {
        values.reserve(static_cast<std::size_t>(n_max) + 1);
        for (long long n = 0; n <= n_max; ++n)
            values.push_back(count_permutations(static_cast<int>(n), r));
    } else {
        values = count_uniform_sequence(binding.s, static_cast<int>(n_max), r);
    }

    for (long long i = 0; i < count; ++i) {
        const long long index = record.offset + i;
        const long long n = binding.scale * index + binding.shift;
        const BigInt& actual = values[static_cast<std::size_t>(n)];
        const BigInt& expected = record.terms[static_cast<std::size_t>(i)];
        ++result.compared;
        if (actual != expected) {
            if (result.pass) {
                result.pass = false;
                result.first_mismatch_index = index;
                result.expected = expected.get_str();
                result.actual = actual.get_str();
            }
            result.mismatched_indices.push_back(index);
        }
    }
    return result;
}

}  // namespace incpat
