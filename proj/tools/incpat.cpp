#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "incpat/counting.hpp"
#include "incpat/denominator.hpp"
#include "incpat/oeis.hpp"
#include "incpat/oracle.hpp"
#include "incpat/series.hpp"
#include "incpat/uniform.hpp"

namespace {

using incpat::BigInt;
using incpat::TPoly;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

enum class Format { plain, bfile, structured };

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
        stream = &file;
    }
    std::ostream& out() { return *stream; }
};

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "bfile") return Format::bfile;
    if (name == "structured") return Format::structured;
    throw std::invalid_argument("unknown format '" + name + "'");
}

void require_not_bfile(Format format, const std::string& command) {
    if (format == Format::bfile)
        throw std::invalid_argument(command + " has no index column; use plain or structured");
}

std::vector<std::string> coeff_strings(const TPoly& p) {
    std::vector<std::string> out;
    if (p.degree() < 0) return {"0"};
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).get_str());
    return out;
}

std::string coeff_line(const TPoly& p) {
    const auto coeffs = coeff_strings(p);
    std::string line;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) line += ' ';
        line += coeffs[i];
    }
    return line;
}

// Shared by perm and uniform: renders a_0..a_nmax in any format.
void print_sequence(Output& output, Format format, const std::string& command,
                    const json& parameters, const std::vector<BigInt>& values) {
    auto& out = output.out();
    for (std::size_t n = 0; n < values.size(); ++n) {
        switch (format) {
            case Format::plain:
                out << values[n].get_str() << "\n";
                break;
            case Format::bfile:
                out << n << " " << values[n].get_str() << "\n";
                break;
            case Format::structured: {
                json record = parameters;
                record["command"] = command;
                record["n"] = n;
                record["value"] = values[n].get_str();
                out << record.dump() << "\n";
                break;
            }
        }
    }
}

void print_poly_sequence(Output& output, Format format, const std::string& command,
                         const json& parameters, const std::vector<TPoly>& values) {
    auto& out = output.out();
    for (std::size_t n = 0; n < values.size(); ++n) {
        if (format == Format::plain) {
            out << coeff_line(values[n]) << "\n";
        } else {
            json record = parameters;
            record["command"] = command;
            record["n"] = n;
            record["coefficients"] = coeff_strings(values[n]);
            out << record.dump() << "\n";
        }
    }
}

int run_count(const std::vector<int>& m, int r, Format format, Output& output) {
    require_not_bfile(format, "count");
    const auto canonical = incpat::canonicalize(m);
    const BigInt value = incpat::count_avoiders(canonical, incpat::PatternLength(r));
    if (format == Format::plain) {
        output.out() << value.get_str() << "\n";
    } else {
        json record;
        record["command"] = "count";
        record["m"] = m;
        record["r"] = r;
        record["value"] = value.get_str();
        output.out() << record.dump() << "\n";
    }
    return kExitPass;
}

int run_weight(const std::vector<int>& m, int r, Format format, Output& output) {
    require_not_bfile(format, "weight");
    const auto canonical = incpat::canonicalize(m);
    const TPoly value = incpat::weight_enumerator(canonical, incpat::PatternLength(r));
    if (format == Format::plain) {
        output.out() << coeff_line(value) << "\n";
    } else {
        json record;
        record["command"] = "weight";
        record["m"] = m;
        record["r"] = r;
        record["coefficients"] = coeff_strings(value);
        output.out() << record.dump() << "\n";
    }
    return kExitPass;
}

int run_perm(int r, int nmax, Format format, Output& output) {
    if (nmax < 0) throw std::invalid_argument("perm: nmax must be non-negative");
    const incpat::PatternLength pattern(r);
    std::vector<BigInt> values;
    values.reserve(static_cast<std::size_t>(nmax) + 1);
    for (int n = 0; n <= nmax; ++n) values.push_back(incpat::count_permutations(n, pattern));
    print_sequence(output, format, "perm", json{{"r", r}}, values);
    return kExitPass;
}

int run_uniform(int s, int r, int nmax, bool weighted, Format format, Output& output) {
    const incpat::PatternLength pattern(r);
    const json parameters{{"s", s}, {"r", r}, {"weighted", weighted}};
    if (weighted) {
        require_not_bfile(format, "uniform --weighted");
        print_poly_sequence(output, format, "uniform", parameters,
                            incpat::weight_uniform_sequence(s, nmax, pattern));
    } else {
        print_sequence(output, format, "uniform", parameters,
                       incpat::count_uniform_sequence(s, nmax, pattern));
    }
    return kExitPass;
}

int report_exit(const incpat::VerifyReport& report, const std::string& kind,
                const json& parameters, Format format, Output& output) {
    if (format == Format::plain) {
        output.out() << kind << ": " << report.summary() << "\n";
    } else {
        json record = parameters;
        record["command"] = "verify";
        record["kind"] = kind;
        record["pass"] = report.pass;
        record["checked"] = report.checked;
        if (!report.pass) {
            record["mismatch_at"] = report.mismatch_at;
            record["expected"] = report.expected;
            record["actual"] = report.actual;
        }
        output.out() << record.dump() << "\n";
    }
    return report.pass ? kExitPass : kExitMismatch;
}

int run_verify_series(int r, int nvars, int degree, bool weighted, Format format,
                      Output& output) {
    require_not_bfile(format, "verify");
    const auto report = incpat::verify_against_recurrence(nvars, incpat::PatternLength(r),
                                                          degree, weighted);
    return report_exit(report, "series",
                       json{{"r", r}, {"nvars", nvars}, {"degree", degree}, {"weighted", weighted}},
                       format, output);
}

int run_verify_egf(int r, int nmax, Format format, Output& output) {
    require_not_bfile(format, "verify");
    const auto report = incpat::egf_check(incpat::PatternLength(r), nmax);
    return report_exit(report, "egf", json{{"r", r}, {"nmax", nmax}}, format, output);
}

int run_verify_cluster(int r, int kmax, Format format, Output& output) {
    require_not_bfile(format, "verify");
    const incpat::PatternLength pattern(r);
    incpat::VerifyReport report;
    for (int k = r; k <= kmax; ++k) {
        const TPoly expected = incpat::oracle::oracle_cluster_poly(k, pattern);
        const TPoly& actual = incpat::p_poly(k, pattern);
        ++report.checked;
        if (expected != actual) {
            report.pass = false;
            report.mismatch_at = {k};
            report.expected = expected.str();
            report.actual = actual.str();
            break;
        }
    }
    return report_exit(report, "cluster", json{{"r", r}, {"kmax", kmax}}, format, output);
}

std::string bfile_name(const std::string& id) {
    if (id.size() < 2 || id[0] != 'A')
        throw std::invalid_argument("sequence id must look like A000000, got '" + id + "'");
    return "b" + id.substr(1) + ".txt";
}

int run_oeis_check(const std::string& data_dir, std::string bindings_path,
                   const std::vector<std::string>& ids, long long max_terms, Format format,
                   Output& output) {
    require_not_bfile(format, "oeis-check");
    if (bindings_path.empty()) bindings_path = data_dir + "/bindings.txt";
    const auto bindings = incpat::load_bindings_file(bindings_path);

    std::vector<incpat::SequenceBinding> selected;
    if (ids.empty()) {
        selected = bindings;
    } else {
        for (const auto& id : ids) {
            bool found = false;
            for (const auto& b : bindings) {
                if (b.id == id) {
                    selected.push_back(b);
                    found = true;
                    break;
                }
            }
            if (!found) throw std::invalid_argument("unknown sequence id '" + id + "'");
        }
    }

    bool all_pass = true;
    for (const auto& binding : selected) {
        const std::string path = data_dir + "/" + bfile_name(binding.id);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open b-file '" + path + "'");
        const auto record = incpat::parse_bfile(in);
        const auto result = incpat::compare_sequence(binding, record, max_terms);
        if (result.vacuous)
            std::cerr << "warning: " << binding.id << " has no terms to compare\n";
        all_pass = all_pass && result.pass;
        if (format == Format::plain) {
            output.out() << result.summary() << "\n";
        } else {
            json rec;
            rec["command"] = "oeis-check";
            rec["id"] = result.id;
            rec["pass"] = result.pass;
            rec["vacuous"] = result.vacuous;
            rec["compared"] = result.compared;
            if (!result.pass) {
                rec["first_mismatch_index"] = result.first_mismatch_index;
                rec["expected"] = result.expected;
                rec["actual"] = result.actual;
            }
            output.out() << rec.dump() << "\n";
        }
    }
    return all_pass ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of multiset arrangements avoiding the consecutive pattern 12...r"};
    app.require_subcommand(1);

    std::string format_name = "plain";
    std::string out_path;
    app.add_option("--format", format_name, "Output format: plain, bfile or structured")
        ->check(CLI::IsMember({"plain", "bfile", "structured"}));
    app.add_option("--out", out_path, "Write output to a file instead of standard output");

    std::vector<int> m;
    int r = 0;
    int s = 1;
    int nmax = 0;
    int nvars = 0;
    int degree = 0;
    int kmax = 0;
    bool weighted = false;

    auto* count = app.add_subcommand("count", "Arrangements of m avoiding the pattern");
    count->fallthrough();
    count->add_option("--m", m, "Letter multiplicities, comma separated")
        ->required()
        ->delimiter(',');
    count->add_option("--r", r, "Pattern length (at least 2)")->required();

    auto* weight = app.add_subcommand("weight", "Occurrence-count polynomial, coefficients in "
                                                "ascending powers of t");
    weight->fallthrough();
    weight->add_option("--m", m, "Letter multiplicities, comma separated")
        ->required()
        ->delimiter(',');
    weight->add_option("--r", r, "Pattern length (at least 2)")->required();

    auto* perm = app.add_subcommand("perm", "Pattern-avoiding permutations for n = 0..nmax");
    perm->fallthrough();
    perm->add_option("--r", r, "Pattern length (at least 2)")->required();
    perm->add_option("--nmax", nmax, "Largest n")->required();

    auto* uniform = app.add_subcommand(
        "uniform", "Avoiders among words with s copies of each of 1..n, for n = 0..nmax");
    uniform->fallthrough();
    uniform->add_option("--s", s, "Copies of each letter")->required();
    uniform->add_option("--r", r, "Pattern length (at least 2)")->required();
    uniform->add_option("--nmax", nmax, "Largest n")->required();
    uniform->add_flag("--weighted", weighted, "Emit occurrence polynomials instead of counts");

    auto* verify = app.add_subcommand("verify", "Check the library against independent oracles");
    verify->fallthrough();
    verify->require_subcommand(1);
    auto* vseries = verify->add_subcommand(
        "series", "Compare the expanded generating function with the recurrence");
    vseries->fallthrough();
    vseries->add_option("--r", r, "Pattern length (at least 2)")->required();
    vseries->add_option("--nvars", nvars, "Number of variables")->required();
    vseries->add_option("--degree", degree, "Total-degree cap")->required();
    vseries->add_flag("--weighted", weighted, "Check the t-weighted identity");
    auto* vegf = verify->add_subcommand(
        "egf", "Multiply the permutation EGF by its denominator and expect 1");
    vegf->fallthrough();
    vegf->add_option("--r", r, "Pattern length (at least 2)")->required();
    vegf->add_option("--nmax", nmax, "Largest exponent checked")->required();
    auto* vcluster = verify->add_subcommand(
        "cluster", "Compare enumerated cluster weights with the recurrence polynomials");
    vcluster->fallthrough();
    vcluster->add_option("--r", r, "Pattern length (at least 2)")->required();
    vcluster->add_option("--kmax", kmax, "Largest word length")->required();

    std::string data_dir = "data/oeis";
    std::string bindings_path;
    std::vector<std::string> ids;
    long long max_terms = -1;
    auto* oeis = app.add_subcommand("oeis-check", "Compare computed terms with b-file snapshots");
    oeis->fallthrough();
    oeis->add_option("--data", data_dir, "Directory holding b-files and bindings.txt");
    oeis->add_option("--bindings", bindings_path, "Bindings table (default: <data>/bindings.txt)");
    oeis->add_option("--id", ids, "Check only these ids (repeatable)");
    oeis->add_option("--max-terms", max_terms, "Compare at most this many terms per sequence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Format format = parse_format(format_name);
        Output output;
        output.open(out_path);
        if (max_terms < 0) max_terms = std::numeric_limits<long long>::max();

        if (*count) return run_count(m, r, format, output);
        if (*weight) return run_weight(m, r, format, output);
        if (*perm) return run_perm(r, nmax, format, output);
        if (*uniform) return run_uniform(s, r, nmax, weighted, format, output);
        if (*vseries) return run_verify_series(r, nvars, degree, weighted, format, output);
        if (*vegf) return run_verify_egf(r, nmax, format, output);
        if (*vcluster) return run_verify_cluster(r, kmax, format, output);
        if (*oeis) return run_oeis_check(data_dir, bindings_path, ids, max_terms, format, output);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const incpat::BFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const incpat::BindingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
