#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "incpat/oeis.hpp"

// End-to-end tests of the command-line binary. The binary path and the data
// directory arrive via --bin and --data, injected by the test registration.

namespace {

std::string g_bin;
std::string g_data;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string command = "'" + g_bin + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("count prints exact values") {
    CHECK(run("count --m 1,1,1 --r 3").out == "5\n");
    CHECK(run("count --m 2,1 --r 3").out == "3\n");
    CHECK(run("count --m 1,1 --r 5").out == "2\n");
    CHECK(run("count --m 1,1,1 --r 3").exit_code == 0);
}

TEST_CASE("weight prints ascending coefficients") {
    CHECK(run("weight --m 1,1,1 --r 3").out == "5 1\n");
    CHECK(run("weight --m 2,1 --r 3").out == "3\n");
    CHECK(run("weight --m 1,1 --r 2").out == "1 1\n");
    CHECK(run("weight --m 2,2,2 --r 3").out == "67 22 1\n");
}

TEST_CASE("perm prints one term per line from n=0") {
    CHECK(run("perm --r 3 --nmax 4").out == "1\n1\n2\n5\n17\n");
    CHECK(run("perm --r 2 --nmax 5").out == "1\n1\n1\n1\n1\n1\n");
    CHECK(run("perm --r 9 --nmax 5").out == "1\n1\n2\n6\n24\n120\n");
}

TEST_CASE("uniform counts words with repeated letters") {
    CHECK(run("uniform --s 2 --r 3 --nmax 2").out == "1\n1\n6\n");
    CHECK(run("uniform --s 1 --r 3 --nmax 4").out == run("perm --r 3 --nmax 4").out);

    const auto direct = run("count --m 3,3,3 --r 3");
    const auto seq = run("uniform --s 3 --r 3 --nmax 3");
    const auto last = seq.out.substr(seq.out.rfind('\n', seq.out.size() - 2) + 1);
    CHECK(last == direct.out);
}

TEST_CASE("weighted uniform prints coefficient rows") {
    CHECK(run("uniform --s 2 --r 3 --nmax 3 --weighted").out == "1\n1\n6\n67 22 1\n");
}

TEST_CASE("bfile output re-parses to the same sequence") {
    const auto result = run("perm --r 3 --nmax 6 --format bfile");
    CHECK(result.exit_code == 0);
    const auto record = incpat::parse_bfile(result.out);
    CHECK(record.offset == 0);
    REQUIRE(record.terms.size() == 7);
    CHECK(record.terms[4] == 17);
    CHECK(record.terms[6] == 349);

    const auto uni = run("uniform --s 2 --r 3 --nmax 4 --format bfile");
    const auto urec = incpat::parse_bfile(uni.out);
    CHECK(urec.offset == 0);
    CHECK(urec.terms == std::vector<incpat::BigInt>{1, 1, 6, 67, 1345});
}

TEST_CASE("structured output is one JSON record per line") {
    const auto result = run("perm --r 3 --nmax 2 --format structured");
    CHECK(result.exit_code == 0);
    std::istringstream lines(result.out);
    std::string line;
    int n = 0;
    while (std::getline(lines, line)) {
        const auto record = nlohmann::json::parse(line);
        CHECK(record["command"] == "perm");
        CHECK(record["r"] == 3);
        CHECK(record["n"] == n);
        ++n;
    }
    CHECK(n == 3);

    const auto weight = run("weight --m 1,1,1 --r 3 --format structured");
    const auto record = nlohmann::json::parse(weight.out);
    CHECK(record["coefficients"] == nlohmann::json::array({"5", "1"}));

    const auto verify = run("verify egf --r 3 --nmax 10 --format structured");
    const auto vrec = nlohmann::json::parse(verify.out);
    CHECK(vrec["pass"] == true);
    CHECK(vrec["checked"] == 11);
}

TEST_CASE("identical invocations are byte-identical") {
    const auto a = run("uniform --s 2 --r 3 --nmax 8 --format structured");
    const auto b = run("uniform --s 2 --r 3 --nmax 8 --format structured");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == b.exit_code);
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "/tmp/incpat_cli_out_test.txt";
    std::remove(path.c_str());
    const auto direct = run("perm --r 4 --nmax 6");
    const auto redirected = run("perm --r 4 --nmax 6 --out " + path);
    CHECK(redirected.exit_code == 0);
    CHECK(redirected.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == direct.out);
    std::remove(path.c_str());
}

TEST_CASE("verification commands succeed and fail through exit codes") {
    CHECK(run("verify series --r 3 --nvars 3 --degree 5").exit_code == 0);
    CHECK(run("verify series --r 3 --nvars 3 --degree 5 --weighted").exit_code == 0);
    CHECK(run("verify egf --r 4 --nmax 12").exit_code == 0);
    CHECK(run("verify cluster --r 3 --kmax 8").exit_code == 0);
    CHECK(run("verify cluster --r 2 --kmax 10").out == "cluster: pass (9 coefficients checked)\n");
}

TEST_CASE("oeis-check validates vendored snapshots") {
    const std::string data = " --data '" + g_data + "'";
    auto one = run("oeis-check --id A049774" + data);
    CHECK(one.exit_code == 0);
    CHECK(one.out == "A049774: pass (41 terms)\n");

    auto two = run("oeis-check --id A177555 --id A177637" + data);
    CHECK(two.exit_code == 0);

    auto unknown = run("oeis-check --id A999999" + data);
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.out.empty());

    auto capped = run("oeis-check --id A177596 --max-terms 5" + data);
    CHECK(capped.exit_code == 0);
    CHECK(capped.out == "A177596: pass (5 terms)\n");
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("count --m 1,1 --r 1").exit_code == 2);
    CHECK(run("count --r 3").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("perm --r 3 --nmax 4 --format nonsense").exit_code == 2);
    CHECK(run("weight --m 1,1 --r 2 --format bfile").exit_code == 2);
    CHECK(run("uniform --s 0 --r 3 --nmax 2").exit_code == 2);
    CHECK(run("perm --r 3 --nmax -1").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

int main(int argc, char** argv) {
    doctest::Context context;
    std::vector<const char*> forwarded;
    for (int i = 0; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--bin" && i + 1 < argc) {
            g_bin = argv[++i];
        } else if (arg == "--data" && i + 1 < argc) {
            g_data = argv[++i];
        } else {
            forwarded.push_back(argv[i]);
        }
    }
    if (g_bin.empty()) {
        std::cerr << "cli_tests: --bin <path to CLI binary> is required\n";
        return 1;
    }
    if (g_data.empty()) {
        std::cerr << "cli_tests: --data <path to b-file directory> is required\n";
        return 1;
    }
    context.applyCommandLine(static_cast<int>(forwarded.size()), forwarded.data());
    return context.run();
}
