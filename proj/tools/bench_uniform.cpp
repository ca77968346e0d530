#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "incpat/uniform.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Times the parallel level sweep against the serial reference on the same
// inputs and checks that they produce identical values.

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class Fn>
double timed(Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return seconds_since(start);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark the uniform-multiplicity kernels"};
    int s = 2;
    int r = 3;
    int nmax = 40;
    bool weighted = false;
    app.add_option("--s", s, "Copies of each letter");
    app.add_option("--r", r, "Pattern length");
    app.add_option("--nmax", nmax, "Largest n");
    app.add_flag("--weighted", weighted, "Benchmark the polynomial kernels");
    CLI11_PARSE(app, argc, argv);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "s=" << s << " r=" << r << " nmax=" << nmax
              << (weighted ? " weighted" : "") << " threads=" << threads << "\n";

    const incpat::PatternLength pattern(r);
    double serial_time = 0;
    double sweep_time = 0;
    bool equal = true;

    if (weighted) {
        std::vector<incpat::TPoly> serial, sweep;
        serial_time = timed([&] { serial = incpat::weight_uniform_sequence_serial(s, nmax, pattern); });
        sweep_time = timed([&] { sweep = incpat::weight_uniform_sequence(s, nmax, pattern); });
        equal = serial == sweep;
    } else {
        std::vector<incpat::BigInt> serial, sweep;
        serial_time = timed([&] { serial = incpat::count_uniform_sequence_serial(s, nmax, pattern); });
        sweep_time = timed([&] { sweep = incpat::count_uniform_sequence(s, nmax, pattern); });
        equal = serial == sweep;
    }

    std::cout << "serial reference: " << serial_time << " s\n";
    std::cout << "parallel sweep:   " << sweep_time << " s\n";
    std::cout << "speedup:          " << (sweep_time > 0 ? serial_time / sweep_time : 0) << "x\n";
    std::cout << "results equal:    " << (equal ? "yes" : "NO") << "\n";
    return equal ? EXIT_SUCCESS : EXIT_FAILURE;
}
