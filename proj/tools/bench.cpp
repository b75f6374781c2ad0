// Compares the parallel suite runner against the serial reference: same
// reports, wall-clock for each.

#include <chrono>
#include <iostream>

#include "girylab/suites.hpp"

using namespace girylab;

int main() {
    SuiteContext ctx;
    ctx.seed = 42;

    auto time_run = [&](bool parallel) {
        auto t0 = std::chrono::steady_clock::now();
        auto reports = run_suites({}, ctx, parallel);
        auto t1 = std::chrono::steady_clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return std::make_pair(reports, ms);
    };

    auto [serial, serial_ms] = time_run(false);
    auto [parallel, parallel_ms] = time_run(true);

    bool same = serial.size() == parallel.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
        same = serial[i].to_json() == parallel[i].to_json();

    bool all_pass = true;
    for (const auto& r : serial) all_pass = all_pass && r.ok();

    std::cout << "serial:   " << serial_ms << " ms\n";
    std::cout << "parallel: " << parallel_ms << " ms\n";
    std::cout << "speedup:  " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
    std::cout << "reports identical: " << (same ? "yes" : "NO") << "\n";
    std::cout << "all suites pass: " << (all_pass ? "yes" : "NO") << "\n";
    return (same && all_pass) ? 0 : 1;
}
