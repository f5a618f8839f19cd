#pragma once

#include "dsm/engine.hpp"
#include "dsm/gen.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dsm {

// One measured solver run. wall_ms covers the disjoint_stable_matchings
// call itself (rank tables and linked lists included; both are part of the
// O(n^2) input-proportional work). input_size counts preference-list
// entries, 2n^2, NOT n: "linear time" means linear in this quantity.
struct BenchRecord {
    int n = 0;
    std::uint64_t input_size = 0;  // 2 * n^2
    double wall_ms = 0.0;          // minimum over repeats
    std::uint64_t proposals = 0;
    std::uint64_t deletions = 0;
    int chain_length = 0;

    bool within_work_bound() const {
        return proposals + deletions <=
               kWorkBoundFactor * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    }
};

// Builds the workload instance (outside the timed window) and measures
// repeats runs, keeping the fastest.
BenchRecord run_bench(GenKind kind, int n, int repeats, std::uint64_t seed = 1);

// Least-squares slope of log(wall_ms) against log(n). Needs two or more
// distinct sizes with positive times.
double fit_loglog_slope(const std::vector<BenchRecord>& records);

std::string bench_csv_header();
std::string bench_csv_row(const BenchRecord& record);

}  // namespace dsm
