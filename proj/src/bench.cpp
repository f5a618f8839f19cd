#include "dsm/bench.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dsm {

BenchRecord run_bench(GenKind kind, int n, int repeats, std::uint64_t seed) {
    if (repeats < 1)
        throw std::invalid_argument("run_bench: repeats must be >= 1");
    const Instance inst = generate(GenSpec{kind, n, seed});

    BenchRecord record;
    record.n = n;
    record.input_size = 2 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    record.wall_ms = 0.0;

    for (int r = 0; r < repeats; ++r) {
        EngineStats stats;
        const auto start = std::chrono::steady_clock::now();
        const MatchingChain chain = disjoint_stable_matchings(inst, &stats);
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        if (r == 0 || ms < record.wall_ms)
            record.wall_ms = ms;
        record.proposals = stats.proposals;
        record.deletions = stats.deletions;
        record.chain_length = chain.size();
    }
    return record;
}

double fit_loglog_slope(const std::vector<BenchRecord>& records) {
    std::vector<std::pair<double, double>> points;
    for (const auto& r : records)
        if (r.wall_ms > 0.0)
            points.emplace_back(std::log(static_cast<double>(r.n)), std::log(r.wall_ms));
    if (points.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need two or more positive samples");

    double mean_x = 0.0, mean_y = 0.0;
    for (auto [x, y] : points) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(points.size());
    mean_y /= static_cast<double>(points.size());

    double num = 0.0, den = 0.0;
    for (auto [x, y] : points) {
        num += (x - mean_x) * (y - mean_y);
        den += (x - mean_x) * (x - mean_x);
    }
    if (den == 0.0)
        throw std::invalid_argument("fit_loglog_slope: need two or more distinct sizes");
    return num / den;
}

std::string bench_csv_header() {
    return "n,input_size,wall_ms,proposals,deletions,chain_length";
}

std::string bench_csv_row(const BenchRecord& r) {
    std::ostringstream out;
    out << r.n << ',' << r.input_size << ',' << r.wall_ms << ',' << r.proposals << ','
        << r.deletions << ',' << r.chain_length;
    return out.str();
}

}  // namespace dsm
