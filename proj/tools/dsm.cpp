// Command-line front end: solve / disjoint / enumerate / verify / gen /
// bench over the canonical instance format. Machine output is JSON (or CSV
// for bench); exit codes are 0 = success or decision-true, 1 = decision-false
// or failed verification, 2 = input error.

#include "dsm/bench.hpp"
#include "dsm/core.hpp"
#include "dsm/engine.hpp"
#include "dsm/gen.hpp"
#include "dsm/oracle.hpp"
#include "dsm/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInputError = 2;

dsm::Instance load_instance(const std::string& path) {
    if (path == "-")
        return dsm::parse_instance(std::cin);
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path + "'");
    return dsm::parse_instance(in);
}

json matching_to_json(const dsm::Matching& m) {
    json pairs = json::array();
    for (auto [man, woman] : m.pairs())
        pairs.push_back({man + 1, woman + 1});
    return json{{"pairs", pairs}};
}

int run_solve(const std::string& file, const std::string& side) {
    const dsm::Instance inst = load_instance(file);
    const dsm::Matching m =
        dsm::gale_shapley(inst, side == "men" ? dsm::Side::men : dsm::Side::women);
    std::cout << matching_to_json(m).dump() << '\n';
    return kExitOk;
}

int run_disjoint(const std::string& file, int k) {
    const dsm::Instance inst = load_instance(file);
    const dsm::MatchingChain chain = dsm::disjoint_stable_matchings(inst);

    json out;
    out["chain"] = json::array();
    for (const auto& m : chain.matchings)
        out["chain"].push_back(matching_to_json(m));
    out["size"] = chain.size();
    if (k > 0) {
        out["k"] = k;
        out["satisfied"] = chain.size() >= k;
    }
    std::cout << out.dump() << '\n';
    return (k > 0 && chain.size() < k) ? kExitFalse : kExitOk;
}

int run_enumerate(const std::string& file) {
    const dsm::Instance inst = load_instance(file);
    const auto stable = dsm::enumerate_stable(inst);
    json out;
    out["count"] = stable.size();
    out["matchings"] = json::array();
    for (const auto& m : stable)
        out["matchings"].push_back(matching_to_json(m));
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int run_verify(const std::string& file, bool random_corpus, int seeds, bool json_output) {
    std::vector<dsm::Instance> instances;
    if (random_corpus) {
        for (int s = 0; s < seeds; ++s)
            instances.push_back(dsm::gen_random(2 + s % 6, static_cast<std::uint64_t>(s)));
    } else {
        instances.push_back(load_instance(file));
    }

    const auto& names = dsm::property_names();
    std::vector<int> failures(names.size(), 0);
    for (const auto& inst : instances) {
        const auto values = dsm::property_values(dsm::check_instance(inst));
        for (std::size_t i = 0; i < values.size(); ++i)
            if (!values[i])
                ++failures[i];
    }

    bool all_pass = true;
    json report;
    report["instances"] = instances.size();
    report["properties"] = json::array();
    for (std::size_t i = 0; i < names.size(); ++i) {
        const bool pass = failures[i] == 0;
        all_pass = all_pass && pass;
        if (json_output) {
            report["properties"].push_back(
                {{"name", names[i]}, {"pass", pass}, {"failures", failures[i]}});
        } else {
            std::cout << (pass ? "PASS" : "FAIL") << ' ' << names[i];
            if (instances.size() > 1) {
                std::cout << " (" << instances.size() - failures[i] << '/' << instances.size()
                          << " instances)";
            }
            std::cout << '\n';
        }
    }
    if (json_output) {
        report["pass"] = all_pass;
        std::cout << report.dump() << '\n';
    }
    return all_pass ? kExitOk : kExitFalse;
}

int run_gen(const std::string& kind, int n, std::uint64_t seed) {
    dsm::GenSpec spec;
    if (kind == "random")
        spec.kind = dsm::GenKind::random_uniform;
    else if (kind == "cyclic")
        spec.kind = dsm::GenKind::cyclic;
    else
        spec.kind = dsm::GenKind::paper3x3;
    if (n == 0 && spec.kind == dsm::GenKind::paper3x3)
        n = 3;
    if (n < 1)
        throw std::invalid_argument("--n is required and must be >= 1");
    spec.n = n;
    spec.seed = seed;
    std::cout << dsm::serialize_instance(dsm::generate(spec));
    return kExitOk;
}

int run_bench(const std::string& kind, const std::vector<int>& sizes, int repeats,
              std::uint64_t seed, bool json_output) {
    const dsm::GenKind gen_kind =
        kind == "cyclic" ? dsm::GenKind::cyclic : dsm::GenKind::random_uniform;

    std::vector<dsm::BenchRecord> records;
    for (int n : sizes) {
        if (n < 1)
            throw std::invalid_argument("bench sizes must be >= 1");
        records.push_back(dsm::run_bench(gen_kind, n, repeats, seed));
    }

    bool counts_ok = true;
    for (const auto& r : records)
        counts_ok = counts_ok && r.within_work_bound();

    bool have_slope = false;
    double slope = 0.0;
    if (records.size() >= 2) {
        try {
            slope = dsm::fit_loglog_slope(records);
            have_slope = true;
        } catch (const std::invalid_argument&) {
            // degenerate timings (all zero or one size); no slope to report
        }
    }

    if (json_output) {
        json out;
        out["records"] = json::array();
        for (const auto& r : records)
            out["records"].push_back({{"n", r.n},
                                      {"input_size", r.input_size},
                                      {"wall_ms", r.wall_ms},
                                      {"proposals", r.proposals},
                                      {"deletions", r.deletions},
                                      {"chain_length", r.chain_length}});
        if (have_slope)
            out["loglog_slope"] = slope;
        out["within_work_bound"] = counts_ok;
        std::cout << out.dump() << '\n';
    } else {
        std::cout << dsm::bench_csv_header() << '\n';
        for (const auto& r : records)
            std::cout << dsm::bench_csv_row(r) << '\n';
        if (have_slope)
            std::cout << "# loglog_slope=" << slope << '\n';
    }
    if (!counts_ok) {
        std::cerr << "error: proposal+deletion count exceeded " << dsm::kWorkBoundFactor
                  << "*n^2 on some size\n";
        return kExitFalse;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable matching toolkit: deferred acceptance, maximum disjoint chains,"
                 " brute-force verification, generators, benchmarks"};
    app.require_subcommand(1);

    bool json_output = false;
    app.add_flag("--json", json_output, "JSON instead of text/CSV for verify and bench reports");

    std::string solve_file, solve_side;
    auto* solve = app.add_subcommand("solve", "proposer-optimal stable matching of an instance");
    solve->add_option("--side", solve_side, "proposing side")
        ->required()
        ->check(CLI::IsMember({"men", "women"}));
    solve->add_option("file", solve_file, "instance file, - for stdin")->required();

    std::string disjoint_file;
    int disjoint_k = 0;
    auto* disjoint =
        app.add_subcommand("disjoint", "maximum chain of pairwise disjoint stable matchings");
    disjoint->add_option("--k", disjoint_k, "exit 0 iff at least k disjoint stable matchings")
        ->check(CLI::PositiveNumber);
    disjoint->add_option("file", disjoint_file, "instance file, - for stdin")->required();

    std::string enum_file;
    auto* enumerate = app.add_subcommand("enumerate", "all stable matchings (n <= 9)");
    enumerate->add_option("file", enum_file, "instance file, - for stdin")->required();

    std::string verify_file;
    bool verify_random = false;
    int verify_seeds = 100;
    auto* verify = app.add_subcommand("verify", "cross-check engine against the oracle (n <= 9)");
    verify->add_option("file", verify_file, "instance file, - for stdin");
    verify->add_flag("--random", verify_random, "verify a corpus of seeded random instances");
    verify->add_option("--seeds", verify_seeds, "corpus size for --random")
        ->check(CLI::PositiveNumber);

    std::string gen_kind;
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    auto* gen = app.add_subcommand("gen", "emit an instance in the wire format");
    gen->add_option("--kind", gen_kind, "generator family")
        ->required()
        ->check(CLI::IsMember({"random", "cyclic", "paper3x3"}));
    gen->add_option("--n", gen_n, "instance size");
    gen->add_option("--seed", gen_seed, "seed for --kind random");

    std::string bench_kind = "cyclic";
    std::vector<int> bench_sizes;
    int bench_repeats = 3;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "time the solver and emit CSV records");
    bench->add_option("--kind", bench_kind, "workload family")
        ->check(CLI::IsMember({"random", "cyclic"}));
    bench->add_option("--sizes", bench_sizes, "comma-separated instance sizes")
        ->required()
        ->delimiter(',');
    bench->add_option("--repeats", bench_repeats, "runs per size, fastest kept")
        ->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_seed, "seed for --kind random");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (*solve)
            return run_solve(solve_file, solve_side);
        if (*disjoint)
            return run_disjoint(disjoint_file, disjoint_k);
        if (*enumerate)
            return run_enumerate(enum_file);
        if (*verify) {
            if (verify_random == !verify_file.empty()) {
                std::cerr << "error: verify needs exactly one of FILE or --random\n";
                return kExitInputError;
            }
            return run_verify(verify_file, verify_random, verify_seeds, json_output);
        }
        if (*gen)
            return run_gen(gen_kind, gen_n, gen_seed);
        if (*bench)
            return run_bench(bench_kind, bench_sizes, bench_repeats, bench_seed, json_output);
    } catch (const dsm::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
