#include "dsm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dsm {

std::vector<Matching> enumerate_stable(const Instance& inst) {
    validate_instance(inst);
    if (inst.n > kMaxOracleSize)
        throw std::invalid_argument("enumerate_stable: instance too large (n > " +
                                    std::to_string(kMaxOracleSize) + ")");

    const int n = inst.n;
    const auto woman_rank = rank_table(inst.women_prefs);

    std::vector<int> wife(n);  // candidate partner_of_man, runs through all n! values
    std::iota(wife.begin(), wife.end(), 0);
    std::vector<int> husband(n);

    std::vector<Matching> stable;
    do {
        for (int m = 0; m < n; ++m)
            husband[wife[m]] = m;

        bool blocked = false;
        for (int m = 0; m < n && !blocked; ++m) {
            for (int w : inst.men_prefs[m]) {
                if (w == wife[m])
                    break;  // past here m prefers his own partner
                if (woman_rank[w][m] < woman_rank[w][husband[w]]) {
                    blocked = true;
                    break;
                }
            }
        }
        if (!blocked)
            stable.push_back(Matching::from_partner_of_man(wife));
    } while (std::next_permutation(wife.begin(), wife.end()));

    return stable;
}

namespace {

struct DisjointSearch {
    const std::vector<std::uint64_t>& conflict;
    int best_count = 0;
    std::uint64_t best_mask = 0;

    void expand(std::uint64_t candidates, std::uint64_t chosen, int count) {
        if (count + std::popcount(candidates) <= best_count)
            return;
        if (candidates == 0) {
            best_count = count;
            best_mask = chosen;
            return;
        }
        const int i = std::countr_zero(candidates);
        const std::uint64_t bit = std::uint64_t{1} << i;
        expand((candidates & ~conflict[i]) & ~bit, chosen | bit, count + 1);
        expand(candidates & ~bit, chosen, count);
    }
};

}  // namespace

std::pair<int, std::vector<Matching>> max_disjoint_bruteforce(
    const std::vector<Matching>& matchings) {
    const int k = static_cast<int>(matchings.size());
    if (k > kMaxBruteforceFamily)
        throw std::invalid_argument("max_disjoint_bruteforce: family too large");
    if (k == 0)
        return {0, {}};

    std::vector<std::uint64_t> conflict(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (!edge_disjoint(matchings[i], matchings[j])) {
                conflict[i] |= std::uint64_t{1} << j;
                conflict[j] |= std::uint64_t{1} << i;
            }

    DisjointSearch search{conflict};
    // greedy pass seeds the bound; with dominance-consistent input order
    // this already finds a maximum chain witness
    std::uint64_t taken = 0;
    std::uint64_t excluded = 0;
    for (int i = 0; i < k; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if (excluded & bit)
            continue;
        taken |= bit;
        excluded |= bit | conflict[i];
        ++search.best_count;
    }
    search.best_mask = taken;

    const std::uint64_t all =
        (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
    search.expand(all, 0, 0);

    std::vector<Matching> witness;
    for (int i = 0; i < k; ++i)
        if (search.best_mask & (std::uint64_t{1} << i))
            witness.push_back(matchings[i]);
    return {search.best_count, witness};
}

std::vector<Matching> teo_sethuraman_transform(const Instance& inst,
                                               const std::vector<Matching>& matchings) {
    const int k = static_cast<int>(matchings.size());
    if (k < 1)
        throw std::invalid_argument("teo_sethuraman_transform: need at least one matching");
    for (const auto& m : matchings)
        if (!is_stable(inst, m))
            throw std::invalid_argument("teo_sethuraman_transform: input matching is not stable");

    const int n = inst.n;
    const auto man_rank = rank_table(inst.men_prefs);

    // level -> partner_of_man under construction
    std::vector<std::vector<int>> levels(k, std::vector<int>(n));
    std::vector<int> partners(k);
    for (int man = 0; man < n; ++man) {
        for (int i = 0; i < k; ++i)
            partners[i] = matchings[i].partner_of_man[man];
        std::sort(partners.begin(), partners.end(),
                  [&](int a, int b) { return man_rank[man][a] < man_rank[man][b]; });
        for (int i = 0; i < k; ++i)
            levels[i][man] = partners[i];
    }

    std::vector<Matching> out;
    out.reserve(k);
    for (int i = 0; i < k; ++i) {
        // each level must pair every woman exactly once
        std::vector<char> seen(n, 0);
        for (int w : levels[i]) {
            if (seen[w])
                throw std::logic_error(
                    "teo_sethuraman_transform: level is not a perfect matching");
            seen[w] = 1;
        }
        out.push_back(Matching::from_partner_of_man(levels[i]));
    }
    return out;
}

StableSetReport analyze(const Instance& inst) {
    StableSetReport report;
    report.all_stable = enumerate_stable(inst);

    // Order candidates so that chains appear as greedy prefixes: ascending
    // total man-rank is a linear extension of dominance.
    const auto man_rank = rank_table(inst.men_prefs);
    auto rank_sum = [&](const Matching& m) {
        long total = 0;
        for (int man = 0; man < inst.n; ++man)
            total += man_rank[man][m.partner_of_man[man]];
        return total;
    };
    std::vector<Matching> ordered = report.all_stable;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [&](const Matching& a, const Matching& b) { return rank_sum(a) < rank_sum(b); });

    auto [size, witness] = max_disjoint_bruteforce(ordered);
    report.max_disjoint_size = size;
    report.max_disjoint_witness = std::move(witness);

    if (report.all_stable.empty())
        throw std::logic_error("analyze: no stable matching found, enumeration is broken");
    for (auto [man, woman] : report.all_stable.front().pairs()) {
        bool everywhere = true;
        for (const auto& m : report.all_stable)
            if (m.partner_of_man[man] != woman) {
                everywhere = false;
                break;
            }
        if (everywhere)
            report.fixed_pairs.emplace_back(man, woman);
    }
    return report;
}

}  // namespace dsm
