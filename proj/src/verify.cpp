#include "dsm/verify.hpp"

#include <algorithm>

namespace dsm {

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = {
        "chain size equals oracle maximum",
        "chain members all stable",
        "chain pairwise edge-disjoint",
        "chain strictly dominance-ordered",
        "chain endpoints are the optimal matchings",
        "reduced lists contain every stable matching",
        "optimal partners at reduced-list ends",
        "fixed pairs lie in every stable matching",
        "sorting transform reproduces the chain",
    };
    return names;
}

std::vector<bool> property_values(const PropertyChecks& c) {
    return {c.chain_size_matches_oracle,
            c.chain_members_stable,
            c.chain_pairwise_disjoint,
            c.chain_dominance_ordered,
            c.chain_endpoints_optimal,
            c.gs_lists_contain_all_stable,
            c.gs_lists_first_last,
            c.fixed_pairs_in_every_stable,
            c.transform_round_trip};
}

PropertyChecks check_instance(const Instance& inst) {
    PropertyChecks out;

    const MatchingChain chain = disjoint_stable_matchings(inst);
    const StableSetReport report = analyze(inst);
    const RankMatrix ranks = RankMatrix::of(inst);
    const Matching man_opt = gale_shapley(inst, Side::men);
    const Matching woman_opt = gale_shapley(inst, Side::women);
    const ReducedLists lists = gs_lists(inst);

    out.chain_size_matches_oracle = chain.size() == report.max_disjoint_size;

    out.chain_members_stable = true;
    for (const auto& m : chain.matchings)
        if (std::find(report.all_stable.begin(), report.all_stable.end(), m) ==
            report.all_stable.end())
            out.chain_members_stable = false;

    out.chain_pairwise_disjoint = true;
    for (std::size_t i = 0; i < chain.matchings.size(); ++i)
        for (std::size_t j = i + 1; j < chain.matchings.size(); ++j)
            if (!edge_disjoint(chain.matchings[i], chain.matchings[j]))
                out.chain_pairwise_disjoint = false;

    out.chain_dominance_ordered = true;
    for (std::size_t i = 0; i + 1 < chain.matchings.size(); ++i)
        if (!dominates(ranks, chain.matchings[i], chain.matchings[i + 1]))
            out.chain_dominance_ordered = false;

    // A single-member chain exists exactly when the optimal matchings share
    // a pair; the member is then the woman-optimal matching and the
    // man-optimal endpoint claim is vacuous.
    out.chain_endpoints_optimal =
        chain.matchings.back() == woman_opt &&
        (chain.size() == 1 || chain.matchings.front() == man_opt);

    out.gs_lists_contain_all_stable = true;
    for (const auto& m : report.all_stable)
        for (auto [man, woman] : m.pairs())
            if (!lists.contains(man, woman))
                out.gs_lists_contain_all_stable = false;

    out.gs_lists_first_last = true;
    for (int man = 0; man < inst.n; ++man) {
        if (lists.first_woman(man) != man_opt.partner_of_man[man] ||
            lists.last_woman(man) != woman_opt.partner_of_man[man])
            out.gs_lists_first_last = false;
    }
    for (int woman = 0; woman < inst.n; ++woman) {
        if (lists.last_man(woman) != man_opt.partner_of_woman[woman] ||
            lists.first_man(woman) != woman_opt.partner_of_woman[woman])
            out.gs_lists_first_last = false;
    }

    out.fixed_pairs_in_every_stable =
        fixed_pairs(inst, man_opt, woman_opt) == report.fixed_pairs;

    std::vector<Matching> reversed(chain.matchings.rbegin(), chain.matchings.rend());
    out.transform_round_trip = teo_sethuraman_transform(inst, reversed) == chain.matchings;

    return out;
}

}  // namespace dsm
