#include "dsm/engine.hpp"

#include "dsm/gen.hpp"
#include "dsm/oracle.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace dsm;
using testutil::matching_of;
using testutil::paper3x3;

namespace {

// Algorithm composed from the public pieces: woman-proposing round for the
// final matching, then repeated reduction rounds over shared lists with the
// matched pairs deleted in between. The production solver must agree with
// this route step for step, stats included.
MatchingChain reference_disjoint(const Instance& inst, EngineStats* stats = nullptr) {
    MatchingChain chain;
    const Matching woman_opt = gale_shapley(inst, Side::women, stats);
    ReducedLists lists(inst);
    Matching x = gs_extended(lists, Side::men, stats);
    while (edge_disjoint(x, woman_opt)) {
        chain.matchings.push_back(x);
        for (int man = 0; man < inst.n; ++man) {
            const int woman = x.partner_of_man[man];
            REQUIRE(lists.first_woman(man) == woman);
            REQUIRE(lists.last_man(woman) == man);
            lists.delete_pair(man, woman, stats);
        }
        x = gs_extended(lists, Side::men, stats);
    }
    chain.matchings.push_back(woman_opt);
    return chain;
}

}  // namespace

TEST_CASE("gale_shapley reproduces the 3x3 optimal matchings") {
    const Instance inst = paper3x3();
    EngineStats stats;
    CHECK(gale_shapley(inst, Side::men, &stats) == matching_of({0, 1, 2}));
    CHECK(gale_shapley(inst, Side::women, &stats) == matching_of({2, 0, 1}));
    CHECK(stats.proposals <= 2 * 3 * 3);

    const Instance tiny = parse_instance("1\n1\n1\n");
    CHECK(gale_shapley(tiny, Side::men) == matching_of({0}));
    CHECK(gale_shapley(tiny, Side::women) == matching_of({0}));
}

TEST_CASE("gale_shapley output is stable with bounded proposals") {
    for (std::uint64_t seed : testutil::corpus_seeds(30)) {
        const int n = 2 + static_cast<int>(seed % 7);
        const Instance inst = gen_random(n, seed);
        for (Side side : {Side::men, Side::women}) {
            EngineStats stats;
            const Matching m = gale_shapley(inst, side, &stats);
            CHECK(is_stable(inst, m));
            CHECK(stats.proposals <= static_cast<std::uint64_t>(n) * n);
        }
    }
}

TEST_CASE("ReducedLists starts complete and unlinks symmetrically") {
    const Instance inst = paper3x3();
    ReducedLists lists(inst);
    CHECK(lists.size() == 3);
    CHECK(lists.surviving_women(0) == std::vector<int>{0, 1, 2});
    CHECK(lists.surviving_men(1) == std::vector<int>{2, 0, 1});
    CHECK(lists.first_woman(1) == 1);
    CHECK(lists.last_woman(1) == 0);
    CHECK(lists.next_woman(1, 2) == 0);
    CHECK(lists.next_woman(1, 0) == kNone);

    lists.delete_pair(1, 2);
    CHECK_FALSE(lists.contains(1, 2));
    CHECK(lists.contains(1, 1));
    CHECK(lists.surviving_women(1) == std::vector<int>{1, 0});
    CHECK(lists.surviving_men(2) == std::vector<int>{0, 2});
    CHECK(lists.next_woman(1, 1) == 0);
    CHECK_THROWS_AS(lists.delete_pair(1, 2), std::logic_error);

    // head and tail deletions move the ends
    lists.delete_pair(1, 1);
    CHECK(lists.first_woman(1) == 0);
    lists.delete_pair(2, 1);
    CHECK(lists.last_man(1) == 0);
}

TEST_CASE("gs_extended on the fresh 3x3 instance") {
    const Instance inst = paper3x3();
    ReducedLists lists(inst);
    EngineStats stats;
    const Matching m = gs_extended(lists, Side::men, &stats);
    CHECK(m == matching_of({0, 1, 2}));
    CHECK(stats.proposals == 3);
    CHECK(stats.deletions == 0);
    for (int w = 0; w < 3; ++w)
        CHECK(lists.last_man(w) == m.partner_of_woman[w]);
    for (int man = 0; man < 3; ++man)
        CHECK(lists.first_woman(man) == m.partner_of_man[man]);
}

TEST_CASE("gs_extended after deleting the first matching") {
    const Instance inst = paper3x3();
    ReducedLists lists(inst);
    gs_extended(lists, Side::men);
    for (int man = 0; man < 3; ++man)
        lists.delete_pair(man, man);
    const Matching m = gs_extended(lists, Side::men);
    CHECK(m == matching_of({1, 2, 0}));
}

TEST_CASE("gs_extended trivial and proposer-side symmetry") {
    const Instance tiny = parse_instance("1\n1\n1\n");
    ReducedLists lists(tiny);
    EngineStats stats;
    CHECK(gs_extended(lists, Side::men, &stats) == matching_of({0}));
    CHECK(stats.deletions == 0);
    CHECK(lists.contains(0, 0));

    const Instance inst = paper3x3();
    ReducedLists wlists(inst);
    const Matching woman_opt = matching_of({2, 0, 1});
    CHECK(gs_extended(wlists, Side::women) == woman_opt);
    for (int w = 0; w < 3; ++w)
        CHECK(wlists.first_man(w) == woman_opt.partner_of_woman[w]);
}

TEST_CASE("gs_extended raises on an exhausted list") {
    const Instance tiny = parse_instance("1\n1\n1\n");
    ReducedLists lists(tiny);
    lists.delete_pair(0, 0);
    CHECK_THROWS_AS(gs_extended(lists, Side::men), ExhaustedListError);
}

TEST_CASE("gs_lists on the 3x3 fixture keeps every pair") {
    const Instance inst = paper3x3();
    const ReducedLists lists = gs_lists(inst);
    for (int man = 0; man < 3; ++man)
        CHECK(lists.surviving_women(man).size() == 3);
}

TEST_CASE("gs_lists collapses to singletons for a unique stable matching") {
    const Instance inst = testutil::unanimous4();
    const ReducedLists lists = gs_lists(inst);
    for (int person = 0; person < 4; ++person) {
        CHECK(lists.surviving_women(person) == std::vector<int>{person});
        CHECK(lists.surviving_men(person) == std::vector<int>{person});
    }
}

TEST_CASE("gs_lists contains every stable matching, optima at the ends") {
    for (std::uint64_t seed : testutil::corpus_seeds(40)) {
        const int n = 2 + static_cast<int>(seed % 6);
        const Instance inst = gen_random(n, seed ^ 0xabcd);
        const ReducedLists lists = gs_lists(inst);
        for (const auto& m : enumerate_stable(inst))
            for (auto [man, woman] : m.pairs())
                CHECK(lists.contains(man, woman));
        const Matching man_opt = gale_shapley(inst, Side::men);
        const Matching woman_opt = gale_shapley(inst, Side::women);
        for (int man = 0; man < n; ++man) {
            CHECK(lists.first_woman(man) == man_opt.partner_of_man[man]);
            CHECK(lists.last_woman(man) == woman_opt.partner_of_man[man]);
        }
        for (int woman = 0; woman < n; ++woman) {
            CHECK(lists.last_man(woman) == man_opt.partner_of_woman[woman]);
            CHECK(lists.first_man(woman) == woman_opt.partner_of_woman[woman]);
        }
    }
}

TEST_CASE("disjoint_stable_matchings reproduces the 3x3 chain") {
    const MatchingChain chain = disjoint_stable_matchings(paper3x3());
    REQUIRE(chain.size() == 3);
    CHECK(chain.matchings[0] == matching_of({0, 1, 2}));
    CHECK(chain.matchings[1] == matching_of({1, 2, 0}));
    CHECK(chain.matchings[2] == matching_of({2, 0, 1}));
}

TEST_CASE("disjoint_stable_matchings returns one matching when the optima meet") {
    const MatchingChain chain = disjoint_stable_matchings(testutil::unanimous4());
    REQUIRE(chain.size() == 1);
    CHECK(chain.matchings[0] == matching_of({0, 1, 2, 3}));
}

TEST_CASE("single-member chains carry the woman-optimal matching") {
    // optima differ but share the fixed pair (m1, w1): the chain is just
    // the woman-optimal matching
    Instance inst;
    inst.n = 3;
    inst.men_prefs = {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
    inst.women_prefs = {{0, 1, 2}, {2, 1, 0}, {1, 2, 0}};
    const Matching man_opt = gale_shapley(inst, Side::men);
    const Matching woman_opt = gale_shapley(inst, Side::women);
    REQUIRE(man_opt != woman_opt);
    REQUIRE_FALSE(edge_disjoint(man_opt, woman_opt));
    const MatchingChain chain = disjoint_stable_matchings(inst);
    REQUIRE(chain.size() == 1);
    CHECK(chain.matchings[0] == woman_opt);
}

TEST_CASE("solver agrees with the composed public route, stats included") {
    for (std::uint64_t seed : testutil::corpus_seeds(60)) {
        const int n = 2 + static_cast<int>(seed % 7);
        const Instance inst = gen_random(n, seed ^ 0x5eed);
        EngineStats fast_stats, ref_stats;
        const MatchingChain fast = disjoint_stable_matchings(inst, &fast_stats);
        const MatchingChain ref = reference_disjoint(inst, &ref_stats);
        CHECK(fast.matchings == ref.matchings);
        CHECK(fast_stats.proposals == ref_stats.proposals);
        CHECK(fast_stats.deletions == ref_stats.deletions);
    }
    CHECK(reference_disjoint(paper3x3()).size() == 3);
}

TEST_CASE("chain invariants on seeded instances") {
    for (std::uint64_t seed : testutil::corpus_seeds(60)) {
        const int n = 2 + static_cast<int>(seed % 6);
        const Instance inst = gen_random(n, seed);
        const RankMatrix ranks = RankMatrix::of(inst);
        EngineStats stats;
        const MatchingChain chain = disjoint_stable_matchings(inst, &stats);

        for (const auto& m : chain.matchings)
            CHECK(is_stable(inst, m));
        for (int i = 0; i < chain.size(); ++i)
            for (int j = i + 1; j < chain.size(); ++j) {
                CHECK(edge_disjoint(chain.matchings[i], chain.matchings[j]));
                CHECK(dominates(ranks, chain.matchings[i], chain.matchings[j]));
            }
        CHECK(chain.matchings.back() == gale_shapley(inst, Side::women));
        if (chain.size() > 1)
            CHECK(chain.matchings.front() == gale_shapley(inst, Side::men));

        const auto bound =
            kWorkBoundFactor * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
        CHECK(stats.total() <= bound);
    }
}

TEST_CASE("work bound holds on the long-chain family") {
    for (int n : {1, 5, 32, 100}) {
        EngineStats stats;
        const MatchingChain chain = disjoint_stable_matchings(gen_cyclic(n), &stats);
        CHECK(chain.size() >= 1);
        CHECK(stats.total() <=
              kWorkBoundFactor * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
    }
}

TEST_CASE("decide_k_disjoint") {
    const Instance inst = paper3x3();
    const auto yes = decide_k_disjoint(inst, 3);
    REQUIRE(yes.has_value());
    CHECK(yes->size() == 3);
    CHECK(yes->matchings == disjoint_stable_matchings(inst).matchings);

    const auto prefix = decide_k_disjoint(inst, 2);
    REQUIRE(prefix.has_value());
    CHECK(prefix->size() == 2);
    CHECK(prefix->matchings[0] == matching_of({0, 1, 2}));
    CHECK(prefix->matchings[1] == matching_of({1, 2, 0}));

    CHECK_FALSE(decide_k_disjoint(inst, 4).has_value());
    CHECK(decide_k_disjoint(testutil::unanimous4(), 1).has_value());
    CHECK_THROWS_AS(decide_k_disjoint(inst, 0), std::invalid_argument);
}
