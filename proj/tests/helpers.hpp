#pragma once

#include "dsm/core.hpp"
#include "dsm/gen.hpp"

#include <string>
#include <vector>

namespace testutil {

// The 3x3 instance from the committed fixture, spelled out as wire text so
// parsing itself is under test.
inline const std::string kPaper3x3Text = "3\n1 2 3\n2 3 1\n3 1 2\n2 3 1\n3 1 2\n1 2 3\n";

inline dsm::Instance paper3x3() {
    return dsm::parse_instance(kPaper3x3Text);
}

inline dsm::Matching matching_of(const std::vector<int>& partner_of_man) {
    return dsm::Matching::from_partner_of_man(partner_of_man);
}

// The three stable matchings of the 3x3 fixture, best-for-men first.
inline std::vector<dsm::Matching> paper3x3_stable_set() {
    return {matching_of({0, 1, 2}), matching_of({1, 2, 0}), matching_of({2, 0, 1})};
}

// n = 4, everyone agrees on one ranking; the unique stable matching is the
// identity.
inline dsm::Instance unanimous4() {
    dsm::Instance inst;
    inst.n = 4;
    inst.men_prefs.assign(4, {0, 1, 2, 3});
    inst.women_prefs.assign(4, {0, 1, 2, 3});
    return inst;
}

// Two independent 2x2 blocks with opposite orientation: the men of the
// first block prefer the identity, the men of the second prefer the swap.
// Gives a pair of edge-disjoint stable matchings where neither one is
// better for every man.
inline dsm::Instance opposed_blocks4() {
    dsm::Instance inst;
    inst.n = 4;
    inst.men_prefs = {{0, 1, 2, 3}, {1, 0, 2, 3}, {3, 2, 0, 1}, {2, 3, 0, 1}};
    inst.women_prefs = {{1, 0, 2, 3}, {0, 1, 2, 3}, {2, 3, 0, 1}, {3, 2, 0, 1}};
    return inst;
}

inline std::vector<std::uint64_t> corpus_seeds(int count) {
    std::vector<std::uint64_t> seeds(count);
    for (int i = 0; i < count; ++i)
        seeds[i] = static_cast<std::uint64_t>(i);
    return seeds;
}

}  // namespace testutil
