#pragma once

#include "dsm/core.hpp"

#include <utility>

namespace dsm {

// Enumeration bound: n! permutations checked.
inline constexpr int kMaxOracleSize = 9;
// Subset-search bound: conflict sets held in 64-bit masks.
inline constexpr int kMaxBruteforceFamily = 64;

// Ground-truth summary of an instance's stable matchings.
struct StableSetReport {
    std::vector<Matching> all_stable;                 // lexicographic by man-partner array
    int max_disjoint_size = 0;
    std::vector<Matching> max_disjoint_witness;       // pairwise disjoint, of maximum size
    std::vector<std::pair<int, int>> fixed_pairs;     // present in every stable matching
};

// Every stable matching of the instance, found by checking all n!
// perfect matchings directly against the blocking-pair definition.
// Deterministic lexicographic order. Shares no machinery with the
// deferred-acceptance engine. Throws std::invalid_argument when n > 9.
std::vector<Matching> enumerate_stable(const Instance& inst);

// Exact maximum-cardinality pairwise edge-disjoint subfamily, by
// branch-and-bound over the conflict graph (two matchings conflict iff they
// share a pair). Deterministic witness. Throws std::invalid_argument when
// the family exceeds kMaxBruteforceFamily.
std::pair<int, std::vector<Matching>> max_disjoint_bruteforce(
    const std::vector<Matching>& matchings);

// Per-man sorted-multiset transform: level i pairs each man with the i-th
// best of his partners across the inputs. Every level is again a stable
// matching; for pairwise disjoint inputs the levels are pairwise disjoint
// and form a dominance chain. Inputs must be stable (std::invalid_argument
// otherwise); the perfect-matching property of each level is checked, not
// assumed.
std::vector<Matching> teo_sethuraman_transform(const Instance& inst,
                                               const std::vector<Matching>& matchings);

// Full report: enumeration, maximum disjoint subfamily (searched in a
// dominance-consistent order so a chain witness surfaces early), and the
// pairs common to every stable matching.
StableSetReport analyze(const Instance& inst);

}  // namespace dsm
