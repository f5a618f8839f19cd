#pragma once

#include "dsm/core.hpp"
#include "dsm/engine.hpp"
#include "dsm/oracle.hpp"

#include <string>
#include <vector>

namespace dsm {

// Cross-validation of the reduction engine against the brute-force oracle
// on one instance. Every field should hold on every instance; any false
// field is a bug in one of the two routes.
struct PropertyChecks {
    bool chain_size_matches_oracle = false;  // |chain| == oracle max-disjoint size
    bool chain_members_stable = false;       // every member appears in the enumeration
    bool chain_pairwise_disjoint = false;
    bool chain_dominance_ordered = false;    // strict, consecutive members
    bool chain_endpoints_optimal = false;    // back == woman-optimal; front == man-optimal
                                             // whenever the chain has >= 2 members
    bool gs_lists_contain_all_stable = false;
    bool gs_lists_first_last = false;        // optimal partners sit at list ends
    bool fixed_pairs_in_every_stable = false;
    bool transform_round_trip = false;       // transform of the reversed chain == chain

    bool all_hold() const {
        return chain_size_matches_oracle && chain_members_stable && chain_pairwise_disjoint &&
               chain_dominance_ordered && chain_endpoints_optimal &&
               gs_lists_contain_all_stable && gs_lists_first_last &&
               fixed_pairs_in_every_stable && transform_round_trip;
    }
};

// Names in field order, for reports.
const std::vector<std::string>& property_names();
std::vector<bool> property_values(const PropertyChecks& checks);

// Runs engine + oracle on the instance (n <= 9) and evaluates every check.
PropertyChecks check_instance(const Instance& inst);

}  // namespace dsm
