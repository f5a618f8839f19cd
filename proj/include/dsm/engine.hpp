#pragma once

#include "dsm/core.hpp"

#include <cstdint>
#include <optional>

namespace dsm {

enum class Side { men, women };

// Instrumentation shared by all engine entry points. One full
// disjoint_stable_matchings run performs at most kWorkBoundFactor * n^2
// proposals-plus-deletions: the woman-proposing pass makes <= n^2 proposals,
// and across all reduction passes each of the n^2 pairs is proposed along at
// most once and deleted at most once.
struct EngineStats {
    std::uint64_t proposals = 0;
    std::uint64_t deletions = 0;

    std::uint64_t total() const { return proposals + deletions; }
};

inline constexpr std::uint64_t kWorkBoundFactor = 3;

// Raised when a proposer runs out of list entries, which cannot happen on
// lists reachable from a valid reduction sequence; it signals a caller bug.
class ExhaustedListError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Largest instance the reduced lists accept; link cells are 16-bit.
inline constexpr int kMaxReducedListSize = 65534;

// Preference lists with O(1) symmetric pair deletion. Each person's
// surviving entries form a doubly-linked subsequence of their original
// list. Links are keyed by partner id, so locate-and-unlink needs no rank
// lookup, and each side's links for one person sit in one contiguous row.
// A pair is alive on both sides or on neither. Holds a pointer to the
// instance: keep it alive.
class ReducedLists {
public:
    explicit ReducedLists(const Instance& inst);

    int size() const { return n_; }
    const Instance& instance() const { return *inst_; }

    bool contains(int man, int woman) const {
        return m_links_[cell(man, woman)].prev != kDead;
    }

    // All return kNone when nothing survives.
    int first_woman(int man) const { return to_int(m_head_[man]); }
    int last_woman(int man) const { return to_int(m_tail_[man]); }
    int first_man(int woman) const { return to_int(w_head_[woman]); }
    int last_man(int woman) const { return to_int(w_tail_[woman]); }

    // Successor on the surviving list; the given entry must itself survive.
    int next_woman(int man, int woman) const { return to_int(m_links_[cell(man, woman)].next); }
    int next_man(int woman, int man) const { return to_int(w_links_[cell(woman, man)].next); }

    // Surviving entries in original preference order.
    std::vector<int> surviving_women(int man) const;
    std::vector<int> surviving_men(int woman) const;

    // Unlinks (man, woman) from both sides. Throws std::logic_error if the
    // pair was already deleted.
    void delete_pair(int man, int woman, EngineStats* stats = nullptr);

private:
    using Id = std::uint16_t;
    static constexpr Id kNil = 0xFFFF;   // end of list
    static constexpr Id kDead = 0xFFFE;  // prev-slot marker for deleted entries

    struct Link {
        Id next;
        Id prev;
    };

    static int to_int(Id id) { return id == kNil ? kNone : static_cast<int>(id); }
    std::size_t cell(int person, int other) const {
        return static_cast<std::size_t>(person) * n_ + other;
    }

    friend Matching gs_extended(ReducedLists&, Side, EngineStats*);

    const Instance* inst_;
    int n_;
    std::vector<Link> m_links_;  // [man * n + woman]
    std::vector<Link> w_links_;  // [woman * n + man]
    std::vector<Id> m_head_, m_tail_, w_head_, w_tail_;
};

// Classic deferred acceptance. Returns the proposer-optimal stable matching;
// the instance is not modified. At most n^2 proposals.
Matching gale_shapley(const Instance& inst, Side proposers, EngineStats* stats = nullptr);

// Deferred acceptance with list reduction: on each engagement (p, r), every
// pair that the engagement rules out is deleted from both sides. Mutates
// lists in place and may be called repeatedly on progressively reduced
// lists. On return each proposer is matched to the first entry of their
// surviving list and each proposee to the last entry of theirs.
Matching gs_extended(ReducedLists& lists, Side proposers, EngineStats* stats = nullptr);

// Intersection of the two one-sided reductions: runs the man-proposing pass
// and then the woman-proposing pass on the same lists. The result contains
// every stable pair of the instance; the man-optimal partner is first on
// each man's list and last on each woman's, and symmetrically for the
// woman-optimal matching.
ReducedLists gs_lists(const Instance& inst, EngineStats* stats = nullptr);

// A maximum-size collection of pairwise edge-disjoint stable matchings,
// returned as a strictly dominance-ordered chain running from the
// man-optimal to the woman-optimal matching. Linear in the input size
// (O(n^2) work in total).
MatchingChain disjoint_stable_matchings(const Instance& inst, EngineStats* stats = nullptr);

// Decision form: the first k chain members when at least k pairwise disjoint
// stable matchings exist, std::nullopt otherwise. k must be >= 1.
std::optional<MatchingChain> decide_k_disjoint(const Instance& inst, int k);

}  // namespace dsm
