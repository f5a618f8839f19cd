#include "dsm/engine.hpp"

#include <cassert>

namespace dsm {

ReducedLists::ReducedLists(const Instance& inst) : inst_(&inst), n_(inst.n) {
    if (n_ > kMaxReducedListSize)
        throw std::invalid_argument("ReducedLists: instance larger than supported (n > 65534)");

    const std::size_t nn = static_cast<std::size_t>(n_) * n_;
    m_links_.resize(nn);
    w_links_.resize(nn);

    auto link_side = [this](const std::vector<std::vector<int>>& prefs, std::vector<Link>& links) {
        for (int person = 0; person < n_; ++person) {
            const auto& list = prefs[person];
            const std::size_t base = static_cast<std::size_t>(person) * n_;
            for (int pos = 0; pos < n_; ++pos) {
                Link& slot = links[base + list[pos]];
                slot.next = (pos + 1 < n_) ? static_cast<Id>(list[pos + 1]) : kNil;
                slot.prev = (pos > 0) ? static_cast<Id>(list[pos - 1]) : kNil;
            }
        }
    };
    link_side(inst.men_prefs, m_links_);
    link_side(inst.women_prefs, w_links_);

    m_head_.resize(n_);
    m_tail_.resize(n_);
    w_head_.resize(n_);
    w_tail_.resize(n_);
    for (int person = 0; person < n_; ++person) {
        m_head_[person] = static_cast<Id>(inst.men_prefs[person].front());
        m_tail_[person] = static_cast<Id>(inst.men_prefs[person].back());
        w_head_[person] = static_cast<Id>(inst.women_prefs[person].front());
        w_tail_[person] = static_cast<Id>(inst.women_prefs[person].back());
    }
}

std::vector<int> ReducedLists::surviving_women(int man) const {
    std::vector<int> out;
    for (Id w = m_head_[man]; w != kNil; w = m_links_[cell(man, w)].next)
        out.push_back(w);
    return out;
}

std::vector<int> ReducedLists::surviving_men(int woman) const {
    std::vector<int> out;
    for (Id m = w_head_[woman]; m != kNil; m = w_links_[cell(woman, m)].next)
        out.push_back(m);
    return out;
}

void ReducedLists::delete_pair(int man, int woman, EngineStats* stats) {
    Link& m_slot = m_links_[cell(man, woman)];
    if (m_slot.prev == kDead)
        throw std::logic_error("delete_pair: pair was already deleted");
    Link& w_slot = w_links_[cell(woman, man)];

    if (m_slot.prev == kNil)
        m_head_[man] = m_slot.next;
    else
        m_links_[cell(man, m_slot.prev)].next = m_slot.next;
    if (m_slot.next == kNil)
        m_tail_[man] = m_slot.prev;
    else
        m_links_[cell(man, m_slot.next)].prev = m_slot.prev;

    if (w_slot.prev == kNil)
        w_head_[woman] = w_slot.next;
    else
        w_links_[cell(woman, w_slot.prev)].next = w_slot.next;
    if (w_slot.next == kNil)
        w_tail_[woman] = w_slot.prev;
    else
        w_links_[cell(woman, w_slot.next)].prev = w_slot.prev;

    m_slot.prev = kDead;
    w_slot.prev = kDead;
    if (stats)
        ++stats->deletions;
}

namespace {

std::vector<int> all_free(int n) {
    std::vector<int> stack(n);
    // person 0 proposes first; any order yields the same matching
    for (int i = 0; i < n; ++i)
        stack[i] = n - 1 - i;
    return stack;
}

Matching matching_from_engagements(const std::vector<int>& proposer_of_receiver,
                                   Side proposers) {
    const int n = static_cast<int>(proposer_of_receiver.size());
    Matching out = Matching::empty(n);
    auto& receiver_side = (proposers == Side::men) ? out.partner_of_woman : out.partner_of_man;
    auto& proposer_side = (proposers == Side::men) ? out.partner_of_man : out.partner_of_woman;
    receiver_side = proposer_of_receiver;
    for (int r = 0; r < n; ++r)
        if (proposer_of_receiver[r] != kNone)
            proposer_side[proposer_of_receiver[r]] = r;
    return out;
}

}  // namespace

namespace {

// Worklist of free proposers, one never-backtracking cursor per proposer,
// and the current engagements. A proposer sits in the worklist iff
// unengaged.
struct ProposalState {
    std::vector<int> free_stack;
    std::vector<int> next_choice;
    std::vector<int> engaged;  // receiver -> proposer

    explicit ProposalState(int n)
        : free_stack(all_free(n)), next_choice(n, 0), engaged(n, kNone) {}
};

}  // namespace

Matching gale_shapley(const Instance& inst, Side proposers, EngineStats* stats) {
    const int n = inst.n;
    const auto& proposer_prefs = (proposers == Side::men) ? inst.men_prefs : inst.women_prefs;
    const auto receiver_rank =
        rank_table((proposers == Side::men) ? inst.women_prefs : inst.men_prefs);

    ProposalState state(n);
    while (!state.free_stack.empty()) {
        const int p = state.free_stack.back();
        state.free_stack.pop_back();
        assert(state.next_choice[p] < n);  // a complete instance never rejects everyone
        const int r = proposer_prefs[p][state.next_choice[p]++];
        if (stats)
            ++stats->proposals;

        int& holder = state.engaged[r];
        if (holder == kNone) {
            holder = p;
        } else if (receiver_rank[r][p] < receiver_rank[r][holder]) {
            state.free_stack.push_back(holder);
            holder = p;
        } else {
            state.free_stack.push_back(p);  // rejected, tries the next entry
        }
    }
    return matching_from_engagements(state.engaged, proposers);
}

Matching gs_extended(ReducedLists& lists, Side proposers, EngineStats* stats) {
    using Id = ReducedLists::Id;
    constexpr Id kNil = ReducedLists::kNil;
    const int n = lists.n_;
    const bool men = proposers == Side::men;
    auto& own_links = men ? lists.m_links_ : lists.w_links_;
    auto& other_links = men ? lists.w_links_ : lists.m_links_;
    auto& own_head = men ? lists.m_head_ : lists.w_head_;

    std::vector<int> engaged(n, kNone);  // receiver -> proposer
    std::vector<int> free_stack = all_free(n);
    std::vector<Id> doomed;  // successors collected per engagement
    doomed.reserve(n);

    while (!free_stack.empty()) {
        const int p = free_stack.back();
        free_stack.pop_back();
        if (!free_stack.empty()) {
            // overlap the next proposer's receiver-row fetch with this step
            const int ahead = free_stack.back();
            const Id target = own_head[ahead];
            if (target != kNil)
                __builtin_prefetch(&other_links[lists.cell(target, ahead)]);
        }

        const Id r = own_head[p];
        if (r == kNil)
            throw ExhaustedListError("gs_extended: a proposer ran out of list entries");
        if (stats)
            ++stats->proposals;

        // r always accepts: any surviving proposer outranks her current
        // partner, whose own proposal already truncated her list behind him.
        if (engaged[r] != kNone)
            free_stack.push_back(engaged[r]);
        engaged[r] = p;

        // Drop everyone r likes less than p; that severs (old partner, r)
        // too, so the freed proposer moves on from a fresh head. The walk
        // stays inside r's row; the unlinks hit one scattered row each, so
        // collect first and prefetch those rows ahead of the unlink pass.
        doomed.clear();
        for (Id q = other_links[lists.cell(r, p)].next; q != kNil;
             q = other_links[lists.cell(r, q)].next)
            doomed.push_back(q);
        for (std::size_t i = 0; i < doomed.size(); ++i) {
            if (i + 8 < doomed.size())
                __builtin_prefetch(&own_links[lists.cell(doomed[i + 8], r)]);
            if (men)
                lists.delete_pair(doomed[i], r, stats);
            else
                lists.delete_pair(r, doomed[i], stats);
        }
    }
    return matching_from_engagements(engaged, proposers);
}

ReducedLists gs_lists(const Instance& inst, EngineStats* stats) {
    ReducedLists lists(inst);
    gs_extended(lists, Side::men, stats);
    gs_extended(lists, Side::women, stats);
    return lists;
}

namespace {

// Man-oriented reduction state in the interval form: under man-proposing
// rounds plus matched-pair removal, a woman's list only ever loses a suffix
// and a man's list only ever loses its head, so one cut position per woman
// and one lazy cursor per man represent the surviving lists exactly. A pair
// (m, w) survives iff w's cut has not passed m. Deleting a woman's suffix is
// a single cut move, which is what keeps the whole run linear in the number
// of preference entries. Semantically identical to driving gs_extended over
// a shared ReducedLists, but with one rank probe per step and no pointer
// maintenance.
class IntervalReduction {
public:
    explicit IntervalReduction(const Instance& inst) : n_(inst.n) {
        const std::size_t nn = static_cast<std::size_t>(n_) * n_;
        men_prefs_.resize(nn);
        her_rank_of_.resize(nn);
        for (int m = 0; m < n_; ++m) {
            const std::size_t base = static_cast<std::size_t>(m) * n_;
            for (int pos = 0; pos < n_; ++pos)
                men_prefs_[base + pos] = static_cast<std::uint16_t>(inst.men_prefs[m][pos]);
        }
        // man-major rank layout: every probe below is keyed by the proposing
        // man, so his whole row of ranks stays hot while he is active
        for (int w = 0; w < n_; ++w)
            for (int pos = 0; pos < n_; ++pos)
                her_rank_of_[cell(inst.women_prefs[w][pos], w)] =
                    static_cast<std::uint16_t>(pos);
        head_.assign(n_, 0);
        cut_.assign(n_, n_ - 1);
        engaged_.assign(n_, kNone);
        stack_.reserve(n_);
    }

    // One man-proposing deferred-acceptance round over the surviving lists.
    Matching run_round(EngineStats* stats) {
        stack_.clear();
        for (int m = n_ - 1; m >= 0; --m)
            stack_.push_back(m);
        std::fill(engaged_.begin(), engaged_.end(), kNone);

        while (!stack_.empty()) {
            const int p = stack_.back();
            stack_.pop_back();
            if (!stack_.empty()) {
                // overlap the next proposer's rank probe with this step
                const int p2 = stack_.back();
                if (head_[p2] < n_) {
                    const int w2 = men_prefs_[cell(p2, head_[p2])];
                    __builtin_prefetch(&her_rank_of_[cell(p2, w2)]);
                }
            }

            const int w = first_surviving(p);
            if (stats)
                ++stats->proposals;

            if (engaged_[w] != kNone)
                stack_.push_back(engaged_[w]);
            engaged_[w] = p;

            // w discards everyone she likes less than p; the discarded
            // suffix is fully alive, so its length is the deletion count
            const int new_cut = her_rank_of_[cell(p, w)];
            if (stats)
                stats->deletions += static_cast<std::uint64_t>(cut_[w] - new_cut);
            cut_[w] = new_cut;
        }

        std::vector<int> partner_of_man(n_);
        for (int w = 0; w < n_; ++w) {
            assert(engaged_[w] != kNone);  // complete instances end all-engaged
            partner_of_man[engaged_[w]] = w;
        }
        Matching out;
        out.partner_of_man = std::move(partner_of_man);
        out.partner_of_woman = engaged_;
        return out;
    }

    // Removes every pair of the round's matching (each man's list head, the
    // last survivor of each woman's list).
    void drop_matched_pairs(const Matching& matched, EngineStats* stats) {
        for (int m = 0; m < n_; ++m) {
            const int w = matched.partner_of_man[m];
            assert(men_prefs_[cell(m, head_[m])] == w);
            assert(her_rank_of_[cell(m, w)] == cut_[w]);
            ++head_[m];
            --cut_[w];
            if (stats)
                ++stats->deletions;
        }
    }

private:
    std::size_t cell(int person, int other) const {
        return static_cast<std::size_t>(person) * n_ + other;
    }

    int first_surviving(int man) {
        const std::size_t base = static_cast<std::size_t>(man) * n_;
        for (int pos = head_[man]; pos < n_; ++pos) {
            const int w = men_prefs_[base + pos];
            if (her_rank_of_[cell(man, w)] <= cut_[w]) {
                head_[man] = pos;
                return w;
            }
        }
        throw ExhaustedListError("disjoint_stable_matchings: a proposer ran out of entries");
    }

    int n_;
    std::vector<std::uint16_t> men_prefs_;    // [m * n + pos] -> woman
    std::vector<std::uint16_t> her_rank_of_;  // [m * n + w] -> position of m in w's list
    std::vector<int> head_;     // per man: first possibly-alive position
    std::vector<int> cut_;      // per woman: last surviving position, -1 = empty
    std::vector<int> engaged_;  // per woman: current proposer
    std::vector<int> stack_;
};

}  // namespace

MatchingChain disjoint_stable_matchings(const Instance& inst, EngineStats* stats) {
    if (inst.n > kMaxReducedListSize)
        throw std::invalid_argument("disjoint_stable_matchings: instance too large (n > 65534)");
    MatchingChain chain;

    const Matching woman_optimal = gale_shapley(inst, Side::women, stats);
    // A complete instance always has a stable matching; an empty result is
    // unreachable here and kept as an assertion only.
    assert(woman_optimal.is_perfect());

    IntervalReduction lists(inst);
    Matching current = lists.run_round(stats);

    while (edge_disjoint(current, woman_optimal)) {
        chain.matchings.push_back(std::move(current));
        lists.drop_matched_pairs(chain.matchings.back(), stats);
        current = lists.run_round(stats);
    }

    chain.matchings.push_back(woman_optimal);
    return chain;
}

std::optional<MatchingChain> decide_k_disjoint(const Instance& inst, int k) {
    if (k < 1)
        throw std::invalid_argument("decide_k_disjoint: k must be >= 1");
    MatchingChain chain = disjoint_stable_matchings(inst);
    if (chain.size() < k)
        return std::nullopt;
    chain.matchings.resize(k);
    return chain;
}

}  // namespace dsm
