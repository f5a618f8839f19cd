#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dsm {

// Sentinel for "no partner" / "no list position".
inline constexpr int kNone = -1;

// Raised by parse_instance; line is 1-based into the input text.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// A marriage instance: n men, n women, complete strict preference lists on
// both sides. Lists store 0-based indices of the opposite side, most
// preferred first, and each list is a permutation of 0..n-1.
struct Instance {
    int n = 0;
    std::vector<std::vector<int>> men_prefs;
    std::vector<std::vector<int>> women_prefs;

    bool operator==(const Instance&) const = default;
};

// Throws std::invalid_argument unless inst is well formed (n >= 1, both
// sides complete permutations of the right length).
void validate_instance(const Instance& inst);

// rank_table(prefs)[p][q] = position of q in p's list; inverse of prefs rows.
std::vector<std::vector<int>> rank_table(const std::vector<std::vector<int>>& prefs);

// Positional inverses of both preference sides, for O(1) "who is preferred"
// comparisons.
struct RankMatrix {
    std::vector<std::vector<int>> man_rank;   // man_rank[m][w] = position of w in m's list
    std::vector<std::vector<int>> woman_rank; // woman_rank[w][m] = position of m in w's list

    static RankMatrix of(const Instance& inst);
};

// A (possibly partial) matching kept as two mutually consistent partner
// arrays. Values are immutable in practice: construct via the factories and
// treat the fields as read-only.
struct Matching {
    std::vector<int> partner_of_man;
    std::vector<int> partner_of_woman;

    static Matching empty(int n);
    // Builds the woman-side array from the man-side one; entries must be
    // kNone or distinct woman indices in range.
    static Matching from_partner_of_man(const std::vector<int>& partner_of_man);
    // Validates ranges and that no man or woman appears twice.
    static Matching from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

    int size() const { return static_cast<int>(partner_of_man.size()); }
    bool contains(int man, int woman) const { return partner_of_man[man] == woman; }
    bool is_perfect() const;
    bool mutually_consistent() const;
    // Matched pairs sorted by man index.
    std::vector<std::pair<int, int>> pairs() const;

    bool operator==(const Matching&) const = default;
};

// True when the two matchings share no man-woman pair.
bool edge_disjoint(const Matching& a, const Matching& b);

// A sequence of pairwise edge-disjoint stable matchings, strictly ordered by
// dominance (front = best for every man, back = best for every woman).
struct MatchingChain {
    std::vector<Matching> matchings;

    int size() const { return static_cast<int>(matchings.size()); }
};

// Wire format (UTF-8, LF):
//   line 1:        n
//   lines 2..n+1:  man i's list, n space-separated 1-based woman indices
//   lines n+2..2n+1: woman j's list, same shape with man indices
// Indices are 1-based in files and 0-based in memory. Throws ParseError.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

// Canonical text: single spaces, LF endings. parse(serialize(x)) == x, and
// serialize(parse(t)) == t for canonically formatted t.
std::string serialize_instance(const Instance& inst);

// All pairs (m, w) not in M where both strictly prefer each other to their
// M-partners, sorted by (m, w). M must be perfect and consistent
// (std::invalid_argument otherwise). O(n^2): scans each man's list prefix.
std::vector<std::pair<int, int>> blocking_pairs(const Instance& inst, const Matching& m);

// True iff M is a perfect, consistent matching with no blocking pair.
// Short-circuits on the first blocker; never throws for size-n inputs.
bool is_stable(const Instance& inst, const Matching& m);

// Strict dominance: every man ranks his m1-partner strictly above his
// m2-partner. Irreflexive by construction. Both matchings must be perfect.
bool dominates(const Instance& inst, const Matching& m1, const Matching& m2);
bool dominates(const RankMatrix& ranks, const Matching& m1, const Matching& m2);

// Pairs present in both the man-optimal and woman-optimal stable matchings;
// such pairs belong to every stable matching. Sorted by man index.
std::vector<std::pair<int, int>> fixed_pairs(const Instance& inst, const Matching& man_opt,
                                             const Matching& woman_opt);

}  // namespace dsm
