#include "dsm/core.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace dsm {

namespace {

// Returns an empty string if list is a permutation of 0..n-1, otherwise a
// human-readable reason (1-based indices in the message).
std::string permutation_problem(const std::vector<int>& list, int n) {
    if (static_cast<int>(list.size()) != n)
        return "expected " + std::to_string(n) + " entries, got " + std::to_string(list.size());
    std::vector<char> seen(n, 0);
    for (int v : list) {
        if (v < 0 || v >= n)
            return "entry " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n);
        if (seen[v])
            return "duplicate entry " + std::to_string(v + 1);
        seen[v] = 1;
    }
    return {};
}

}  // namespace

void validate_instance(const Instance& inst) {
    if (inst.n < 1)
        throw std::invalid_argument("instance must have n >= 1");
    if (static_cast<int>(inst.men_prefs.size()) != inst.n ||
        static_cast<int>(inst.women_prefs.size()) != inst.n)
        throw std::invalid_argument("instance has wrong number of preference lists");
    for (int i = 0; i < inst.n; ++i) {
        if (auto why = permutation_problem(inst.men_prefs[i], inst.n); !why.empty())
            throw std::invalid_argument("man " + std::to_string(i + 1) + "'s list: " + why);
        if (auto why = permutation_problem(inst.women_prefs[i], inst.n); !why.empty())
            throw std::invalid_argument("woman " + std::to_string(i + 1) + "'s list: " + why);
    }
}

std::vector<std::vector<int>> rank_table(const std::vector<std::vector<int>>& prefs) {
    const int n = static_cast<int>(prefs.size());
    std::vector<std::vector<int>> rank(n, std::vector<int>(n, kNone));
    for (int p = 0; p < n; ++p)
        for (int pos = 0; pos < static_cast<int>(prefs[p].size()); ++pos)
            rank[p][prefs[p][pos]] = pos;
    return rank;
}

RankMatrix RankMatrix::of(const Instance& inst) {
    return RankMatrix{rank_table(inst.men_prefs), rank_table(inst.women_prefs)};
}

Matching Matching::empty(int n) {
    Matching m;
    m.partner_of_man.assign(n, kNone);
    m.partner_of_woman.assign(n, kNone);
    return m;
}

Matching Matching::from_partner_of_man(const std::vector<int>& partner_of_man) {
    const int n = static_cast<int>(partner_of_man.size());
    Matching m = Matching::empty(n);
    for (int man = 0; man < n; ++man) {
        int w = partner_of_man[man];
        if (w == kNone)
            continue;
        if (w < 0 || w >= n)
            throw std::invalid_argument("partner index out of range");
        if (m.partner_of_woman[w] != kNone)
            throw std::invalid_argument("woman " + std::to_string(w + 1) + " matched twice");
        m.partner_of_man[man] = w;
        m.partner_of_woman[w] = man;
    }
    return m;
}

Matching Matching::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    Matching m = Matching::empty(n);
    for (auto [man, woman] : pairs) {
        if (man < 0 || man >= n || woman < 0 || woman >= n)
            throw std::invalid_argument("pair index out of range");
        if (m.partner_of_man[man] != kNone)
            throw std::invalid_argument("man " + std::to_string(man + 1) + " matched twice");
        if (m.partner_of_woman[woman] != kNone)
            throw std::invalid_argument("woman " + std::to_string(woman + 1) + " matched twice");
        m.partner_of_man[man] = woman;
        m.partner_of_woman[woman] = man;
    }
    return m;
}

bool Matching::is_perfect() const {
    if (partner_of_man.empty())
        return false;
    for (int w : partner_of_man)
        if (w == kNone)
            return false;
    for (int m : partner_of_woman)
        if (m == kNone)
            return false;
    return true;
}

bool Matching::mutually_consistent() const {
    const int n = size();
    if (static_cast<int>(partner_of_woman.size()) != n)
        return false;
    for (int m = 0; m < n; ++m) {
        int w = partner_of_man[m];
        if (w != kNone && (w < 0 || w >= n || partner_of_woman[w] != m))
            return false;
    }
    for (int w = 0; w < n; ++w) {
        int m = partner_of_woman[w];
        if (m != kNone && (m < 0 || m >= n || partner_of_man[m] != w))
            return false;
    }
    return true;
}

std::vector<std::pair<int, int>> Matching::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int m = 0; m < size(); ++m)
        if (partner_of_man[m] != kNone)
            out.emplace_back(m, partner_of_man[m]);
    return out;
}

bool edge_disjoint(const Matching& a, const Matching& b) {
    const int n = std::min(a.size(), b.size());
    for (int m = 0; m < n; ++m)
        if (a.partner_of_man[m] != kNone && a.partner_of_man[m] == b.partner_of_man[m])
            return false;
    return true;
}

namespace {

std::vector<int> parse_list_line(const std::string& line, int n, int line_no) {
    std::istringstream iss(line);
    std::vector<int> list;
    int value;
    while (iss >> value)
        list.push_back(value - 1);  // 1-based on disk, 0-based in memory
    if (!iss.eof()) {
        std::string junk;
        iss.clear();
        iss >> junk;
        throw ParseError(line_no, "unexpected token '" + junk + "' in preference list");
    }
    if (auto why = permutation_problem(list, n); !why.empty())
        throw ParseError(line_no, why + " in preference list");
    return list;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    // tolerate trailing blank lines, nothing else
    while (!lines.empty() && lines.back().find_first_not_of(" \t\r") == std::string::npos)
        lines.pop_back();

    if (lines.empty())
        throw ParseError(1, "empty input, expected instance size");

    Instance inst;
    {
        std::istringstream iss(lines[0]);
        std::string junk;
        if (!(iss >> inst.n) || (iss >> junk))
            throw ParseError(1, "malformed header, expected a single integer n");
        if (inst.n < 1)
            throw ParseError(1, "instance size must be at least 1");
    }

    const int expected = 1 + 2 * inst.n;
    if (static_cast<int>(lines.size()) != expected)
        throw ParseError(static_cast<int>(lines.size()),
                         "expected " + std::to_string(expected) + " lines for n = " +
                             std::to_string(inst.n) + ", got " + std::to_string(lines.size()));

    for (int i = 0; i < inst.n; ++i)
        inst.men_prefs.push_back(parse_list_line(lines[1 + i], inst.n, 2 + i));
    for (int j = 0; j < inst.n; ++j)
        inst.women_prefs.push_back(parse_list_line(lines[1 + inst.n + j], inst.n, 2 + inst.n + j));
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream iss(text);
    return parse_instance(iss);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << inst.n << '\n';
    auto write_side = [&](const std::vector<std::vector<int>>& prefs) {
        for (const auto& list : prefs) {
            for (std::size_t k = 0; k < list.size(); ++k) {
                if (k)
                    out << ' ';
                out << list[k] + 1;
            }
            out << '\n';
        }
    };
    write_side(inst.men_prefs);
    write_side(inst.women_prefs);
    return out.str();
}

std::vector<std::pair<int, int>> blocking_pairs(const Instance& inst, const Matching& m) {
    if (m.size() != inst.n || !m.mutually_consistent())
        throw std::invalid_argument("matching is inconsistent with the instance");
    if (!m.is_perfect())
        throw std::invalid_argument("matching is not perfect");

    const auto woman_rank = rank_table(inst.women_prefs);
    std::vector<std::pair<int, int>> blockers;
    for (int man = 0; man < inst.n; ++man) {
        // every woman before the current partner is strictly preferred by man
        for (int w : inst.men_prefs[man]) {
            if (w == m.partner_of_man[man])
                break;
            if (woman_rank[w][man] < woman_rank[w][m.partner_of_woman[w]])
                blockers.emplace_back(man, w);
        }
    }
    std::sort(blockers.begin(), blockers.end());
    return blockers;
}

bool is_stable(const Instance& inst, const Matching& m) {
    if (m.size() != inst.n || !m.mutually_consistent() || !m.is_perfect())
        return false;
    const auto woman_rank = rank_table(inst.women_prefs);
    for (int man = 0; man < inst.n; ++man) {
        for (int w : inst.men_prefs[man]) {
            if (w == m.partner_of_man[man])
                break;
            if (woman_rank[w][man] < woman_rank[w][m.partner_of_woman[w]])
                return false;
        }
    }
    return true;
}

bool dominates(const Instance& inst, const Matching& m1, const Matching& m2) {
    return dominates(RankMatrix::of(inst), m1, m2);
}

bool dominates(const RankMatrix& ranks, const Matching& m1, const Matching& m2) {
    const int n = static_cast<int>(ranks.man_rank.size());
    if (m1.size() != n || m2.size() != n || !m1.is_perfect() || !m2.is_perfect())
        throw std::invalid_argument("dominates requires two perfect matchings");
    for (int man = 0; man < n; ++man)
        if (ranks.man_rank[man][m1.partner_of_man[man]] >=
            ranks.man_rank[man][m2.partner_of_man[man]])
            return false;
    return true;
}

std::vector<std::pair<int, int>> fixed_pairs(const Instance& inst, const Matching& man_opt,
                                             const Matching& woman_opt) {
    std::vector<std::pair<int, int>> out;
    for (int man = 0; man < inst.n; ++man) {
        int w = man_opt.partner_of_man[man];
        if (w != kNone && woman_opt.partner_of_man[man] == w)
            out.emplace_back(man, w);
    }
    return out;
}

}  // namespace dsm
