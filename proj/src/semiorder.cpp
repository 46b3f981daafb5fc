#include "chamber_orbits/semiorder.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace chamber_orbits {

Semiorder semiorder_of_chamber(const Chamber& b) {
    Semiorder s;
    s.m = static_cast<int>(b.witness.size());
    for (int i = 0; i < s.m; ++i)
        for (int j = 0; j < s.m; ++j)
            if (i != j && b.witness[i] > b.witness[j] + 1)
                s.relation.emplace_back(i + 1, j + 1);
    std::sort(s.relation.begin(), s.relation.end());
    return s;
}

SemiorderCheck is_semiorder(const Semiorder& s) {
    std::vector<std::vector<bool>> above(s.m + 1, std::vector<bool>(s.m + 1, false));
    for (const auto& [i, j] : s.relation) {
        if (i < 1 || i > s.m || j < 1 || j > s.m)
            throw NotAPartialOrder("relation mentions an element outside 1..m");
        if (i == j) throw NotAPartialOrder("relation is not irreflexive");
        above[i][j] = true;
    }
    for (int a = 1; a <= s.m; ++a)
        for (int b = 1; b <= s.m; ++b)
            if (above[a][b])
                for (int c = 1; c <= s.m; ++c)
                    if (above[b][c] && !above[a][c])
                        throw NotAPartialOrder(
                            "relation is not transitive: " + std::to_string(a) + ">" +
                            std::to_string(b) + ">" + std::to_string(c) +
                            " without " + std::to_string(a) + ">" + std::to_string(c));

    const auto incomparable = [&](int a, int b) { return !above[a][b] && !above[b][a]; };

    SemiorderCheck check;
    // Two disjoint arrows with nothing across.
    for (int a = 1; a <= s.m; ++a)
        for (int b = 1; b <= s.m; ++b) {
            if (!above[a][b]) continue;
            for (int c = a + 1; c <= s.m; ++c)
                for (int d = 1; d <= s.m; ++d) {
                    if (!above[c][d] || c == b || d == a || d == b) continue;
                    if (incomparable(a, c) && incomparable(a, d) &&
                        incomparable(b, c) && incomparable(b, d)) {
                        check.pattern = "2+2";
                        check.elements = {a, b, c, d};
                        return check;
                    }
                }
        }
    // A 3-chain plus an element incomparable to all of it.
    for (int a = 1; a <= s.m; ++a)
        for (int b = 1; b <= s.m; ++b) {
            if (!above[a][b]) continue;
            for (int c = 1; c <= s.m; ++c) {
                if (!above[b][c]) continue;
                for (int d = 1; d <= s.m; ++d) {
                    if (d == a || d == b || d == c) continue;
                    if (incomparable(d, a) && incomparable(d, b) && incomparable(d, c)) {
                        check.pattern = "3+1";
                        check.elements = {a, b, c, d};
                        return check;
                    }
                }
            }
        }
    check.ok = true;
    return check;
}

IntervalIndex interval_index(const Chamber& c) {
    const int m = static_cast<int>(c.witness.size());
    for (int i = 0; i + 1 < m; ++i)
        if (!(c.witness[i] > c.witness[i + 1]))
            throw WrongBaseChamber(
                "interval_index: witness is not strictly decreasing at position " +
                std::to_string(i + 1));

    // With decreasing coordinates, the widest unit interval starting at i
    // only shrinks as i moves left, so [i, j_max(i)] is maximal exactly
    // when j_max jumped past j_max(i-1).
    IntervalIndex index;
    int prev_reach = 0;
    for (int i = 0; i < m; ++i) {
        int j = i;
        while (j + 1 < m && c.witness[i] - c.witness[j + 1] < 1) ++j;
        if (j > i && j + 1 > prev_reach) index.intervals.emplace_back(i + 1, j + 1);
        prev_reach = std::max(prev_reach, j + 1);
    }
    return index;
}

StirlingReport verify_stirling_convolution(int m_max) {
    if (m_max < 1 || m_max > 7)
        throw std::invalid_argument("verify_stirling_convolution: m_max must be 1..7");
    StirlingReport report;
    report.m_max = m_max;
    for (int k = 1; k <= m_max; ++k) report.ch_c.push_back(falling_product(k));
    for (int m = 1; m <= m_max; ++m) {
        Integer b = 0;
        for (int k = 1; k <= m; ++k) {
            const Integer term = stirling_second(m, k) * report.ch_c[k - 1];
            b += (m - k) % 2 == 0 ? term : -term;
        }
        report.ch_b.push_back(b);
    }
    report.mutual_inverse = true;
    for (int m = 1; m <= m_max; ++m) {
        Integer c = 0;
        for (int k = 1; k <= m; ++k)
            c += stirling_first_unsigned(m, k) * report.ch_b[k - 1];
        if (c != report.ch_c[m - 1]) report.mutual_inverse = false;
    }
    return report;
}

std::vector<Integer> semiorder_count_sequence(int n) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("semiorder_count_sequence: n must be 1..7");
    return verify_stirling_convolution(n).ch_b;
}

int cycle_count_of_permutation(const std::vector<int>& perm) {
    const int m = static_cast<int>(perm.size());
    std::vector<bool> seen(m, false);
    int cycles = 0;
    for (int i = 0; i < m; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return cycles;
}

std::string semiorder_to_json(const Semiorder& s) {
    nlohmann::ordered_json j;
    j["m"] = s.m;
    j["relation"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : s.relation)
        j["relation"].push_back(nlohmann::ordered_json::array({a, b}));
    return j.dump();
}

}  // namespace chamber_orbits
