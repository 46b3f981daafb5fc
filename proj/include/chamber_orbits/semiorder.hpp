#pragma once

// Semiorders attached to the chambers cut out by the unit-shift
// hyperplanes x_i = x_j + 1.
//
// A chamber's witness point induces the strict relation i > j when
// x_i > x_j + 1; the relations arising this way are exactly the
// semiorders: partial orders with no induced 2+2 (two disjoint arrows)
// and no induced 3+1 (a 3-chain plus an incomparable element).  Inside
// the decreasing cone x_1 > ... > x_m a chamber is pinned down instead
// by which maximal intervals [i, j] stay within unit width.  Counting
// connects to signed Stirling convolutions: the chamber counts of the
// shifted and unshifted arrangements determine each other.

#include "chamber_orbits/chambers.hpp"
#include "chamber_orbits/exactmath.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chamber_orbits {

class NotAPartialOrder : public std::runtime_error {
  public:
    explicit NotAPartialOrder(const std::string& what) : std::runtime_error(what) {}
};

class WrongBaseChamber : public std::runtime_error {
  public:
    explicit WrongBaseChamber(const std::string& what) : std::runtime_error(what) {}
};

// Strict partial order on {1, ..., m}; pairs (i, j) mean i > j, kept
// sorted, 1-based to match the usual display.
struct Semiorder {
    int m = 0;
    std::vector<std::pair<int, int>> relation;

    bool operator==(const Semiorder&) const = default;
    bool operator<(const Semiorder& o) const {
        if (m != o.m) return m < o.m;
        return relation < o.relation;
    }
};

// The relation read off a chamber's witness point: i > j when the
// witness satisfies x_i > x_j + 1.
Semiorder semiorder_of_chamber(const Chamber& b);

// Certificate of a forbidden induced subposet.  Pattern "2+2" lists
// (a, b, c, d) with a > b and c > d and no relation across; pattern
// "3+1" lists (a, b, c, d) with a > b > c and d incomparable to all.
struct SemiorderCheck {
    bool ok = false;
    std::string pattern;             // empty when ok
    std::array<int, 4> elements{};   // the offending quadruple when not ok
};

// Validates that the relation is irreflexive and transitive (throws
// NotAPartialOrder otherwise), then searches for an induced 2+2 or 3+1.
SemiorderCheck is_semiorder(const Semiorder& s);

// Maximal intervals [i, j], i < j, whose endpoints stay within unit
// width: x_i - x_j < 1 at the witness.  Requires the witness to be
// strictly decreasing (the chamber lies in x_1 > ... > x_m); throws
// WrongBaseChamber otherwise.  Intervals are pairwise incomparable
// under containment and listed by left endpoint.
struct IntervalIndex {
    std::vector<std::pair<int, int>> intervals;

    bool operator==(const IntervalIndex&) const = default;
};

IntervalIndex interval_index(const Chamber& c);

// The two convolution identities linking the chamber counts of the
// shifted arrangement (ch_b, via inclusion-exclusion with Stirling set
// numbers) and the unshifted one (ch_c = (2k)(2k-1)...(k+2)):
//
//     ch_c[m] = sum_k c(m, k) * ch_b[k]        (Stirling cycle numbers)
//     ch_b[m] = sum_k (-1)^(m-k) S(m, k) * ch_c[k]
//
// The report carries both sequences for 1 <= k <= m_max and whether the
// first identity closes the loop on the second.
struct StirlingReport {
    int m_max = 0;
    std::vector<Integer> ch_c;  // index k-1 holds the count for k coordinates
    std::vector<Integer> ch_b;
    bool mutual_inverse = false;
};

StirlingReport verify_stirling_convolution(int m_max);  // m_max <= 7

// Prefix [1, 3, 19, 183, ...] of the semiorder counts, computed by the
// inclusion-exclusion identity above.
std::vector<Integer> semiorder_count_sequence(int n);  // n <= 7

// Number of cycles of a permutation given as an image table.
int cycle_count_of_permutation(const std::vector<int>& perm);

// {"m":..., "relation":[[i,j],...]}
std::string semiorder_to_json(const Semiorder& s);

}  // namespace chamber_orbits
