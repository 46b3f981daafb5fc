#pragma once

// Hyperplane arrangements over the rationals with integer data.
//
// A hyperplane is stored as an integer normal vector a and offset c,
// describing { x : a.x = c } in R^m.  Two ambients are supported:
//
//   - the full space R^m, and
//   - the "restricted" ambient: the zero-sum subspace x_1 + ... + x_m = 0.
//     Hyperplanes of the restricted ambient are still stored with m
//     coordinates; vectors differing by a multiple of (1, ..., 1) describe
//     the same hyperplane there, so canonicalization first projects the
//     normal to zero mean.
//
// An Arrangement is a disjoint union of a "coxeter part" (the reflection
// arrangement of the acting group) and a "stable part" (a group-stable
// collection of further hyperplanes).  Sign vectors downstream index the
// coxeter part first, then the stable part, each in builder order.
//
// Builders emit hyperplanes in a deterministic lexicographic order of their
// defining index data, so arrangement layouts are reproducible run to run.

#include "chamber_orbits/exactmath.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace chamber_orbits {

enum class GroupType { A, B };  // symmetric group / signed permutations

struct AmbientSpace {
    int m = 0;               // number of coordinates
    bool restricted = false; // true: work inside x_1 + ... + x_m = 0

    bool operator==(const AmbientSpace&) const = default;
};

struct Hyperplane {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    bool operator==(const Hyperplane&) const = default;
    bool operator<(const Hyperplane& o) const {
        if (normal != o.normal) return normal < o.normal;
        return offset < o.offset;
    }
};

// Canonical form: in the restricted ambient the normal is first shifted to
// zero mean (and scaled integer again); then normal and offset are divided
// by their common gcd and negated if the first nonzero normal entry is
// negative.  Throws std::invalid_argument if the normal degenerates to zero
// (no such hyperplane exists in the ambient).
Hyperplane canonical_hyperplane(const AmbientSpace& ambient,
                                std::vector<std::int64_t> normal,
                                std::int64_t offset);

// Sign of a.x - c at an exact rational point: -1, 0, or +1.
int side_of(const Hyperplane& h, const std::vector<Rational>& x);

// A hyperplane rewritten in the coordinates actually used for counting and
// enumeration: the full ambient keeps coordinates as they are; the
// restricted ambient eliminates x_m = -(x_1 + ... + x_{m-1}).  The row is
// reduced to primitive form by a positive factor only, so the sign of
// a.x - c is preserved pointwise.
struct ReducedRow {
    std::vector<std::int64_t> a;
    std::int64_t c = 0;
};

ReducedRow reduce_hyperplane(const AmbientSpace& ambient, const Hyperplane& h);

class OverlapError : public std::runtime_error {
  public:
    explicit OverlapError(const std::string& what) : std::runtime_error(what) {}
};

class NotStable : public std::runtime_error {
  public:
    explicit NotStable(const std::string& what) : std::runtime_error(what) {}
};

struct Arrangement {
    AmbientSpace ambient;
    GroupType group = GroupType::A;
    std::vector<Hyperplane> coxeter_part;  // reflection arrangement of the group
    std::vector<Hyperplane> stable_part;   // group-stable extra hyperplanes

    int n() const {
        return static_cast<int>(coxeter_part.size() + stable_part.size());
    }
    // Index space: coxeter part first, then stable part.
    const Hyperplane& hyperplane(int i) const {
        const int na = static_cast<int>(coxeter_part.size());
        return i < na ? coxeter_part[i] : stable_part[i - na];
    }
};

// Validates that the two parts are disjoint and duplicate-free
// (OverlapError) and that each part is carried to itself by the group
// generators (NotStable), then packs them into an Arrangement.
Arrangement assemble(const AmbientSpace& ambient, GroupType group,
                     std::vector<Hyperplane> coxeter_part,
                     std::vector<Hyperplane> stable_part);

// ---------------------------------------------------------------------------
// Builders.  All emit canonical hyperplanes in deterministic order.
// ---------------------------------------------------------------------------

// x_i = x_j for i < j, in lexicographic (i, j) order: m(m-1)/2 hyperplanes.
std::vector<Hyperplane> build_braid(const AmbientSpace& ambient, int m);

// x_i = x_j + 1 for all ordered pairs i != j, lexicographic (i, j):
// m(m-1) hyperplanes in the restricted ambient.
std::vector<Hyperplane> build_semiorder(int m);

// sum_{i in I} x_i = 0 inside the zero-sum subspace, over proper nonempty
// subsets I; complementary subsets give the same hyperplane, so exactly the
// subsets containing index 1 are emitted (ascending bitmask order):
// 2^{m-1} - 1 hyperplanes.
std::vector<Hyperplane> build_restricted_all_subset(int m);

// sum_{i in I} x_i = 0 in the full space over all nonempty subsets I
// (ascending bitmask order): 2^m - 1 hyperplanes.
std::vector<Hyperplane> build_unrestricted_all_subset(int m);

// x_i + x_j = x_k + x_l over unordered disjoint pairs, in the restricted
// ambient; per 4-element subset {a<b<c<d} the three pairings are emitted in
// the order (ab|cd), (ac|bd), (ad|bc): 3 binom(m, 4) hyperplanes.
std::vector<Hyperplane> build_mid_hyperplane(int m);

// Reflection arrangement of the signed permutations: x_i = 0 for each i,
// then x_i - x_j = 0 and x_i + x_j = 0 for i < j: m^2 hyperplanes.
std::vector<Hyperplane> build_coxeter_B(int m);

// sum_i eps_i x_i = 0 for sign vectors eps in {-1, 0, +1}^m with at least
// three nonzero entries, identified up to global negation (canonical
// representative: first nonzero entry +1), in ascending odometer order:
// sum_{i=3}^{m} 2^{i-1} binom(m, i) hyperplanes.
std::vector<Hyperplane> build_signed_all_subset(int m);

// ---------------------------------------------------------------------------
// The five studied families.
// ---------------------------------------------------------------------------

enum class Family {
    catalan,
    restricted_all_subset,
    unrestricted_all_subset,
    mid_hyperplane,
    signed_all_subset,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name);  // std::invalid_argument
int family_min_m(Family f);
GroupType family_group(Family f);
bool family_restricted(Family f);

// Builds the full arrangement (coxeter part plus stable part) of a family.
Arrangement make_family(Family f, int m);

// The stable part alone, packaged as an arrangement with an empty coxeter
// part; chamber and orbit computations on the stable part use this.
Arrangement make_stable_only(Family f, int m);

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

// {"m":3,"restricted":true,"group":"A","A":[[1,-1,0,0],...],"B":[...]}
// where each hyperplane is its normal entries followed by the offset.
std::string arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const std::string& text);

}  // namespace chamber_orbits
