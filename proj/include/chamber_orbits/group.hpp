#pragma once

// Symmetric-group and signed-permutation actions on points, hyperplanes,
// and chambers.
//
// An element first flips coordinate signs, then permutes positions:
//
//     (w . x)_{perm[i]} = signs[i] * x_i
//
// (signs are all +1 for the symmetric group).  The same convention drives
// the action on hyperplanes: the normal is transported like a point and
// the offset kept, then the image is re-canonicalized.  A chamber moves by
// transporting its sign vector: hyperplane index i contributes its sign,
// possibly negated when canonicalization reversed the transported normal,
// at the image index.
//
// Groups are materialized as explicit element lists (desk scale keeps
// |W| <= 2^6 * 6!); a generator-closure construction is provided as an
// independent cross-check.  Orbits of chambers use only the generators.

#include "chamber_orbits/arrangement.hpp"
#include "chamber_orbits/chambers.hpp"
#include "chamber_orbits/exactmath.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chamber_orbits {

struct GroupElement {
    std::vector<int> perm;   // coordinate i is sent to position perm[i]
    std::vector<int> signs;  // sign applied to coordinate i before it moves

    bool operator==(const GroupElement&) const = default;
    bool operator<(const GroupElement& o) const {
        if (perm != o.perm) return perm < o.perm;
        return signs < o.signs;
    }
};

GroupElement identity_element(int m);
GroupElement compose(const GroupElement& w2, const GroupElement& w1);  // w2 after w1
GroupElement inverse(const GroupElement& w);
std::vector<Rational> act_on_point(const GroupElement& w, const std::vector<Rational>& x);

// Signed one-line notation: the images of coordinates 1..m, e.g. "[2,-1,3]"
// sends e_1 to e_2, e_2 to -e_1, and fixes e_3.
std::string element_to_string(const GroupElement& w);

struct Group {
    GroupType type = GroupType::A;
    int m = 0;
    std::vector<GroupElement> elements;  // identity first, deterministic order
};

Integer group_order(GroupType type, int m);  // m!, or 2^m * m!
std::vector<GroupElement> group_generators(GroupType type, int m);

// Direct materialization: permutations in lexicographic order; for signed
// permutations each carries every sign pattern (all-plus first).
Group make_group(GroupType type, int m);

// Breadth-first closure of the generators, sorted into the same order as
// make_group; the two constructions must agree.
Group make_group_by_closure(GroupType type, int m);

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

Hyperplane act_on_hyperplane(const AmbientSpace& ambient, const GroupElement& w,
                             const Hyperplane& h);

// Where each hyperplane index goes under w, and whether canonicalization
// reversed the transported normal (flip -1): the chamber sign at index i
// moves to index image[i], multiplied by flip[i].  Parts never mix: coxeter
// indices map to coxeter indices, stable to stable.  Throws NotStable if w
// moves some hyperplane outside the arrangement.
struct HyperplaneAction {
    std::vector<int> image;
    std::vector<int> flip;
};

HyperplaneAction hyperplane_action(const Arrangement& arr, const GroupElement& w);

std::string act_on_signs(const HyperplaneAction& action, const std::string& signs);

// Transports the sign vector and the witness point, and cross-checks that
// the moved witness realizes the transported signs.
Chamber act_on_chamber(const GroupElement& w, const Chamber& ch, const Arrangement& arr);

// ---------------------------------------------------------------------------
// Orbits, stabilizers, averages
// ---------------------------------------------------------------------------

struct Subgroup {
    std::vector<GroupElement> elements;  // sorted, closed, contains identity

    std::size_t order() const { return elements.size(); }
    bool operator==(const Subgroup&) const = default;
};

struct OrbitPartition {
    std::vector<int> orbit_of;              // chamber index -> orbit index
    std::vector<std::vector<int>> orbits;   // orbit index -> sorted members
    std::vector<int> representatives;       // orbit index -> smallest member
};

// Orbit partition of a full chamber list under the arrangement's group,
// by breadth-first closure under the generators from each unvisited
// chamber, in index order.
OrbitPartition orbit_partition(const Arrangement& arr,
                               const std::vector<Chamber>& chambers);

// All w with w . signs == signs, by scanning the whole group.
Subgroup stabilizer(const Group& W, const Arrangement& arr, const std::string& signs);

// (1/|S|) sum_{w in S} w.x — an S-invariant point; lies in the chamber of x
// whenever S stabilizes that chamber (the chamber is convex).
std::vector<Rational> average_point(const Subgroup& stab, const std::vector<Rational>& x);

// Sizes of the blocks of equal coordinates of z, in decreasing coordinate
// value order (the ordered composition attached to a point of the closed
// decreasing cone).
std::vector<int> young_composition(const std::vector<Rational>& z);

// The subgroup of permutations fixing z pointwise: the product of the
// symmetric groups on the equal-coordinate blocks.  Symmetric-group side
// only (no sign changes).
Subgroup stabilizer_from_average(const std::vector<Rational>& z);

// Number of chambers whose sign vector is fixed by w.
std::int64_t fix_count(const Arrangement& arr, const std::vector<Chamber>& chambers,
                       const GroupElement& w);

// Sum of fix_count over the whole group; by the orbit-counting identity it
// equals |W| times the number of orbits.
Integer fix_sum(const Group& W, const Arrangement& arr,
                const std::vector<Chamber>& chambers);

// ---------------------------------------------------------------------------
// Conjugacy of stabilizers (the tau map)
// ---------------------------------------------------------------------------

Subgroup conjugate_subgroup(const GroupElement& w, const Subgroup& s);

// True iff w s1 w^{-1} = s2 for some w in W (element-set equality).
bool subgroups_conjugate(const Group& W, const Subgroup& s1, const Subgroup& s2);

// Partition of the orbits of a chamber list by conjugacy class of their
// stabilizer subgroups.  Classes appear in order of first member orbit.
struct TauClasses {
    std::vector<int> class_of;                   // orbit index -> class index
    std::vector<std::vector<int>> class_orbits;  // class -> member orbits
    std::vector<Subgroup> representatives;       // class -> stabilizer of first member
};

TauClasses tau(const Group& W, const Arrangement& arr,
               const std::vector<Chamber>& chambers, const OrbitPartition& orbits);

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

// {"orbits":[{"rep":...,"size":...,"stabilizer_order":...,"fiber_size":...}],
//  "tau_classes":[{"stabilizer_order":...,"orbits":[...],"representative":[...]}]}
// Orbits are those of the stable part's own chambers; rep is the sign
// vector of the representative chamber; fiber_size counts the chambers of
// the full arrangement inside the representative.  The representative
// element lists spell out one stabilizer per conjugacy class (which
// subgroup represents its class is a presentation choice).
std::string orbit_report_json(const Arrangement& full,
                              const std::vector<Chamber>& chambers_C,
                              const Arrangement& stable_only,
                              const std::vector<Chamber>& chambers_B,
                              const Group& W);

}  // namespace chamber_orbits
