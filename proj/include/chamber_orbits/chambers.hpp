#pragma once

// Exact chamber enumeration.
//
// A chamber of an arrangement is a connected component of the complement
// of its hyperplanes.  Chambers are coordinatized by sign vectors: one
// '+' or '-' per hyperplane, in arrangement index order (coxeter part
// first, then stable part).  Every stored chamber carries an exact
// rational witness point strictly off all hyperplanes; in the restricted
// ambient the witness has m coordinates summing to zero.
//
// Enumeration inserts hyperplanes one at a time.  The chambers sliced by
// the new hyperplane H are found by recursively enumerating the cells of
// the lower-dimensional arrangement that the earlier hyperplanes induce
// on H: each such cell lies in exactly one sliced chamber (chambers are
// convex), and its witness, pushed off H to either side, yields witnesses
// for the two halves.  Everything runs in integer/rational arithmetic;
// the result is sorted by sign vector and independent of any tolerance.

#include "chamber_orbits/arrangement.hpp"
#include "chamber_orbits/exactmath.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace chamber_orbits {

struct Chamber {
    std::string signs;              // '+'/'-' per hyperplane, arrangement order
    std::vector<Rational> witness;  // m ambient coordinates, strictly inside

    bool operator==(const Chamber&) const = default;
};

class OnHyperplane : public std::runtime_error {
  public:
    OnHyperplane(int index, const std::string& what)
        : std::runtime_error(what), index(index) {}
    int index;  // which hyperplane (arrangement order) contains the point
};

class InvalidSubSign : public std::runtime_error {
  public:
    explicit InvalidSubSign(const std::string& what) : std::runtime_error(what) {}
};

// All chambers, sorted by sign vector ('+' < '-' follows ASCII, so the
// order is deterministic but otherwise arbitrary).  The count satisfies
// the Zaslavsky identity checked in the charpoly module.
std::vector<Chamber> enumerate_chambers(const Arrangement& arr);

// Sign vector of an arbitrary interior point (throws OnHyperplane with the
// offending index if the point lies on some hyperplane; std::invalid_argument
// if the point has the wrong dimension or breaks the zero-sum constraint).
std::string signs_of_point(const Arrangement& arr, const std::vector<Rational>& x);

// The chamber containing x, with x itself as witness.
Chamber chamber_of_point(const Arrangement& arr, const std::vector<Rational>& x);

// Chambers of C lying inside the coxeter-part chamber described by
// a_signs (length = |coxeter part|), preserving enumeration order.
// Throws InvalidSubSign if no chamber matches (the sub-sign vector is not
// realizable).
std::vector<Chamber> fiber_A(const std::vector<Chamber>& chambers_C,
                             const Arrangement& arr, const std::string& a_signs);

// Chambers of C lying inside the stable-part chamber described by b_signs
// (length = |stable part|).
std::vector<Chamber> fiber_B(const std::vector<Chamber>& chambers_C,
                             const Arrangement& arr, const std::string& b_signs);

// JSON array [{"signs":"++-...","witness":["3/4","0","-3/4"]}, ...].
std::string chambers_to_json(const std::vector<Chamber>& chambers);

}  // namespace chamber_orbits
