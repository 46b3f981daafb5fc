#pragma once

// Stored reference values for instances beyond desk-scale recomputation.
//
// For each family and size, the table records the characteristic
// polynomial, the chamber count, and the chamber-orbit count (the
// quotient by the group order).  Small instances double as golden values
// for the finite-field pipeline; the largest ones (e.g. restricted m = 9
// with 610037568000 chambers) cannot be recounted here and instead get a
// pure-arithmetic consistency check: the alternating evaluation at -1
// must reproduce the chamber count, and the quotient must divide out
// exactly.

#include "chamber_orbits/arrangement.hpp"
#include "chamber_orbits/exactmath.hpp"

#include <vector>

namespace chamber_orbits {

// Product of (t - r) over the given roots.
IntegerPolynomial poly_from_roots(const std::vector<Integer>& roots);

// Closed form for the unit-shift family: (t-m-1)(t-m-2)...(t-2m+1),
// degree m-1.
IntegerPolynomial catalan_characteristic_polynomial(int m);

struct ReferenceEntry {
    Family family;
    int m;
    IntegerPolynomial chi;
    Integer chambers;  // |Ch(C)|
    Integer quotient;  // |Ch(C)| / |W|
};

// All recorded rows, grouped by family, ascending m.
const std::vector<ReferenceEntry>& reference_table();

// The entry for a family and size, or nullptr when none is recorded.
const ReferenceEntry* reference_lookup(Family family, int m);

}  // namespace chamber_orbits
