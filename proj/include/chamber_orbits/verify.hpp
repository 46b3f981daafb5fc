#pragma once

// Property suites: every structural claim the library rests on, checked
// end to end on concrete instances.
//
// The family suite cross-validates the independent computation paths
// against each other: enumeration vs. the finite-field count, group
// transport vs. re-evaluated witnesses, a from-scratch feasibility oracle
// vs. the production enumerator, stabilizers vs. average-point fixers,
// orbit-stabilizer products, fixed-point sums, and the conjugacy
// classification of stabilizers.  The identity suite checks the counting
// identities that need no arrangement at all (Stirling convolutions, the
// stored reference table).

#include "chamber_orbits/arrangement.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chamber_orbits {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_passed(const std::vector<CheckResult>& checks);

// Arrangement-free identity checks: the mutually inverse Stirling
// convolutions, the unit-interval count sequence vs. direct enumeration,
// and the pure-arithmetic consistency of the stored reference table.
std::vector<CheckResult> verify_identities();

// The full property suite for one family instance.  Seed drives the
// random equivariance spot checks (same seed, same samples).
std::vector<CheckResult> verify_family(Family family, int m, int threads = 1,
                                       std::uint64_t seed = 0);

// Exhaustive independent chamber oracle: tests strict feasibility of all
// 2^n sign assignments by Fourier-Motzkin elimination over the rationals,
// sharing no code with the production enumerator.  Returns the sorted
// realizable sign vectors.  Exponential; intended for small n only.
std::vector<std::string> brute_force_sign_vectors(const Arrangement& arr);

}  // namespace chamber_orbits
