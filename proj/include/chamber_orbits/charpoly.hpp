#pragma once

// Characteristic polynomials by counting points over small prime fields.
//
// Over F_p, for p larger than every minor of the coefficient matrix, the
// number of points avoiding all hyperplanes equals chi(p).  Sampling l+1
// good primes determines the degree-l polynomial by interpolation; one
// extra held-out prime re-checks the result, which also guards the affine
// (offset) structure that the minor bound alone does not certify.  From
// chi, Zaslavsky's alternating-sum theorem gives the chamber count as
// (-1)^l chi(-1), and dividing by the group order gives the number of
// chamber orbits.

#include "chamber_orbits/arrangement.hpp"
#include "chamber_orbits/exactmath.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chamber_orbits {

class BadPrime : public std::runtime_error {
  public:
    explicit BadPrime(const std::string& what) : std::runtime_error(what) {}
};

class ValidationFailed : public std::runtime_error {
  public:
    explicit ValidationFailed(const std::string& what) : std::runtime_error(what) {}
};

class BudgetExceeded : public std::runtime_error {
  public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class NonIntegral : public std::runtime_error {
  public:
    explicit NonIntegral(const std::string& what) : std::runtime_error(what) {}
};

// Dimension of the space the point counting runs in: m for the full
// ambient space, m-1 on the zero-sum subspace (the last coordinate is
// eliminated via x_m = -(x_1 + ... + x_{m-1})).
int essential_dimension(const Arrangement& arr);

// Largest absolute value of any k x k minor, k <= essential dimension, of
// the matrix of reduced hyperplane normals.  Any prime beyond this bound
// preserves the rank of every subset of normals mod p, so the linear
// intersection pattern survives reduction; consistency of the offsets is
// covered separately by the held-out validation prime.
std::int64_t good_prime_threshold(const Arrangement& arr);

// The `count` smallest safe primes for this arrangement, after skipping
// the first `skip` of them.
std::vector<std::int64_t> good_primes(const Arrangement& arr, int count, int skip = 0);

struct PointCountSample {
    std::int64_t prime = 0;
    std::int64_t count = 0;  // points of the reduced grid on no hyperplane
};

// Exact count of points of F_p^l lying on none of the reduced hyperplanes.
// Partitioned by the first coordinate across `threads` workers with a
// deterministic sum.  Throws BadPrime unless p exceeds the good-prime
// threshold.
PointCountSample count_points_mod_p(const Arrangement& arr, std::int64_t p,
                                    int threads = 1);

struct CharpolyOptions {
    int threads = 1;
    std::int64_t grid_budget = 200'000'000;  // refuse primes with p^l beyond this
    int max_retries = 4;                     // shifted prime windows to try
};

struct CharpolyResult {
    IntegerPolynomial chi;                  // monic, degree l
    std::vector<std::int64_t> primes_used;  // interpolation nodes, then validation prime
    Integer chambers = 0;                   // (-1)^l chi(-1)
    Integer orbits = 0;                     // chambers / |W|
};

// Counts points at the l+1 smallest good primes, interpolates, and
// validates against one further held-out prime.  On a non-integral
// interpolation or a validation mismatch the prime window shifts upward
// and the computation retries; persistent failure raises ValidationFailed.
// Throws BudgetExceeded if the grid for a needed prime would exceed the
// budget.
CharpolyResult charpoly_with_details(const Arrangement& arr,
                                     const CharpolyOptions& options = {});

IntegerPolynomial characteristic_polynomial(const Arrangement& arr,
                                            const CharpolyOptions& options = {});

// Number of chambers of an essential l-dimensional arrangement.
Integer zaslavsky_count(const IntegerPolynomial& chi);

// Number of W-orbits of chambers: the chamber count divided by the group
// order.  Throws NonIntegral when the division does not come out even
// (which signals an arrangement/group mismatch).
Integer orbit_count(const Arrangement& arr, const Integer& chamber_count);
Integer orbit_count(const Arrangement& arr);  // computes the count itself

// {"family":..., "m":..., "chi":[c_0,...,c_l], "chambers":..., "orbits":...,
//  "primes_used":[...]}
std::string charpoly_report_json(Family family, int m, const CharpolyResult& r);

}  // namespace chamber_orbits
