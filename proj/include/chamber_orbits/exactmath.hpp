#pragma once

// Exact arithmetic layer: arbitrary-precision integers and rationals, dense
// integer polynomials, exact Lagrange interpolation, and the small zoo of
// counting functions (Catalan numbers, Stirling numbers, falling products)
// used by the rest of the library.  No floating point appears anywhere in
// this project; every quantity is an exact integer or fraction.
//
// Integer and Rational are backed by Boost.Multiprecision (header-only).
// Rational values are kept in lowest terms with positive denominator by the
// backend, which is the invariant the rest of the code relies on.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chamber_orbits {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

Integer factorial(int n);
Integer binomial(int n, int k);

// Renders a rational as "p/q", or just "p" when the denominator is 1.
std::string rational_to_string(const Rational& q);

// Inverse of rational_to_string.  Accepts optional sign and "p/q" form.
Rational rational_from_string(const std::string& s);

// ---------------------------------------------------------------------------
// IntegerPolynomial
// ---------------------------------------------------------------------------

// Dense polynomial with arbitrary-precision integer coefficients, stored
// lowest degree first.  The zero polynomial is the empty vector; otherwise
// the leading (last) coefficient is nonzero.
struct IntegerPolynomial {
    std::vector<Integer> coeffs;

    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<Integer> c);

    static IntegerPolynomial zero();
    static IntegerPolynomial constant(Integer c0);
    static IntegerPolynomial linear(Integer c0, Integer c1);  // c0 + c1*t

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const Integer& leading() const;

    Integer eval(const Integer& t) const;
    Rational eval(const Rational& t) const;

    bool operator==(const IntegerPolynomial&) const = default;

    std::string to_string() const;  // e.g. "t^2 - 9t + 20"
};

IntegerPolynomial operator+(const IntegerPolynomial& p, const IntegerPolynomial& q);
IntegerPolynomial operator*(const IntegerPolynomial& p, const IntegerPolynomial& q);

// Thrown when a computation that must produce integers (interpolation of a
// counting polynomial) yields a non-integer coefficient.  Upstream this is
// the signal that one of the supplied values was corrupted; for mod-p point
// counts it is the designated detector for a prime that failed to preserve
// the incidence structure.
class NonIntegerCoefficients : public std::runtime_error {
  public:
    explicit NonIntegerCoefficients(const std::string& what)
        : std::runtime_error(what) {}
};

// Exact Lagrange interpolation through the given (x, y) samples, whose
// abscissas must be pairwise distinct.  The interpolant is computed over the
// rationals; if any coefficient is non-integral, NonIntegerCoefficients is
// thrown.
IntegerPolynomial lagrange_interpolate(
    const std::vector<std::pair<Integer, Integer>>& samples);

// ---------------------------------------------------------------------------
// Counting functions
// ---------------------------------------------------------------------------

// Catalan number C_m = binom(2m, m) / (m + 1).  C_0 = 1, C_3 = 5, C_4 = 14.
Integer catalan(int m);

// The product (2m)(2m-1)...(m+2): m-1 consecutive factors ending just above
// m+1.  Equal to m! * C_m; the empty product for m <= 1 is 1.
Integer falling_product(int m);

// Unsigned Stirling number of the first kind c(m, k): permutations of m
// elements with exactly k cycles.  Zero outside 1 <= k <= m (except
// c(0, 0) = 1).
Integer stirling_first_unsigned(int m, int k);

// Stirling number of the second kind S(m, k): partitions of an m-element
// set into k nonempty blocks.
Integer stirling_second(int m, int k);

}  // namespace chamber_orbits
