#include "chamber_orbits/exactmath.hpp"

#include <sstream>

namespace chamber_orbits {

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step: r is a running binomial
    }
    return r;
}

std::string rational_to_string(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        const Integer num(s.substr(0, slash));
        const Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
    }
}

// ---------------------------------------------------------------------------
// IntegerPolynomial
// ---------------------------------------------------------------------------

namespace {

void strip_leading_zeros(std::vector<Integer>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> c) : coeffs(std::move(c)) {
    strip_leading_zeros(coeffs);
}

IntegerPolynomial IntegerPolynomial::zero() { return IntegerPolynomial{}; }

IntegerPolynomial IntegerPolynomial::constant(Integer c0) {
    return IntegerPolynomial(std::vector<Integer>{std::move(c0)});
}

IntegerPolynomial IntegerPolynomial::linear(Integer c0, Integer c1) {
    return IntegerPolynomial(std::vector<Integer>{std::move(c0), std::move(c1)});
}

const Integer& IntegerPolynomial::leading() const {
    if (coeffs.empty()) throw std::logic_error("leading(): zero polynomial");
    return coeffs.back();
}

Integer IntegerPolynomial::eval(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Rational IntegerPolynomial::eval(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string IntegerPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Integer& c = coeffs[d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const Integer a = abs(c);
        if (a != 1 || d == 0) out << a.str();
        if (d >= 1) out << "t";
        if (d >= 2) out << "^" << d;
    }
    return out.str();
}

IntegerPolynomial operator+(const IntegerPolynomial& p, const IntegerPolynomial& q) {
    std::vector<Integer> c(std::max(p.coeffs.size(), q.coeffs.size()), Integer(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) c[i] += p.coeffs[i];
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) c[i] += q.coeffs[i];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator*(const IntegerPolynomial& p, const IntegerPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return IntegerPolynomial::zero();
    std::vector<Integer> c(p.coeffs.size() + q.coeffs.size() - 1, Integer(0));
    for (std::size_t i = 0; i < p.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.coeffs.size(); ++j)
            c[i + j] += p.coeffs[i] * q.coeffs[j];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial lagrange_interpolate(
    const std::vector<std::pair<Integer, Integer>>& samples) {
    const std::size_t n = samples.size();
    if (n == 0) return IntegerPolynomial::zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (samples[i].first == samples[j].first)
                throw std::invalid_argument(
                    "lagrange_interpolate: duplicate abscissa " + samples[i].first.str());

    // Accumulate sum_i y_i * prod_{j != i} (t - x_j) / (x_i - x_j) with
    // rational coefficients, lowest degree first.
    std::vector<Rational> acc(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (samples[i].second == 0) continue;
        std::vector<Rational> basis{Rational(1)};  // running product
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // basis *= (t - x_j)
            basis.push_back(Rational(0));
            for (std::size_t d = basis.size() - 1; d > 0; --d)
                basis[d] = basis[d - 1] - Rational(samples[j].first) * basis[d];
            basis[0] = -Rational(samples[j].first) * basis[0];
            denom *= Rational(samples[i].first - samples[j].first);
        }
        const Rational scale = Rational(samples[i].second) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) acc[d] += scale * basis[d];
    }

    std::vector<Integer> coeffs(acc.size());
    for (std::size_t d = 0; d < acc.size(); ++d) {
        if (boost::multiprecision::denominator(acc[d]) != 1)
            throw NonIntegerCoefficients(
                "lagrange_interpolate: coefficient of t^" + std::to_string(d) +
                " is " + rational_to_string(acc[d]));
        coeffs[d] = boost::multiprecision::numerator(acc[d]);
    }
    return IntegerPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Counting functions
// ---------------------------------------------------------------------------

Integer catalan(int m) {
    if (m < 0) throw std::invalid_argument("catalan: negative argument");
    return binomial(2 * m, m) / (m + 1);  // division is exact
}

Integer falling_product(int m) {
    if (m < 0) throw std::invalid_argument("falling_product: negative argument");
    Integer r = 1;
    for (int f = m + 2; f <= 2 * m; ++f) r *= f;
    return r;
}

Integer stirling_first_unsigned(int m, int k) {
    if (m < 0 || k < 0) return 0;
    if (m == 0) return k == 0 ? 1 : 0;
    if (k == 0 || k > m) return 0;
    // Row-by-row recurrence c(m, k) = c(m-1, k-1) + (m-1) c(m-1, k).
    std::vector<Integer> row{1};  // row for m = 1: c(1, 1) = 1
    for (int i = 2; i <= m; ++i) {
        std::vector<Integer> next(i, Integer(0));
        for (int j = 1; j <= i; ++j) {
            Integer v = 0;
            if (j >= 2) v += row[j - 2];
            if (j <= i - 1) v += Integer(i - 1) * row[j - 1];
            next[j - 1] = v;
        }
        row = std::move(next);
    }
    return row[k - 1];
}

Integer stirling_second(int m, int k) {
    if (m < 0 || k < 0) return 0;
    if (m == 0) return k == 0 ? 1 : 0;
    if (k == 0 || k > m) return 0;
    // Row-by-row recurrence S(m, k) = S(m-1, k-1) + k S(m-1, k).
    std::vector<Integer> row{1};  // row for m = 1
    for (int i = 2; i <= m; ++i) {
        std::vector<Integer> next(i, Integer(0));
        for (int j = 1; j <= i; ++j) {
            Integer v = 0;
            if (j >= 2) v += row[j - 2];
            if (j <= i - 1) v += Integer(j) * row[j - 1];
            next[j - 1] = v;
        }
        row = std::move(next);
    }
    return row[k - 1];
}

}  // namespace chamber_orbits
