#include "chamber_orbits/charpoly.hpp"

#include "chamber_orbits/group.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace chamber_orbits {

int essential_dimension(const Arrangement& arr) {
    return arr.ambient.restricted ? arr.ambient.m - 1 : arr.ambient.m;
}

namespace {

// Fraction-free (Bareiss) determinant of a k x k integer matrix, row-major.
// Intermediate entries are minors of the input, so 64-bit arithmetic is
// exact for the small matrices handled here.
std::int64_t det_bareiss(std::vector<std::int64_t>& M, int k) {
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (int i = 0; i < k; ++i) {
        int pivot = -1;
        for (int r = i; r < k; ++r)
            if (M[r * k + i] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) return 0;
        if (pivot != i) {
            for (int c = 0; c < k; ++c) std::swap(M[pivot * k + c], M[i * k + c]);
            sign = -sign;
        }
        for (int r = i + 1; r < k; ++r)
            for (int c = i + 1; c < k; ++c)
                M[r * k + c] =
                    (M[r * k + c] * M[i * k + i] - M[r * k + i] * M[i * k + c]) / prev;
        prev = M[i * k + i];
    }
    return sign * M[(k - 1) * k + (k - 1)];
}

struct MinorScan {
    std::int64_t max_minor = 0;        // largest |k x k minor|
    std::vector<std::int64_t> values;  // distinct nonzero |minor| values, sorted
};

// Exhaustive scan of all k x k minors, k up to min(l + 1, #rows), of the
// reduced (normal | offset) matrix.  The offset column is dropped when all
// offsets vanish (it contributes only zero minors).
MinorScan scan_minors(const Arrangement& arr) {
    const int l = essential_dimension(arr);
    std::vector<ReducedRow> rows;
    rows.reserve(arr.n());
    bool any_offset = false;
    for (int i = 0; i < arr.n(); ++i) {
        rows.push_back(reduce_hyperplane(arr.ambient, arr.hyperplane(i)));
        any_offset = any_offset || rows.back().c != 0;
    }
    const int cols = any_offset ? l + 1 : l;
    const int n = static_cast<int>(rows.size());
    const int kmax = std::min(cols, n);

    std::unordered_set<std::int64_t> seen;
    MinorScan scan;
    std::vector<std::int64_t> sub;
    std::vector<int> rsel, csel;
    for (int k = 1; k <= kmax; ++k) {
        sub.assign(static_cast<std::size_t>(k) * k, 0);
        rsel.resize(k);
        std::iota(rsel.begin(), rsel.end(), 0);
        for (;;) {
            csel.resize(k);
            std::iota(csel.begin(), csel.end(), 0);
            for (;;) {
                for (int r = 0; r < k; ++r) {
                    const ReducedRow& row = rows[rsel[r]];
                    for (int c = 0; c < k; ++c)
                        sub[r * k + c] = csel[c] < l ? row.a[csel[c]] : row.c;
                }
                const std::int64_t d = std::llabs(det_bareiss(sub, k));
                if (d != 0 && seen.insert(d).second) scan.values.push_back(d);
                scan.max_minor = std::max(scan.max_minor, d);

                int j = k - 1;
                while (j >= 0 && csel[j] == cols - k + j) --j;
                if (j < 0) break;
                ++csel[j];
                for (int t = j + 1; t < k; ++t) csel[t] = csel[t - 1] + 1;
            }
            int j = k - 1;
            while (j >= 0 && rsel[j] == n - k + j) --j;
            if (j < 0) break;
            ++rsel[j];
            for (int t = j + 1; t < k; ++t) rsel[t] = rsel[t - 1] + 1;
        }
    }
    std::sort(scan.values.begin(), scan.values.end());
    return scan;
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// A prime is safe exactly when it divides no nonzero minor: every rank and
// every consistency decision then transfers to F_p unchanged.
bool prime_is_good(std::int64_t p, const MinorScan& scan) {
    for (const std::int64_t v : scan.values)
        if (v % p == 0) return false;
    return true;
}

std::int64_t modpow(std::int64_t base, std::int64_t exp, std::int64_t p) {
    std::int64_t out = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) out = out * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return out;
}

// One worker's share of the grid scan: first coordinate in [x0_begin,
// x0_end), all-zero-avoiding count accumulated exactly.  For each prefix
// of the first l-1 coordinates, a hyperplane whose last reduced
// coefficient is nonzero forbids exactly one value of the last
// coordinate; one whose last coefficient vanishes either ignores the
// prefix or kills it entirely.
class GridWorker {
  public:
    GridWorker(const std::vector<ReducedRow>& rows, int l, std::int64_t p)
        : l_(l), p_(p) {
        const int n = static_cast<int>(rows.size());
        bcol_.assign(l, {});
        for (auto& col : bcol_) col.resize(n);
        base_.resize(n);
        for (int r = 0; r < n; ++r) {
            for (int j = 0; j < l; ++j)
                bcol_[j][r] = ((rows[r].a[j] % p) + p) % p;
            base_[r] = (((-rows[r].c) % p) + p) % p;
        }
        for (int r = 0; r < n; ++r) {
            if (bcol_[l - 1][r] == 0)
                degenerate_.push_back(r);
            else
                pivotal_.push_back(r);
        }
        inv_last_.resize(n, 0);
        for (const int r : pivotal_)
            inv_last_[r] = modpow(bcol_[l - 1][r], p - 2, p);
        stamp_.assign(p, 0);
        scratch_.assign(l, std::vector<std::int64_t>(n));
    }

    std::int64_t run(std::int64_t x0_begin, std::int64_t x0_end) {
        if (l_ == 1) return count_lines(base_);
        std::vector<std::int64_t> vals = base_;
        for (std::size_t r = 0; r < vals.size(); ++r)
            vals[r] = (vals[r] + bcol_[0][r] * x0_begin) % p_;
        std::int64_t total = 0;
        for (std::int64_t x0 = x0_begin; x0 < x0_end; ++x0) {
            total += descend(1, vals);
            step(vals, 0);
        }
        return total;
    }

  private:
    std::int64_t descend(int level, const std::vector<std::int64_t>& vals) {
        if (level == l_ - 1) return count_lines(vals);
        std::vector<std::int64_t>& cur = scratch_[level];
        cur = vals;
        std::int64_t total = 0;
        for (std::int64_t x = 0; x < p_; ++x) {
            total += descend(level + 1, cur);
            if (x + 1 < p_) step(cur, level);
        }
        return total;
    }

    void step(std::vector<std::int64_t>& vals, int level) {
        const std::vector<std::int64_t>& col = bcol_[level];
        for (std::size_t r = 0; r < vals.size(); ++r) {
            vals[r] += col[r];
            if (vals[r] >= p_) vals[r] -= p_;
        }
    }

    std::int64_t count_lines(const std::vector<std::int64_t>& vals) {
        for (const int r : degenerate_)
            if (vals[r] == 0) return 0;  // the whole line lies on hyperplane r
        ++generation_;
        std::int64_t marked = 0;
        for (const int r : pivotal_) {
            const std::int64_t x =
                vals[r] == 0 ? 0 : (p_ - vals[r]) * inv_last_[r] % p_;
            if (stamp_[x] != generation_) {
                stamp_[x] = generation_;
                ++marked;
            }
        }
        return p_ - marked;
    }

    int l_;
    std::int64_t p_;
    std::vector<std::vector<std::int64_t>> bcol_;  // bcol_[j][r]: coefficient mod p
    std::vector<std::int64_t> base_;               // -offset mod p
    std::vector<int> pivotal_;                     // last coefficient nonzero
    std::vector<int> degenerate_;                  // last coefficient zero
    std::vector<std::int64_t> inv_last_;
    std::vector<std::int64_t> stamp_;
    std::int64_t generation_ = 0;
    std::vector<std::vector<std::int64_t>> scratch_;
};

std::int64_t count_grid(const Arrangement& arr, std::int64_t p, int threads) {
    const int l = essential_dimension(arr);
    if (p < 2 || p * p >= (std::int64_t{1} << 62) / std::max(p, std::int64_t{2}))
        throw std::invalid_argument("count_grid: prime out of supported range");
    std::vector<ReducedRow> rows;
    rows.reserve(arr.n());
    for (int i = 0; i < arr.n(); ++i)
        rows.push_back(reduce_hyperplane(arr.ambient, arr.hyperplane(i)));

    if (l == 0) return rows.empty() ? 1 : 0;
    if (rows.empty()) {
        std::int64_t total = 1;
        for (int i = 0; i < l; ++i) total *= p;
        return total;
    }

    threads = std::max(1, std::min<std::int64_t>(threads, l >= 2 ? p : 1));
    if (threads == 1) {
        GridWorker worker(rows, l, p);
        return worker.run(0, l >= 2 ? p : 1);
    }

    std::vector<std::int64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t begin = p * t / threads;
        const std::int64_t end = p * (t + 1) / threads;
        pool.emplace_back([&rows, l, p, begin, end, t, &partial] {
            GridWorker worker(rows, l, p);
            partial[t] = worker.run(begin, end);
        });
    }
    for (std::thread& th : pool) th.join();
    return std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
}

std::int64_t pow_or_saturate(std::int64_t p, int l, std::int64_t cap) {
    std::int64_t out = 1;
    for (int i = 0; i < l; ++i) {
        if (out > cap / p) return cap + 1;
        out *= p;
    }
    return out;
}

}  // namespace

std::int64_t good_prime_threshold(const Arrangement& arr) {
    return scan_minors(arr).max_minor;
}

std::vector<std::int64_t> good_primes(const Arrangement& arr, int count, int skip) {
    const MinorScan scan = scan_minors(arr);
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; static_cast<int>(out.size()) < count + skip; ++p)
        if (is_prime(p) && prime_is_good(p, scan)) out.push_back(p);
    out.erase(out.begin(), out.begin() + skip);
    return out;
}

PointCountSample count_points_mod_p(const Arrangement& arr, std::int64_t p,
                                    int threads) {
    if (!is_prime(p)) throw std::invalid_argument("count_points_mod_p: p is not prime");
    const MinorScan scan = scan_minors(arr);
    if (!prime_is_good(p, scan))
        throw BadPrime("count_points_mod_p: " + std::to_string(p) +
                       " divides a minor of the coefficient matrix");
    PointCountSample sample;
    sample.prime = p;
    sample.count = count_grid(arr, p, threads);
    return sample;
}

CharpolyResult charpoly_with_details(const Arrangement& arr,
                                     const CharpolyOptions& options) {
    const int l = essential_dimension(arr);
    const MinorScan scan = scan_minors(arr);

    // The l+2 + retries smallest safe primes, in ascending order.
    std::vector<std::int64_t> good;
    for (std::int64_t p = 2;
         static_cast<int>(good.size()) < l + 2 + options.max_retries; ++p)
        if (is_prime(p) && prime_is_good(p, scan)) good.push_back(p);

    std::unordered_map<std::int64_t, std::int64_t> counted;
    const auto count_at = [&](std::int64_t p) {
        const auto it = counted.find(p);
        if (it != counted.end()) return it->second;
        if (pow_or_saturate(p, l, options.grid_budget) > options.grid_budget)
            throw BudgetExceeded("charpoly: grid " + std::to_string(p) + "^" +
                                 std::to_string(l) + " exceeds budget " +
                                 std::to_string(options.grid_budget));
        const std::int64_t n = count_grid(arr, p, options.threads);
        counted.emplace(p, n);
        return n;
    };

    std::string last_error = "no prime window attempted";
    for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
        std::vector<std::int64_t> nodes(good.begin() + attempt,
                                        good.begin() + attempt + l + 1);
        const std::int64_t validation = good[attempt + l + 1];
        try {
            std::vector<std::pair<Integer, Integer>> samples;
            samples.reserve(nodes.size());
            for (const std::int64_t p : nodes)
                samples.emplace_back(Integer(p), Integer(count_at(p)));
            IntegerPolynomial chi = lagrange_interpolate(samples);

            if (chi.degree() != l || chi.coeffs.back() != 1)
                throw ValidationFailed("charpoly: interpolant is not monic of degree " +
                                       std::to_string(l));
            for (int k = 0; k <= l; ++k) {
                const Integer& c = chi.coeffs[k];
                const bool wrong_sign = (l - k) % 2 == 0 ? c < 0 : c > 0;
                if (wrong_sign)
                    throw ValidationFailed(
                        "charpoly: coefficient signs do not alternate");
            }
            if (chi.eval(Integer(validation)) != count_at(validation))
                throw ValidationFailed("charpoly: held-out prime " +
                                       std::to_string(validation) + " disagrees");

            CharpolyResult result;
            result.chi = std::move(chi);
            result.primes_used = std::move(nodes);
            result.primes_used.push_back(validation);
            result.chambers = zaslavsky_count(result.chi);
            result.orbits = arr.coxeter_part.empty()
                                ? Integer(0)
                                : orbit_count(arr, result.chambers);
            return result;
        } catch (const NonIntegerCoefficients& e) {
            last_error = e.what();
        } catch (const ValidationFailed& e) {
            last_error = e.what();
        }
    }
    throw ValidationFailed("charpoly: all prime windows failed; last error: " +
                           last_error);
}

IntegerPolynomial characteristic_polynomial(const Arrangement& arr,
                                            const CharpolyOptions& options) {
    return charpoly_with_details(arr, options).chi;
}

Integer zaslavsky_count(const IntegerPolynomial& chi) {
    const Integer value = chi.eval(Integer(-1));
    return chi.degree() % 2 == 0 ? value : -value;
}

Integer orbit_count(const Arrangement& arr, const Integer& chamber_count) {
    const Integer order = group_order(arr.group, arr.ambient.m);
    if (chamber_count % order != 0)
        throw NonIntegral("orbit_count: " + chamber_count.str() +
                          " chambers not divisible by group order " + order.str());
    return chamber_count / order;
}

Integer orbit_count(const Arrangement& arr) {
    return orbit_count(arr, charpoly_with_details(arr).chambers);
}

std::string charpoly_report_json(Family family, int m, const CharpolyResult& r) {
    nlohmann::ordered_json j;
    j["family"] = family_name(family);
    j["m"] = m;
    j["chi"] = nlohmann::ordered_json::array();
    for (const Integer& c : r.chi.coeffs)
        j["chi"].push_back(static_cast<std::int64_t>(c));
    j["chambers"] = static_cast<std::int64_t>(r.chambers);
    j["orbits"] = static_cast<std::int64_t>(r.orbits);
    if (family == Family::restricted_all_subset)
        j["ranking_patterns"] = static_cast<std::int64_t>(r.orbits - 1);
    j["primes_used"] = r.primes_used;
    return j.dump();
}

}  // namespace chamber_orbits
