#include "chamber_orbits/verify.hpp"

#include "chamber_orbits/chambers.hpp"
#include "chamber_orbits/charpoly.hpp"
#include "chamber_orbits/group.hpp"
#include "chamber_orbits/reference.hpp"
#include "chamber_orbits/semiorder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace chamber_orbits {

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

// ---------------------------------------------------------------------------
// Independent feasibility oracle (Fourier-Motzkin)
// ---------------------------------------------------------------------------

namespace {

// A row (a_1, ..., a_l, c) denotes the strict inequality a.x + c > 0.
using FmRow = std::vector<Integer>;

void fm_normalize(FmRow& row) {
    Integer content = 0;
    for (const Integer& v : row) content = boost::multiprecision::gcd(content, v);
    if (content > 1)
        for (Integer& v : row) v /= content;
}

// Projects the open polyhedron {x : all rows > 0} one variable at a time;
// exact for strict systems.  Returns false as soon as a contradictory
// constant row appears.
bool fm_feasible(std::vector<FmRow> rows, int l) {
    const auto is_constant = [l](const FmRow& r) {
        for (int j = 0; j < l; ++j)
            if (r[j] != 0) return false;
        return true;
    };
    for (int var = l - 1; var >= 0; --var) {
        std::vector<FmRow> pos, neg;
        std::set<FmRow> kept;
        for (FmRow& r : rows) {
            if (is_constant(r)) {
                if (r[l] <= 0) return false;
                continue;
            }
            if (r[var] > 0)
                pos.push_back(std::move(r));
            else if (r[var] < 0)
                neg.push_back(std::move(r));
            else
                kept.insert(std::move(r));
        }
        for (const FmRow& p : pos)
            for (const FmRow& n : neg) {
                FmRow comb(l + 1);
                for (int j = 0; j <= l; ++j)
                    comb[j] = p[var] * n[j] - n[var] * p[j];
                comb[var] = 0;
                fm_normalize(comb);
                if (is_constant(comb)) {
                    if (comb[l] <= 0) return false;
                } else {
                    kept.insert(std::move(comb));
                }
            }
        rows.assign(kept.begin(), kept.end());
    }
    for (const FmRow& r : rows)
        if (r[l] <= 0) return false;
    return true;
}

}  // namespace

std::vector<std::string> brute_force_sign_vectors(const Arrangement& arr) {
    const int n = arr.n();
    const int l = essential_dimension(arr);
    if (n > 20)
        throw std::invalid_argument("brute_force_sign_vectors: too many hyperplanes");
    std::vector<ReducedRow> reduced;
    for (int i = 0; i < n; ++i)
        reduced.push_back(reduce_hyperplane(arr.ambient, arr.hyperplane(i)));

    std::vector<std::string> found;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<FmRow> rows;
        std::string signs(n, '+');
        for (int i = 0; i < n; ++i) {
            const int s = mask & (1u << i) ? -1 : 1;
            if (s < 0) signs[i] = '-';
            FmRow row(l + 1);
            for (int j = 0; j < l; ++j) row[j] = s * reduced[i].a[j];
            row[l] = -s * reduced[i].c;
            rows.push_back(std::move(row));
        }
        if (fm_feasible(std::move(rows), l)) found.push_back(std::move(signs));
    }
    std::sort(found.begin(), found.end());
    return found;
}

// ---------------------------------------------------------------------------
// Check harness
// ---------------------------------------------------------------------------

namespace {

using CheckBody = std::function<std::pair<bool, std::string>()>;

void run(std::vector<CheckResult>& out, const std::string& name, const CheckBody& body) {
    try {
        auto [pass, detail] = body();
        out.push_back({name, pass, std::move(detail)});
    } catch (const std::exception& e) {
        out.push_back({name, false, std::string("exception: ") + e.what()});
    }
}

std::vector<HyperplaneAction> all_actions(const Arrangement& arr, const Group& W) {
    std::vector<HyperplaneAction> actions;
    actions.reserve(W.elements.size());
    for (const GroupElement& w : W.elements)
        actions.push_back(hyperplane_action(arr, w));
    return actions;
}

Subgroup stabilizer_from_actions(const Group& W,
                                 const std::vector<HyperplaneAction>& actions,
                                 const std::string& signs) {
    Subgroup s;
    for (std::size_t i = 0; i < W.elements.size(); ++i)
        if (act_on_signs(actions[i], signs) == signs) s.elements.push_back(W.elements[i]);
    std::sort(s.elements.begin(), s.elements.end());
    return s;
}

std::string flip_all(std::string signs) {
    for (char& c : signs) c = c == '+' ? '-' : '+';
    return signs;
}

}  // namespace

std::vector<CheckResult> verify_identities() {
    std::vector<CheckResult> out;

    run(out, "stirling-convolutions", [] {
        const StirlingReport report = verify_stirling_convolution(7);
        const std::vector<Integer> expected{1, 3, 19, 183, 2371, 38703, 763099};
        const bool pass = report.mutual_inverse && report.ch_b == expected;
        std::ostringstream detail;
        detail << "counts";
        for (const Integer& v : report.ch_b) detail << ' ' << v;
        return std::make_pair(pass, detail.str());
    });

    run(out, "unit-interval-count-enumeration", [] {
        bool pass = true;
        std::ostringstream detail;
        for (int m = 2; m <= 4; ++m) {
            const auto chambers = enumerate_chambers(make_stable_only(Family::catalan, m));
            const Integer expected = semiorder_count_sequence(m).back();
            pass = pass && Integer(chambers.size()) == expected;
            detail << "m=" << m << ": " << chambers.size() << "/" << expected << "  ";
        }
        return std::make_pair(pass, detail.str());
    });

    run(out, "reference-table-arithmetic", [] {
        bool pass = true;
        int rows = 0;
        for (const ReferenceEntry& e : reference_table()) {
            const int l =
                family_restricted(e.family) ? e.m - 1 : e.m;
            const Integer order = group_order(family_group(e.family), e.m);
            pass = pass && e.chi.degree() == l &&
                   zaslavsky_count(e.chi) == e.chambers &&
                   e.quotient * order == e.chambers;
            ++rows;
        }
        return std::make_pair(pass, std::to_string(rows) + " rows checked");
    });

    return out;
}

std::vector<CheckResult> verify_family(Family family, int m, int threads,
                                       std::uint64_t seed) {
    std::vector<CheckResult> out;

    const Arrangement arr_C = make_family(family, m);
    const Arrangement arr_B = make_stable_only(family, m);
    const Arrangement arr_A =
        assemble(arr_C.ambient, arr_C.group, arr_C.coxeter_part, {});
    const Group W = make_group(arr_C.group, m);
    const std::size_t order = W.elements.size();
    const std::size_t nA = arr_C.coxeter_part.size();

    const std::vector<Chamber> ch_C = enumerate_chambers(arr_C);
    const std::vector<Chamber> ch_A = enumerate_chambers(arr_A);
    const std::vector<Chamber> ch_B = enumerate_chambers(arr_B);

    const std::vector<HyperplaneAction> actions_C = all_actions(arr_C, W);
    const std::vector<HyperplaneAction> actions_B = all_actions(arr_B, W);

    const OrbitPartition part_C = orbit_partition(arr_C, ch_C);
    const OrbitPartition part_B = orbit_partition(arr_B, ch_B);

    run(out, "chamber-count-vs-finite-field", [&] {
        CharpolyOptions options;
        options.threads = threads;
        const CharpolyResult cp = charpoly_with_details(arr_C, options);
        const bool pass = Integer(ch_C.size()) == cp.chambers;
        return std::make_pair(pass, "enumerated " + std::to_string(ch_C.size()) +
                                        ", chi gives " + cp.chambers.str());
    });

    run(out, "coxeter-simple-transitivity", [&] {
        const std::vector<HyperplaneAction> actions_A = all_actions(arr_A, W);
        std::set<std::string> all;
        for (const Chamber& a : ch_A) all.insert(a.signs);
        std::set<std::string> images;
        for (const HyperplaneAction& act : actions_A)
            images.insert(act_on_signs(act, ch_A[0].signs));
        const bool pass = ch_A.size() == order && images == all;
        return std::make_pair(pass, std::to_string(ch_A.size()) + " chambers, |W|=" +
                                        std::to_string(order));
    });

    run(out, "free-action-on-full-chambers", [&] {
        const GroupElement id = identity_element(m);
        for (std::size_t i = 0; i < order; ++i) {
            if (W.elements[i] == id) continue;
            for (const Chamber& c : ch_C)
                if (act_on_signs(actions_C[i], c.signs) == c.signs)
                    return std::make_pair(false, "element " +
                                                     element_to_string(W.elements[i]) +
                                                     " fixes chamber " + c.signs);
        }
        return std::make_pair(true,
                              std::string("no nonidentity element fixes any chamber"));
    });

    run(out, "fiber-simple-transitivity", [&] {
        for (const Chamber& b : ch_B) {
            const Subgroup stab = stabilizer_from_actions(W, actions_B, b.signs);
            const std::vector<Chamber> fiber = fiber_B(ch_C, arr_C, b.signs);
            if (fiber.size() != stab.order())
                return std::make_pair(false, "fiber of " + b.signs + " has " +
                                                 std::to_string(fiber.size()) +
                                                 " chambers, stabilizer order " +
                                                 std::to_string(stab.order()));
            std::set<std::string> fiber_signs, images;
            for (const Chamber& c : fiber) fiber_signs.insert(c.signs);
            for (const GroupElement& w : stab.elements)
                images.insert(act_on_signs(hyperplane_action(arr_C, w), fiber[0].signs));
            if (images != fiber_signs)
                return std::make_pair(false,
                                      "stabilizer orbit of one fiber chamber is not "
                                      "the whole fiber of " + b.signs);
        }
        return std::make_pair(true, std::to_string(ch_B.size()) + " fibers checked");
    });

    run(out, "orbit-bijection", [&] {
        std::unordered_map<std::string, int> index_B;
        for (std::size_t i = 0; i < ch_B.size(); ++i) index_B.emplace(ch_B[i].signs, i);
        std::vector<int> hits(part_B.orbits.size(), 0);
        for (const int rep : part_C.representatives)
            ++hits[part_B.orbit_of[index_B.at(ch_C[rep].signs.substr(nA))]];
        const bool pass =
            part_C.orbits.size() == part_B.orbits.size() &&
            std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
        return std::make_pair(pass, std::to_string(part_C.orbits.size()) +
                                        " orbits on each side");
    });

    run(out, "counting-chain", [&] {
        if (ch_C.size() % order != 0)
            return std::make_pair(false,
                                  std::string("chamber count not divisible by |W|"));
        const std::size_t q = ch_C.size() / order;
        for (const Chamber& a : ch_A)
            if (fiber_A(ch_C, arr_C, a.signs).size() != q)
                return std::make_pair(false, "fiber over " + a.signs +
                                                 " does not have size " +
                                                 std::to_string(q));
        const bool pass = part_C.orbits.size() == q && part_B.orbits.size() == q;
        return std::make_pair(pass, "common value " + std::to_string(q));
    });

    run(out, "orbit-stabilizer-product", [&] {
        for (std::size_t k = 0; k < part_B.orbits.size(); ++k) {
            const Subgroup stab =
                stabilizer(W, arr_B, ch_B[part_B.representatives[k]].signs);
            if (part_B.orbits[k].size() * stab.order() != order)
                return std::make_pair(false, "orbit " + std::to_string(k) +
                                                 ": size " +
                                                 std::to_string(part_B.orbits[k].size()) +
                                                 " x order " +
                                                 std::to_string(stab.order()) +
                                                 " != |W|");
        }
        return std::make_pair(true, std::to_string(part_B.orbits.size()) +
                                        " orbits checked");
    });

    run(out, "restriction-equivariance", [&] {
        std::mt19937_64 rng(seed);
        const std::vector<HyperplaneAction> actions_A = all_actions(arr_A, W);
        for (int t = 0; t < 20; ++t) {
            const std::size_t wi = rng() % order;
            const Chamber& c = ch_C[rng() % ch_C.size()];
            const Chamber moved = act_on_chamber(W.elements[wi], c, arr_C);
            const std::string a_part =
                act_on_signs(actions_A[wi], c.signs.substr(0, nA));
            const std::string b_part = act_on_signs(actions_B[wi], c.signs.substr(nA));
            if (moved.signs.substr(0, nA) != a_part || moved.signs.substr(nA) != b_part)
                return std::make_pair(false,
                                      "restriction does not commute with the action "
                                      "for element " +
                                          element_to_string(W.elements[wi]));
        }
        return std::make_pair(true, std::string("20 samples"));
    });

    run(out, "average-point-stabilizer", [&] {
        for (const int rep : part_B.representatives) {
            const Chamber& b = ch_B[rep];
            const Subgroup stab = stabilizer_from_actions(W, actions_B, b.signs);
            const std::vector<Rational> z = average_point(stab, b.witness);
            if (signs_of_point(arr_B, z) != b.signs)
                return std::make_pair(false,
                                      "average point left its chamber: " + b.signs);
            Subgroup point_stab;
            for (const GroupElement& w : W.elements)
                if (act_on_point(w, z) == z) point_stab.elements.push_back(w);
            std::sort(point_stab.elements.begin(), point_stab.elements.end());
            if (!(point_stab == stab))
                return std::make_pair(false, "point stabilizer of the average differs "
                                             "from the chamber stabilizer for " +
                                                 b.signs);
        }
        return std::make_pair(true, std::to_string(part_B.representatives.size()) +
                                        " representatives checked");
    });

    if (arr_C.group == GroupType::A) {
        run(out, "young-subgroup-form", [&] {
            for (const int rep : part_B.representatives) {
                const Chamber& b = ch_B[rep];
                const Subgroup stab = stabilizer_from_actions(W, actions_B, b.signs);
                const std::vector<Rational> z = average_point(stab, b.witness);
                if (!(stabilizer_from_average(z) == stab))
                    return std::make_pair(false,
                                          "block-permutation subgroup of the average "
                                          "differs from the stabilizer for " + b.signs);
                Integer product = 1;
                for (const int part : young_composition(z)) product *= factorial(part);
                if (product != Integer(stab.order()))
                    return std::make_pair(false,
                                          "composition factorials do not multiply to "
                                          "the stabilizer order for " + b.signs);
            }
            return std::make_pair(
                true, std::string("stabilizers are block-permutation subgroups"));
        });
    }

    run(out, "fixed-point-sum", [&] {
        const Integer total = fix_sum(W, arr_B, ch_B);
        return std::make_pair(total == Integer(ch_C.size()),
                              "sum " + total.str() + ", chambers " +
                                  std::to_string(ch_C.size()));
    });

    run(out, "stabilizer-conjugacy-classes", [&] {
        const TauClasses classes = tau(W, arr_B, ch_B, part_B);
        std::size_t covered = 0;
        for (const auto& members : classes.class_orbits) covered += members.size();
        bool pass = covered == part_B.orbits.size();
        std::multiset<std::pair<std::size_t, std::size_t>> shape;  // (order, #orbits)
        for (std::size_t k = 0; k < classes.class_orbits.size(); ++k)
            shape.emplace(classes.representatives[k].order(),
                          classes.class_orbits[k].size());
        if (family == Family::catalan && m == 3)
            pass = pass && shape ==
                               std::multiset<std::pair<std::size_t, std::size_t>>{
                                   {1, 2}, {2, 2}, {6, 1}};
        if (family == Family::unrestricted_all_subset && m == 3) {
            pass = pass && shape ==
                               std::multiset<std::pair<std::size_t, std::size_t>>{
                                   {1, 2}, {2, 6}, {6, 2}};
            // Counting each centrally symmetric pair of orbits once, the
            // order-2 class contains three of the five.
            std::unordered_map<std::string, int> index_B;
            for (std::size_t i = 0; i < ch_B.size(); ++i)
                index_B.emplace(ch_B[i].signs, i);
            std::set<std::pair<int, int>> pairs_order2;
            for (std::size_t k = 0; k < part_B.orbits.size(); ++k) {
                const int mate = part_B.orbit_of[index_B.at(
                    flip_all(ch_B[part_B.representatives[k]].signs))];
                if (classes.representatives[classes.class_of[k]].order() == 2)
                    pairs_order2.emplace(std::min<int>(k, mate), std::max<int>(k, mate));
            }
            pass = pass && pairs_order2.size() == 3;
        }
        std::ostringstream detail;
        for (const auto& [ord, cnt] : shape) detail << "(order " << ord << ": " << cnt
                                                    << " orbits) ";
        return std::make_pair(pass, detail.str());
    });

    if (arr_C.n() <= 14) {
        run(out, "sign-vector-oracle", [&] {
            const std::vector<std::string> oracle = brute_force_sign_vectors(arr_C);
            std::vector<std::string> enumerated;
            for (const Chamber& c : ch_C) enumerated.push_back(c.signs);
            return std::make_pair(oracle == enumerated,
                                  std::to_string(oracle.size()) +
                                      " feasible sign vectors");
        });
    }

    if (family == Family::catalan && m <= 5) {
        run(out, "sign-vector-oracle-coxeter", [&] {
            const std::vector<std::string> oracle = brute_force_sign_vectors(arr_A);
            std::vector<std::string> enumerated;
            for (const Chamber& c : ch_A) enumerated.push_back(c.signs);
            return std::make_pair(oracle == enumerated,
                                  std::to_string(oracle.size()) +
                                      " feasible sign vectors");
        });
    }

    if (family == Family::catalan) {
        run(out, "unit-interval-orders", [&] {
            std::set<Semiorder> distinct;
            for (const Chamber& b : ch_B) {
                const Semiorder s = semiorder_of_chamber(b);
                if (!is_semiorder(s).ok)
                    return std::make_pair(false,
                                          "chamber " + b.signs +
                                              " yields a forbidden subposet");
                distinct.insert(s);
            }
            const bool pass = distinct.size() == ch_B.size() &&
                              (m > 7 || Integer(ch_B.size()) ==
                                            semiorder_count_sequence(m).back());
            return std::make_pair(pass, std::to_string(distinct.size()) +
                                            " distinct orders from " +
                                            std::to_string(ch_B.size()) + " chambers");
        });

        if (m <= 4) {
            run(out, "fixed-points-by-cycle-count", [&] {
                const std::vector<Integer> seq = semiorder_count_sequence(m);
                for (std::size_t i = 0; i < order; ++i) {
                    const int cycles = cycle_count_of_permutation(W.elements[i].perm);
                    std::int64_t fixed = 0;
                    for (const Chamber& b : ch_B)
                        if (act_on_signs(actions_B[i], b.signs) == b.signs) ++fixed;
                    if (Integer(fixed) != seq[cycles - 1])
                        return std::make_pair(false,
                                              "element " +
                                                  element_to_string(W.elements[i]) +
                                                  " fixes " + std::to_string(fixed));
                }
                return std::make_pair(true, "all " + std::to_string(order) +
                                                " elements follow the cycle-count law");
            });
        }
    }

    const bool prime_independence_case =
        (family == Family::catalan && (m == 3 || m == 4)) ||
        (family == Family::restricted_all_subset && m == 4) ||
        (family == Family::mid_hyperplane && (m == 4 || m == 5)) ||
        (family == Family::signed_all_subset && m == 3);
    if (prime_independence_case) {
        run(out, "interpolation-prime-independence", [&] {
            const int l = essential_dimension(arr_C);
            const auto interpolate_from = [&](int skip) {
                std::vector<std::pair<Integer, Integer>> samples;
                for (const std::int64_t p : good_primes(arr_C, l + 1, skip))
                    samples.emplace_back(
                        Integer(p), Integer(count_points_mod_p(arr_C, p, threads).count));
                return lagrange_interpolate(samples);
            };
            const IntegerPolynomial first = interpolate_from(0);
            const IntegerPolynomial second = interpolate_from(l + 2);
            return std::make_pair(first == second,
                                  "two disjoint prime windows agree: " +
                                      first.to_string());
        });
    }

    return out;
}

}  // namespace chamber_orbits
