#include "chamber_orbits/chambers.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>

namespace chamber_orbits {

namespace {

// Internal row a.x = c with arbitrary-precision entries (induced rows grow
// products of the original int64 data).
struct Row {
    std::vector<Integer> a;
    Integer c;
};

// Exact rational point stored as integer numerators over one positive
// denominator, so sign evaluations stay in integer arithmetic.
struct Pt {
    std::vector<Integer> num;
    Integer den = 1;

    void normalize() {
        Integer g = den;
        for (const Integer& v : num) {
            g = boost::multiprecision::gcd(g, boost::multiprecision::abs(v));
            if (g == 1) return;
        }
        if (g > 1) {
            den /= g;
            for (Integer& v : num) v /= g;
        }
    }
};

// a.x - c at x = num/den, scaled by the positive factor den.
Integer row_value(const Row& r, const Pt& p) {
    Integer v = -r.c * p.den;
    for (std::size_t i = 0; i < r.a.size(); ++i)
        if (r.a[i] != 0) v += r.a[i] * p.num[i];
    return v;
}

struct Cell {
    std::string signs;  // over the rows inserted so far
    Pt w;
};

// Divide (g, h) by the content and make the first nonzero entry of g
// positive; used to identify coinciding induced hyperplanes.
void canonicalize_row(std::vector<Integer>& g, Integer& h) {
    Integer d = boost::multiprecision::abs(h);
    for (const Integer& v : g) d = boost::multiprecision::gcd(d, boost::multiprecision::abs(v));
    if (d > 1) {
        for (Integer& v : g) v /= d;
        h /= d;
    }
    for (const Integer& v : g) {
        if (v == 0) continue;
        if (v < 0) {
            for (Integer& w : g) w = -w;
            h = -h;
        }
        break;
    }
}

std::vector<Cell> enumerate_cells(const std::vector<Row>& rows, int l);

// One-dimensional base case: hyperplanes are points c/a on the line; cells
// are the open intervals between consecutive points.
std::vector<Cell> enumerate_line(const std::vector<Row>& rows) {
    std::vector<Rational> cuts;
    for (const Row& r : rows) cuts.emplace_back(r.c, r.a[0]);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Rational> samples;
    if (cuts.empty()) {
        samples.emplace_back(0);
    } else {
        samples.push_back(cuts.front() - 1);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            samples.push_back((cuts[i] + cuts[i + 1]) / 2);
        samples.push_back(cuts.back() + 1);
    }

    std::vector<Cell> cells;
    for (const Rational& s : samples) {
        Cell cell;
        cell.w.num.push_back(numerator(s));
        cell.w.den = denominator(s);
        for (const Row& r : rows) {
            const Integer v = row_value(r, cell.w);
            if (v == 0) throw std::logic_error("enumerate_line: sample on a cut");
            cell.signs.push_back(v > 0 ? '+' : '-');
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

// The cells sliced by row (index r) among the current cells are exactly the
// cells of the arrangement induced by rows[0..r-1] on the hyperplane of row
// r: slices of convex cells are convex, so each sliced cell meets the
// hyperplane in one induced cell.  This enumerates those induced cells and
// returns their witnesses lifted back to l coordinates (exactly on row r,
// strictly off all earlier rows).
std::vector<Pt> witnesses_on_row(const std::vector<Row>& rows, std::size_t r, int l) {
    // Parametrize the hyperplane by the coordinates other than a pivot j*
    // with positive coefficient.
    Row h = rows[r];
    std::size_t jstar = 0;
    while (h.a[jstar] == 0) ++jstar;
    if (h.a[jstar] < 0) {
        for (Integer& v : h.a) v = -v;
        h.c = -h.c;
    }

    std::vector<Row> induced;
    std::set<std::pair<std::vector<Integer>, Integer>> seen;
    for (std::size_t j = 0; j < r; ++j) {
        const Row& s = rows[j];
        std::vector<Integer> g;
        g.reserve(l - 1);
        for (std::size_t t = 0; t < static_cast<std::size_t>(l); ++t) {
            if (t == jstar) continue;
            g.push_back(h.a[jstar] * s.a[t] - s.a[jstar] * h.a[t]);
        }
        Integer off = h.a[jstar] * s.c - s.a[jstar] * h.c;
        const bool zero = std::all_of(g.begin(), g.end(),
                                      [](const Integer& v) { return v == 0; });
        if (zero) {
            if (off == 0)
                throw std::logic_error("witnesses_on_row: duplicate hyperplane");
            continue;  // parallel: constant sign on the hyperplane
        }
        canonicalize_row(g, off);
        if (seen.emplace(g, off).second)
            induced.push_back(Row{std::move(g), std::move(off)});
    }

    std::vector<Pt> lifted;
    for (const Cell& sub : enumerate_cells(induced, l - 1)) {
        Pt y;
        y.num.resize(l);
        y.den = h.a[jstar] * sub.w.den;
        Integer pivot_num = h.c * sub.w.den;
        std::size_t k = 0;
        for (std::size_t t = 0; t < static_cast<std::size_t>(l); ++t) {
            if (t == jstar) continue;
            y.num[t] = h.a[jstar] * sub.w.num[k];
            pivot_num -= h.a[t] * sub.w.num[k];
            ++k;
        }
        y.num[jstar] = std::move(pivot_num);
        y.normalize();
        lifted.push_back(std::move(y));
    }
    return lifted;
}

std::vector<Cell> enumerate_cells(const std::vector<Row>& rows, int l) {
    if (l == 0) {
        if (!rows.empty())
            throw std::logic_error("enumerate_cells: rows in dimension zero");
        return {Cell{"", Pt{{}, 1}}};
    }
    if (l == 1) return enumerate_line(rows);

    std::vector<Cell> cells{Cell{"", Pt{std::vector<Integer>(l, 0), 1}}};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Row& row = rows[r];

        std::unordered_map<std::string, std::size_t> index;
        index.reserve(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i].signs, i);

        // For each sliced cell: the witness on the slicing hyperplane, to be
        // pushed off to both sides.
        std::vector<std::optional<Pt>> slice(cells.size());
        for (Pt& y : witnesses_on_row(rows, r, l)) {
            std::string signs;
            signs.reserve(r);
            for (std::size_t j = 0; j < r; ++j) {
                const Integer v = row_value(rows[j], y);
                if (v == 0)
                    throw std::logic_error("enumerate_cells: induced witness on a wall");
                signs.push_back(v > 0 ? '+' : '-');
            }
            const auto it = index.find(signs);
            if (it == index.end())
                throw std::logic_error("enumerate_cells: induced cell in no chamber");
            if (slice[it->second])
                throw std::logic_error("enumerate_cells: chamber sliced twice");
            slice[it->second] = std::move(y);
        }

        std::vector<Cell> next;
        next.reserve(cells.size() + 16);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (!slice[i]) {
                const Integer v = row_value(row, cells[i].w);
                if (v == 0)
                    throw std::logic_error("enumerate_cells: unsliced cell witness on row");
                cells[i].signs.push_back(v > 0 ? '+' : '-');
                next.push_back(std::move(cells[i]));
                continue;
            }
            const Pt& y = *slice[i];
            // Step size keeping every earlier sign intact: half the distance
            // to the nearest wall along the normal direction.
            Rational delta(1);
            for (std::size_t j = 0; j < r; ++j) {
                Integer d = 0;
                for (int t = 0; t < l; ++t) d += rows[j].a[t] * row.a[t];
                if (d == 0) continue;
                const Rational bound(boost::multiprecision::abs(row_value(rows[j], y)),
                                     2 * boost::multiprecision::abs(d) * y.den);
                if (bound < delta) delta = bound;
            }
            const Integer p = numerator(delta), q = denominator(delta);
            for (const int side : {+1, -1}) {
                Cell child;
                child.signs = cells[i].signs;
                child.signs.push_back(side > 0 ? '+' : '-');
                child.w.den = y.den * q;
                child.w.num.resize(l);
                for (int t = 0; t < l; ++t)
                    child.w.num[t] = y.num[t] * q + side * p * y.den * row.a[t];
                child.w.normalize();
                if (boost::multiprecision::sign(row_value(row, child.w)) != side)
                    throw std::logic_error("enumerate_cells: pushed witness on wrong side");
                next.push_back(std::move(child));
            }
        }
        cells = std::move(next);
    }
    return cells;
}

std::vector<Row> reduced_rows(const Arrangement& arr) {
    std::vector<Row> rows;
    rows.reserve(arr.n());
    for (int i = 0; i < arr.n(); ++i) {
        const ReducedRow rr = reduce_hyperplane(arr.ambient, arr.hyperplane(i));
        Row row;
        row.a.assign(rr.a.begin(), rr.a.end());
        row.c = rr.c;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Rational> ambient_point(const Arrangement& arr, const Pt& p) {
    std::vector<Rational> x;
    x.reserve(arr.ambient.m);
    for (const Integer& v : p.num) x.emplace_back(v, p.den);
    if (arr.ambient.restricted) {
        Rational last = 0;
        for (const Rational& v : x) last -= v;
        x.push_back(std::move(last));
    }
    return x;
}

}  // namespace

std::vector<Chamber> enumerate_chambers(const Arrangement& arr) {
    if (arr.n() == 0) throw std::invalid_argument("enumerate_chambers: empty arrangement");
    const int l = arr.ambient.restricted ? arr.ambient.m - 1 : arr.ambient.m;

    std::vector<Chamber> result;
    for (Cell& cell : enumerate_cells(reduced_rows(arr), l))
        result.push_back(Chamber{std::move(cell.signs), ambient_point(arr, cell.w)});
    std::sort(result.begin(), result.end(),
              [](const Chamber& x, const Chamber& y) { return x.signs < y.signs; });
    for (std::size_t i = 0; i + 1 < result.size(); ++i)
        if (result[i].signs == result[i + 1].signs)
            throw std::logic_error("enumerate_chambers: duplicate sign vector");
    return result;
}

std::string signs_of_point(const Arrangement& arr, const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != arr.ambient.m)
        throw std::invalid_argument("signs_of_point: point has wrong dimension");
    if (arr.ambient.restricted) {
        Rational s = 0;
        for (const Rational& v : x) s += v;
        if (s != 0)
            throw std::invalid_argument("signs_of_point: point not in the zero-sum subspace");
    }
    std::string signs;
    signs.reserve(arr.n());
    for (int i = 0; i < arr.n(); ++i) {
        const int s = side_of(arr.hyperplane(i), x);
        if (s == 0)
            throw OnHyperplane(i, "point lies on hyperplane " + std::to_string(i));
        signs.push_back(s > 0 ? '+' : '-');
    }
    return signs;
}

Chamber chamber_of_point(const Arrangement& arr, const std::vector<Rational>& x) {
    return Chamber{signs_of_point(arr, x), x};
}

namespace {

std::vector<Chamber> fiber(const std::vector<Chamber>& chambers_C, const std::string& sub,
                           std::size_t from, std::size_t len, const char* what) {
    if (sub.size() != len)
        throw std::invalid_argument(std::string(what) + ": sub-sign vector has wrong length");
    std::vector<Chamber> out;
    for (const Chamber& c : chambers_C)
        if (c.signs.compare(from, len, sub) == 0) out.push_back(c);
    if (out.empty())
        throw InvalidSubSign(std::string(what) + ": sub-sign vector is not realizable");
    return out;
}

}  // namespace

std::vector<Chamber> fiber_A(const std::vector<Chamber>& chambers_C,
                             const Arrangement& arr, const std::string& a_signs) {
    return fiber(chambers_C, a_signs, 0, arr.coxeter_part.size(), "fiber_A");
}

std::vector<Chamber> fiber_B(const std::vector<Chamber>& chambers_C,
                             const Arrangement& arr, const std::string& b_signs) {
    return fiber(chambers_C, b_signs, arr.coxeter_part.size(), arr.stable_part.size(),
                 "fiber_B");
}

std::string chambers_to_json(const std::vector<Chamber>& chambers) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Chamber& c : chambers) {
        nlohmann::ordered_json item;
        item["signs"] = c.signs;
        nlohmann::ordered_json w = nlohmann::ordered_json::array();
        for (const Rational& v : c.witness) w.push_back(rational_to_string(v));
        item["witness"] = std::move(w);
        arr.push_back(std::move(item));
    }
    return arr.dump();
}

}  // namespace chamber_orbits
