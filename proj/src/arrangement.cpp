#include "chamber_orbits/arrangement.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace chamber_orbits {

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void primitive_positive(std::vector<std::int64_t>& normal, std::int64_t& offset) {
    std::int64_t g = offset < 0 ? -offset : offset;
    for (const std::int64_t v : normal) g = gcd64(g, v);
    if (g > 1) {
        for (std::int64_t& v : normal) v /= g;
        offset /= g;
    }
    for (const std::int64_t v : normal) {
        if (v == 0) continue;
        if (v < 0) {
            for (std::int64_t& w : normal) w = -w;
            offset = -offset;
        }
        break;
    }
}

}  // namespace

Hyperplane canonical_hyperplane(const AmbientSpace& ambient,
                                std::vector<std::int64_t> normal,
                                std::int64_t offset) {
    if (static_cast<int>(normal.size()) != ambient.m)
        throw std::invalid_argument("canonical_hyperplane: normal has wrong length");
    if (ambient.restricted) {
        // Normals are only defined modulo (1, ..., 1) on the zero-sum
        // subspace; shift to zero mean, scaled back to integers.
        const std::int64_t s = std::accumulate(normal.begin(), normal.end(), std::int64_t{0});
        if (s != 0) {
            for (std::int64_t& v : normal) v = ambient.m * v - s;
            offset *= ambient.m;
        }
    }
    const bool all_zero = std::all_of(normal.begin(), normal.end(),
                                      [](std::int64_t v) { return v == 0; });
    if (all_zero)
        throw std::invalid_argument("canonical_hyperplane: normal is zero in this ambient");
    primitive_positive(normal, offset);
    return Hyperplane{std::move(normal), offset};
}

int side_of(const Hyperplane& h, const std::vector<Rational>& x) {
    if (x.size() != h.normal.size())
        throw std::invalid_argument("side_of: point has wrong dimension");
    Rational v = -Rational(h.offset);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (h.normal[i] != 0) v += Rational(h.normal[i]) * x[i];
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

ReducedRow reduce_hyperplane(const AmbientSpace& ambient, const Hyperplane& h) {
    ReducedRow row;
    if (!ambient.restricted) {
        row.a = h.normal;
        row.c = h.offset;
        return row;
    }
    // Eliminate x_m = -(x_1 + ... + x_{m-1}).
    const int m = ambient.m;
    row.a.resize(m - 1);
    for (int j = 0; j + 1 < m; ++j) row.a[j] = h.normal[j] - h.normal[m - 1];
    row.c = h.offset;
    // Divide by the positive content only; a sign flip would silently invert
    // which side of the hyperplane a point is on.
    std::int64_t g = row.c < 0 ? -row.c : row.c;
    for (const std::int64_t v : row.a) g = gcd64(g, v);
    if (g > 1) {
        for (std::int64_t& v : row.a) v /= g;
        row.c /= g;
    }
    return row;
}

// ---------------------------------------------------------------------------
// Assembly and stability validation
// ---------------------------------------------------------------------------

namespace {

struct SignedPermutation {
    std::vector<int> perm;   // coordinate i is sent to position perm[i]
    std::vector<int> signs;  // sign applied to coordinate i before moving it
};

Hyperplane apply_to_hyperplane(const AmbientSpace& ambient, const SignedPermutation& g,
                               const Hyperplane& h) {
    std::vector<std::int64_t> normal(h.normal.size());
    for (std::size_t i = 0; i < h.normal.size(); ++i)
        normal[g.perm[i]] = g.signs[i] * h.normal[i];
    return canonical_hyperplane(ambient, std::move(normal), h.offset);
}

// Adjacent transpositions, plus the first-coordinate sign flip for the
// signed permutation group.  These generate the full group, so stability
// under them is stability under every element.
std::vector<SignedPermutation> group_generator_maps(GroupType type, int m) {
    std::vector<SignedPermutation> gens;
    for (int i = 0; i + 1 < m; ++i) {
        SignedPermutation g;
        g.perm.resize(m);
        g.signs.assign(m, 1);
        for (int j = 0; j < m; ++j) g.perm[j] = j;
        std::swap(g.perm[i], g.perm[i + 1]);
        gens.push_back(std::move(g));
    }
    if (type == GroupType::B) {
        SignedPermutation g;
        g.perm.resize(m);
        g.signs.assign(m, 1);
        for (int j = 0; j < m; ++j) g.perm[j] = j;
        g.signs[0] = -1;
        gens.push_back(std::move(g));
    }
    return gens;
}

void check_stable(const AmbientSpace& ambient, GroupType type,
                  const std::vector<Hyperplane>& part, const char* label) {
    const std::set<Hyperplane> have(part.begin(), part.end());
    for (const auto& g : group_generator_maps(type, ambient.m)) {
        for (const auto& h : part) {
            const Hyperplane image = apply_to_hyperplane(ambient, g, h);
            if (!have.count(image))
                throw NotStable(std::string(label) +
                                " part is not stable under the group generators");
        }
    }
}

}  // namespace

Arrangement assemble(const AmbientSpace& ambient, GroupType group,
                     std::vector<Hyperplane> coxeter_part,
                     std::vector<Hyperplane> stable_part) {
    std::set<Hyperplane> seen;
    for (const auto& h : coxeter_part)
        if (!seen.insert(h).second)
            throw OverlapError("assemble: duplicate hyperplane in coxeter part");
    for (const auto& h : stable_part)
        if (!seen.insert(h).second)
            throw OverlapError("assemble: stable part meets the coxeter part "
                               "or repeats a hyperplane");
    check_stable(ambient, group, coxeter_part, "coxeter");
    check_stable(ambient, group, stable_part, "stable");
    return Arrangement{ambient, group, std::move(coxeter_part), std::move(stable_part)};
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

std::vector<Hyperplane> build_braid(const AmbientSpace& ambient, int m) {
    if (m < 2) throw std::invalid_argument("build_braid: need m >= 2");
    std::vector<Hyperplane> out;
    out.reserve(m * (m - 1) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            std::vector<std::int64_t> normal(m, 0);
            normal[i] = 1;
            normal[j] = -1;
            out.push_back(canonical_hyperplane(ambient, std::move(normal), 0));
        }
    return out;
}

std::vector<Hyperplane> build_semiorder(int m) {
    if (m < 2) throw std::invalid_argument("build_semiorder: need m >= 2");
    const AmbientSpace ambient{m, true};
    std::vector<Hyperplane> out;
    out.reserve(m * (m - 1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            std::vector<std::int64_t> normal(m, 0);
            normal[i] = 1;
            normal[j] = -1;
            out.push_back(canonical_hyperplane(ambient, std::move(normal), 1));
        }
    return out;
}

std::vector<Hyperplane> build_restricted_all_subset(int m) {
    if (m < 3) throw std::invalid_argument("build_restricted_all_subset: need m >= 3");
    const AmbientSpace ambient{m, true};
    std::vector<Hyperplane> out;
    const std::uint32_t full = (1u << m) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        if (!(mask & 1u)) continue;  // complement pairs: keep the one with index 1
        std::vector<std::int64_t> normal(m, 0);
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) normal[i] = 1;
        out.push_back(canonical_hyperplane(ambient, std::move(normal), 0));
    }
    return out;
}

std::vector<Hyperplane> build_unrestricted_all_subset(int m) {
    if (m < 2) throw std::invalid_argument("build_unrestricted_all_subset: need m >= 2");
    const AmbientSpace ambient{m, false};
    std::vector<Hyperplane> out;
    const std::uint32_t full = (1u << m) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::vector<std::int64_t> normal(m, 0);
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) normal[i] = 1;
        out.push_back(canonical_hyperplane(ambient, std::move(normal), 0));
    }
    return out;
}

std::vector<Hyperplane> build_mid_hyperplane(int m) {
    if (m < 4) throw std::invalid_argument("build_mid_hyperplane: need m >= 4");
    const AmbientSpace ambient{m, true};
    std::vector<Hyperplane> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c)
                for (int d = c + 1; d < m; ++d) {
                    // The three pairings of {a, b, c, d} into two sides.
                    const int plus[3][2] = {{a, b}, {a, c}, {a, d}};
                    const int minus[3][2] = {{c, d}, {b, d}, {b, c}};
                    for (int t = 0; t < 3; ++t) {
                        std::vector<std::int64_t> normal(m, 0);
                        normal[plus[t][0]] = 1;
                        normal[plus[t][1]] = 1;
                        normal[minus[t][0]] = -1;
                        normal[minus[t][1]] = -1;
                        out.push_back(canonical_hyperplane(ambient, std::move(normal), 0));
                    }
                }
    return out;
}

std::vector<Hyperplane> build_coxeter_B(int m) {
    if (m < 2) throw std::invalid_argument("build_coxeter_B: need m >= 2");
    const AmbientSpace ambient{m, false};
    std::vector<Hyperplane> out;
    out.reserve(m * m);
    for (int i = 0; i < m; ++i) {
        std::vector<std::int64_t> normal(m, 0);
        normal[i] = 1;
        out.push_back(canonical_hyperplane(ambient, std::move(normal), 0));
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (const int s : {-1, +1}) {
                std::vector<std::int64_t> normal(m, 0);
                normal[i] = 1;
                normal[j] = s;
                out.push_back(canonical_hyperplane(ambient, std::move(normal), 0));
            }
    return out;
}

std::vector<Hyperplane> build_signed_all_subset(int m) {
    if (m < 3) throw std::invalid_argument("build_signed_all_subset: need m >= 3");
    const AmbientSpace ambient{m, false};
    std::vector<Hyperplane> out;
    std::vector<int> eps(m, -1);
    for (;;) {
        int nonzero = 0;
        int first = 0;
        for (int i = 0; i < m; ++i) {
            if (eps[i] != 0) {
                if (nonzero == 0) first = eps[i];
                ++nonzero;
            }
        }
        if (nonzero >= 3 && first == 1) {
            std::vector<std::int64_t> normal(eps.begin(), eps.end());
            out.push_back(canonical_hyperplane(ambient, std::move(normal), 0));
        }
        // Odometer step over {-1, 0, +1}^m, last coordinate fastest.
        int pos = m - 1;
        while (pos >= 0 && eps[pos] == 1) eps[pos--] = -1;
        if (pos < 0) break;
        ++eps[pos];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

const char* family_name(Family f) {
    switch (f) {
        case Family::catalan: return "catalan";
        case Family::restricted_all_subset: return "restricted-all-subset";
        case Family::unrestricted_all_subset: return "unrestricted-all-subset";
        case Family::mid_hyperplane: return "mid-hyperplane";
        case Family::signed_all_subset: return "signed-all-subset";
    }
    throw std::logic_error("family_name: unknown family");
}

Family family_from_name(const std::string& name) {
    for (const Family f : {Family::catalan, Family::restricted_all_subset,
                           Family::unrestricted_all_subset, Family::mid_hyperplane,
                           Family::signed_all_subset})
        if (name == family_name(f)) return f;
    throw std::invalid_argument("unknown family '" + name + "'");
}

int family_min_m(Family f) {
    switch (f) {
        case Family::catalan: return 2;
        case Family::restricted_all_subset: return 3;
        case Family::unrestricted_all_subset: return 2;
        case Family::mid_hyperplane: return 4;
        case Family::signed_all_subset: return 3;
    }
    throw std::logic_error("family_min_m: unknown family");
}

GroupType family_group(Family f) {
    return f == Family::signed_all_subset ? GroupType::B : GroupType::A;
}

bool family_restricted(Family f) {
    switch (f) {
        case Family::catalan:
        case Family::restricted_all_subset:
        case Family::mid_hyperplane: return true;
        case Family::unrestricted_all_subset:
        case Family::signed_all_subset: return false;
    }
    throw std::logic_error("family_restricted: unknown family");
}

namespace {

std::vector<Hyperplane> build_stable_part(Family f, int m) {
    switch (f) {
        case Family::catalan: return build_semiorder(m);
        case Family::restricted_all_subset: return build_restricted_all_subset(m);
        case Family::unrestricted_all_subset: return build_unrestricted_all_subset(m);
        case Family::mid_hyperplane: return build_mid_hyperplane(m);
        case Family::signed_all_subset: return build_signed_all_subset(m);
    }
    throw std::logic_error("build_stable_part: unknown family");
}

}  // namespace

Arrangement make_family(Family f, int m) {
    if (m < family_min_m(f))
        throw std::invalid_argument(std::string("family ") + family_name(f) +
                                    " needs m >= " + std::to_string(family_min_m(f)));
    const AmbientSpace ambient{m, family_restricted(f)};
    const GroupType group = family_group(f);
    std::vector<Hyperplane> coxeter = group == GroupType::A
                                          ? build_braid(ambient, m)
                                          : build_coxeter_B(m);
    return assemble(ambient, group, std::move(coxeter), build_stable_part(f, m));
}

Arrangement make_stable_only(Family f, int m) {
    if (m < family_min_m(f))
        throw std::invalid_argument(std::string("family ") + family_name(f) +
                                    " needs m >= " + std::to_string(family_min_m(f)));
    const AmbientSpace ambient{m, family_restricted(f)};
    return assemble(ambient, family_group(f), {}, build_stable_part(f, m));
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

std::string arrangement_to_json(const Arrangement& arr) {
    nlohmann::ordered_json j;
    j["m"] = arr.ambient.m;
    j["restricted"] = arr.ambient.restricted;
    j["group"] = arr.group == GroupType::A ? "A" : "B";
    auto part = [](const std::vector<Hyperplane>& hs) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& h : hs) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (const std::int64_t v : h.normal) row.push_back(v);
            row.push_back(h.offset);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["A"] = part(arr.coxeter_part);
    j["B"] = part(arr.stable_part);
    return j.dump();
}

Arrangement arrangement_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const AmbientSpace ambient{j.at("m").get<int>(), j.at("restricted").get<bool>()};
    const std::string g = j.at("group").get<std::string>();
    if (g != "A" && g != "B")
        throw std::invalid_argument("arrangement_from_json: group must be A or B");
    auto part = [&](const char* key) {
        std::vector<Hyperplane> hs;
        for (const auto& row : j.at(key)) {
            if (static_cast<int>(row.size()) != ambient.m + 1)
                throw std::invalid_argument("arrangement_from_json: bad row length");
            std::vector<std::int64_t> normal;
            for (int i = 0; i < ambient.m; ++i)
                normal.push_back(row[i].get<std::int64_t>());
            hs.push_back(canonical_hyperplane(ambient, std::move(normal),
                                              row[ambient.m].get<std::int64_t>()));
        }
        return hs;
    };
    // Re-assembling revalidates disjointness and stability on load.
    return assemble(ambient, g == "A" ? GroupType::A : GroupType::B,
                    part("A"), part("B"));
}

}  // namespace chamber_orbits
