#include "chamber_orbits/group.hpp"

#include <json.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace chamber_orbits {

GroupElement identity_element(int m) {
    GroupElement w;
    w.perm.resize(m);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    w.signs.assign(m, 1);
    return w;
}

GroupElement compose(const GroupElement& w2, const GroupElement& w1) {
    const int m = static_cast<int>(w1.perm.size());
    GroupElement w;
    w.perm.resize(m);
    w.signs.resize(m);
    for (int i = 0; i < m; ++i) {
        w.perm[i] = w2.perm[w1.perm[i]];
        w.signs[i] = w1.signs[i] * w2.signs[w1.perm[i]];
    }
    return w;
}

GroupElement inverse(const GroupElement& w) {
    const int m = static_cast<int>(w.perm.size());
    GroupElement v;
    v.perm.resize(m);
    v.signs.resize(m);
    for (int i = 0; i < m; ++i) {
        v.perm[w.perm[i]] = i;
        v.signs[w.perm[i]] = w.signs[i];
    }
    return v;
}

std::vector<Rational> act_on_point(const GroupElement& w, const std::vector<Rational>& x) {
    if (x.size() != w.perm.size())
        throw std::invalid_argument("act_on_point: dimension mismatch");
    std::vector<Rational> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[w.perm[i]] = w.signs[i] > 0 ? x[i] : -x[i];
    return y;
}

std::string element_to_string(const GroupElement& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.perm.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.signs[i] * (w.perm[i] + 1));
    }
    s += ']';
    return s;
}

Integer group_order(GroupType type, int m) {
    Integer n = factorial(m);
    if (type == GroupType::B) n <<= m;
    return n;
}

std::vector<GroupElement> group_generators(GroupType type, int m) {
    std::vector<GroupElement> gens;
    for (int i = 0; i + 1 < m; ++i) {
        GroupElement g = identity_element(m);
        std::swap(g.perm[i], g.perm[i + 1]);
        gens.push_back(std::move(g));
    }
    if (type == GroupType::B) {
        GroupElement g = identity_element(m);
        g.signs[0] = -1;
        gens.push_back(std::move(g));
    }
    return gens;
}

namespace {

// Generation order of make_group: permutations lexicographically, and for
// the signed group each permutation carries sign patterns in ascending
// bitmask order (bit i set = coordinate i negated), all-plus first.
unsigned sign_mask(const GroupElement& w) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < w.signs.size(); ++i)
        if (w.signs[i] < 0) mask |= 1u << i;
    return mask;
}

bool generation_order(const GroupElement& a, const GroupElement& b) {
    if (a.perm != b.perm) return a.perm < b.perm;
    return sign_mask(a) < sign_mask(b);
}

}  // namespace

Group make_group(GroupType type, int m) {
    Group g;
    g.type = type;
    g.m = m;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    const unsigned masks = type == GroupType::B ? 1u << m : 1u;
    do {
        for (unsigned mask = 0; mask < masks; ++mask) {
            GroupElement w;
            w.perm = perm;
            w.signs.resize(m);
            for (int i = 0; i < m; ++i) w.signs[i] = mask & (1u << i) ? -1 : 1;
            g.elements.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return g;
}

Group make_group_by_closure(GroupType type, int m) {
    const std::vector<GroupElement> gens = group_generators(type, m);
    std::set<GroupElement> seen;
    std::deque<GroupElement> queue;
    queue.push_back(identity_element(m));
    seen.insert(queue.front());
    while (!queue.empty()) {
        const GroupElement w = std::move(queue.front());
        queue.pop_front();
        for (const GroupElement& s : gens) {
            GroupElement next = compose(s, w);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    Group g;
    g.type = type;
    g.m = m;
    g.elements.assign(seen.begin(), seen.end());
    std::sort(g.elements.begin(), g.elements.end(), generation_order);
    return g;
}

// ---------------------------------------------------------------------------
// Actions
// ---------------------------------------------------------------------------

Hyperplane act_on_hyperplane(const AmbientSpace& ambient, const GroupElement& w,
                             const Hyperplane& h) {
    std::vector<std::int64_t> normal(h.normal.size());
    for (std::size_t i = 0; i < h.normal.size(); ++i)
        normal[w.perm[i]] = w.signs[i] * h.normal[i];
    return canonical_hyperplane(ambient, std::move(normal), h.offset);
}

HyperplaneAction hyperplane_action(const Arrangement& arr, const GroupElement& w) {
    std::map<Hyperplane, int> index;
    for (int i = 0; i < arr.n(); ++i) index.emplace(arr.hyperplane(i), i);

    HyperplaneAction action;
    action.image.resize(arr.n());
    action.flip.resize(arr.n());
    const int m = arr.ambient.m;
    for (int i = 0; i < arr.n(); ++i) {
        const Hyperplane& h = arr.hyperplane(i);
        std::vector<std::int64_t> moved(m);
        for (int j = 0; j < m; ++j) moved[w.perm[j]] = w.signs[j] * h.normal[j];

        // Direction of the transported normal relative to the canonical
        // image: determines whether the chamber sign is negated.
        std::vector<std::int64_t> projected = moved;
        if (arr.ambient.restricted) {
            const std::int64_t s =
                std::accumulate(moved.begin(), moved.end(), std::int64_t{0});
            for (std::int64_t& v : projected) v = m * v - s;
        }
        int flip = 0;
        for (const std::int64_t v : projected) {
            if (v != 0) {
                flip = v > 0 ? 1 : -1;
                break;
            }
        }
        if (flip == 0) throw NotStable("hyperplane_action: degenerate image normal");

        const auto it = index.find(
            canonical_hyperplane(arr.ambient, std::move(moved), h.offset));
        if (it == index.end())
            throw NotStable("hyperplane_action: image hyperplane not in arrangement");
        action.image[i] = it->second;
        action.flip[i] = flip;
    }
    return action;
}

std::string act_on_signs(const HyperplaneAction& action, const std::string& signs) {
    if (signs.size() != action.image.size())
        throw std::invalid_argument("act_on_signs: length mismatch");
    std::string out(signs.size(), '?');
    for (std::size_t i = 0; i < signs.size(); ++i) {
        const bool plus = (signs[i] == '+') == (action.flip[i] > 0);
        out[action.image[i]] = plus ? '+' : '-';
    }
    return out;
}

Chamber act_on_chamber(const GroupElement& w, const Chamber& ch, const Arrangement& arr) {
    Chamber out;
    out.signs = act_on_signs(hyperplane_action(arr, w), ch.signs);
    out.witness = act_on_point(w, ch.witness);
    if (signs_of_point(arr, out.witness) != out.signs)
        throw std::logic_error("act_on_chamber: witness and sign transport disagree");
    return out;
}

// ---------------------------------------------------------------------------
// Orbits, stabilizers, averages
// ---------------------------------------------------------------------------

OrbitPartition orbit_partition(const Arrangement& arr,
                               const std::vector<Chamber>& chambers) {
    std::unordered_map<std::string, int> index;
    index.reserve(chambers.size());
    for (std::size_t i = 0; i < chambers.size(); ++i) index.emplace(chambers[i].signs, i);

    std::vector<HyperplaneAction> gen_actions;
    for (const GroupElement& g : group_generators(arr.group, arr.ambient.m))
        gen_actions.push_back(hyperplane_action(arr, g));

    OrbitPartition part;
    part.orbit_of.assign(chambers.size(), -1);
    for (std::size_t start = 0; start < chambers.size(); ++start) {
        if (part.orbit_of[start] != -1) continue;
        const int orbit = static_cast<int>(part.orbits.size());
        std::vector<int> members;
        std::deque<int> queue{static_cast<int>(start)};
        part.orbit_of[start] = orbit;
        while (!queue.empty()) {
            const int at = queue.front();
            queue.pop_front();
            members.push_back(at);
            for (const HyperplaneAction& action : gen_actions) {
                const auto it = index.find(act_on_signs(action, chambers[at].signs));
                if (it == index.end())
                    throw std::logic_error(
                        "orbit_partition: chamber list not closed under the action");
                if (part.orbit_of[it->second] == -1) {
                    part.orbit_of[it->second] = orbit;
                    queue.push_back(it->second);
                }
            }
        }
        std::sort(members.begin(), members.end());
        part.representatives.push_back(members.front());
        part.orbits.push_back(std::move(members));
    }
    return part;
}

Subgroup stabilizer(const Group& W, const Arrangement& arr, const std::string& signs) {
    Subgroup s;
    for (const GroupElement& w : W.elements)
        if (act_on_signs(hyperplane_action(arr, w), signs) == signs)
            s.elements.push_back(w);
    std::sort(s.elements.begin(), s.elements.end());
    return s;
}

std::vector<Rational> average_point(const Subgroup& stab, const std::vector<Rational>& x) {
    if (stab.elements.empty()) throw std::invalid_argument("average_point: empty subgroup");
    std::vector<Rational> z(x.size(), Rational(0));
    for (const GroupElement& w : stab.elements) {
        const std::vector<Rational> y = act_on_point(w, x);
        for (std::size_t i = 0; i < x.size(); ++i) z[i] += y[i];
    }
    const Rational count(static_cast<long>(stab.elements.size()));
    for (Rational& v : z) v /= count;
    return z;
}

std::vector<int> young_composition(const std::vector<Rational>& z) {
    std::map<Rational, int, std::greater<Rational>> blocks;
    for (const Rational& v : z) ++blocks[v];
    std::vector<int> comp;
    for (const auto& [value, size] : blocks) comp.push_back(size);
    return comp;
}

Subgroup stabilizer_from_average(const std::vector<Rational>& z) {
    const int m = static_cast<int>(z.size());
    // Indices sharing a coordinate value form a block; the stabilizer is
    // the product of the symmetric groups on the blocks.
    std::map<Rational, std::vector<int>> blocks;
    for (int i = 0; i < m; ++i) blocks[z[i]].push_back(i);

    std::vector<std::vector<std::vector<int>>> block_perms;
    for (const auto& [value, indices] : blocks) {
        std::vector<std::vector<int>> perms;
        std::vector<int> p = indices;  // already sorted ascending
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        block_perms.push_back(std::move(perms));
    }

    Subgroup s;
    std::vector<std::size_t> choice(block_perms.size(), 0);
    for (;;) {
        GroupElement w = identity_element(m);
        std::size_t k = 0;
        for (const auto& [value, indices] : blocks) {
            const std::vector<int>& target = block_perms[k][choice[k]];
            for (std::size_t t = 0; t < indices.size(); ++t) w.perm[indices[t]] = target[t];
            ++k;
        }
        s.elements.push_back(std::move(w));
        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == block_perms[pos].size())
            choice[pos++] = 0;
        if (pos == choice.size()) break;
    }
    std::sort(s.elements.begin(), s.elements.end());
    return s;
}

std::int64_t fix_count(const Arrangement& arr, const std::vector<Chamber>& chambers,
                       const GroupElement& w) {
    const HyperplaneAction action = hyperplane_action(arr, w);
    std::int64_t count = 0;
    for (const Chamber& c : chambers)
        if (act_on_signs(action, c.signs) == c.signs) ++count;
    return count;
}

Integer fix_sum(const Group& W, const Arrangement& arr,
                const std::vector<Chamber>& chambers) {
    Integer total = 0;
    for (const GroupElement& w : W.elements) total += fix_count(arr, chambers, w);
    return total;
}

// ---------------------------------------------------------------------------
// Conjugacy of stabilizers
// ---------------------------------------------------------------------------

Subgroup conjugate_subgroup(const GroupElement& w, const Subgroup& s) {
    const GroupElement w_inv = inverse(w);
    Subgroup out;
    out.elements.reserve(s.elements.size());
    for (const GroupElement& e : s.elements)
        out.elements.push_back(compose(w, compose(e, w_inv)));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

bool subgroups_conjugate(const Group& W, const Subgroup& s1, const Subgroup& s2) {
    if (s1.elements.size() != s2.elements.size()) return false;
    for (const GroupElement& w : W.elements)
        if (conjugate_subgroup(w, s1) == s2) return true;
    return false;
}

TauClasses tau(const Group& W, const Arrangement& arr,
               const std::vector<Chamber>& chambers, const OrbitPartition& orbits) {
    std::vector<Subgroup> stabs;
    stabs.reserve(orbits.representatives.size());
    for (const int rep : orbits.representatives)
        stabs.push_back(stabilizer(W, arr, chambers[rep].signs));

    TauClasses classes;
    classes.class_of.assign(stabs.size(), -1);
    for (std::size_t i = 0; i < stabs.size(); ++i) {
        if (classes.class_of[i] != -1) continue;
        const int cls = static_cast<int>(classes.class_orbits.size());
        classes.class_of[i] = cls;
        std::vector<int> members{static_cast<int>(i)};
        for (std::size_t j = i + 1; j < stabs.size(); ++j)
            if (classes.class_of[j] == -1 && subgroups_conjugate(W, stabs[i], stabs[j])) {
                classes.class_of[j] = cls;
                members.push_back(static_cast<int>(j));
            }
        classes.class_orbits.push_back(std::move(members));
        classes.representatives.push_back(stabs[i]);
    }
    return classes;
}

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

std::string orbit_report_json(const Arrangement& full,
                              const std::vector<Chamber>& chambers_C,
                              const Arrangement& stable_only,
                              const std::vector<Chamber>& chambers_B,
                              const Group& W) {
    const OrbitPartition part = orbit_partition(stable_only, chambers_B);
    const std::size_t from = full.coxeter_part.size();

    nlohmann::ordered_json j;
    j["orbits"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < part.orbits.size(); ++k) {
        const std::string& rep = chambers_B[part.representatives[k]].signs;
        const Subgroup stab = stabilizer(W, stable_only, rep);
        std::size_t fiber = 0;
        for (const Chamber& c : chambers_C)
            if (c.signs.compare(from, rep.size(), rep) == 0) ++fiber;
        nlohmann::ordered_json row;
        row["rep"] = rep;
        row["size"] = part.orbits[k].size();
        row["stabilizer_order"] = stab.order();
        row["fiber_size"] = fiber;
        j["orbits"].push_back(std::move(row));
    }

    const TauClasses classes = tau(W, stable_only, chambers_B, part);
    j["tau_classes"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < classes.class_orbits.size(); ++k) {
        nlohmann::ordered_json row;
        row["stabilizer_order"] = classes.representatives[k].order();
        row["orbits"] = classes.class_orbits[k];
        nlohmann::ordered_json elems = nlohmann::ordered_json::array();
        for (const GroupElement& w : classes.representatives[k].elements)
            elems.push_back(element_to_string(w));
        row["representative"] = std::move(elems);
        j["tau_classes"].push_back(std::move(row));
    }
    return j.dump();
}

}  // namespace chamber_orbits
