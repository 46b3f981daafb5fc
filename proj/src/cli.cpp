#include "chamber_orbits/cli.hpp"

#include "chamber_orbits/chambers.hpp"
#include "chamber_orbits/charpoly.hpp"
#include "chamber_orbits/group.hpp"
#include "chamber_orbits/semiorder.hpp"
#include "chamber_orbits/verify.hpp"

#include <json.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>

namespace chamber_orbits {

namespace {

using nlohmann::ordered_json;

void validate(const RunConfig& config) {
    if (config.m < family_min_m(config.family))
        throw std::invalid_argument(
            "m=" + std::to_string(config.m) + " is below the minimum " +
            std::to_string(family_min_m(config.family)) + " for family " +
            family_name(config.family));
    if (config.m > 12)
        throw std::invalid_argument("m=" + std::to_string(config.m) +
                                    " is beyond the supported desk scale (12)");
    if (config.threads < 1) throw std::invalid_argument("threads must be >= 1");
    if (config.format != "json" && config.format != "csv" && config.format != "text")
        throw std::invalid_argument("format must be json, csv, or text");
}

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

CharpolyResult grid_budgeted_charpoly(const Arrangement& arr, const RunConfig& config) {
    CharpolyOptions options;
    options.threads = config.threads;
    options.grid_budget = config.budget_grid;
    return charpoly_with_details(arr, options);
}

// Charpoly first, then the enumeration budget check: the Zaslavsky count
// is the estimate of the enumeration's size.
CharpolyResult enumeration_budgeted_charpoly(const Arrangement& arr,
                                             const RunConfig& config) {
    CharpolyResult result = grid_budgeted_charpoly(arr, config);
    if (result.chambers > Integer(config.budget_chambers))
        throw BudgetExceeded("enumerating " + result.chambers.str() +
                             " chambers exceeds budget " +
                             std::to_string(config.budget_chambers));
    return result;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::vector<std::string> point_strings(const std::vector<Rational>& x) {
    std::vector<std::string> out;
    out.reserve(x.size());
    for (const Rational& v : x) out.push_back(rational_to_string(v));
    return out;
}

}  // namespace

int cmd_chambers(const RunConfig& config, std::ostream& out) {
    return guarded([&] {
        validate(config);
        const Arrangement arr_C = make_family(config.family, config.m);
        const Arrangement arr_B = make_stable_only(config.family, config.m);
        const Arrangement arr_A =
            assemble(arr_C.ambient, arr_C.group, arr_C.coxeter_part, {});

        const CharpolyResult cp = enumeration_budgeted_charpoly(arr_C, config);
        const std::vector<Chamber> ch_C = enumerate_chambers(arr_C);
        const std::vector<Chamber> ch_A = enumerate_chambers(arr_A);
        const std::vector<Chamber> ch_B = enumerate_chambers(arr_B);
        const bool agreement = Integer(ch_C.size()) == cp.chambers;

        const std::size_t fiber_A_size = fiber_A(ch_C, arr_C, ch_A[0].signs).size();
        std::map<std::size_t, std::size_t> fiber_B_sizes;  // size -> how many b
        for (const Chamber& b : ch_B)
            ++fiber_B_sizes[fiber_B(ch_C, arr_C, b.signs).size()];

        if (config.format == "json") {
            ordered_json j;
            j["family"] = family_name(config.family);
            j["m"] = config.m;
            j["chambers_A"] = ch_A.size();
            j["chambers_B"] = ch_B.size();
            j["chambers_C"] = ch_C.size();
            j["zaslavsky"] = static_cast<std::int64_t>(cp.chambers);
            j["agreement"] = agreement;
            j["orbits"] = static_cast<std::int64_t>(cp.orbits);
            j["fiber_A_size"] = fiber_A_size;
            j["fiber_B_sizes"] = ordered_json::object();
            for (const auto& [size, count] : fiber_B_sizes)
                j["fiber_B_sizes"][std::to_string(size)] = count;
            out << j.dump() << '\n';
        } else if (config.format == "csv") {
            out << "family,m,chambers_A,chambers_B,chambers_C,zaslavsky,agreement,"
                   "orbits,fiber_A_size,fiber_B_sizes\n";
            std::vector<std::string> hist;
            for (const auto& [size, count] : fiber_B_sizes)
                hist.push_back(std::to_string(size) + ":" + std::to_string(count));
            out << family_name(config.family) << ',' << config.m << ','
                << ch_A.size() << ',' << ch_B.size() << ',' << ch_C.size() << ','
                << cp.chambers << ',' << (agreement ? "yes" : "no") << ','
                << cp.orbits << ',' << fiber_A_size << ','
                << csv_quote(join(hist, ";")) << '\n';
        } else {
            out << "family: " << family_name(config.family) << '\n'
                << "m: " << config.m << '\n'
                << "chambers_A: " << ch_A.size() << '\n'
                << "chambers_B: " << ch_B.size() << '\n'
                << "chambers_C: " << ch_C.size() << '\n'
                << "zaslavsky: " << cp.chambers << '\n'
                << "agreement: " << (agreement ? "yes" : "no") << '\n'
                << "orbits: " << cp.orbits << '\n'
                << "fiber_A_size: " << fiber_A_size << '\n'
                << "fiber_B_sizes:";
            for (const auto& [size, count] : fiber_B_sizes)
                out << ' ' << size << ':' << count;
            out << '\n';
        }
        return agreement ? 0 : 1;
    });
}

int cmd_charpoly(const RunConfig& config, std::ostream& out) {
    return guarded([&] {
        validate(config);
        const Arrangement arr_C = make_family(config.family, config.m);
        const CharpolyResult cp = grid_budgeted_charpoly(arr_C, config);

        if (config.format == "json") {
            out << charpoly_report_json(config.family, config.m, cp) << '\n';
        } else if (config.format == "csv") {
            out << "family,m,chi,chambers,orbits,ranking_patterns,primes_used\n";
            std::vector<std::string> coeffs, primes;
            for (const Integer& c : cp.chi.coeffs) coeffs.push_back(c.str());
            for (const std::int64_t p : cp.primes_used)
                primes.push_back(std::to_string(p));
            out << family_name(config.family) << ',' << config.m << ','
                << csv_quote(join(coeffs, " ")) << ',' << cp.chambers << ','
                << cp.orbits << ',';
            if (config.family == Family::restricted_all_subset)
                out << (cp.orbits - 1);
            out << ',' << csv_quote(join(primes, " ")) << '\n';
        } else {
            out << "family: " << family_name(config.family) << '\n'
                << "m: " << config.m << '\n'
                << "chi: " << cp.chi.to_string() << '\n'
                << "chambers: " << cp.chambers << '\n'
                << "orbits: " << cp.orbits << '\n';
            if (config.family == Family::restricted_all_subset)
                out << "ranking_patterns: " << (cp.orbits - 1) << '\n';
            out << "primes_used:";
            for (const std::int64_t p : cp.primes_used) out << ' ' << p;
            out << '\n';
        }
        return 0;
    });
}

int cmd_orbits(const RunConfig& config, std::ostream& out) {
    return guarded([&] {
        validate(config);
        const Arrangement arr_C = make_family(config.family, config.m);
        const Arrangement arr_B = make_stable_only(config.family, config.m);
        enumeration_budgeted_charpoly(arr_C, config);
        const std::vector<Chamber> ch_C = enumerate_chambers(arr_C);
        const std::vector<Chamber> ch_B = enumerate_chambers(arr_B);
        const Group W = make_group(arr_C.group, config.m);
        const ordered_json j = ordered_json::parse(
            orbit_report_json(arr_C, ch_C, arr_B, ch_B, W));

        if (config.format == "json") {
            out << j.dump() << '\n';
        } else if (config.format == "csv") {
            out << "orbit,rep,size,stabilizer_order,fiber_size\n";
            for (std::size_t k = 0; k < j["orbits"].size(); ++k) {
                const auto& row = j["orbits"][k];
                out << k << ',' << row["rep"].get<std::string>() << ','
                    << row["size"] << ',' << row["stabilizer_order"] << ','
                    << row["fiber_size"] << '\n';
            }
            out << "\nclass,stabilizer_order,orbits\n";
            for (std::size_t k = 0; k < j["tau_classes"].size(); ++k) {
                const auto& row = j["tau_classes"][k];
                std::vector<std::string> members;
                for (const auto& o : row["orbits"])
                    members.push_back(std::to_string(o.get<int>()));
                out << k << ',' << row["stabilizer_order"] << ','
                    << csv_quote(join(members, " ")) << '\n';
            }
        } else {
            out << "family: " << family_name(config.family) << "  m: " << config.m
                << "  orbits: " << j["orbits"].size() << '\n';
            for (std::size_t k = 0; k < j["orbits"].size(); ++k) {
                const auto& row = j["orbits"][k];
                out << "  orbit " << k << ": rep " << row["rep"].get<std::string>()
                    << "  size " << row["size"] << "  stabilizer_order "
                    << row["stabilizer_order"] << "  fiber_size "
                    << row["fiber_size"] << '\n';
            }
            out << "stabilizer conjugacy classes: " << j["tau_classes"].size()
                << '\n';
            for (std::size_t k = 0; k < j["tau_classes"].size(); ++k) {
                const auto& row = j["tau_classes"][k];
                out << "  class " << k << ": stabilizer_order "
                    << row["stabilizer_order"] << "  orbits";
                for (const auto& o : row["orbits"]) out << ' ' << o;
                out << '\n';
            }
        }
        return 0;
    });
}

int cmd_isotropy(const RunConfig& config, std::ostream& out) {
    return guarded([&] {
        validate(config);
        const Arrangement arr_C = make_family(config.family, config.m);
        const Arrangement arr_B = make_stable_only(config.family, config.m);
        enumeration_budgeted_charpoly(arr_C, config);
        const std::vector<Chamber> ch_B = enumerate_chambers(arr_B);
        const Group W = make_group(arr_C.group, config.m);
        const OrbitPartition part = orbit_partition(arr_B, ch_B);

        ordered_json j;
        j["family"] = family_name(config.family);
        j["m"] = config.m;
        j["orbits"] = ordered_json::array();
        for (std::size_t k = 0; k < part.orbits.size(); ++k) {
            const Chamber& rep = ch_B[part.representatives[k]];
            const Subgroup stab = stabilizer(W, arr_B, rep.signs);
            const std::vector<Rational> z = average_point(stab, rep.witness);
            ordered_json row;
            row["rep"] = rep.signs;
            row["orbit_size"] = part.orbits[k].size();
            row["stabilizer_order"] = stab.order();
            row["average_point"] = point_strings(z);
            if (arr_C.group == GroupType::A) {
                row["composition"] = young_composition(z);
            }
            ordered_json elems = ordered_json::array();
            for (const GroupElement& w : stab.elements)
                elems.push_back(element_to_string(w));
            row["elements"] = std::move(elems);
            j["orbits"].push_back(std::move(row));
        }

        if (config.format == "json") {
            out << j.dump() << '\n';
        } else if (config.format == "csv") {
            out << "orbit,rep,orbit_size,stabilizer_order,average_point,composition\n";
            for (std::size_t k = 0; k < j["orbits"].size(); ++k) {
                const auto& row = j["orbits"][k];
                std::vector<std::string> z;
                for (const auto& v : row["average_point"])
                    z.push_back(v.get<std::string>());
                std::string comp;
                if (row.contains("composition")) {
                    std::vector<std::string> parts;
                    for (const auto& v : row["composition"])
                        parts.push_back(std::to_string(v.get<int>()));
                    comp = join(parts, " ");
                }
                out << k << ',' << row["rep"].get<std::string>() << ','
                    << row["orbit_size"] << ',' << row["stabilizer_order"] << ','
                    << csv_quote(join(z, " ")) << ',' << csv_quote(comp) << '\n';
            }
        } else {
            out << "family: " << family_name(config.family) << "  m: " << config.m
                << '\n';
            for (std::size_t k = 0; k < j["orbits"].size(); ++k) {
                const auto& row = j["orbits"][k];
                out << "  orbit " << k << ": rep " << row["rep"].get<std::string>()
                    << "  orbit_size " << row["orbit_size"] << "  stabilizer_order "
                    << row["stabilizer_order"] << '\n';
                std::vector<std::string> z;
                for (const auto& v : row["average_point"])
                    z.push_back(v.get<std::string>());
                out << "    average_point: (" << join(z, ", ") << ")\n";
                if (row.contains("composition")) {
                    out << "    composition:";
                    for (const auto& v : row["composition"]) out << ' ' << v;
                    out << '\n';
                }
                if (row["elements"].size() <= 24) {
                    out << "    elements:";
                    for (const auto& e : row["elements"])
                        out << ' ' << e.get<std::string>();
                    out << '\n';
                }
            }
        }
        return 0;
    });
}

int cmd_semiorders(const RunConfig& config, std::ostream& out) {
    return guarded([&] {
        validate(config);
        if (config.family != Family::catalan)
            throw std::invalid_argument(
                "semiorders are defined for the catalan family only");
        if (config.m > 7)
            throw std::invalid_argument("semiorders are supported for m <= 7");
        if (falling_product(config.m) > Integer(config.budget_chambers))
            throw BudgetExceeded("enumerating " + falling_product(config.m).str() +
                                 " chambers exceeds budget " +
                                 std::to_string(config.budget_chambers));

        const Arrangement arr_C = make_family(config.family, config.m);
        const Arrangement arr_B = make_stable_only(config.family, config.m);
        const std::vector<Chamber> ch_C = enumerate_chambers(arr_C);
        const std::vector<Chamber> ch_B = enumerate_chambers(arr_B);
        const std::size_t nA = arr_C.coxeter_part.size();
        const std::vector<Chamber> fiber =
            fiber_A(ch_C, arr_C, std::string(nA, '+'));

        ordered_json j;
        j["family"] = family_name(config.family);
        j["m"] = config.m;
        j["count"] = ch_B.size();
        j["catalan_number"] = static_cast<std::int64_t>(catalan(config.m));
        j["semiorders"] = ordered_json::array();
        for (const Chamber& b : ch_B) {
            const Semiorder s = semiorder_of_chamber(b);
            ordered_json row;
            row["signs"] = b.signs;
            row["relation"] = ordered_json::array();
            for (const auto& [a, c] : s.relation)
                row["relation"].push_back(ordered_json::array({a, c}));
            j["semiorders"].push_back(std::move(row));
        }
        j["decreasing_fiber"] = ordered_json::array();
        for (const Chamber& c : fiber) {
            const IntervalIndex index = interval_index(c);
            ordered_json row;
            row["signs"] = c.signs;
            row["intervals"] = ordered_json::array();
            for (const auto& [a, b] : index.intervals)
                row["intervals"].push_back(ordered_json::array({a, b}));
            j["decreasing_fiber"].push_back(std::move(row));
        }

        if (config.format == "json") {
            out << j.dump() << '\n';
        } else if (config.format == "csv") {
            out << "signs,relation\n";
            for (const auto& row : j["semiorders"]) {
                std::vector<std::string> pairs;
                for (const auto& p : row["relation"])
                    pairs.push_back(std::to_string(p[0].get<int>()) + ">" +
                                    std::to_string(p[1].get<int>()));
                out << row["signs"].get<std::string>() << ','
                    << csv_quote(join(pairs, " ")) << '\n';
            }
            out << "\nsigns,intervals\n";
            for (const auto& row : j["decreasing_fiber"]) {
                std::vector<std::string> pairs;
                for (const auto& p : row["intervals"])
                    pairs.push_back("[" + std::to_string(p[0].get<int>()) + "," +
                                    std::to_string(p[1].get<int>()) + "]");
                out << row["signs"].get<std::string>() << ','
                    << csv_quote(join(pairs, " ")) << '\n';
            }
        } else {
            out << "family: catalan  m: " << config.m << "  orders: " << ch_B.size()
                << "  fiber size: " << fiber.size() << '\n';
            out << "stable-part chambers and their order relations:\n";
            for (const auto& row : j["semiorders"]) {
                out << "  " << row["signs"].get<std::string>() << " :";
                if (row["relation"].empty()) out << " (none)";
                for (const auto& p : row["relation"])
                    out << ' ' << p[0] << '>' << p[1];
                out << '\n';
            }
            out << "fiber over the decreasing chamber, by interval index:\n";
            for (const auto& row : j["decreasing_fiber"]) {
                out << "  " << row["signs"].get<std::string>() << " :";
                if (row["intervals"].empty()) out << " (none)";
                for (const auto& p : row["intervals"])
                    out << " [" << p[0] << ',' << p[1] << ']';
                out << '\n';
            }
        }
        return 0;
    });
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    return guarded([&] {
        validate(config);
        const Arrangement arr_C = make_family(config.family, config.m);
        enumeration_budgeted_charpoly(arr_C, config);

        const std::vector<CheckResult> identities = verify_identities();
        const std::vector<CheckResult> family_checks =
            verify_family(config.family, config.m, config.threads, config.seed);
        const bool ok = all_passed(identities) && all_passed(family_checks);

        if (config.format == "json") {
            ordered_json j;
            j["family"] = family_name(config.family);
            j["m"] = config.m;
            const auto dump = [](const std::vector<CheckResult>& checks) {
                ordered_json arr = ordered_json::array();
                for (const CheckResult& c : checks) {
                    ordered_json row;
                    row["name"] = c.name;
                    row["pass"] = c.pass;
                    row["detail"] = c.detail;
                    arr.push_back(std::move(row));
                }
                return arr;
            };
            j["identities"] = dump(identities);
            j["family_checks"] = dump(family_checks);
            j["all_passed"] = ok;
            out << j.dump() << '\n';
        } else if (config.format == "csv") {
            out << "suite,name,pass,detail\n";
            for (const CheckResult& c : identities)
                out << "identities," << c.name << ',' << (c.pass ? "PASS" : "FAIL")
                    << ',' << csv_quote(c.detail) << '\n';
            for (const CheckResult& c : family_checks)
                out << "family," << c.name << ',' << (c.pass ? "PASS" : "FAIL") << ','
                    << csv_quote(c.detail) << '\n';
        } else {
            out << "verify: family " << family_name(config.family) << "  m "
                << config.m << '\n';
            const auto table = [&out](const std::string& title,
                                      const std::vector<CheckResult>& checks) {
                out << title << ":\n";
                for (const CheckResult& c : checks)
                    out << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                        << "  -- " << c.detail << '\n';
            };
            table("identity checks", identities);
            table("family checks", family_checks);
            out << (ok ? "ALL CHECKS PASSED" : "CHECKS FAILED") << '\n';
        }
        return ok ? 0 : 1;
    });
}

}  // namespace chamber_orbits
