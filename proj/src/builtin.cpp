#include "loowit/builtin.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace loowit {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find(sep, start);
        const std::size_t end = pos == std::string_view::npos ? text.size() : pos;
        out.emplace_back(text.substr(start, end - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw Error("builtin spec: value of '" + key + "' is not a number: " + text);
    }
    return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    for (const auto& tok : split(text, '/')) out.push_back(parse_double(key, tok));
    return out;
}

}  // namespace

double BuiltinSpec::get_double(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) throw Error("builtin spec '" + name + "': missing key '" + key + "'");
    return parse_double(key, it->second);
}

double BuiltinSpec::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

int BuiltinSpec::get_int(const std::string& key) const {
    const double v = get_double(key);
    if (v != std::floor(v)) throw Error("builtin spec: '" + key + "' must be an integer");
    return static_cast<int>(v);
}

int BuiltinSpec::get_int(const std::string& key, int fallback) const {
    return has(key) ? get_int(key) : fallback;
}

BuiltinSpec parse_builtin(std::string_view text) {
    BuiltinSpec spec;
    const std::size_t colon = text.find(':');
    spec.name = std::string(text.substr(0, colon));
    if (spec.name.empty()) throw Error("builtin spec: empty name");
    if (colon == std::string_view::npos) return spec;
    for (const auto& item : split(text.substr(colon + 1), ',')) {
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            spec.flags.insert(item);
        } else {
            spec.values[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    return spec;
}

BipartiteState make_builtin_state(const BuiltinSpec& spec) {
    if (spec.name == "horodecki") return horodecki_rho(spec.get_double("a"));
    if (spec.name == "werner") return werner2(spec.get_double("p"));
    if (spec.name == "family") {
        if (spec.has("a")) {
            std::vector<double> a = parse_list("a", spec.values.at("a"));
            const int d = static_cast<int>(a.size());
            return family_rho(FamilyParams(d, std::move(a)));
        }
        return family_rho(
            family_special(spec.get_int("d", 3), spec.get_double("a1"), spec.get_double("a2")));
    }
    if (spec.name == "phi") {
        const int d = spec.get_int("d", 3);
        const CVector v = phi(d);
        return BipartiteState(DimPair(d, d), (v * v.adjoint()) / static_cast<double>(d),
                              "phi:d=" + std::to_string(d));
    }
    if (spec.name == "product") {
        const int d = spec.get_int("d", 3);
        return random_product_state(DimPair(d, d),
                                    static_cast<std::uint64_t>(spec.get_int("seed", 0)));
    }
    if (spec.name == "separable") {
        const int d = spec.get_int("d", 3);
        return random_separable_state(DimPair(d, d), spec.get_int("k", 8),
                                      static_cast<std::uint64_t>(spec.get_int("seed", 0)));
    }
    throw Error("unknown builtin state '" + spec.name + "'");
}

Witness make_builtin_witness(const BuiltinSpec& spec) {
    if (spec.name == "horodecki") return horodecki_ew(spec.get_double("a")).witness;
    if (spec.name == "perm") {
        if (spec.has("sigma")) {
            std::vector<int> map;
            for (double v : parse_list("sigma", spec.values.at("sigma"))) {
                map.push_back(static_cast<int>(v) - 1);
            }
            return perm_ew(Permutation(std::move(map)));
        }
        if (spec.flags.count("cycle") != 0 || spec.has("l")) {
            return perm_ew(diag_cycle(spec.get_int("d", 3), spec.get_int("l", 1)));
        }
        throw Error("perm witness needs 'cycle,d=..,l=..' or 'sigma=..'");
    }
    throw Error("unknown builtin witness '" + spec.name + "'");
}

OrthTransform load_transform(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open transform file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("malformed transform file " + path + ": " + e.what());
    }
    const nlohmann::json& rows = j.contains("matrix") ? j.at("matrix") : j.at("re");
    if (!rows.is_array() || rows.empty()) throw Error("transform file: matrix must be 2-D");
    const auto n = static_cast<Eigen::Index>(rows.size());
    RMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!rows[i].is_array() || static_cast<Eigen::Index>(rows[i].size()) != n) {
            throw Error("transform file: matrix must be square");
        }
        for (Eigen::Index k = 0; k < n; ++k) m(i, k) = rows[i][k].get<double>();
    }
    return OrthTransform::from_matrix(std::move(m));
}

}  // namespace loowit
