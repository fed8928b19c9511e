#pragma once

// JSON presentation files for skew PBW rings.
//
// {
//   "schema_version": 1,
//   "vars": ["x", "y", "z"],
//   "field": "Q" | "Q(i)" | "GF(9)",
//   "relations": [{"j": "z", "i": "x", "c": "1", "a": {"x": "-1"}, "d": "0"}, ...],
//   "sigma": {"x": 1},
//   "delta": {"x": "g"}
// }
//
// j and i are variable names or 1-based indices with i before j. Coefficients are
// strings in the field grammar (or JSON integers); "a" is an object keyed by
// variable or an array with one entry per variable.

#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "skewalg/gf.hpp"
#include "skewalg/parse.hpp"
#include "skewalg/rational.hpp"
#include "skewalg/spbw.hpp"

namespace skewalg::cli {

using json = nlohmann::ordered_json;

constexpr int presentation_schema_version = 1;

/// Expression adapter for bare field constants.
template <class K>
struct FieldExpr {
    using value_type = typename K::value_type;
    const K& F;
    value_type add(const value_type& a, const value_type& b) const { return F.add(a, b); }
    value_type sub(const value_type& a, const value_type& b) const { return F.sub(a, b); }
    value_type neg(const value_type& a) const { return F.neg(a); }
    value_type mul(const value_type& a, const value_type& b) const { return F.mul(a, b); }
    value_type div(const value_type& a, const value_type& b) const { return F.mul(a, F.inv(b)); }
    value_type pow(const value_type& a, unsigned n) const {
        value_type r = F.one();
        for (unsigned i = 0; i < n; ++i) r = F.mul(r, a);
        return r;
    }
    value_type number(const std::string& d) const { return F.from_decimal(d); }
    value_type atom(const std::string& name) const {
        if (auto v = F.atom(name)) return *v;
        throw std::invalid_argument("unknown constant '" + name + "'");
    }
};

template <class K>
typename K::value_type parse_constant(const K& F, const json& v) {
    if (v.is_number_integer()) {
        const long long n = v.get<long long>();
        return n < 0 ? F.neg(F.from_decimal(std::to_string(-n))) : F.from_decimal(std::to_string(n));
    }
    if (!v.is_string()) throw std::invalid_argument("coefficient must be a string or an integer");
    return parse_expression(FieldExpr<K>{F}, v.get<std::string>());
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open presentation file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw std::invalid_argument("malformed presentation file '" + path + "': " + e.what());
    }
}

inline std::size_t var_index(const std::vector<std::string>& vars, const json& v) {
    if (v.is_number_integer()) {
        const long long i = v.get<long long>();
        if (i < 1 || static_cast<std::size_t>(i) > vars.size()) throw std::invalid_argument("variable index out of range");
        return static_cast<std::size_t>(i - 1);
    }
    if (v.is_string()) {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == v.get<std::string>()) return i;
    }
    throw std::invalid_argument("unknown variable " + v.dump());
}

template <class K>
PBWRing<K> build_presentation(const K& F, const json& p) {
    if (p.contains("schema_version") && p.at("schema_version") != presentation_schema_version)
        throw std::invalid_argument("unsupported presentation schema_version");
    if (!p.contains("vars") || !p.at("vars").is_array()) throw std::invalid_argument("presentation needs a vars array");
    const auto vars = p.at("vars").get<std::vector<std::string>>();
    PBWRing<K> R(F, vars);
    const std::size_t n = vars.size();
    if (p.contains("relations")) {
        for (const auto& r : p.at("relations")) {
            std::size_t j = var_index(vars, r.at("j")), i = var_index(vars, r.at("i"));
            if (i >= j) throw std::invalid_argument("relation needs i before j");
            auto c = r.contains("c") ? parse_constant(F, r.at("c")) : F.one();
            std::vector<typename K::value_type> a(n, F.zero());
            if (r.contains("a")) {
                const auto& av = r.at("a");
                if (av.is_array()) {
                    if (av.size() != n) throw std::invalid_argument("relation linear part needs one entry per variable");
                    for (std::size_t k = 0; k < n; ++k) a[k] = parse_constant(F, av[k]);
                } else {
                    for (auto it = av.begin(); it != av.end(); ++it) a[var_index(vars, json(it.key()))] = parse_constant(F, it.value());
                }
            }
            auto d = r.contains("d") ? parse_constant(F, r.at("d")) : F.zero();
            R.set_relation(j, i, c, a, d);
        }
    }
    if (p.contains("sigma"))
        for (auto it = p.at("sigma").begin(); it != p.at("sigma").end(); ++it)
            R.set_sigma(var_index(vars, json(it.key())), it.value().get<long long>());
    if (p.contains("delta"))
        for (auto it = p.at("delta").begin(); it != p.at("delta").end(); ++it)
            R.set_delta(var_index(vars, json(it.key())), parse_constant(F, it.value()));
    return R;
}

}  // namespace skewalg::cli
