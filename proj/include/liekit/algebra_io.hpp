#pragma once

#include "expr_parser.hpp"
#include "family.hpp"
#include "lie_algebra.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace liekit {

/// Any problem with an algebra file: JSON syntax, schema violations, bad
/// indices, malformed coefficients. The CLI maps this to a usage error.
class AlgebraFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using AlgebraOrFamily = std::variant<LieAlgebra, LieFamily>;

namespace detail {

inline std::size_t require_index(const nlohmann::json& j, const char* what, std::size_t dim,
                                 const std::string& where) {
    if (!j.is_number_unsigned())
        throw AlgebraFileError(where + ": " + what + " must be a positive integer");
    std::size_t v = j.get<std::size_t>();
    if (v < 1 || v > dim)
        throw AlgebraFileError(where + ": " + what + " " + std::to_string(v) +
                               " out of range 1.." + std::to_string(dim));
    return v;
}

inline void reject_unknown_keys(const nlohmann::json& obj,
                                const std::set<std::string>& known,
                                const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (!known.count(key)) throw AlgebraFileError(where + ": unknown key \"" + key + "\"");
}

}  // namespace detail

/// Parse the strict JSON algebra format:
///
///   {
///     "dim": 3,
///     "basis": ["e1", "e2", "e3"],          // optional, defaults to e1..en
///     "params": ["alpha"],                   // optional; present => family
///     "brackets": [
///       {"left": 1, "right": 2,
///        "terms": [{"target": 3, "coeff": "1"}]}
///     ]
///   }
///
/// Indices are 1-based with left < right; duplicate (left, right) pairs,
/// duplicate targets, unknown keys, and coefficients mentioning undeclared
/// parameters are all rejected. Returns a LieFamily when "params" is
/// present, otherwise a LieAlgebra.
inline AlgebraOrFamily parse_algebra_file(const std::string& text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw AlgebraFileError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw AlgebraFileError("top level must be a JSON object");
    detail::reject_unknown_keys(root, {"dim", "basis", "params", "brackets"}, "top level");
    if (!root.contains("dim") || !root["dim"].is_number_unsigned())
        throw AlgebraFileError("\"dim\" must be a nonnegative integer");
    const std::size_t dim = root["dim"].get<std::size_t>();
    if (dim > 1000) throw AlgebraFileError("\"dim\" is implausibly large");

    std::vector<std::string> labels;
    if (root.contains("basis")) {
        if (!root["basis"].is_array() || root["basis"].size() != dim)
            throw AlgebraFileError("\"basis\" must be an array of dim names");
        std::set<std::string> seen;
        for (const auto& item : root["basis"]) {
            if (!item.is_string() || item.get<std::string>().empty())
                throw AlgebraFileError("basis labels must be nonempty strings");
            if (!seen.insert(item.get<std::string>()).second)
                throw AlgebraFileError("duplicate basis label \"" + item.get<std::string>() + "\"");
            labels.push_back(item.get<std::string>());
        }
    }

    const bool is_family = root.contains("params");
    std::vector<std::string> params;
    if (is_family) {
        if (!root["params"].is_array())
            throw AlgebraFileError("\"params\" must be an array of names");
        std::set<std::string> seen;
        for (const auto& item : root["params"]) {
            if (!item.is_string() || item.get<std::string>().empty())
                throw AlgebraFileError("parameter names must be nonempty strings");
            if (!seen.insert(item.get<std::string>()).second)
                throw AlgebraFileError("duplicate parameter \"" + item.get<std::string>() + "\"");
            params.push_back(item.get<std::string>());
        }
    }

    if (!root.contains("brackets") || !root["brackets"].is_array())
        throw AlgebraFileError("\"brackets\" must be an array");

    LieTable<Polynomial> table(dim);
    if (!labels.empty()) table.set_labels(labels);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    std::set<std::string> declared(params.begin(), params.end());
    std::size_t index = 0;
    for (const auto& rec : root["brackets"]) {
        std::string where = "brackets[" + std::to_string(index++) + "]";
        if (!rec.is_object()) throw AlgebraFileError(where + ": must be an object");
        detail::reject_unknown_keys(rec, {"left", "right", "terms"}, where);
        if (!rec.contains("left") || !rec.contains("right") || !rec.contains("terms"))
            throw AlgebraFileError(where + ": needs keys left, right, terms");
        std::size_t left = detail::require_index(rec["left"], "left", dim, where);
        std::size_t right = detail::require_index(rec["right"], "right", dim, where);
        if (left >= right)
            throw AlgebraFileError(where + ": left must be smaller than right (got " +
                                   std::to_string(left) + ", " + std::to_string(right) + ")");
        if (!pairs.emplace(left, right).second)
            throw AlgebraFileError(where + ": duplicate bracket (" + std::to_string(left) + ", " +
                                   std::to_string(right) + ")");
        if (!rec["terms"].is_array()) throw AlgebraFileError(where + ": terms must be an array");
        std::vector<Polynomial> row(dim);
        std::set<std::size_t> targets;
        std::size_t tindex = 0;
        for (const auto& term : rec["terms"]) {
            std::string twhere = where + ".terms[" + std::to_string(tindex++) + "]";
            if (!term.is_object()) throw AlgebraFileError(twhere + ": must be an object");
            detail::reject_unknown_keys(term, {"target", "coeff"}, twhere);
            if (!term.contains("target") || !term.contains("coeff"))
                throw AlgebraFileError(twhere + ": needs keys target, coeff");
            std::size_t target = detail::require_index(term["target"], "target", dim, twhere);
            if (!targets.insert(target).second)
                throw AlgebraFileError(twhere + ": duplicate target " + std::to_string(target));
            if (!term["coeff"].is_string())
                throw AlgebraFileError(twhere + ": coeff must be a string expression");
            Polynomial p;
            try {
                p = parse_coefficient(term["coeff"].get<std::string>());
            } catch (const ExprError& e) {
                throw AlgebraFileError(twhere + ": bad coefficient: " + e.what());
            }
            for (const auto& v : p.variables())
                if (!declared.count(v))
                    throw AlgebraFileError(twhere + ": unknown parameter \"" + v + "\"");
            row[target - 1] = std::move(p);
        }
        table.set_bracket(left - 1, right - 1, std::move(row));
    }

    if (is_family) return LieFamily(std::move(table), std::move(params));

    LieAlgebra g(dim);
    g.set_labels(table.labels());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j) {
            Vec row(dim, Scalar(0));
            bool any = false;
            for (const auto& [k, c] : table.terms(i, j)) {
                row[k] = c.constant_value();
                any = any || !is_zero(row[k]);
            }
            if (any) g.set_bracket(i, j, std::move(row));
        }
    return g;
}

namespace detail {

template <typename R>
nlohmann::ordered_json table_to_json(const LieTable<R>& t) {
    nlohmann::ordered_json out;
    out["dim"] = t.dim();
    out["basis"] = t.labels();
    nlohmann::ordered_json brackets = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < t.dim(); ++i) {
        for (std::size_t j = i + 1; j < t.dim(); ++j) {
            auto terms = t.terms(i, j);
            if (terms.empty()) continue;
            nlohmann::ordered_json rec;
            rec["left"] = i + 1;
            rec["right"] = j + 1;
            nlohmann::ordered_json jterms = nlohmann::ordered_json::array();
            for (const auto& [k, c] : terms) {
                nlohmann::ordered_json jt;
                jt["target"] = k + 1;
                jt["coeff"] = to_string(c);
                jterms.push_back(std::move(jt));
            }
            rec["terms"] = std::move(jterms);
            brackets.push_back(std::move(rec));
        }
    }
    out["brackets"] = std::move(brackets);
    return out;
}

}  // namespace detail

/// Canonical rendering: fixed key order, brackets ascending by (left, right),
/// targets ascending, canonical coefficient strings, two-space indent, one
/// trailing newline. Parsing the output reproduces the input table exactly,
/// and re-rendering is byte-identical.
inline std::string render_algebra(const LieAlgebra& g) {
    return detail::table_to_json(g).dump(2) + "\n";
}

inline std::string render_family(const LieFamily& f) {
    nlohmann::ordered_json out = detail::table_to_json(f.table());
    // insert params after basis, keeping the documented key order
    nlohmann::ordered_json with_params;
    with_params["dim"] = out["dim"];
    with_params["basis"] = out["basis"];
    with_params["params"] = f.params();
    with_params["brackets"] = out["brackets"];
    return with_params.dump(2) + "\n";
}

inline std::string render(const AlgebraOrFamily& any) {
    if (std::holds_alternative<LieAlgebra>(any)) return render_algebra(std::get<LieAlgebra>(any));
    return render_family(std::get<LieFamily>(any));
}

}  // namespace liekit
