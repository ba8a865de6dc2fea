#pragma once

#include <json.hpp>

#include "nodal/polynomial.hpp"

namespace nodal {

/// Structured polynomial form: a list of {"coefficient": "p/q",
/// "exponents": {name: power}} records in canonical term order, nonzero
/// exponents only. Deterministic for fixed input.
inline nlohmann::ordered_json to_json_records(const SparsePolynomial& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        nlohmann::ordered_json rec;
        rec["coefficient"] = c.str();
        nlohmann::ordered_json exps = nlohmann::ordered_json::object();
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) exps[p.ring()->variables()[i]] = e[i];
        rec["exponents"] = exps;
        arr.push_back(rec);
    }
    return arr;
}

}  // namespace nodal
