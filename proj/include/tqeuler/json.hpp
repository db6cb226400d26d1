#pragma once

#include <tqeuler/error.hpp>
#include <tqeuler/laurent_poly.hpp>

#include <nlohmann/json.hpp>

#include <string>

namespace tqeuler {

// [{"et": int, "eq": int, "c": "decimal"}, ...] in canonical term order.
inline nlohmann::ordered_json poly_to_json(const laurent_poly& p)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back({{"et", e.t}, {"eq", e.q}, {"c", c.str()}});
    return arr;
}

template <typename Json>
laurent_poly poly_from_json(const Json& arr)
{
    laurent_poly p;
    for (const auto& term : arr) {
        const std::string digits = term.at("c").template get<std::string>();
        p.add_term(exponent{term.at("et").template get<int>(), term.at("eq").template get<int>()},
                   big_int(digits));
    }
    return p;
}

} // namespace tqeuler
