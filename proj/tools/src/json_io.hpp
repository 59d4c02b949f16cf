#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "ajforge/ajforge.hpp"

namespace ajforge::cli {

using json = nlohmann::ordered_json;

inline json to_json(const Rational &x) { return x.to_string(); }

inline json to_json(const CyclotomicElement &x)
{
    json coords = json::array();
    for (const Rational &c : x.coords())
        coords.push_back(c.to_string());
    return {{"m", x.modulus()}, {"coords", coords}};
}

inline json to_json(const QPoly &p)
{
    json out = json::array();
    for (const auto &[e, c] : p.terms()) {
        json ev = json::array();
        for (unsigned k = 0; k < p.arity(); ++k)
            ev.push_back(e[k]);
        out.push_back(json::array({ev, c.to_string()}));
    }
    return out;
}

inline json to_json(const Truncation &t)
{
    return t.is_finite() ? json{{"finite", t.bound()}} : json{{"infinite", t.bound()}};
}

template <ScalarAlgebra S>
json to_json(const Series<S> &f)
{
    json coeffs = json::array();
    for (const S &c : f.coeffs())
        coeffs.push_back(to_json(c));
    return {{"truncation", to_json(f.truncation())}, {"coeffs", coeffs}};
}

template <ScalarAlgebra S>
json to_json(const std::map<unsigned, S> &m)
{
    json out = json::object();
    for (const auto &[k, v] : m)
        out[std::to_string(k)] = to_json(v);
    return out;
}

template <ScalarField S>
json to_json(const SolutionParams<S> &p)
{
    json tail = json::array();
    for (const S &c : p.tail)
        tail.push_back(to_json(c));
    return {{"c1", to_json(p.c1)}, {"c_lp1", p.c_lp1 ? to_json(*p.c_lp1) : json(nullptr)}, {"tail", tail}};
}

} // namespace ajforge::cli
