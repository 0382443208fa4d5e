#include "equichar/serialize.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace equichar {

namespace {

Basis basis_from_string(const std::string& s)
{
    if (s == "powersum") return Basis::PowerSum;
    if (s == "schur") return Basis::Schur;
    throw std::invalid_argument("unknown basis '" + s + "'");
}

}  // namespace

Json to_json(const Partition& p)
{
    Json j = Json::array();
    for (int part : p.parts()) j.push_back(part);
    return j;
}

Partition partition_from_json(const Json& j)
{
    if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

Json to_json(const QPoly& p)
{
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rational_to_string(c);
    return j;
}

QPoly qpoly_from_json(const Json& j)
{
    if (!j.is_object()) throw std::invalid_argument("coefficient must be a JSON object");
    QPoly p;
    for (const auto& [key, value] : j.items()) {
        const int e = std::stoi(key);
        if (std::to_string(e) != key) throw std::invalid_argument("malformed exponent '" + key + "'");
        p.add_term(e, rational_from_string(value.get<std::string>()));
    }
    return p;
}

Json to_json(const SymFunc& f)
{
    std::vector<const SymFunc::Terms::value_type*> sorted;
    for (const auto& t : f.terms()) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [](auto* a, auto* b) { return PresentationLess{}(a->first, b->first); });
    Json j;
    j["basis"] = basis_name(f.basis());
    const auto ds = f.degrees();
    j["degree"] = ds.size() == 1 ? Json(*ds.begin()) : Json(nullptr);
    Json terms = Json::array();
    for (auto* t : sorted) {
        Json term;
        term["part"] = to_json(t->first);
        term["coeff"] = to_json(t->second);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

SymFunc symfunc_from_json(const Json& j)
{
    SymFunc f(basis_from_string(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms"))
        f.add_term(partition_from_json(term.at("part")), qpoly_from_json(term.at("coeff")));
    return f;
}

Json to_json(const BiSymFunc& f)
{
    std::vector<const BiSymFunc::Terms::value_type*> sorted;
    for (const auto& t : f.terms()) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
        PresentationLess less;
        if (a->first.first != b->first.first) return less(a->first.first, b->first.first);
        return less(a->first.second, b->first.second);
    });
    Json j;
    j["basis"] = basis_name(f.basis());
    const auto ds = f.bidegrees();
    j["bidegree"] = ds.size() == 1 ? Json::array({ds.begin()->first, ds.begin()->second}) : Json(nullptr);
    Json terms = Json::array();
    for (auto* t : sorted) {
        Json term;
        term["x"] = to_json(t->first.first);
        term["y"] = to_json(t->first.second);
        term["coeff"] = to_json(t->second);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

BiSymFunc bisymfunc_from_json(const Json& j)
{
    BiSymFunc f(basis_from_string(j.at("basis").get<std::string>()));
    for (const auto& term : j.at("terms"))
        f.add_term(partition_from_json(term.at("x")), partition_from_json(term.at("y")),
                   qpoly_from_json(term.at("coeff")));
    return f;
}

}  // namespace equichar
