#include "linkhom/json_io.hpp"

#include <sstream>

namespace linkhom {

using nlohmann::json;

json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"q", m.eq}, {"a", m.ea}, {"t", m.et}, {"c", c.str()}});
    }
    return terms;
}

json to_json(const RationalQat& x) {
    return json{{"terms", to_json(x.num())}, {"dpow", x.dpow()}};
}

RationalQat rationalqat_from_json(const json& j) {
    Poly num;
    for (const auto& term : j.at("terms"))
        num += Poly::monomial(term.at("q").get<unsigned>(), term.at("a").get<unsigned>(),
                              term.at("t").get<unsigned>(),
                              Int(term.at("c").get<std::string>()));
    return RationalQat(std::move(num), j.at("dpow").get<unsigned>());
}

json to_json(const RatFunc& x) {
    return json{{"num", x.num().str()}, {"den", x.den().str()}};
}

RatFunc ratfunc_from_json(const json& j) {
    return RatFunc(Poly::parse(j.at("num").get<std::string>()),
                   Poly::parse(j.at("den").get<std::string>()));
}

json to_json(const BarredWord& w) {
    json bars = json::array();
    for (uint8_t b : w.bars) bars.push_back(b != 0);
    return json{{"levels", w.levels}, {"bars", bars}};
}

BarredWord barredword_from_json(const json& j) {
    BarredWord w;
    w.levels = j.at("levels").get<std::vector<unsigned>>();
    for (const auto& b : j.at("bars")) w.bars.push_back(b.get<bool>() ? 1 : 0);
    if (w.bars.size() != w.levels.size())
        throw std::invalid_argument("barred word: levels/bars length mismatch");
    return w;
}

namespace {

json coeff_map_to_json(const std::map<Partition, RatFunc>& coeffs) {
    json arr = json::array();
    for (const auto& [lambda, c] : coeffs) {
        arr.push_back({{"partition", lambda.parts()},
                       {"num", c.num().str()},
                       {"den", c.den().str()}});
    }
    return arr;
}

}  // namespace

json symfunc_to_json(const SymFunc& f, const std::string& basis) {
    return json{{"degree", f.degree()}, {"basis", basis}, {"coeffs", coeff_map_to_json(f.coeffs())}};
}

SymFunc symfunc_from_json(const json& j) {
    SymFunc f(j.at("degree").get<unsigned>());
    for (const auto& entry : j.at("coeffs")) {
        Partition lambda(entry.at("partition").get<std::vector<unsigned>>());
        f.set_coeff(lambda, RatFunc(Poly::parse(entry.at("num").get<std::string>()),
                                    Poly::parse(entry.at("den").get<std::string>())));
    }
    return f;
}

json to_json(const MacExpansion& x) {
    return json{{"degree", x.degree()},
                {"basis", "Htilde"},
                {"coeffs", coeff_map_to_json(x.coords())}};
}

json to_json(const PoincareSeries& s) {
    return json{{"word", s.v.str()},
                {"method", fv_method_name(s.method)},
                {"value", to_json(s.value)}};
}

json to_json(const ConjectureReport& r) {
    json j{{"id", r.id}, {"parameters", r.parameters}, {"verdict", r.pass ? "pass" : "fail"}};
    if (!r.note.empty()) j["note"] = r.note;
    if (r.witness) {
        j["witness"] = json{{"partition", r.witness->partition},
                            {"monomial", r.witness->monomial},
                            {"expected", r.witness->expected},
                            {"actual", r.witness->actual}};
    }
    return j;
}

}  // namespace linkhom
