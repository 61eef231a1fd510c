#include "su3sl/json_io.hpp"

#include "su3sl/errors.hpp"

namespace su3sl {

json to_json(const GQ& v) {
    return json{{"re", to_string(v.re())}, {"im", to_string(v.im())}};
}

GQ gq_from_json(const json& j) {
    if (j.is_string()) return GQ(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return GQ(Rational(j.get<long>()));
    if (!j.is_object()) throw ParseError("expected rational string or {re,im} object");
    Rational re = j.contains("re") ? parse_rational(j.at("re").get<std::string>()) : Rational(0);
    Rational im = j.contains("im") ? parse_rational(j.at("im").get<std::string>()) : Rational(0);
    return GQ(re, im);
}

json to_json(const ParamCoeff& c) {
    json j{{"re", to_string(c.constant().re())}, {"im", to_string(c.constant().im())}};
    if (!c.linear().empty()) {
        json params = json::object();
        for (auto& [name, v] : c.linear()) params[name] = to_json(v);
        j["params"] = std::move(params);
    }
    return j;
}

ParamCoeff param_coeff_from_json(const json& j) {
    ParamCoeff c(gq_from_json(j));
    if (j.contains("params")) {
        for (auto& [name, v] : j.at("params").items()) c += ParamCoeff::symbol(name, gq_from_json(v));
    }
    return c;
}

json to_json(const Form& f) {
    json gens = json::array();
    const auto& sp = *f.space();
    for (std::uint32_t i = 0; i < sp.size(); ++i) {
        gens.push_back(json{{"name", sp.gen(i).name},
                            {"conj", sp.gen(sp.gen(i).conj).name},
                            {"independence", sp.gen(i).independence}});
    }
    json terms = json::array();
    for (auto& [idx, c] : f.terms()) {
        terms.push_back(json{{"indices", idx}, {"coeff", to_json(c)}});
    }
    return json{{"generators", std::move(gens)}, {"terms", std::move(terms)}};
}

Form form_from_json(const json& j) {
    std::vector<Generator> gens;
    std::vector<std::string> conj_names;
    for (auto& g : j.at("generators")) {
        Generator gen;
        gen.name = g.at("name").get<std::string>();
        gen.independence = g.value("independence", false);
        gens.push_back(gen);
        conj_names.push_back(g.at("conj").get<std::string>());
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool found = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (gens[k].name == conj_names[i]) {
                gens[i].conj = static_cast<std::uint32_t>(k);
                found = true;
                break;
            }
        }
        if (!found) throw ParseError("conjugate generator '" + conj_names[i] + "' not listed");
    }
    // Parameter symbols seen in the terms: without a declaration we treat a
    // symbol as its own conjugate unless a partner named <sym>bar exists.
    ParamTable table;
    if (j.contains("terms")) {
        for (auto& t : j.at("terms")) {
            if (t.at("coeff").contains("params"))
                for (auto& [name, v] : t.at("coeff").at("params").items()) table.declare_real(name);
        }
    }
    SpaceRef sp = GeneratorSpace::make(std::move(gens), std::move(table));
    Form f = Form::zero(sp);
    if (j.contains("terms")) {
        for (auto& t : j.at("terms")) {
            IndexTuple idx = t.at("indices").get<IndexTuple>();
            f += Form::monomial(sp, idx, param_coeff_from_json(t.at("coeff")));
        }
    }
    return f;
}

} // namespace su3sl
