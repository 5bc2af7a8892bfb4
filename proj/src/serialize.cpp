#include "qvl/serialize.hpp"

#include <stdexcept>

namespace qvl {

Json to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back(Json::array({e, c.str()}));
    return Json{{"s_terms", std::move(terms)}};
}

LaurentPoly laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("s_terms") || !j["s_terms"].is_array())
        throw std::invalid_argument("laurent_from_json: malformed value");
    std::vector<LaurentPoly::Term> terms;
    for (const auto& t : j["s_terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
            throw std::invalid_argument("laurent_from_json: malformed term");
        terms.emplace_back(t[0].get<int>(), Int(t[1].get<std::string>()));
    }
    return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const QRational& r) {
    return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

QRational qrational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("qrational_from_json: malformed value");
    return QRational(laurent_from_json(j["num"]), laurent_from_json(j["den"]));
}

Json to_json(const Rational& r) {
    return Json{{"p", numerator(r).str()}, {"q", denominator(r).str()}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q"))
        throw std::invalid_argument("rational_from_json: malformed value");
    return Rational(Int(j["p"].get<std::string>()), Int(j["q"].get<std::string>()));
}

}  // namespace qvl
