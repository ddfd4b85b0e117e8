#include <sstream>

#include "json.hpp"
#include "rrc/series.hpp"

namespace rrc {

std::string series_to_json(const PuiseuxSeries& s) {
    PuiseuxSeries c = s;
    c.reduce_grid();
    std::ostringstream os;
    os << "{\"denom\":" << c.denom() << ",\"prec\":\"";
    if (c.precision())
        os << to_string(*c.precision());
    else
        os << "inf";
    os << "\",\"terms\":[";
    bool first = true;
    for (const auto& [e, coeff] : c.raw_terms()) {
        if (!first) os << ",";
        first = false;
        os << "[" << e << ",\"" << coeff.str() << "\"]";
    }
    os << "]}";
    return os.str();
}

PuiseuxSeries series_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad series JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("denom") || !j.contains("prec") || !j.contains("terms"))
        throw ParseError("series JSON must carry denom, prec, terms");
    if (!j["denom"].is_number_integer()) throw ParseError("series denom must be an integer");
    long denom = j["denom"].get<long>();
    Prec prec;
    if (!j["prec"].is_string()) throw ParseError("series prec must be a string");
    std::string ps = j["prec"].get<std::string>();
    if (ps != "inf") prec = parse_rational(ps);
    if (!j["terms"].is_array()) throw ParseError("series terms must be an array");
    std::map<long, Scalar> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
            throw ParseError("series term must be [exponent, \"coeff\"]");
        long e = t[0].get<long>();
        Scalar c = Scalar::parse(t[1].get<std::string>());
        if (terms.count(e)) throw ParseError("duplicate series exponent");
        terms.emplace(e, c);
    }
    return PuiseuxSeries::from_raw(denom, std::move(terms), prec);
}

}  // namespace rrc
