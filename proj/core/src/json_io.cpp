#include "loopkit/json_io.hpp"

#include <json.hpp>

#include "loopkit/errors.hpp"

namespace loopkit {

std::string tau_poly_to_json(const TauPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const BigInt& c : p.coefficients()) coeffs.push_back(c.str());
    nlohmann::json obj{{"var", "tau"}, {"coeffs", coeffs}};
    return obj.dump();
}

TauPoly tau_poly_from_json(std::string_view text) {
    nlohmann::json obj = nlohmann::json::parse(text, nullptr, false);
    if (obj.is_discarded() || !obj.is_object())
        throw ValidationError("not a JSON object: '" + std::string(text) + "'");
    if (obj.value("var", "") != std::string("tau"))
        throw ValidationError("polynomial object must carry \"var\":\"tau\"");
    if (!obj.contains("coeffs") || !obj["coeffs"].is_array())
        throw ValidationError("polynomial object must carry a \"coeffs\" array");
    std::vector<BigInt> coeffs;
    for (const auto& c : obj["coeffs"]) {
        if (!c.is_string()) throw ValidationError("coefficients must be decimal strings");
        coeffs.push_back(parse_bigint(c.get<std::string>()));
    }
    return TauPoly(std::move(coeffs));
}

}  // namespace loopkit
