#include "gfp/serialize.hpp"

namespace gfp {

Json series_to_json(const IntSeries& s) {
    Json out = Json::array();
    for (const auto& c : s.coeffs()) out.push_back(c.get_str());
    return out;
}

IntSeries series_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("series JSON must be a non-empty array");
    std::vector<BigInt> coeffs;
    for (const auto& e : j) {
        if (!e.is_string()) throw std::invalid_argument("series coefficients must be decimal strings");
        BigInt v;
        if (v.set_str(e.get<std::string>(), 10) != 0)
            throw std::invalid_argument("bad decimal coefficient '" + e.get<std::string>() + "'");
        coeffs.push_back(v);
    }
    return IntSeries(std::move(coeffs));
}

namespace {

Json row_to_json(const Row& row) {
    Json out = Json::array();
    for (const auto& p : row) {
        Json part = Json::array({p.value});
        if (p.color != 0) part.push_back(p.color);
        out.push_back(std::move(part));
    }
    return out;
}

}  // namespace

Json array_to_json(const FrobeniusArray& a) {
    Json out = Json::object();
    out["top"] = row_to_json(a.top);
    out["bottom"] = row_to_json(a.bottom);
    return out;
}

Json claim_to_json(const CongruenceClaim& c) {
    Json out = Json::object();
    out["A"] = c.A;
    out["B"] = c.B;
    out["M"] = c.M;
    out["verified_up_to"] = c.verified_up_to;
    out["status"] = c.status == ClaimStatus::verified ? "verified" : "violated";
    out["subsumed"] = c.subsumed;
    if (c.first_counterexample) out["first_counterexample"] = *c.first_counterexample;
    return out;
}

}  // namespace gfp
