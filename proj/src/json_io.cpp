#include "fano/json_io.hpp"

namespace fano {

nlohmann::json to_json(const Rational& r)
{
    return {{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

Rational rational_from_json(const nlohmann::json& j)
{
    return Rational(mpz_class(j.at("num").get<std::string>()), mpz_class(j.at("den").get<std::string>()));
}

nlohmann::json to_json(const DivisorClass& d)
{
    nlohmann::json coords = nlohmann::json::array({to_json(d.first())});
    if (d.rank() == 2)
        coords.push_back(to_json(d.second()));
    return {{"basis", to_string(d.basis())}, {"coords", coords}};
}

nlohmann::json to_json(const TrilinearForm& f)
{
    if (f.rank() == 1)
        return {{"rank", 1}, {"dim", f.dim()}, {"basis", to_string(f.basis())}, {"top", to_json(f.top())}};
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : f.values())
        values.push_back(to_json(v));
    return {{"rank", 2}, {"basis", to_string(f.basis())}, {"values", values}};
}

std::string canonical_dump(const nlohmann::json& j)
{
    return j.dump(2) + "\n";
}

}  // namespace fano
