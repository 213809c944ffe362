#pragma once

#include "fano/form.hpp"
#include "fano/rational.hpp"

#include "json.hpp"

namespace fano {

// {"num": "...", "den": "..."}; strings keep arbitrary precision intact.
nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DivisorClass& d);
nlohmann::json to_json(const TrilinearForm& f);

// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace fano
