#pragma once

#include <json.hpp>

#include "rlct/diff_form.hpp"
#include "rlct/restricted_algebra.hpp"

namespace rlct {

using nlohmann::json;

json to_json(const TruncPoly& f);
TruncPoly truncpoly_from_json(const json& j);

json to_json(const Derivation& D);
Derivation derivation_from_json(const json& j);

json to_json(const DiffForm& w);
DiffForm diff_form_from_json(const json& j);

json to_json(const RestrictedAlgebra& A);

// {"family","p","n","dim","basis":[Derivation...]}
json family_json(const std::string& family, int n, fp_t p,
                 const std::vector<Derivation>& basis);

} // namespace rlct
