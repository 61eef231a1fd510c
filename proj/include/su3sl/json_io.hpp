#pragma once

#include <json.hpp>

#include "su3sl/form.hpp"
#include "su3sl/generator_space.hpp"
#include "su3sl/rational.hpp"

namespace su3sl {

using json = nlohmann::ordered_json;

json to_json(const GQ& v);
GQ gq_from_json(const json& j);

json to_json(const ParamCoeff& c);
ParamCoeff param_coeff_from_json(const json& j);

/// Form format:
/// {"generators":[{"name":"w1","conj":"w1bar","independence":true},...],
///  "terms":[{"indices":[0,3],"coeff":{"re":"1/2","im":"0","params":{...}}}]}
/// Rationals travel as decimal strings "p/q".
json to_json(const Form& f);
Form form_from_json(const json& j);

} // namespace su3sl
