// Built-in field specifications, derived in code and emitted as JSON.
#pragma once

#include <string>
#include <vector>

#include "weilzeta/fieldspec.hpp"

namespace weilzeta {

std::vector<std::string> preset_names();

// gauss, eisenstein, quad2, quad7, zeta5, zeta8, zeta12, d4
FieldSpec builtin_preset(const std::string& name);

// Q(sqrt(-d)) for squarefree d >= 1, with the maximal-order basis.
FieldSpec make_quad_spec(std::int64_t d);

// Write every builtin preset to dir/<name>.json; returns the file names.
std::vector<std::string> write_presets(const std::string& dir);

}  // namespace weilzeta
