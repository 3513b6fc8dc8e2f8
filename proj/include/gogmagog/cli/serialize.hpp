#pragma once

#include "gogmagog/polyring/eisenstein.hpp"
#include "gogmagog/polyring/poly.hpp"
#include "gogmagog/triangles/array.hpp"
#include "gogmagog/triangles/asm.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gogmagog::cli {

using json = nlohmann::ordered_json;

// [{"exponents": {"u": 2, ...}, "coeff": "decimal"}, ...] in lexicographic key order
json poly_json(const ParamPoly& p);
ParamPoly poly_from_json(const json& j);

// {"rows": [[...], ...], "columns": [[...], ...]} top row first
json triangle_json(const TriangularArray& t);
json stats_json(const StatVector& s);
json matrix_json(const IntMatrix& a);
// {"a": "..", "b": ".."} meaning a + b*zeta
json eisenstein_json(const Eisenstein& z);

std::string csv_escape(const std::string& s);
// one "monomial,coeff" row per term
std::string poly_csv(const ParamPoly& p);

}  // namespace gogmagog::cli
