#pragma once

#include <json.hpp>

#include "dio/families.hpp"

namespace dio::wire {

using nlohmann::json;

// Rationals travel as canonical "n/d" strings, never as floats. Field tags
// ("d") are JSON numbers when they fit in 64 bits, decimal strings otherwise;
// parsing accepts both.

json to_json(const Rational& x);
json to_json(const BigInt& n);
json to_json(const QuadElem& e);
json to_json(const CurvePoint& p);
json to_json(const Curve& e);
json to_json(const DioTriple& t);
json to_json(const TorsionStructure& t);
json to_json(const TorsionCertificate& c);
json to_json(const FamilyRecord& r);

Rational rational_from(const json& j);
BigInt bigint_from(const json& j);
QuadField field_from(const json& j);
QuadElem elem_from(const json& j);
CurvePoint point_from(const json& j);
Curve curve_from(const json& j);
/// Validates the triple (witness existence, distinctness) while parsing.
DioTriple triple_from(const json& j);

/// Parse with ParseError on malformed input instead of nlohmann exceptions.
json parse(const std::string& text);

} // namespace dio::wire
