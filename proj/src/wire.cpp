#include "dio/wire.hpp"

namespace dio::wire {

json to_json(const Rational& x) { return x.wire(); }

json to_json(const BigInt& n) {
    if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

json to_json(const QuadElem& e) {
    return json{{"d", to_json(e.field().d())}, {"p", to_json(e.p())}, {"q", to_json(e.q())}};
}

json to_json(const CurvePoint& p) {
    if (p.is_infinity()) return "O";
    return json{{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

json to_json(const Curve& e) {
    return json{{"d", to_json(e.field().d())}, {"a1", to_json(e.a1())}, {"a2", to_json(e.a2())},
                {"a3", to_json(e.a3())},       {"a4", to_json(e.a4())}, {"a6", to_json(e.a6())}};
}

json to_json(const DioTriple& t) {
    return json{{"d", to_json(t.field().d())}, {"a", to_json(t.a())}, {"b", to_json(t.b())},
                {"c", to_json(t.c())},         {"r", to_json(t.r())}, {"s", to_json(t.s())},
                {"t", to_json(t.t())}};
}

json to_json(const TorsionStructure& t) {
    json gens = json::array();
    for (const auto& g : t.generators) gens.push_back(to_json(g));
    return json{{"n1", t.n1}, {"n2", t.n2}, {"generators", gens}};
}

json to_json(const TorsionCertificate& c) {
    return json{{"structure", to_json(c.structure)},
                {"maximal", c.maximal},
                {"generator_orders", c.generator_orders},
                {"provenance", c.provenance}};
}

json to_json(const FamilyRecord& r) {
    json values = json::object();
    for (const auto& [name, v] : r.values) values[name] = to_json(v);
    json points = json::object();
    for (const auto& [name, p] : r.points) points[name] = to_json(p);
    json cubic = json::array();
    for (const auto& c : r.curves.cubic) cubic.push_back(to_json(c));
    json j{{"family", family_name(r.tag)},
           {"d", to_json(r.field.d())},
           {"triple", to_json(r.triple)},
           {"curve", to_json(r.curves.weierstrass)},
           {"cubic", cubic},
           {"certificate", to_json(r.certificate)},
           {"values", values},
           {"points", points},
           {"notes", r.notes}};
    if (r.tag == FamilyTag::T10 || r.tag == FamilyTag::T12Alt) j["u"] = to_json(r.parameter);
    if (r.tag == FamilyTag::T44) j["t"] = to_json(r.parameter);
    if (r.tag == FamilyTag::T10 || r.tag == FamilyTag::T12) j["m"] = r.multiple;
    if (r.base_point_order)
        j["base_point_order"] = *r.base_point_order;
    else
        j["base_point_order"] = nullptr;
    return j;
}

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Err::ParseError, what); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

} // namespace

Rational rational_from(const json& j) {
    if (!j.is_string()) bad("rational must be a \"n/d\" string");
    return Rational::parse(j.get<std::string>());
}

BigInt bigint_from(const json& j) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            bad("bad integer '" + j.get<std::string>() + "'");
        }
    }
    bad("integer must be a number or decimal string");
}

QuadField field_from(const json& j) {
    BigInt d = bigint_from(j);
    if (d == 1) return QuadField::rationals();
    return QuadField(d);
}

QuadElem elem_from(const json& j) {
    QuadField k = field_from(need(j, "d"));
    return QuadElem(k, rational_from(need(j, "p")), rational_from(need(j, "q")));
}

CurvePoint point_from(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "O") return CurvePoint::infinity();
        bad("point must be \"O\" or {x, y}");
    }
    return CurvePoint(elem_from(need(j, "x")), elem_from(need(j, "y")));
}

Curve curve_from(const json& j) {
    QuadField k = field_from(need(j, "d"));
    return Curve(k, elem_from(need(j, "a1")).embedded(k), elem_from(need(j, "a2")).embedded(k),
                 elem_from(need(j, "a3")).embedded(k), elem_from(need(j, "a4")).embedded(k),
                 elem_from(need(j, "a6")).embedded(k));
}

DioTriple triple_from(const json& j) {
    QuadField k = field_from(need(j, "d"));
    return check_triple(elem_from(need(j, "a")).embedded(k), elem_from(need(j, "b")).embedded(k),
                        elem_from(need(j, "c")).embedded(k));
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("malformed JSON");
    return j;
}

} // namespace dio::wire
