#include "dio/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace dio {

using wire::json;

namespace {

// The fixture documents, embedded verbatim; the same text lives under
// fixtures/ for external tooling.
const char* kT10U3 = R"json(
{
  "id": "t10-u3-record",
  "kind": "family-record",
  "label": "Z/2 x Z/10 record instance over Q(sqrt(-2))",
  "family": "t10",
  "u": "3/1",
  "m": 1,
  "d": -2,
  "triple": {
    "d": -2,
    "a": {"d": -2, "p": "475/561", "q": "12737/22440"},
    "b": {"d": -2, "p": "-475/561", "q": "12737/22440"},
    "c": {"d": -2, "p": "0/1", "q": "160/561"}
  },
  "model": {
    "d": -2,
    "a1": {"d": -2, "p": "0/1", "q": "0/1"},
    "a2": {"d": -2, "p": "1/1", "q": "0/1"},
    "a3": {"d": -2, "p": "0/1", "q": "0/1"},
    "a4": {"d": -2, "p": "-61404142096090881/1", "q": "0/1"},
    "a6": {"d": -2, "p": "-20861928799251086002759425/1", "q": "0/1"}
  },
  "model_note": "",
  "points": [
    {"x": {"d": -2, "p": "865303425/1", "q": "0/1"},
     "y": {"d": -2, "p": "23956226997120/1", "q": "0/1"}, "on": "given"},
    {"x": {"d": -2, "p": "48954515537984337/16008001", "q": "0/1"},
     "y": {"d": -2, "p": "10791931818384647817975000/64048012001", "q": "0/1"}, "on": "given"},
    {"x": {"d": -2, "p": "86963667871383/299209", "q": "0/1"},
     "y": {"d": -2, "p": "0/1", "q": "435438077091034960800/163667323"}, "on": "given"}
  ],
  "torsion": [2, 10]
}
)json";

const char* kT12M2 = R"json(
{
  "id": "t12-m2",
  "kind": "family-record",
  "label": "Z/2 x Z/12 instance from the double of the generator",
  "family": "t12",
  "m": 2,
  "t_param": "6/35",
  "d": 44135,
  "triple": null,
  "model": null,
  "model_note": "none printed",
  "points": [],
  "torsion": [2, 12]
}
)json";

const char* kT12M3 = R"json(
{
  "id": "t12-m3",
  "kind": "family-record",
  "label": "Z/2 x Z/12 instance from the triple of the generator",
  "family": "t12",
  "m": 3,
  "t_param": "41615/426",
  "d": 5117449349905165,
  "triple": null,
  "model": null,
  "model_note": "none printed",
  "points": [],
  "torsion": [2, 12]
}
)json";

const char* kT12Alt = R"json(
{
  "id": "t12alt-u-7-record",
  "kind": "family-record",
  "label": "Z/2 x Z/12 record instance over Q(sqrt(-155)) from the cubic family",
  "family": "t12alt",
  "u": "-7/1",
  "d": -155,
  "triple": {
    "d": -155,
    "a": {"d": -155, "p": "-35/36", "q": "0/1"},
    "b": {"d": -155, "p": "27/35", "q": "0/1"},
    "c": {"d": -155, "p": "161/180", "q": "0/1"}
  },
  "model": {
    "d": -155,
    "a1": {"d": -155, "p": "1/1", "q": "0/1"},
    "a2": {"d": -155, "p": "0/1", "q": "0/1"},
    "a3": {"d": -155, "p": "1/1", "q": "0/1"},
    "a4": {"d": -155, "p": "-49428958/1", "q": "0/1"},
    "a6": {"d": -155, "p": "130902669056/1", "q": "0/1"}
  },
  "model_note": "iso checked over Q",
  "points": [
    {"x": {"d": -155, "p": "-2510/1", "q": "0/1"},
     "y": {"d": -155, "p": "-487783/1", "q": "0/1"}, "on": "given"},
    {"x": {"d": -155, "p": "-95078581/245", "q": "0/1"},
     "y": {"d": -155, "p": "0/1", "q": "166483532709/8575"}, "on": "short"}
  ],
  "torsion": [2, 12]
}
)json";

const char* kT44 = R"json(
{
  "id": "t44-t4-3-record",
  "kind": "family-record",
  "label": "Z/4 x Z/4 record instance over Q(i)",
  "family": "t44",
  "t": "4/3",
  "d": -1,
  "triple": {
    "d": -1,
    "a": {"d": -1, "p": "3796/4653", "q": "0/1"},
    "b": {"d": -1, "p": "-4653/3796", "q": "0/1"},
    "c": {"d": -1, "p": "78400/490633", "q": "0/1"}
  },
  "model": {
    "d": -1,
    "a1": {"d": -1, "p": "0/1", "q": "0/1"},
    "a2": {"d": -1, "p": "1/1", "q": "0/1"},
    "a3": {"d": -1, "p": "0/1", "q": "0/1"},
    "a4": {"d": -1, "p": "-1588627573982287131943200/1", "q": "0/1"},
    "a6": {"d": -1, "p": "-507161545884329501301628000492040652/1", "q": "0/1"}
  },
  "model_note": "",
  "points": [
    {"x": {"d": -1, "p": "-890497354044/1", "q": "0/1"},
     "y": {"d": -1, "p": "448726623142928130/1", "q": "0/1"}, "on": "given"},
    {"x": {"d": -1, "p": "-899563900533/1", "q": "0/1"},
     "y": {"d": -1, "p": "440419889828558640/1", "q": "0/1"}, "on": "given"},
    {"x": {"d": -1, "p": "2502824381840097811/632025", "q": "0/1"},
     "y": {"d": -1, "p": "3736538268665587610111875016/502459875", "q": "0/1"}, "on": "given"},
    {"x": {"d": -1, "p": "-1089076885194/1", "q": "0/1"},
     "y": {"d": -1, "p": "0/1", "q": "262231774368503940/1"}, "on": "given"},
    {"x": {"d": -1, "p": "-1926913622169/1", "q": "0/1"},
     "y": {"d": -1, "p": "0/1", "q": "2144909371334503410/1"}, "on": "given"},
    {"x": {"d": -1, "p": "-10573435624608518034/6175225", "q": "0/1"},
     "y": {"d": -1, "p": "0/1", "q": "25709440364558354804130497052/15345434125"}, "on": "given"}
  ],
  "torsion": [4, 4]
}
)json";

const char* kDossier = R"json(
{
  "id": "base-curve-dossier",
  "kind": "curve-dossier",
  "label": "order-5 parameter curve: torsion across Q, Q(i), Q(sqrt(-3))",
  "model": {
    "d": 1,
    "a1": {"d": 1, "p": "0/1", "q": "0/1"},
    "a2": {"d": 1, "p": "1/1", "q": "0/1"},
    "a3": {"d": 1, "p": "0/1", "q": "0/1"},
    "a4": {"d": 1, "p": "4/1", "q": "0/1"},
    "a6": {"d": 1, "p": "4/1", "q": "0/1"}
  },
  "hints": [
    {"x": {"d": 1, "p": "-1/1", "q": "0/1"}, "y": {"d": 1, "p": "0/1", "q": "0/1"}},
    {"x": {"d": 1, "p": "0/1", "q": "0/1"}, "y": {"d": 1, "p": "2/1", "q": "0/1"}}
  ],
  "point_orders": [
    {"x": "-1/1", "y": "0/1", "order": 2},
    {"x": "0/1", "y": "2/1", "order": 3},
    {"x": "0/1", "y": "-2/1", "order": 3},
    {"x": "4/1", "y": "10/1", "order": 6},
    {"x": "4/1", "y": "-10/1", "order": 6}
  ],
  "torsion_by_field": [
    {"d": 1, "torsion": [1, 6]},
    {"d": -1, "torsion": [2, 6]},
    {"d": -3, "torsion": [1, 6]}
  ],
  "shift_model": {
    "d": 1,
    "a1": {"d": 1, "p": "0/1", "q": "0/1"},
    "a2": {"d": 1, "p": "13/1", "q": "0/1"},
    "a3": {"d": 1, "p": "0/1", "q": "0/1"},
    "a4": {"d": 1, "p": "60/1", "q": "0/1"},
    "a6": {"d": 1, "p": "100/1", "q": "0/1"}
  },
  "shift_point": {"x": {"d": 1, "p": "0/1", "q": "0/1"}, "y": {"d": 1, "p": "10/1", "q": "0/1"}},
  "shift_point_order": 6
}
)json";

CorpusEntry make_entry(const char* text) {
    json j = wire::parse(text);
    return CorpusEntry{j.at("id").get<std::string>(), j.at("kind").get<std::string>(),
                       j.value("label", ""), j};
}

void run_check(EntryReport& rep, const std::string& name,
               const std::function<std::pair<bool, std::string>()>& fn) {
    CheckResult r{name, false, ""};
    try {
        auto [ok, detail] = fn();
        r.pass = ok;
        r.detail = detail;
    } catch (const std::exception& ex) {
        r.detail = ex.what();
    }
    rep.checks.push_back(r);
}

std::optional<FamilyRecord> run_pipeline(const json& j) {
    std::string fam = j.at("family").get<std::string>();
    if (fam == "t10")
        return torsion10_generate(Rational::parse(j.at("u").get<std::string>()),
                                  j.at("m").get<int>());
    if (fam == "t12") return torsion12_generate(j.at("m").get<int>());
    if (fam == "t12alt") return torsion12_alt(Rational::parse(j.at("u").get<std::string>()));
    if (fam == "t44") return torsion44_generate(Rational::parse(j.at("t").get<std::string>()));
    return std::nullopt;
}

void verify_family_record(const CorpusEntry& e, EntryReport& rep) {
    const json& j = e.data;
    std::optional<DioTriple> triple;
    if (!j.at("triple").is_null()) {
        run_check(rep, "triple-diophantine", [&]() -> std::pair<bool, std::string> {
            triple = wire::triple_from(j.at("triple"));
            return {true, "witnesses " + triple->r().str() + ", " + triple->s().str() + ", " +
                              triple->t().str()};
        });
    }

    std::optional<FamilyRecord> rec;
    run_check(rep, "pipeline-reproduces", [&]() -> std::pair<bool, std::string> {
        rec = run_pipeline(j);
        if (!rec) return {false, "unknown family"};
        BigInt d = wire::bigint_from(j.at("d"));
        if (rec->field.d() != d)
            return {false, "field d = " + rec->field.d().get_str() + ", expected " + d.get_str()};
        if (triple && !rec->triple.same_triple(*triple))
            return {false, "pipeline triple " + rec->triple.str() + " differs"};
        if (j.contains("t_param")) {
            Rational expect = Rational::parse(j.at("t_param").get<std::string>());
            auto t = rec->value("t");
            if (!t || !t->q().is_zero() || t->p() != expect)
                return {false,
                        "parameter t = " + (t ? t->str() : "?") + ", expected " + expect.str()};
        }
        return {true, "d = " + d.get_str()};
    });

    run_check(rep, "torsion-certified", [&]() -> std::pair<bool, std::string> {
        if (!rec) return {false, "pipeline did not run"};
        int n1 = j.at("torsion").at(0).get<int>();
        int n2 = j.at("torsion").at(1).get<int>();
        const TorsionStructure& ts = rec->certificate.structure;
        if (ts.n1 != n1 || ts.n2 != n2) return {false, "certified " + ts.str()};
        return {true,
                ts.str() + (rec->certificate.maximal ? " (maximal: containment is equality)" : "")};
    });

    std::optional<Curve> model;
    if (!j.at("model").is_null()) {
        run_check(rep, "model-isomorphic", [&]() -> std::pair<bool, std::string> {
            model = wire::curve_from(j.at("model"));
            if (!triple) return {false, "no triple to induce from"};
            InducedCurves ind = induced_curves(*triple);
            const Curve& a = ind.weierstrass;
            auto all_rational = [](const Curve& c) {
                return c.a1().is_rational_value() && c.a2().is_rational_value() &&
                       c.a3().is_rational_value() && c.a4().is_rational_value() &&
                       c.a6().is_rational_value();
            };
            // the strongest statement available: over Q when both models are
            // rational, otherwise over the entry's field
            if (all_rational(a) && all_rational(*model)) {
                QuadField q = QuadField::rationals();
                Curve aq(q, a.a1().embedded(q), a.a2().embedded(q), a.a3().embedded(q),
                         a.a4().embedded(q), a.a6().embedded(q));
                Curve mq(q, model->a1().embedded(q), model->a2().embedded(q),
                         model->a3().embedded(q), model->a4().embedded(q), model->a6().embedded(q));
                if (!iso_same_field(aq, mq)) return {false, "not isomorphic over Q"};
                return {true, "isomorphic over Q"};
            }
            if (!iso_same_field(a, *model))
                return {false, "not isomorphic over " + a.field().str()};
            return {true, "isomorphic over " + a.field().str()};
        });
    }

    const json& pts = j.at("points");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string tag = "point" + std::to_string(i + 1);
        run_check(rep, tag + "-on-model", [&, i]() -> std::pair<bool, std::string> {
            if (!model) return {false, "no model"};
            CurvePoint p = wire::point_from(pts.at(i));
            bool on_short = pts.at(i).value("on", "given") == std::string("short");
            const Curve target = on_short ? ShortTransform(*model).curve() : *model;
            if (!target.contains(p)) return {false, p.str() + " fails the equation"};
            return {true, std::string(on_short ? "on the completed-square form" : "on the model")};
        });
        run_check(rep, tag + "-nontorsion", [&, i]() -> std::pair<bool, std::string> {
            if (!model) return {false, "no model"};
            CurvePoint p = wire::point_from(pts.at(i));
            bool on_short = pts.at(i).value("on", "given") == std::string("short");
            const Curve target = on_short ? ShortTransform(*model).curve() : *model;
            auto o = target.order_of_point(p);
            if (o) return {false, "order " + std::to_string(*o)};
            return {true, "no order <= 18, hence infinite over a quadratic field"};
        });
    }

    rep.checks.push_back(CheckResult{
        "independence-disclaimer", true,
        "listed points are checked on-curve and non-torsion only; independence is not verified"});
}

void verify_dossier(const CorpusEntry& e, EntryReport& rep) {
    const json& j = e.data;
    Curve model = wire::curve_from(j.at("model"));
    std::vector<CurvePoint> hints;
    for (const auto& h : j.at("hints")) hints.push_back(wire::point_from(h));

    for (const auto& po : j.at("point_orders")) {
        Rational x = Rational::parse(po.at("x").get<std::string>());
        Rational y = Rational::parse(po.at("y").get<std::string>());
        int expect = po.at("order").get<int>();
        run_check(rep, "order-of-[" + x.str() + "," + y.str() + "]",
                  [&]() -> std::pair<bool, std::string> {
                      QuadField q = QuadField::rationals();
                      CurvePoint p(QuadElem(q, x), QuadElem(q, y));
                      auto o = model.order_of_point(p);
                      if (!o || *o != expect)
                          return {false, o ? "order " + std::to_string(*o) : "no bounded order"};
                      return {true, "order " + std::to_string(expect)};
                  });
    }

    for (const auto& tf : j.at("torsion_by_field")) {
        BigInt d = wire::bigint_from(tf.at("d"));
        int n1 = tf.at("torsion").at(0).get<int>();
        int n2 = tf.at("torsion").at(1).get<int>();
        QuadField k = d == 1 ? QuadField::rationals() : QuadField(d);
        run_check(rep, "torsion-over-" + k.str(), [&]() -> std::pair<bool, std::string> {
            Curve ck(k, model.a1().embedded(k), model.a2().embedded(k), model.a3().embedded(k),
                     model.a4().embedded(k), model.a6().embedded(k));
            std::vector<CurvePoint> hk;
            for (const auto& h : hints) hk.emplace_back(h.x().embedded(k), h.y().embedded(k));
            TorsionStructure ts = torsion_structure(ck, hk);
            if (ts.n1 != n1 || ts.n2 != n2) return {false, "found " + ts.str()};
            return {true, ts.str()};
        });
    }

    run_check(rep, "shift-point-order", [&]() -> std::pair<bool, std::string> {
        Curve shift = wire::curve_from(j.at("shift_model"));
        CurvePoint p = wire::point_from(j.at("shift_point"));
        int expect = j.at("shift_point_order").get<int>();
        auto o = shift.order_of_point(p);
        if (!o || *o != expect)
            return {false, o ? "order " + std::to_string(*o) : "no bounded order"};
        return {true, p.str() + " has order " + std::to_string(expect) + " on the shifted model"};
    });

    run_check(rep, "shift-isomorphic", [&]() -> std::pair<bool, std::string> {
        Curve shift = wire::curve_from(j.at("shift_model"));
        if (!iso_same_field(model, shift)) return {false, "not isomorphic"};
        return {true, "isomorphic over " + model.field().str()};
    });
}

std::vector<EntryReport> verify_all(const std::vector<CorpusEntry>& entries,
                                    const std::optional<std::string>& only) {
    std::vector<EntryReport> out;
    for (const auto& e : entries) {
        if (only && e.id != *only) continue;
        out.push_back(verify_entry(e));
    }
    if (only && out.empty()) fail(Err::ParseError, "no corpus entry with id '" + *only + "'");
    return out;
}

} // namespace

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;
        for (const char* text : {kDossier, kT10U3, kT12M2, kT12M3, kT12Alt, kT44})
            v.push_back(make_entry(text));
        std::sort(v.begin(), v.end(),
                  [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
        return v;
    }();
    return entries;
}

std::vector<std::string> corpus_ids() {
    std::vector<std::string> ids;
    for (const auto& e : corpus_entries()) ids.push_back(e.id);
    return ids;
}

EntryReport verify_entry(const CorpusEntry& entry) {
    EntryReport rep{entry.id, {}};
    try {
        if (entry.kind == "family-record")
            verify_family_record(entry, rep);
        else if (entry.kind == "curve-dossier")
            verify_dossier(entry, rep);
        else
            rep.checks.push_back(CheckResult{"kind", false, "unknown kind '" + entry.kind + "'"});
    } catch (const std::exception& ex) {
        rep.checks.push_back(CheckResult{"entry-error", false, ex.what()});
    }
    return rep;
}

std::vector<EntryReport> verify_corpus(const std::optional<std::string>& only) {
    return verify_all(corpus_entries(), only);
}

std::vector<EntryReport> verify_corpus_dir(const std::string& dir,
                                           const std::optional<std::string>& only) {
    std::vector<CorpusEntry> entries;
    for (const auto& de : std::filesystem::directory_iterator(dir)) {
        if (de.path().extension() != ".json") continue;
        std::ifstream in(de.path());
        std::stringstream ss;
        ss << in.rdbuf();
        json j = wire::parse(ss.str());
        entries.push_back(CorpusEntry{j.at("id").get<std::string>(),
                                      j.at("kind").get<std::string>(), j.value("label", ""), j});
    }
    std::sort(entries.begin(), entries.end(),
              [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
    return verify_all(entries, only);
}

wire::json report_to_json(const std::vector<EntryReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) {
        json checks = json::array();
        for (const auto& c : r.checks)
            checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        arr.push_back(json{{"id", r.id}, {"pass", r.passed()}, {"checks", checks}});
    }
    return arr;
}

} // namespace dio
