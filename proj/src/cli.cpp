#include "dio/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dio/corpus.hpp"

namespace dio::cli {

namespace {

using wire::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_json(const std::string& path) { return wire::parse(read_input(path)); }

struct Options {
    bool json_out = false;
    int max_order = 18;
};

void emit(std::ostream& out, const Options& opt, const json& machine,
          const std::string& human) {
    if (opt.json_out)
        out << machine.dump(2) << "\n";
    else
        out << human << "\n";
}

std::string human_point_list(
    const std::vector<std::pair<std::string, CurvePoint>>& pts) {
    std::string s;
    for (const auto& [name, p] : pts) s += "  " + name + " = " + p.str() + "\n";
    return s;
}

int cmd_verify_triple(const std::string& in_path, const Options& opt, std::ostream& out) {
    DioTriple t = wire::triple_from(load_json(in_path));
    json j = wire::to_json(t);
    std::string human = "Diophantine triple over " + t.field().str() + ": " + t.str() +
                        "\n  witnesses: r = " + t.r().str() + ", s = " + t.s().str() +
                        ", t = " + t.t().str();
    emit(out, opt, j, human);
    return 0;
}

int cmd_induce(const std::string& in_path, bool with_points, const Options& opt,
               std::ostream& out) {
    DioTriple t = wire::triple_from(load_json(in_path));
    InducedCurves ind = induced_curves(t);
    json j{{"curve", wire::to_json(ind.weierstrass)}};
    json cubic = json::array();
    for (const auto& c : ind.cubic) cubic.push_back(wire::to_json(c));
    j["cubic"] = cubic;
    std::string human = "induced Weierstrass model over " + t.field().str() + ":\n  " +
                        ind.weierstrass.str();
    if (with_points) {
        j["points"] = json{{"T1", wire::to_json(ind.t1)}, {"T2", wire::to_json(ind.t2)},
                           {"T3", wire::to_json(ind.t3)}, {"P", wire::to_json(ind.p)},
                           {"Q", wire::to_json(ind.q)}};
        human += "\ncanonical points:\n" + human_point_list({{"T1", ind.t1},
                                                             {"T2", ind.t2},
                                                             {"T3", ind.t3},
                                                             {"P", ind.p},
                                                             {"Q", ind.q}});
    }
    emit(out, opt, j, human);
    return 0;
}

int cmd_torsion(const std::string& curve_path, const std::string& hints_path, const Options& opt,
                std::ostream& out) {
    Curve e = wire::curve_from(load_json(curve_path));
    std::vector<CurvePoint> hints;
    if (!hints_path.empty()) {
        json hj = load_json(hints_path);
        if (!hj.is_array()) fail(Err::ParseError, "hints file must be a JSON array of points");
        for (const auto& h : hj) hints.push_back(wire::point_from(h));
    }
    TorsionOptions topt;
    topt.max_order = opt.max_order;
    TorsionStructure ts = torsion_structure(e, hints, topt);
    json j{{"structure", wire::to_json(ts)},
           {"admissible", is_admissible(ts.n1, ts.n2)},
           {"maximal", is_maximal_admissible(ts.n1, ts.n2)}};
    std::string human = "torsion contains " + ts.str() +
                        (is_maximal_admissible(ts.n1, ts.n2)
                             ? " (maximal admissible: containment is equality)"
                             : " (admissible)");
    for (const auto& g : ts.generators) human += "\n  generator " + g.str();
    emit(out, opt, j, human);
    return 0;
}

std::string human_record(const FamilyRecord& r) {
    std::ostringstream os;
    os << "family " << family_name(r.tag);
    if (r.tag == FamilyTag::T10 || r.tag == FamilyTag::T12Alt) os << "  u = " << r.parameter.str();
    if (r.tag == FamilyTag::T44) os << "  t = " << r.parameter.str();
    if (r.tag == FamilyTag::T10 || r.tag == FamilyTag::T12) os << "  m = " << r.multiple;
    os << "\nfield: " << r.field.str() << " (d = " << r.field.d().get_str() << ")";
    os << "\ntriple: " << r.triple.str();
    os << "\ncurve: " << r.curves.weierstrass.str();
    os << "\ntorsion: " << r.certificate.structure.str()
       << (r.certificate.maximal ? " (maximal admissible)" : "");
    if (r.base_point_order)
        os << "\n[0,abc] has order " << *r.base_point_order;
    else
        os << "\n[0,abc] has no order <= 18 (infinite order over a quadratic field)";
    for (const auto& [name, v] : r.values) os << "\n  " << name << " = " << v.str();
    return os.str();
}

int cmd_gen(const std::string& family, const std::string& u_str, const std::string& t_str,
            int m, const Options& opt, std::ostream& out) {
    std::optional<FamilyRecord> rec;
    if (family == "t10") {
        if (u_str.empty()) fail(Err::ParseError, "t10 needs --u");
        rec = torsion10_generate(Rational::parse(u_str), m == 0 ? 1 : m);
    } else if (family == "t12") {
        if (m == 0) fail(Err::ParseError, "t12 needs --m");
        rec = torsion12_generate(m);
    } else if (family == "t12alt") {
        if (u_str.empty()) fail(Err::ParseError, "t12alt needs --u");
        rec = torsion12_alt(Rational::parse(u_str));
    } else if (family == "t44") {
        if (t_str.empty()) fail(Err::ParseError, "t44 needs --t");
        rec = torsion44_generate(Rational::parse(t_str));
    } else {
        fail(Err::ParseError, "unknown family '" + family + "'");
    }
    emit(out, opt, wire::to_json(*rec), human_record(*rec));
    return 0;
}

int cmd_twist(const std::string& curve_path, const std::string& d_str,
              const std::string& transport_path, const Options& opt, std::ostream& out) {
    Curve e = wire::curve_from(load_json(curve_path));
    BigInt d;
    try {
        d = BigInt(d_str);
    } catch (const std::invalid_argument&) {
        fail(Err::ParseError, "bad twist parameter '" + d_str + "'");
    }
    Curve tw = quadratic_twist(e, d);
    json j{{"twist", wire::to_json(tw)}};
    std::string human = "twist by " + d.get_str() + ":\n  " + tw.str();
    if (!transport_path.empty()) {
        CurvePoint p = wire::point_from(load_json(transport_path));
        CurvePoint moved = transport_to_twist(e, d, p);
        j["transported"] = wire::to_json(moved);
        human += "\ntransported point: " + moved.str();
    }
    emit(out, opt, j, human);
    return 0;
}

int cmd_paper_verify(const std::string& only, const std::string& fixtures, const Options& opt,
                     std::ostream& out) {
    std::optional<std::string> only_opt;
    if (!only.empty()) only_opt = only;
    std::vector<EntryReport> reports = fixtures.empty()
                                           ? verify_corpus(only_opt)
                                           : verify_corpus_dir(fixtures, only_opt);
    bool all_pass = true;
    std::ostringstream human;
    for (const auto& r : reports) {
        bool ok = r.passed();
        all_pass = all_pass && ok;
        human << r.id << ": " << (ok ? "PASS" : "FAIL") << "\n";
        for (const auto& c : r.checks) {
            if (!opt.json_out) {
                human << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
                if (!c.detail.empty()) human << " - " << c.detail;
                human << "\n";
            }
        }
    }
    human << (all_pass ? "all entries pass" : "some entries FAILED");
    emit(out, opt, report_to_json(reports), human.str());
    return all_pass ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for Diophantine triples and the elliptic curves they induce over quadratic fields"};
    app.name("diocurve");
    app.fallthrough(); // global flags may follow the subcommand
    Options opt;
    unsigned long factor_budget = 0;
    app.add_flag("--json", opt.json_out, "machine-readable JSON output");
    app.add_option("--max-order", opt.max_order, "order-search bound (default 18)");
    app.add_option("--factor-budget", factor_budget, "rho iteration budget for factoring");

    auto* vt = app.add_subcommand("verify-triple", "check the Diophantine property, print witnesses");
    std::string vt_in;
    vt->add_option("--in", vt_in, "triple JSON (path or -)")->required();

    auto* ind = app.add_subcommand("induce", "induced Weierstrass curve of a triple");
    std::string ind_in;
    bool ind_points = false;
    ind->add_option("--in", ind_in, "triple JSON (path or -)")->required();
    ind->add_flag("--points", ind_points, "include the canonical points");

    auto* tor = app.add_subcommand("torsion", "certified torsion structure of a curve");
    std::string tor_curve, tor_hints;
    tor->add_option("--curve", tor_curve, "curve JSON (path or -)")->required();
    tor->add_option("--hints", tor_hints, "JSON array of hint points");

    auto* gen = app.add_subcommand("gen", "run a torsion family pipeline");
    std::string gen_family_pos, gen_family_opt, gen_u, gen_t;
    int gen_m = 0;
    gen->add_option("family_arg", gen_family_pos, "t10|t12|t12alt|t44")->option_text("FAMILY");
    gen->add_option("--family", gen_family_opt, "t10|t12|t12alt|t44");
    gen->add_option("--u", gen_u, "rational parameter u");
    gen->add_option("--t", gen_t, "rational parameter t");
    gen->add_option("--m", gen_m, "multiple m");

    auto* tw = app.add_subcommand("twist", "quadratic twist of a short model over Q");
    std::string tw_curve, tw_d, tw_transport;
    tw->add_option("--curve", tw_curve, "curve JSON (path or -)")->required();
    tw->add_option("--d", tw_d, "squarefree twist parameter")->required();
    tw->add_option("--transport", tw_transport, "point JSON to transport to the twist");

    auto* pv = app.add_subcommand("paper-verify", "re-derive and check every corpus record");
    std::string pv_only, pv_fixtures;
    pv->add_option("--only", pv_only, "single entry id");
    pv->add_option("--fixtures", pv_fixtures, "directory of fixture JSON files");

    app.require_subcommand(1);

    try {
        std::vector<std::string> mutable_args = args;
        std::reverse(mutable_args.begin(), mutable_args.end());
        app.parse(mutable_args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (factor_budget > 0) default_factor_budget().rho_iters = factor_budget;

    try {
        if (vt->parsed()) return cmd_verify_triple(vt_in, opt, out);
        if (ind->parsed()) return cmd_induce(ind_in, ind_points, opt, out);
        if (tor->parsed()) return cmd_torsion(tor_curve, tor_hints, opt, out);
        if (gen->parsed()) {
            std::string family = !gen_family_pos.empty() ? gen_family_pos : gen_family_opt;
            if (family.empty()) {
                err << "usage error: gen needs a family\n";
                return 2;
            }
            return cmd_gen(family, gen_u, gen_t, gen_m, opt, out);
        }
        if (tw->parsed()) return cmd_twist(tw_curve, tw_d, tw_transport, opt, out);
        if (pv->parsed()) return cmd_paper_verify(pv_only, pv_fixtures, opt, out);
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return e.kind() == Err::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace dio::cli
