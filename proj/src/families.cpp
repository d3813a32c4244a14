#include "dio/families.hpp"

#include <algorithm>

#include "dio/divpoly.hpp"
#include "dio/smallpoly.hpp"

namespace dio {

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::T10: return "t10";
        case FamilyTag::T12: return "t12";
        case FamilyTag::T12Alt: return "t12alt";
        case FamilyTag::T44: return "t44";
    }
    return "?";
}

std::pair<int, int> family_target(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::T10: return {2, 10};
        case FamilyTag::T12: return {2, 12};
        case FamilyTag::T12Alt: return {2, 12};
        case FamilyTag::T44: return {4, 4};
    }
    return {0, 0};
}

std::optional<QuadElem> FamilyRecord::value(const std::string& name) const {
    for (const auto& [n, v] : values)
        if (n == name) return v;
    return std::nullopt;
}

std::optional<CurvePoint> FamilyRecord::point(const std::string& name) const {
    for (const auto& [n, v] : points)
        if (n == name) return v;
    return std::nullopt;
}

namespace {

// Certify against the family's target group; anything else means the
// construction (not the input) is broken.
TorsionCertificate certify(const Curve& e, const std::vector<CurvePoint>& hints, FamilyTag tag,
                           std::vector<std::string> provenance) {
    TorsionStructure ts = torsion_structure(e, hints);
    auto [n1, n2] = family_target(tag);
    if (ts.n1 != n1 || ts.n2 != n2)
        fail(Err::InadmissibleGroup, std::string("pipeline produced ") + ts.str() +
                                         " instead of Z/" + std::to_string(n1) + " x Z/" +
                                         std::to_string(n2));
    TorsionCertificate cert;
    cert.structure = ts;
    cert.maximal = is_maximal_admissible(ts.n1, ts.n2);
    cert.provenance = std::move(provenance);
    for (const auto& g : ts.generators) {
        auto o = e.order_of_point(g);
        if (!o) fail(Err::InadmissibleGroup, "generator of unbounded order");
        if (!e.mul(BigInt(*o), g).is_infinity())
            fail(Err::InadmissibleGroup, "order witness failed");
        cert.generator_orders.push_back(*o);
    }
    return cert;
}

} // namespace

// --------------------------------------------------------------- Z/2 x Z/10

Curve t10_parameter_curve(const QuadField& k) {
    return Curve::short_model(k, Rational(1), Rational(4), Rational(4));
}

std::pair<QuadElem, QuadElem> t10_curve_to_quartic(const CurvePoint& p) {
    if (p.is_infinity()) fail(Err::MapDegenerate, "O has no quartic image");
    const QuadField& k = p.x().field();
    QuadElem one = QuadElem::one(k);
    if (p.y().is_zero()) fail(Err::MapDegenerate, "2-torsion " + p.str());
    QuadElem t = 2 * (p.x() + one) / p.y();
    if (t.is_zero()) fail(Err::MapDegenerate, "image hits the quartic base point");
    QuadElem ytilde = p.x() * t * t * Rational(1, 2) - one;
    QuadElem t2 = t * t;
    if (ytilde * ytilde != one + t2 - t2 * t2)
        fail(Err::MapDegenerate, "image left the quartic (internal)");
    return {t, ytilde};
}

CurvePoint t10_quartic_to_curve(const QuadElem& t, const QuadElem& ytilde) {
    const QuadField& k = t.field();
    QuadElem one = QuadElem::one(k);
    QuadElem t2 = t * t;
    if (t.is_zero()) fail(Err::MapDegenerate, "t = 0 is the base point");
    if (ytilde * ytilde != one + t2 - t2 * t2) fail(Err::MapDegenerate, "not on the quartic");
    QuadElem x = 2 * (ytilde + one) / t2;
    QuadElem y = (4 * (ytilde + one) + 2 * t2) / (t2 * t);
    CurvePoint p(x, y);
    if (!t10_parameter_curve(k).contains(p)) fail(Err::MapDegenerate, "inverse image off-curve");
    return p;
}

FamilyRecord torsion10_generate(const Rational& u, int m) {
    for (long bad : {-1L, 0L, 1L})
        if (u == Rational(bad)) fail(Err::ExcludedParameter, "u = " + u.str());
    if (m < 1) fail(Err::ExcludedParameter, "m >= 1");

    Rational two(2), one(1);
    Rational rho = (two * u * u + two * u + one) * (one - u * u);
    RadicandSplit rs = field_from_radicand(rho);
    if (rs.field.is_rational())
        fail(Err::FieldCollapse, "radicand " + rho.str() + " is a rational square");
    const QuadField k = rs.field;
    QuadElem v(k, Rational(0), rs.scale); // v^2 = rho

    Curve e1 = t10_parameter_curve(k);
    Rational um1 = u - one;
    CurvePoint p1(QuadElem(k, (Rational(-6) * u - Rational(4)) / um1),
                  v * (Rational(10) / (um1 * um1)));
    if (!e1.contains(p1)) fail(Err::PointNotOnCurve, "parameter point " + p1.str());

    CurvePoint pm = e1.mul(BigInt(m), p1);
    if (pm.is_infinity()) fail(Err::MapDegenerate, "m P1 = O");
    auto [t, ytilde] = t10_curve_to_quartic(pm);
    // +-t parameterize the same construction; fix the sign of the q part
    if (t.q().sign() < 0 || (t.q().is_zero() && t.p().sign() < 0)) t = -t;

    QuadElem kone = QuadElem::one(k);
    QuadElem r = (t * t + kone) / (2 * t);
    // r^2 - 1 = ((t^2-1)/(2t))^2 is a square identically
    QuadElem half_diff = (t * t - kone) / (2 * t);
    if (r * r - kone != half_diff * half_diff)
        fail(Err::MapDegenerate, "r^2 - 1 lost its square witness (internal)");

    // Solve the quadratic factor whose discriminant is a square in K for a;
    // the second factor is tried first (it matches ytilde^2 = -t^4+t^2+1).
    Order5Factors factors = order5_factors(t);
    std::optional<QuadElem> a;
    QuadElem a_other = QuadElem::zero(k);
    for (const auto& fac : {factors.q2, factors.q1}) {
        QuadElem disc = fac[1] * fac[1] - 4 * fac[0] * fac[2];
        auto sq = sqrt_in_field(disc);
        if (!sq) continue;
        QuadElem r1 = (-fac[1] + *sq) / (2 * fac[0]);
        QuadElem r2 = (-fac[1] - *sq) / (2 * fac[0]);
        if (lex_less(r1, r2)) std::swap(r1, r2); // a is the lexicographically larger root
        a = r1;
        a_other = r2;
        break;
    }
    if (!a) fail(Err::MapDegenerate, "neither quadratic factor splits over the field");

    DioTriple triple = euler_triple(*a, r);
    InducedCurves curves = induced_curves(triple);

    // order-5 witness, by the quartic condition and by the division polynomial
    if (!order5_holds(*a, r)) fail(Err::InadmissibleGroup, "order-5 condition not met");
    if (!division_poly_eval(curves.weierstrass, curves.p, 5).psi.is_zero())
        fail(Err::InadmissibleGroup, "psi_5 does not vanish at [0,abc]");

    TorsionCertificate cert =
        certify(curves.weierstrass, {curves.t1, curves.t2, curves.t3, curves.p, curves.q},
                FamilyTag::T10,
                {"sum of [0,abc] (order 5, vanishing psi_5) and a 2-torsion point",
                 "2-torsion abscissa -ab/-bc/-ac"});

    FamilyRecord rec{FamilyTag::T10,
                     u,
                     m,
                     k,
                     triple,
                     curves,
                     cert,
                     {},
                     {},
                     curves.weierstrass.order_of_point(curves.p),
                     {}};
    rec.values.emplace_back("radicand", QuadElem(k, rho));
    rec.values.emplace_back("sqrt_radicand", v);
    rec.values.emplace_back("t", t);
    rec.values.emplace_back("ytilde", ytilde);
    rec.values.emplace_back("r", r);
    rec.values.emplace_back("a", *a);
    rec.values.emplace_back("a_other_root", a_other);
    rec.points.emplace_back("P1", p1);
    rec.points.emplace_back("mP1", pm);
    rec.points.emplace_back("P", curves.p);
    rec.points.emplace_back("Q", curves.q);
    return rec;
}

// --------------------------------------------------------------- Z/2 x Z/12

Curve t12_parameter_curve() {
    return Curve::short_model(QuadField::rationals(), Rational(-1), Rational(-225),
                              Rational(-1215));
}

CurvePoint t12_parameter_generator() {
    QuadField q = QuadField::rationals();
    return CurvePoint(QuadElem(q, Rational(-8)), QuadElem(q, Rational(3)));
}

std::pair<QuadElem, QuadElem> t12_curve_to_quartic(const CurvePoint& p) {
    if (p.is_infinity()) fail(Err::MapDegenerate, "O has no quartic image");
    const QuadField& k = p.x().field();
    QuadElem den = p.y() - 3 * p.x() - QuadElem(k, Rational(27));
    QuadElem num = p.x() - QuadElem(k, Rational(27));
    if (den.is_zero() || num.is_zero())
        fail(Err::MapDegenerate, "image of " + p.str() + " is degenerate");
    QuadElem t = num / den;
    QuadElem v = (2 * p.x() + QuadElem(k, Rational(17))) * t * t - 6 * t - QuadElem::one(k);
    QuadElem t2 = t * t;
    QuadElem g = (t2 - 6 * t + QuadElem::one(k)) * (t2 + 18 * t + QuadElem::one(k));
    if (v * v != g) fail(Err::MapDegenerate, "image left the quartic (internal)");
    return {t, v};
}

CurvePoint t12_quartic_to_curve(const QuadElem& t, const QuadElem& v) {
    const QuadField& k = t.field();
    if (t.is_zero()) fail(Err::MapDegenerate, "t = 0 is the base point");
    QuadElem one = QuadElem::one(k);
    QuadElem t2 = t * t;
    QuadElem g = (t2 - 6 * t + one) * (t2 + 18 * t + one);
    if (v * v != g) fail(Err::MapDegenerate, "not on the quartic");
    QuadElem xl = (2 * (v + one) + 12 * t) / t2;
    QuadElem yl = (4 * (v + one) + 24 * t - 284 * t2) / (t2 * t);
    QuadElem x = (xl - QuadElem(k, Rational(34))) * Rational(1, 4);
    QuadElem y = (yl + 6 * xl + QuadElem(k, Rational(12))) * Rational(1, 8);
    CurvePoint p(x, y);
    if (!t12_parameter_curve().contains(p)) fail(Err::MapDegenerate, "inverse image off-curve");
    return p;
}

namespace {

// Shared tail of both Z/2 x Z/12 pipelines: from a rational triple and the
// x-coordinate of an order-6 point, locate the field, halve, certify.
FamilyRecord certify_order12(FamilyTag tag, const Rational& parameter, int multiple,
                             DioTriple triple_q, const Rational& x6, const FactorBudget& budget,
                             std::vector<std::pair<std::string, QuadElem>> extra_values,
                             std::vector<std::pair<std::string, CurvePoint>> extra_points) {
    InducedCurves curves_q = induced_curves(triple_q);
    const Curve& eq = curves_q.weierstrass;

    QuadField q = QuadField::rationals();
    QuadElem x6e(q, x6);
    QuadElem rhs = x6e * x6e * x6e + eq.a2() * x6e * x6e + eq.a4() * x6e + eq.a6();
    auto y6 = sqrt_in_field(rhs);
    if (!y6) fail(Err::InadmissibleGroup, "order-6 abscissa has no rational ordinate");
    CurvePoint p6(x6e, *y6);
    auto ord6 = eq.order_of_point(p6);
    if (!ord6 || *ord6 != 6)
        fail(Err::InadmissibleGroup, "expected order 6 at x = " + x6.str());

    auto d = halving_field(eq, p6, budget);
    if (!d) fail(Err::InadmissibleGroup, "halving residues fall into different classes");
    if (*d == 1)
        fail(Err::FieldCollapse, "P6 already halves over Q, contradicting the rational torsion");

    QuadField k{*d};
    Curve ek(k, QuadElem::zero(k), eq.a2().embedded(k), QuadElem::zero(k), eq.a4().embedded(k),
             eq.a6().embedded(k));
    std::vector<QuadElem> roots;
    for (const auto& r : curves_q.two_torsion_roots()) roots.push_back(r.embedded(k));
    CurvePoint p6k(x6e.embedded(k), y6->embedded(k));
    CurvePoint r12 = halve(ek, p6k, roots);
    if (ek.add(r12, r12) != p6k) fail(Err::InadmissibleGroup, "halving verification failed");
    auto ord12 = ek.order_of_point(r12);
    if (!ord12 || *ord12 != 12) fail(Err::InadmissibleGroup, "half of P6 is not of order 12");
    if (!ek.mul(12, r12).is_infinity() || ek.mul(6, r12).is_infinity())
        fail(Err::InadmissibleGroup, "order witnesses failed for the order-12 point");

    std::vector<CurvePoint> hints{r12};
    for (const auto& r : roots) hints.emplace_back(r, QuadElem::zero(k));
    TorsionCertificate cert = certify(ek, hints, tag,
                                      {"half of the order-6 point (order 12)",
                                       "2-torsion abscissa -ab/-bc/-ac"});

    // Re-base the triple over Q(sqrt(d)): same rational entries, field tag K.
    DioTriple triple_k = check_triple(triple_q.a().embedded(k), triple_q.b().embedded(k),
                                      triple_q.c().embedded(k));
    InducedCurves curves_k = induced_curves(triple_k);

    FamilyRecord rec{tag,
                     parameter,
                     multiple,
                     k,
                     triple_k,
                     curves_k,
                     cert,
                     std::move(extra_values),
                     std::move(extra_points),
                     eq.order_of_point(curves_q.p),
                     {}};
    auto residues = halving_residues(eq, p6);
    rec.values.emplace_back("d", QuadElem(q, Rational(*d)));
    for (size_t i = 0; i < residues.size(); ++i)
        rec.values.emplace_back("residue" + std::to_string(i + 1), residues[i]);
    rec.points.emplace_back("P6", p6);
    rec.points.emplace_back("R12", r12);
    rec.points.emplace_back("P", curves_q.p);
    return rec;
}

} // namespace

FamilyRecord torsion12_generate(int m, const FactorBudget& budget) {
    if (m < 2) fail(Err::ExcludedParameter, "m >= 2 (the generator maps to t = 0)");
    Curve e3 = t12_parameter_curve();
    CurvePoint pm = e3.mul(m, t12_parameter_generator());
    auto [te, ve] = t12_curve_to_quartic(pm);
    Rational t = te.p();
    for (long bad : {-1L, 0L, 1L})
        if (t == Rational(bad)) fail(Err::MapDegenerate, "parameter t = " + t.str());

    Rational one(1), six(6);
    Rational t2 = t * t;
    Rational f_minus = t2 - six * t + one;  // t^2 - 6t + 1
    Rational f_plus = t2 + six * t + one;   // t^2 + 6t + 1
    Rational a = Rational(18) * t * (t2 - one) / (f_minus * f_plus);
    Rational b = (t - one) * f_plus * f_plus / (six * t * (t + one) * f_minus);
    Rational c = (t + one) * f_minus * f_minus / (six * t * (t - one) * f_plus);

    QuadField q = QuadField::rationals();
    DioTriple triple = check_triple(QuadElem(q, a), QuadElem(q, b), QuadElem(q, c));

    Rational x6 = (Rational(2) * t2 * t2 + Rational(3) * t2 * t - Rational(14) * t2 +
                   Rational(3) * t + Rational(2)) /
                  (Rational(3) * t * f_minus);

    std::vector<std::pair<std::string, QuadElem>> vals;
    vals.emplace_back("t", te);
    vals.emplace_back("v", ve);
    std::vector<std::pair<std::string, CurvePoint>> pts;
    pts.emplace_back("m_generator", pm);
    return certify_order12(FamilyTag::T12, Rational(0), m, triple, x6, budget, std::move(vals),
                           std::move(pts));
}

FamilyRecord torsion12_alt(const Rational& u, const FactorBudget& budget) {
    for (long bad : {0L, 1L, -1L, 3L, -3L})
        if (u == Rational(bad)) fail(Err::DegenerateParameter, "u = " + u.str());
    Rational one(1);
    Rational cond = Rational(3) * (u - one) * (u + one) * (u * u + Rational(15));
    auto w = rat_sqrt(cond);
    if (!w)
        fail(Err::ConditionNotSquare,
             "3(u-1)(u+1)(u^2+15) = " + cond.str() + " is not a rational square");

    Rational u2 = u * u;
    Rational a = (u2 * u - Rational(9) * u) / (Rational(6) * (u2 - one));
    Rational b = Rational(-9) * (u2 - one) / (Rational(2) * (u2 * u - Rational(9) * u));
    Rational c = Rational(-16) * u * (u2 - Rational(3)) /
                 (Rational(3) * (u2 * u2 - Rational(10) * u2 + Rational(9)));

    QuadField q = QuadField::rationals();
    DioTriple triple = check_triple(QuadElem(q, a), QuadElem(q, b), QuadElem(q, c));
    InducedCurves curves = induced_curves(triple);
    const Curve& eq = curves.weierstrass;

    // Order-3 abscissas are the rational roots of psi_3; an order-6 point is
    // a 3-torsion point plus a 2-torsion point.
    QuadElem b2 = eq.b2(), b4 = eq.b4(), b6 = eq.b6(), b8 = eq.b8();
    Poly psi3{b8.p(), Rational(3) * b6.p(), Rational(3) * b4.p(), b2.p(), Rational(3)};
    std::optional<CurvePoint> p3;
    for (const auto& x0 : rational_roots(psi3)) {
        QuadElem xe(q, x0);
        QuadElem rhs = xe * xe * xe + eq.a2() * xe * xe + eq.a4() * xe + eq.a6();
        if (auto y0 = sqrt_in_field(rhs)) {
            p3 = CurvePoint(xe, *y0);
            break;
        }
    }
    if (!p3) fail(Err::InadmissibleGroup, "no rational 3-torsion on the induced curve");

    std::vector<CurvePoint> sixes;
    for (const CurvePoint* tp : {&curves.t1, &curves.t2, &curves.t3})
        sixes.push_back(eq.add(*p3, *tp));
    std::sort(sixes.begin(), sixes.end(),
              [](const CurvePoint& a_, const CurvePoint& b_) { return lex_less(a_, b_); });

    for (const auto& p6 : sixes) {
        auto d = halving_field(eq, p6, budget);
        if (!d || *d == 1) continue;
        std::vector<std::pair<std::string, QuadElem>> vals;
        vals.emplace_back("condition", QuadElem(q, cond));
        vals.emplace_back("condition_sqrt", QuadElem(q, *w));
        std::vector<std::pair<std::string, CurvePoint>> pts;
        pts.emplace_back("P3", *p3);
        return certify_order12(FamilyTag::T12Alt, u, 0, triple, p6.x().p(), budget,
                               std::move(vals), std::move(pts));
    }
    fail(Err::InadmissibleGroup, "no order-6 point with a coherent halving field");
}

// ---------------------------------------------------------------- Z/4 x Z/4

FamilyRecord torsion44_generate(const Rational& t) {
    for (long bad : {0L, 1L, -1L})
        if (t == Rational(bad)) fail(Err::DegenerateParameter, "t = " + t.str());
    Rational one(1);
    Rational t2 = t * t, t4 = t2 * t2;
    Rational pa = t4 + Rational(2) * t2 + Rational(5);   // t^4 + 2t^2 + 5
    Rational pb = Rational(3) * t4 + Rational(6) * t2 - one;  // 3t^4 + 6t^2 - 1
    Rational a = t * pa / pb;
    Rational b = -pb / (t * pa);
    Rational c = Rational(16) * t * (t4 - one) * (t2 - one) / (pa * pb);

    QuadField k{BigInt(-1)};
    QuadElem ae(k, a), be(k, b), ce(k, c);
    if (be != -QuadElem::one(k) / ae) fail(Err::DegenerateParameter, "b != -1/a (internal)");
    DioTriple triple = check_triple(ae, be, ce);
    InducedCurves curves = induced_curves(triple);
    const Curve& ek = curves.weierstrass;

    // Halve two independent 2-torsion points explicitly; eq-style residues of
    // rational 2-torsion differences are +-squares over Q(i) by construction.
    std::vector<QuadElem> roots = curves.two_torsion_roots();
    CurvePoint h1 = halve(ek, curves.t1, roots); // NotHalvable would mean the family broke
    CurvePoint h2 = halve(ek, curves.t2, roots);
    for (const CurvePoint* h : {&h1, &h2}) {
        auto o = ek.order_of_point(*h);
        if (!o || *o != 4) fail(Err::InadmissibleGroup, "half of 2-torsion is not of order 4");
    }

    TorsionCertificate cert =
        certify(ek, {curves.t1, curves.t2, curves.t3, h1, h2}, FamilyTag::T44,
                {"half of T1 (order 4)", "half of T2 (order 4)"});

    FamilyRecord rec{FamilyTag::T44,
                     t,
                     0,
                     k,
                     triple,
                     curves,
                     cert,
                     {},
                     {},
                     ek.order_of_point(curves.p),
                     {}};
    auto res1 = halving_residues(ek, curves.t1, roots);
    for (size_t i = 0; i < res1.size(); ++i)
        rec.values.emplace_back("T1_residue" + std::to_string(i + 1), res1[i]);
    rec.points.emplace_back("P", curves.p);
    rec.points.emplace_back("half_T1", h1);
    rec.points.emplace_back("half_T2", h2);
    return rec;
}

Rational aux_curve_double(const Rational& t) {
    for (long bad : {0L, 1L, -1L})
        if (t == Rational(bad)) fail(Err::DegenerateParameter, "t = " + t.str());
    Rational one(1);
    Rational g = t * t * t + t; // t^3 + t
    Curve aux = Curve::short_model(QuadField::rationals(), Rational(0), g * g, Rational(0));
    QuadField q = QuadField::rationals();
    Rational x1 = t * t + one;
    CurvePoint pt(QuadElem(q, x1), QuadElem(q, x1 * x1));
    CurvePoint dbl = aux.add(pt, pt);
    Rational u = dbl.x().p() / g;
    Rational expected = (t * t - one) * (t * t - one) / (Rational(4) * t * (t * t + one));
    if (u != expected) fail(Err::DegenerateParameter, "doubling formula mismatch (internal)");
    return u;
}

} // namespace dio
