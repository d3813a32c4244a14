#include "dio/diotriple.hpp"

#include <algorithm>

namespace dio {

DioTriple::DioTriple(QuadField field, QuadElem a, QuadElem b, QuadElem c, QuadElem r, QuadElem s,
                     QuadElem t)
    : field_(std::move(field)),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      r_(canonical_sign(r)),
      s_(canonical_sign(s)),
      t_(canonical_sign(t)) {
    QuadElem one = QuadElem::one(field_);
    if (a_.is_zero() || b_.is_zero() || c_.is_zero())
        fail(Err::DegenerateTriple, "zero element");
    if (a_ == b_ || a_ == c_ || b_ == c_)
        fail(Err::DegenerateTriple, "repeated element");
    if (a_ * b_ + one != r_ * r_ || a_ * c_ + one != s_ * s_ || b_ * c_ + one != t_ * t_)
        fail(Err::NotDiophantine, "witness identity failed");
}

bool DioTriple::same_triple(const DioTriple& o) const {
    if (field_ != o.field_) return false;
    std::vector<QuadElem> mine{a_, b_, c_}, theirs{o.a_, o.b_, o.c_};
    auto less = [](const QuadElem& x, const QuadElem& y) { return lex_less(x, y); };
    std::sort(mine.begin(), mine.end(), less);
    std::sort(theirs.begin(), theirs.end(), less);
    return mine == theirs;
}

std::string DioTriple::str() const {
    return "{" + a_.str() + ", " + b_.str() + ", " + c_.str() + "}";
}

DioTriple check_triple(const QuadElem& a, const QuadElem& b, const QuadElem& c) {
    const QuadField& k = a.field();
    QuadElem one = QuadElem::one(k);
    if (a.is_zero() || b.is_zero() || c.is_zero())
        fail(Err::DegenerateTriple, "zero element");
    if (a == b || a == c || b == c) fail(Err::DegenerateTriple, "repeated element");
    auto r = sqrt_in_field(a * b + one);
    if (!r) fail(Err::NotDiophantine, "ab+1 = " + (a * b + one).str() + " is not a square");
    auto s = sqrt_in_field(a * c + one);
    if (!s) fail(Err::NotDiophantine, "ac+1 = " + (a * c + one).str() + " is not a square");
    auto t = sqrt_in_field(b * c + one);
    if (!t) fail(Err::NotDiophantine, "bc+1 = " + (b * c + one).str() + " is not a square");
    return DioTriple(k, a, b, c, *r, *s, *t);
}

DioTriple euler_triple(const QuadElem& a, const QuadElem& r) {
    const QuadField& k = a.field();
    QuadElem one = QuadElem::one(k);
    if (a.is_zero()) fail(Err::ExcludedParameter, "a = 0");
    for (const QuadElem& bad : {one, -one, one - a, -one - a}) {
        if (r.embedded(k) == bad)
            fail(Err::ExcludedParameter, "r = " + r.str() + " degenerates the construction");
    }
    QuadElem re = r.embedded(k);
    QuadElem b = (re * re - one) / a;
    QuadElem c = a + b + 2 * re;
    // the two derived identities are consequences; keep them as assertions
    if (a * c + one != (a + re) * (a + re) || b * c + one != (b + re) * (b + re))
        fail(Err::NotDiophantine, "construction identities failed");
    return DioTriple(k, a, b, c, re, a + re, b + re);
}

std::vector<QuadElem> InducedCurves::two_torsion_roots() const {
    return {t1.x(), t2.x(), t3.x()};
}

InducedCurves induced_curves(const DioTriple& triple) {
    const QuadField& k = triple.field();
    const QuadElem &a = triple.a(), &b = triple.b(), &c = triple.c();
    QuadElem one = QuadElem::one(k), zero = QuadElem::zero(k);
    QuadElem ab = a * b, bc = b * c, ac = a * c;
    QuadElem abc = a * b * c;
    QuadElem sym2 = ab + bc + ac;
    QuadElem sym1 = a + b + c;

    InducedCurves out{
        {abc, sym2, sym1, one},
        Curve(k, zero, sym2, zero, abc * sym1, abc * abc),
        CurvePoint(-ab, zero),
        CurvePoint(-bc, zero),
        CurvePoint(-ac, zero),
        CurvePoint(zero, abc),
        CurvePoint(one, triple.r() * triple.s() * triple.t()),
    };
    for (const CurvePoint* p : {&out.t1, &out.t2, &out.t3, &out.p, &out.q}) {
        if (!out.weierstrass.contains(*p))
            fail(Err::PointNotOnCurve, "canonical point " + p->str());
    }
    return out;
}

QuadElem order5_value(const QuadElem& a, const QuadElem& r_in) {
    const QuadField& k = a.field();
    QuadElem r = r_in.embedded(k);
    QuadElem one = QuadElem::one(k);
    QuadElem r2 = r * r, r3 = r2 * r, r4 = r2 * r2, r5 = r4 * r, r6 = r4 * r2, r7 = r6 * r,
             r8 = r4 * r4;
    QuadElem a2 = a * a, a3 = a2 * a, a4 = a2 * a2;
    return (-4 * r2 + 4 * r4) * a4 + (4 * r - 20 * r3 + 16 * r5) * a3 +
           (-one + 16 * r2 - 40 * r4 + 24 * r6) * a2 +
           (-4 * r + 24 * r3 - 36 * r5 + 16 * r7) * a +
           (-4 * r2 + 12 * r4 - 12 * r6 + 4 * r8);
}

bool order5_holds(const QuadElem& a, const QuadElem& r) {
    return order5_value(a, r).is_zero();
}

Order5Factors order5_factors(const QuadElem& t) {
    const QuadField& k = t.field();
    QuadElem one = QuadElem::one(k);
    if (t.is_zero() || t == one || t == -one)
        fail(Err::DegenerateParameter, "t = " + t.str() + " kills the leading coefficient");
    QuadElem t2 = t * t, t3 = t2 * t, t4 = t2 * t2, t5 = t4 * t, t6 = t4 * t2, t7 = t6 * t,
             t8 = t4 * t4;
    QuadElem lead = 4 * t6 - 4 * t2;
    QuadElem constant = t8 - 2 * t6 + 2 * t2 - one;
    return Order5Factors{
        {lead, 4 * t7 + 4 * t5 + 4 * t3 - 4 * t, constant},
        {lead, 4 * t7 - 4 * t5 - 4 * t3 - 4 * t, constant},
    };
}

} // namespace dio
