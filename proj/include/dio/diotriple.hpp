#pragma once

#include <array>

#include "dio/ecurve.hpp"

namespace dio {

/// {a, b, c} distinct and nonzero with ab+1, ac+1, bc+1 squares in the field;
/// r, s, t are the square witnesses, carrying the canonical sign.
class DioTriple {
public:
    DioTriple(QuadField field, QuadElem a, QuadElem b, QuadElem c, QuadElem r, QuadElem s,
              QuadElem t);

    const QuadField& field() const { return field_; }
    const QuadElem& a() const { return a_; }
    const QuadElem& b() const { return b_; }
    const QuadElem& c() const { return c_; }
    const QuadElem& r() const { return r_; }
    const QuadElem& s() const { return s_; }
    const QuadElem& t() const { return t_; }

    /// Unordered comparison of the element sets.
    bool same_triple(const DioTriple& o) const;

    std::string str() const;

private:
    QuadField field_;
    QuadElem a_, b_, c_;
    QuadElem r_, s_, t_;
};

/// Validates the three square conditions and distinctness, producing the
/// canonical witnesses. NotDiophantine names the failing pair.
DioTriple check_triple(const QuadElem& a, const QuadElem& b, const QuadElem& c);

/// b = (r^2 - 1)/a, c = a + b + 2r; ac+1 = (a+r)^2 and bc+1 = (b+r)^2 hold by
/// construction and are asserted. r in {-1, 1, 1-a, -1-a} degenerates the
/// triple and raises ExcludedParameter.
DioTriple euler_triple(const QuadElem& a, const QuadElem& r);

/// The curves a triple induces. The cubic model y^2 = (ax+1)(bx+1)(cx+1) is
/// kept as coefficient data; the Weierstrass image
/// y^2 = (x+ab)(x+bc)(x+ac) carries the group structure and the canonical
/// points T1 = [-ab,0], T2 = [-bc,0], T3 = [-ac,0], P = [0,abc], Q = [1,rst].
struct InducedCurves {
    std::array<QuadElem, 4> cubic; // c3 x^3 + c2 x^2 + c1 x + c0
    Curve weierstrass;
    CurvePoint t1, t2, t3, p, q;

    std::vector<QuadElem> two_torsion_roots() const;
};

InducedCurves induced_curves(const DioTriple& triple);

/// The degree-4 condition in a (for a given Euler parameter r) equivalent to
/// 5 [0,abc] = O on the induced Weierstrass curve.
QuadElem order5_value(const QuadElem& a, const QuadElem& r);
bool order5_holds(const QuadElem& a, const QuadElem& r);

/// With r = (t^2+1)/(2t) the order-5 quartic in a splits into two quadratic
/// factors; coefficient triples (leading, middle, constant). Their root
/// fields are Q(sqrt(t^4+t^2-1)) and Q(sqrt(-t^4+t^2+1)). The identity
/// q1(a) q2(a) = 64 t^8 L(a, (t^2+1)/(2t)) is exact.
struct Order5Factors {
    std::array<QuadElem, 3> q1;
    std::array<QuadElem, 3> q2;
};

Order5Factors order5_factors(const QuadElem& t);

} // namespace dio
