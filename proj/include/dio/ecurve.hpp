#pragma once

#include <optional>
#include <vector>

#include "dio/qfield.hpp"

namespace dio {

/// Point on a curve: affine coordinates or the point at infinity.
class CurvePoint {
public:
    CurvePoint() : infinity_(true) {}
    CurvePoint(QuadElem x, QuadElem y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return CurvePoint(); }

    bool is_infinity() const { return infinity_; }
    const QuadElem& x() const { return x_; }
    const QuadElem& y() const { return y_; }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

    /// Deterministic order: infinity first, then lexicographic (x, y).
    friend bool lex_less(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity_ || b.infinity_) return a.infinity_ && !b.infinity_;
        if (a.x_ != b.x_) return lex_less(a.x_, b.x_);
        return lex_less(a.y_, b.y_);
    }

    std::string str() const;

private:
    bool infinity_;
    QuadElem x_, y_;
};

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over
/// Q or a quadratic field. Nonsingularity is enforced at construction.
class Curve {
public:
    Curve(QuadField field, QuadElem a1, QuadElem a2, QuadElem a3, QuadElem a4, QuadElem a6);

    /// y^2 = x^3 + A x^2 + B x + C over k, coefficients given as rationals.
    static Curve short_model(const QuadField& k, const Rational& A, const Rational& B,
                             const Rational& C);

    const QuadField& field() const { return field_; }
    const QuadElem& a1() const { return a1_; }
    const QuadElem& a2() const { return a2_; }
    const QuadElem& a3() const { return a3_; }
    const QuadElem& a4() const { return a4_; }
    const QuadElem& a6() const { return a6_; }

    bool is_short() const { return a1_.is_zero() && a3_.is_zero(); }

    QuadElem b2() const;
    QuadElem b4() const;
    QuadElem b6() const;
    QuadElem b8() const;
    QuadElem c4() const;
    QuadElem c6() const;
    QuadElem discriminant() const;

    bool contains(const CurvePoint& p) const;

    /// Group law. Inputs are checked against the curve equation.
    CurvePoint add(const CurvePoint& p, const CurvePoint& q) const;
    CurvePoint negate(const CurvePoint& p) const;
    CurvePoint mul(const BigInt& n, const CurvePoint& p) const;

    /// Least n <= bound with nP = O, or nullopt when no such n exists. The
    /// default bound 18 is the largest torsion order over any quadratic
    /// field, so nullopt certifies infinite order there.
    std::optional<int> order_of_point(const CurvePoint& p, int bound = 18) const;

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.field_ == b.field_ && a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_ &&
               a.a4_ == b.a4_ && a.a6_ == b.a6_;
    }

    std::string str() const;

private:
    CurvePoint add_unchecked(const CurvePoint& p, const CurvePoint& q) const;
    friend class ShortTransform;
    friend std::optional<int> bounded_order(const Curve&, const CurvePoint&, int);

    QuadField field_;
    QuadElem a1_, a2_, a3_, a4_, a6_;
};

/// Completing the square: the short model of a long curve together with the
/// invertible point maps. Round trip is the identity.
class ShortTransform {
public:
    explicit ShortTransform(const Curve& source);

    const Curve& source() const { return source_; }
    const Curve& curve() const { return short_; }

    CurvePoint to_short(const CurvePoint& p) const;
    CurvePoint from_short(const CurvePoint& p) const;

private:
    Curve source_;
    Curve short_;
};

inline ShortTransform to_short(const Curve& e) { return ShortTransform(e); }

/// All points of order 2 with coordinates in the curve's field. Complete for
/// short models whose coefficients are rational values (rational root search
/// plus quadratic-surd completion); for genuinely quadratic coefficients use
/// the overload that supplies known roots of the cubic.
std::vector<CurvePoint> two_torsion(const Curve& e);
std::vector<CurvePoint> two_torsion(const Curve& e, const std::vector<QuadElem>& known_roots);

/// x(P) - e_i for the three 2-torsion abscissas e_i, ascending. Requires the
/// full 2-torsion to be rational over the curve's field.
std::vector<QuadElem> halving_residues(const Curve& e, const CurvePoint& p);
std::vector<QuadElem> halving_residues(const Curve& e, const CurvePoint& p,
                                       const std::vector<QuadElem>& roots);

/// P lies in 2E(K) iff every residue is a square in K (zero counts).
bool is_in_double(const Curve& e, const CurvePoint& p);
bool is_in_double(const Curve& e, const CurvePoint& p, const std::vector<QuadElem>& roots);

/// A point Q with 2Q = P, verified by doubling before it is returned.
/// Deterministic: first verified candidate in lexicographic sign order of the
/// residue square roots.
CurvePoint halve(const Curve& e, const CurvePoint& p);
CurvePoint halve(const Curve& e, const CurvePoint& p, const std::vector<QuadElem>& roots);

/// For E over Q with full rational 2-torsion and rational P: d = 1 when all
/// nonzero residues are rational squares, the shared squarefree class when
/// the non-squares agree, absent otherwise. When a value is returned, P is
/// halvable over Q(sqrt(d)).
std::optional<BigInt> halving_field(const Curve& e, const CurvePoint& p,
                                    const FactorBudget& budget = default_factor_budget());

/// The d-quadratic twist of a short model over Q:
/// y^2 = x^3 + A d x^2 + B d^2 x + C d^3.
Curve quadratic_twist(const Curve& e, const BigInt& d);

/// (x, w sqrt(d)) on E over Q(sqrt(d)) with rational x -> rational point
/// (d x, d^2 w) on the twist, and back.
CurvePoint transport_to_twist(const Curve& e, const BigInt& d, const CurvePoint& p);
CurvePoint transport_from_twist(const Curve& e, const BigInt& d, const CurvePoint& p);

/// Isomorphism over the common field of definition, via c4/c6: true iff some
/// u with u^4 c4' = c4, u^6 c6' = c6 exists in the field. Twists come out
/// non-isomorphic by design.
bool iso_same_field(const Curve& e1, const Curve& e2);

} // namespace dio
