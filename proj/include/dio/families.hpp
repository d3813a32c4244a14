#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dio/diotriple.hpp"
#include "dio/torsion.hpp"

namespace dio {

enum class FamilyTag { T10, T12, T12Alt, T44 };

const char* family_name(FamilyTag tag);
std::pair<int, int> family_target(FamilyTag tag);

/// Torsion structure plus the evidence: where each generator came from and
/// its verified order. maximal means the structure tops the admissible
/// lattice, so the containment argument already pins the group exactly.
struct TorsionCertificate {
    TorsionStructure structure;
    bool maximal = false;
    std::vector<std::string> provenance;
    std::vector<int> generator_orders;
};

/// Full output of one pipeline run. Everything needed to re-verify the
/// record: parameters, field, triple, curves, certificate, and the named
/// intermediate values and points of the construction.
struct FamilyRecord {
    FamilyTag tag;
    Rational parameter;  // u for T10/T12Alt, t for T44; unused for T12
    int multiple;        // m for T10/T12; 0 when not applicable
    QuadField field;
    DioTriple triple;
    InducedCurves curves;
    TorsionCertificate certificate;
    std::vector<std::pair<std::string, QuadElem>> values;
    std::vector<std::pair<std::string, CurvePoint>> points;
    std::optional<int> base_point_order;  // order of P = [0,abc]; absent = infinite
    std::vector<std::string> notes;

    std::optional<QuadElem> value(const std::string& name) const;
    std::optional<CurvePoint> point(const std::string& name) const;
};

// ----------------------------------------------------------- Z/2 x Z/10

/// y^2 = x^3 + x^2 + 4x + 4 over k: the curve whose points parameterize the
/// order-5 construction.
Curve t10_parameter_curve(const QuadField& k);

/// Birational maps between the parameter curve and ytilde^2 = -t^4+t^2+1:
/// forward t = 2(x+1)/y, ytilde = x t^2/2 - 1; inverse x = 2(ytilde+1)/t^2,
/// y = (4(ytilde+1) + 2t^2)/t^3. MapDegenerate off the open locus.
std::pair<QuadElem, QuadElem> t10_curve_to_quartic(const CurvePoint& p);
CurvePoint t10_quartic_to_curve(const QuadElem& t, const QuadElem& ytilde);

/// u outside {-1, 0, 1}, m >= 1. FieldCollapse when the radicand is a
/// rational square (u = -2/3).
FamilyRecord torsion10_generate(const Rational& u, int m);

// ----------------------------------------------------------- Z/2 x Z/12

/// y^2 = x^3 - x^2 - 225x - 1215 over Q.
Curve t12_parameter_curve();
/// The multiplied generator [-8, 3] (the infinite-order point [27,-108]
/// translated by the 2-torsion point [-9,0]; this translate's multiples land
/// on the parameter representatives the construction expects).
CurvePoint t12_parameter_generator();

/// Maps between the parameter curve and v^2 = (t^2-6t+1)(t^2+18t+1):
/// forward t = (x-27)/(y-3x-27), v = (2x+17)t^2 - 6t - 1.
std::pair<QuadElem, QuadElem> t12_curve_to_quartic(const CurvePoint& p);
CurvePoint t12_quartic_to_curve(const QuadElem& t, const QuadElem& v);

/// m >= 2 (the generator itself maps to the degenerate t = 0).
FamilyRecord torsion12_generate(int m, const FactorBudget& budget = default_factor_budget());

/// The cubic-derived family with condition 3(u-1)(u+1)(u^2+15) = square;
/// u = -7 is the printed instance.
FamilyRecord torsion12_alt(const Rational& u, const FactorBudget& budget = default_factor_budget());

// ------------------------------------------------------------ Z/4 x Z/4

/// t outside {0, 1, -1}; triple over Q(i) with b = -1/a.
FamilyRecord torsion44_generate(const Rational& t);

/// Doubling [t^2+1, (t^2+1)^2] on N^2 = U^3 + (t^3+t)^2 U and dividing the
/// abscissa by t^3+t: returns (t^2-1)^2 / (4t(t^2+1)), asserted exactly.
Rational aux_curve_double(const Rational& t);

} // namespace dio
