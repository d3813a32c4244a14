#pragma once

#include "dio/ecurve.hpp"

namespace dio {

/// psi_m, phi_m, omega_m evaluated at an affine point P of a short model.
/// psi vanishes exactly when P has order dividing m; otherwise
/// mP = (phi/psi^2, omega/psi^3).
struct DivisionPolyValues {
    int m;
    QuadElem psi, phi, omega;
};

/// Requires a short model (NormalizeFirst otherwise) and an affine P on it.
/// m >= 1.
DivisionPolyValues division_poly_eval(const Curve& e, const CurvePoint& p, int m);

/// mP computed through the division polynomial values; infinity when
/// psi_m(P) = 0.
CurvePoint mul_via_division_poly(const Curve& e, const CurvePoint& p, int m);

} // namespace dio
