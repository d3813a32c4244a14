#include "dio/divpoly.hpp"

#include <map>

namespace dio {

namespace {

// psi_m at x splits by parity: psi_m = f_m(x) for odd m, psi_m = y g_m(x)
// for even m, with y^2 eliminated through F(x) = x^3 + A x^2 + B x + C.
// Running the recurrences on the x-only parts keeps 2-torsion points (y = 0)
// exact: y never needs to be inverted.
struct FgTable {
    std::map<int, QuadElem> f; // odd indices plus sentinels f[-1], f[0], f[1]
    std::map<int, QuadElem> g; // even indices
    QuadElem Fx;
};

FgTable build_fg(const Curve& e, const QuadElem& x, int mmax) {
    const QuadField& k = e.field();
    const QuadElem A = e.a2(), B = e.a4(), C = e.a6();
    QuadElem b2 = 4 * A;
    QuadElem b4 = 2 * B;
    QuadElem b6 = 4 * C;
    QuadElem b8 = 4 * A * C - B * B;

    FgTable t;
    t.Fx = x * x * x + A * x * x + B * x + C;
    QuadElem x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;

    t.f[-1] = -QuadElem::one(k);
    t.f[0] = QuadElem::zero(k);
    t.f[1] = QuadElem::one(k);
    t.f[3] = 3 * x4 + b2 * x3 + 3 * b4 * x2 + 3 * b6 * x + b8;
    t.g[0] = QuadElem::zero(k);
    t.g[2] = QuadElem(k, Rational(2));
    t.g[4] = 2 * (2 * x6 + b2 * x5 + 5 * b4 * x4 + 10 * b6 * x3 + 10 * b8 * x2 +
                  (b2 * b8 - b4 * b6) * x + (b4 * b8 - b6 * b6));

    QuadElem F2 = t.Fx * t.Fx;
    Rational half(1, 2);
    for (int kk = 5; kk <= mmax + 2; ++kk) {
        if (kk % 2 == 1) {
            int m = (kk - 1) / 2;
            if (m % 2 == 0)
                t.f[kk] = F2 * t.g[m + 2] * t.g[m] * t.g[m] * t.g[m] -
                          t.f[m - 1] * t.f[m + 1] * t.f[m + 1] * t.f[m + 1];
            else
                t.f[kk] = t.f[m + 2] * t.f[m] * t.f[m] * t.f[m] -
                          F2 * t.g[m - 1] * t.g[m + 1] * t.g[m + 1] * t.g[m + 1];
        } else {
            int m = kk / 2;
            if (m % 2 == 0)
                t.g[kk] = t.g[m] * (t.g[m + 2] * t.f[m - 1] * t.f[m - 1] -
                                    t.g[m - 2] * t.f[m + 1] * t.f[m + 1]) * half;
            else
                t.g[kk] = t.f[m] * (t.f[m + 2] * t.g[m - 1] * t.g[m - 1] -
                                    t.f[m - 2] * t.g[m + 1] * t.g[m + 1]) * half;
        }
    }
    return t;
}

void require_short_affine(const Curve& e, const CurvePoint& p) {
    if (!e.is_short()) fail(Err::NormalizeFirst, "division polynomials want a short model");
    if (p.is_infinity()) fail(Err::PointNotOnCurve, "division polynomials at O");
    if (!e.contains(p)) fail(Err::PointNotOnCurve, p.str());
}

} // namespace

DivisionPolyValues division_poly_eval(const Curve& e, const CurvePoint& p, int m) {
    require_short_affine(e, p);
    if (m < 1) fail(Err::ExcludedParameter, "division polynomial index m >= 1");
    FgTable t = build_fg(e, p.x(), m);
    const QuadElem x = p.x(), y = p.y();
    Rational quarter(1, 4);
    DivisionPolyValues out{m, QuadElem::zero(e.field()), QuadElem::zero(e.field()),
                           QuadElem::zero(e.field())};
    if (m % 2 == 1) {
        out.psi = t.f[m];
        out.phi = x * t.f[m] * t.f[m] - t.Fx * t.g[m + 1] * t.g[m - 1];
        out.omega = y * ((t.f[m + 2] * t.g[m - 1] * t.g[m - 1] -
                          t.f[m - 2] * t.g[m + 1] * t.g[m + 1]) * quarter);
    } else {
        out.psi = y * t.g[m];
        out.phi = x * t.Fx * t.g[m] * t.g[m] - t.f[m + 1] * t.f[m - 1];
        out.omega = (t.g[m + 2] * t.f[m - 1] * t.f[m - 1] -
                     t.g[m - 2] * t.f[m + 1] * t.f[m + 1]) * quarter;
    }
    return out;
}

CurvePoint mul_via_division_poly(const Curve& e, const CurvePoint& p, int m) {
    DivisionPolyValues v = division_poly_eval(e, p, m);
    if (v.psi.is_zero()) return CurvePoint::infinity();
    QuadElem psi2 = v.psi * v.psi;
    return CurvePoint(v.phi / psi2, v.omega / (psi2 * v.psi));
}

} // namespace dio
