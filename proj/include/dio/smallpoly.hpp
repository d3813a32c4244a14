#pragma once

#include <vector>

#include "dio/rational.hpp"

namespace dio {

/// Dense univariate polynomial over Q, coefficients low degree first.
/// Only the small degrees this library needs (root finding up to quartics);
/// not a general polynomial arithmetic layer.
using Poly = std::vector<Rational>;

int poly_degree(const Poly& p);
Rational poly_eval(const Poly& p, const Rational& x);
Poly poly_derivative(const Poly& p);

/// All rational roots of p, each listed once, ascending. Exact and complete:
/// a monic integer transform reduces the problem to integer roots, which are
/// isolated with Sturm sequences. No factoring involved.
std::vector<Rational> rational_roots(const Poly& p);

} // namespace dio
