#pragma once

#include <map>

#include "dio/rational.hpp"

namespace dio {

/// Limits for the integer factorizer: trial division up to trial_bound, then
/// Brent-cycle Pollard rho with at most rho_iters iterations per cofactor.
/// Anything that resists both raises FactoringBudgetExceeded carrying the
/// unfactored cofactor in its message.
struct FactorBudget {
    unsigned long trial_bound = 1'000'000;
    unsigned long rho_iters = 10'000'000;
};

FactorBudget& default_factor_budget();

/// Full factorization of |n| (n != 0), prime -> exponent.
std::map<BigInt, unsigned> factorize(const BigInt& n, const FactorBudget& budget = default_factor_budget());

struct SquarefreeSplit {
    BigInt s; // squarefree, sign(s) = sign(n)
    BigInt f; // positive, n = s * f^2
};

SquarefreeSplit squarefree_part(const BigInt& n, const FactorBudget& budget = default_factor_budget());

/// Signed squarefree class of a nonzero rational: squarefree_part(num * den).
BigInt square_class(const Rational& x, const FactorBudget& budget = default_factor_budget());

bool is_probable_prime(const BigInt& n);

} // namespace dio
