#pragma once

#include <random>

#include "dio/qfield.hpp"

namespace dio::testing {

/// Deterministic generators for property-style tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Rational rational(long max_abs_num, long max_den) {
        long n = integer(-max_abs_num, max_abs_num);
        long d = integer(1, max_den);
        return Rational(n, d);
    }

    Rational nonzero_rational(long max_abs_num, long max_den) {
        Rational r = rational(max_abs_num, max_den);
        while (r.is_zero()) r = rational(max_abs_num, max_den);
        return r;
    }

    QuadElem elem(const QuadField& k, long max_abs_num, long max_den) {
        if (k.is_rational()) return QuadElem(k, rational(max_abs_num, max_den));
        return QuadElem(k, rational(max_abs_num, max_den), rational(max_abs_num, max_den));
    }

    QuadElem nonzero_elem(const QuadField& k, long max_abs_num, long max_den) {
        QuadElem e = elem(k, max_abs_num, max_den);
        while (e.is_zero()) e = elem(k, max_abs_num, max_den);
        return e;
    }

private:
    std::mt19937_64 rng_;
};

/// Brute-force square detection over small heights, independent of
/// sqrt_in_field: enumerates candidate roots directly.
inline bool brute_force_is_square_rational(const Rational& x, long height) {
    if (x.sign() < 0) return false;
    for (long a = 0; a <= height; ++a)
        for (long b = 1; b <= height; ++b) {
            Rational cand(a, b);
            if (cand * cand == x) return true;
        }
    return false;
}

/// Same idea in Q(sqrt(d)): candidates (a + b sqrt(d))/c with small a, b, c.
inline bool brute_force_is_square_quad(const QuadElem& x, long height) {
    const QuadField& k = x.field();
    for (long c = 1; c <= height; ++c)
        for (long a = -height; a <= height; ++a)
            for (long b = -height; b <= height; ++b) {
                QuadElem cand(k, Rational(a, c), Rational(b, c));
                if (cand * cand == x) return true;
            }
    return false;
}

} // namespace dio::testing
