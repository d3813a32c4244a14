#pragma once

#include <optional>
#include <string>

#include "dio/factor.hpp"

namespace dio {

/// Quadratic field Q(sqrt(d)) with squarefree d. d == 1 is the degenerate
/// marker for Q itself: field_from_radicand returns it when the radicand is a
/// rational square, and curve/triple code uses it as the "over Q" tag.
class QuadField {
public:
    QuadField() : d_(1) {}
    explicit QuadField(BigInt d);

    static QuadField rationals() { return QuadField(); }

    const BigInt& d() const { return d_; }
    bool is_rational() const { return d_ == 1; }

    friend bool operator==(const QuadField& a, const QuadField& b) { return a.d_ == b.d_; }
    friend bool operator!=(const QuadField& a, const QuadField& b) { return a.d_ != b.d_; }

    std::string str() const;

private:
    BigInt d_;
};

struct RadicandSplit {
    QuadField field;  // d squarefree, or d = 1 when rho is a square
    Rational scale;   // rho = scale^2 * d exactly
};

/// Normalizes Q(sqrt(rho)) to Q(sqrt(d)) with d squarefree. rho = 0 raises
/// DegenerateRadicand; a square rho yields the d = 1 marker, which callers
/// must treat as "field collapsed to Q".
RadicandSplit field_from_radicand(const Rational& rho,
                                  const FactorBudget& budget = default_factor_budget());

/// Element p + q*sqrt(d) of a quadratic field. Over Q (d = 1) the q part is
/// forced to zero. Arithmetic between different fields raises FieldMismatch;
/// promote explicitly with embedded().
class QuadElem {
public:
    QuadElem() : field_(), p_(0), q_(0) {}
    QuadElem(QuadField field, Rational p, Rational q);
    QuadElem(QuadField field, Rational p) : QuadElem(std::move(field), std::move(p), Rational(0)) {}

    static QuadElem zero(const QuadField& k) { return QuadElem(k, Rational(0)); }
    static QuadElem one(const QuadField& k) { return QuadElem(k, Rational(1)); }
    /// The element sqrt(d) itself (q = 1).
    static QuadElem root(const QuadField& k) { return QuadElem(k, Rational(0), Rational(1)); }

    const QuadField& field() const { return field_; }
    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }

    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
    bool is_rational_value() const { return q_.is_zero(); }

    QuadElem conj() const { return QuadElem(field_, p_, -q_); }
    Rational norm() const { return p_ * p_ - Rational(field_.d()) * q_ * q_; }

    /// Reinterprets the element in field k. Identity when fields already
    /// match; rational-valued elements may move into any field.
    QuadElem embedded(const QuadField& k) const;

    QuadElem operator-() const { return QuadElem(field_, -p_, -q_); }
    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o);

    friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
    friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
    friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
    friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }

    friend QuadElem operator*(QuadElem a, const Rational& c) {
        a.p_ *= c; a.q_ *= c; return a;
    }
    friend QuadElem operator*(const Rational& c, QuadElem a) { return a * c; }
    friend QuadElem operator/(QuadElem a, const Rational& c) {
        if (c.is_zero()) fail(Err::DivByZero, "element divided by zero scalar");
        a.p_ /= c; a.q_ /= c; return a;
    }
    friend QuadElem operator*(QuadElem a, long c) { return a * Rational(c); }
    friend QuadElem operator*(long c, QuadElem a) { return a * Rational(c); }

    friend bool operator==(const QuadElem& a, const QuadElem& b) {
        return a.field_ == b.field_ && a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const QuadElem& a, const QuadElem& b) { return !(a == b); }

    /// Lexicographic (p, q) order; used for canonical choices, not magnitude.
    friend bool lex_less(const QuadElem& a, const QuadElem& b) {
        if (a.p_ != b.p_) return a.p_ < b.p_;
        return a.q_ < b.q_;
    }

    std::string str() const;

private:
    void check_same_field(const QuadElem& o) const;

    QuadField field_;
    Rational p_, q_;
};

/// Exact square root in the element's own field, or absent when x is not a
/// square there. The root carries the canonical sign: p part positive, or
/// p = 0 and q part positive.
std::optional<QuadElem> sqrt_in_field(const QuadElem& x);

/// Canonical sign normalization used for witnesses and reported roots.
QuadElem canonical_sign(const QuadElem& x);

} // namespace dio
