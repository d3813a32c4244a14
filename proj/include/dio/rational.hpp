#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "dio/errors.hpp"

namespace dio {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Wraps mpq_class so construction can never leave a
/// non-canonical value behind.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) fail(Err::DivByZero, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "n", "n/d", optional leading '-'.
    static Rational parse(const std::string& s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) fail(Err::DivByZero, "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// Display form: "3", "-1/2".
    std::string str() const;
    /// Wire form: always "n/d" in lowest terms, "0/1" for zero.
    std::string wire() const;

private:
    explicit Rational(const mpq_class& v) : v_(v) {}
    mpq_class v_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

/// Exact square root of a rational: present iff x is the square of a rational.
/// The returned root is the nonnegative one.
std::optional<Rational> rat_sqrt(const Rational& x);

inline bool rat_is_square(const Rational& x) { return rat_sqrt(x).has_value(); }

} // namespace dio
